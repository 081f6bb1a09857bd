#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "iwave/grid.hpp"

namespace iwave {

namespace detail {
inline void require_finite(const std::vector<double>& v, const char* what) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!std::isfinite(v[j]))
      throw error(std::string(what) + ": non-finite sample at index " + std::to_string(j));
}
}  // namespace detail

/// Real-valued samples on a PeriodicGrid. Finiteness is checked whenever a
/// field is constructed, so every operation returning a RealField also
/// certifies a finite result.
class RealField {
 public:
  RealField(PeriodicGrid grid, std::vector<double> samples)
      : grid_(grid), samples_(std::move(samples)) {
    if (static_cast<int>(samples_.size()) != grid_.n)
      throw error("RealField: sample count " + std::to_string(samples_.size()) +
                  " does not match grid n = " + std::to_string(grid_.n));
    detail::require_finite(samples_, "RealField");
  }

  static RealField zeros(const PeriodicGrid& grid) {
    return RealField(grid, std::vector<double>(grid.n, 0.0));
  }

  template <class F>
  static RealField from_function(const PeriodicGrid& grid, F&& f) {
    std::vector<double> s(grid.n);
    for (int j = 0; j < grid.n; ++j) s[j] = f(grid.node(j));
    return RealField(grid, std::move(s));
  }

  const PeriodicGrid& grid() const { return grid_; }
  int size() const { return grid_.n; }
  double operator[](int j) const { return samples_[j]; }
  double& operator[](int j) { return samples_[j]; }
  const std::vector<double>& samples() const { return samples_; }

  RealField& operator+=(const RealField& o);
  RealField& operator-=(const RealField& o);
  RealField& operator*=(double s);

 private:
  PeriodicGrid grid_;
  std::vector<double> samples_;
};

namespace detail {
inline void require_same_grid(const RealField& a, const RealField& b, const char* op) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument(std::string(op) + ": fields live on different grids");
}
}  // namespace detail

inline RealField& RealField::operator+=(const RealField& o) {
  detail::require_same_grid(*this, o, "operator+=");
  for (int j = 0; j < size(); ++j) samples_[j] += o[j];
  return *this;
}

inline RealField& RealField::operator-=(const RealField& o) {
  detail::require_same_grid(*this, o, "operator-=");
  for (int j = 0; j < size(); ++j) samples_[j] -= o[j];
  return *this;
}

inline RealField& RealField::operator*=(double s) {
  for (int j = 0; j < size(); ++j) samples_[j] *= s;
  return *this;
}

inline RealField operator+(RealField a, const RealField& b) { return a += b; }
inline RealField operator-(RealField a, const RealField& b) { return a -= b; }
inline RealField operator*(double s, RealField f) { return f *= s; }
inline RealField operator*(RealField f, double s) { return f *= s; }
inline RealField operator-(RealField f) { return f *= -1.0; }

/// Pointwise product of two fields on the same grid.
inline RealField hadamard(const RealField& a, const RealField& b) {
  detail::require_same_grid(a, b, "hadamard");
  std::vector<double> s(a.size());
  for (int j = 0; j < a.size(); ++j) s[j] = a[j] * b[j];
  return RealField(a.grid(), std::move(s));
}

/// Quadrature of the integral of f*g over one period, with the spectrally
/// exact weight length/n per node. Symmetric and bilinear.
inline double inner_product(const RealField& f, const RealField& g) {
  detail::require_same_grid(f, g, "inner_product");
  double acc = 0.0;
  for (int j = 0; j < f.size(); ++j) acc += f[j] * g[j];
  return acc * f.grid().spacing();
}

inline double mean(const RealField& f) {
  double acc = 0.0;
  for (int j = 0; j < f.size(); ++j) acc += f[j];
  return acc / f.size();
}

inline double max_abs(const RealField& f) {
  double m = 0.0;
  for (int j = 0; j < f.size(); ++j) m = std::max(m, std::abs(f[j]));
  return m;
}

inline double l2_norm(const RealField& f) { return std::sqrt(inner_product(f, f)); }

inline double min_value(const RealField& f) {
  double m = f[0];
  for (int j = 1; j < f.size(); ++j) m = std::min(m, f[j]);
  return m;
}

inline double max_value(const RealField& f) {
  double m = f[0];
  for (int j = 1; j < f.size(); ++j) m = std::max(m, f[j]);
  return m;
}

}  // namespace iwave
