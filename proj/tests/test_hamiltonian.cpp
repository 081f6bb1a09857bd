#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "iwave/bvp.hpp"
#include "iwave/hamiltonian.hpp"
#include "iwave/shear.hpp"
#include "iwave/state.hpp"
#include "testing.hpp"

using namespace iwave;
using testing_support::unit_media;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;
const PeriodicGrid g64(64, 2.0 * kPi);

MediaParams wide_media() {
  auto p = unit_media();  // rho 2/1, h 1/1
  p.l1 = p.l2 = 0.5;
  return p;
}

WaveState cos_sin_state(double a, double b) {
  return WaveState(RealField::from_function(g64, [a](double x) { return a * std::cos(x); }),
                   RealField::from_function(g64, [b](double x) { return b * std::sin(x); }));
}
}  // namespace

TEST_CASE("energy of the zero state vanishes") {
  const auto p = wide_media();
  const auto e = energy(p, zero_state(g64), 2, 1e-11);
  REQUIRE(e.kinetic == 0.0);
  REQUIRE(e.potential == 0.0);
  REQUIRE(e.current_term == 0.0);
  REQUIRE(e.total == 0.0);
}

TEST_CASE("potential energy of a pure elevation mode") {
  MediaParams p;  // rho1 - rho2 = 10, g = 9.8, oceanic depths
  p.kappa = 3.7;
  const auto s = cos_sin_state(0.01, 0.0);
  const auto e = energy(p, s, 2, 1e-11);
  REQUIRE(e.kinetic == 0.0);  // xi = 0 exactly
  REQUIRE(e.current_term == 0.0);
  REQUIRE_THAT(e.potential, WithinRel(0.0049 * kPi, 1e-12));  // ~= 0.0153938
  REQUIRE(e.total == e.potential);
}

TEST_CASE("current term equals kappa times the momentum integral") {
  auto p = wide_media();
  p.kappa = 1.0;
  const auto s = cos_sin_state(0.01, 1.0);
  const auto e = energy(p, s, 2, 1e-11);
  REQUIRE_THAT(e.current_term, WithinRel(0.01 * kPi, 1e-11));  // ~= 0.0314159
  REQUIRE(e.current_term == -p.kappa * momentum(s));
}

TEST_CASE("momentum quadrature") {
  SECTION("cos/sin pair gives -a b pi") {
    REQUIRE_THAT(momentum(cos_sin_state(0.2, 0.7)), WithinRel(-0.2 * 0.7 * kPi, 1e-12));
  }
  SECTION("constant xi sees the zero-mean slope") {
    const auto s = WaveState(
        RealField::from_function(g64, [](double x) { return 0.1 * std::cos(x); }),
        RealField::from_function(g64, [](double) { return 5.0; }));
    REQUIRE_THAT(momentum(s), WithinAbs(0.0, 1e-13));
  }
  SECTION("even/even pairing integrates to zero") {
    const auto s = WaveState(
        RealField::from_function(g64, [](double x) { return 0.1 * std::cos(x); }),
        RealField::from_function(g64, [](double x) { return 2.0 * std::cos(x); }));
    REQUIRE_THAT(momentum(s), WithinAbs(0.0, 1e-13));
  }
}

TEST_CASE("the current enters the energy only through the momentum term") {
  const auto s = WaveState(testing_support::random_smooth_field(g64, 91, 8, 0.05),
                           testing_support::random_smooth_field(g64, 92, 8, 1.0));
  auto pa = wide_media();
  auto pb = wide_media();
  pa.kappa = -2.0;
  pb.kappa = 1.25;
  const auto ea = energy(pa, s, 2, 1e-12);
  const auto eb = energy(pb, s, 2, 1e-12);
  const double expected = (pb.kappa - pa.kappa) * (-momentum(s));
  REQUIRE_THAT(eb.total - ea.total, WithinAbs(expected, 1e-13 * (1.0 + std::abs(expected))));
  REQUIRE(ea.kinetic == eb.kinetic);
  REQUIRE(ea.potential == eb.potential);
}

TEST_CASE("energy with zero current has no current term") {
  const auto p = wide_media();
  const auto s = cos_sin_state(0.03, 0.4);
  REQUIRE(energy(p, s, 2, 1e-11).current_term == 0.0);
}

TEST_CASE("potential energy is nonnegative under stable stratification") {
  const auto p = wide_media();
  for (int seed : {95, 96, 97}) {
    const auto s = WaveState(testing_support::random_smooth_field(g64, seed, 10, 0.05),
                             testing_support::random_smooth_field(g64, seed + 10, 10, 1.0));
    REQUIRE(energy(p, s, 0, 1e-11).potential >= 0.0);
  }
}

TEST_CASE("quadratic variational derivatives") {
  SECTION("zero state maps to zero") {
    const auto v = quadratic_variational_derivatives(wide_media(), zero_state(g64));
    REQUIRE(max_abs(v.dH_deta) == 0.0);
    REQUIRE(max_abs(v.dH_dxi) == 0.0);
  }
  SECTION("pure xi mode picks up the composite multiplier tanh(1)/3") {
    const auto p = wide_media();  // kappa = 0
    const auto s = WaveState(RealField::zeros(g64), RealField::from_function(g64, [](double x) {
                               return std::cos(x);
                             }));
    const auto v = quadratic_variational_derivatives(p, s);
    const double coeff = std::tanh(1.0) / 3.0;  // 0.25386471865192163
    for (int j = 0; j < g64.n; ++j)
      REQUIRE_THAT(v.dH_dxi[j], WithinAbs(coeff * std::cos(g64.node(j)), 1e-12));
    REQUIRE(max_abs(v.dH_deta) < 1e-13);
  }
  SECTION("linear in the state") {
    auto p = wide_media();
    p.kappa = 0.6;
    const auto s1 = WaveState(testing_support::random_smooth_field(g64, 98, 8, 0.04),
                              testing_support::random_smooth_field(g64, 99, 8, 1.0));
    const auto s2 = WaveState(testing_support::random_smooth_field(g64, 100, 8, 0.04),
                              testing_support::random_smooth_field(g64, 101, 8, 1.0));
    const auto combo = axpy(s1, 2.0, s2);
    const auto v1 = quadratic_variational_derivatives(p, s1);
    const auto v2 = quadratic_variational_derivatives(p, s2);
    const auto vc = quadratic_variational_derivatives(p, combo);
    REQUIRE(max_abs(vc.dH_deta - (v1.dH_deta + 2.0 * v2.dH_deta)) < 1e-12);
    REQUIRE(max_abs(vc.dH_dxi - (v1.dH_dxi + 2.0 * v2.dH_dxi)) < 1e-12);
  }
}

TEST_CASE("variational derivatives match the finite-difference gradient oracle") {
  auto p = wide_media();
  p.kappa = 0.9;
  auto quadratic_energy = [&](const WaveState& s) { return energy(p, s, 0, 1e-12).total; };
  const double step = std::sqrt(1e-16);  // square root of machine precision
  for (int seed = 0; seed < 6; ++seed) {
    const auto s = WaveState(testing_support::random_smooth_field(g64, 200 + seed, 8, 0.04),
                             testing_support::random_smooth_field(g64, 300 + seed, 8, 1.0));
    const auto dir = WaveState(testing_support::random_smooth_field(g64, 400 + seed, 8, 0.02),
                               testing_support::random_smooth_field(g64, 500 + seed, 8, 0.5));
    const auto v = quadratic_variational_derivatives(p, s);
    const double analytic = inner_product(v.dH_deta, dir.eta()) +
                            inner_product(v.dH_dxi, dir.xi());
    const double fd = functional_gradient_fd(quadratic_energy, s, dir, step);
    REQUIRE_THAT(fd, WithinRel(analytic, 1e-6));
  }
}

TEST_CASE("gradient oracle basics") {
  const auto p = wide_media();
  SECTION("potential gradient vanishes at a flat interface") {
    auto potential_only = [&](const WaveState& s) { return energy(p, s, 0, 1e-12).potential; };
    const auto dir = cos_sin_state(1.0, 0.0);
    REQUIRE_THAT(functional_gradient_fd(potential_only, zero_state(g64), dir, 1e-6),
                 WithinAbs(0.0, 1e-9));
  }
  SECTION("centered differences are step-independent on quadratics") {
    auto quadratic_energy = [&](const WaveState& s) { return energy(p, s, 0, 1e-12).total; };
    const auto s = cos_sin_state(0.02, 0.3);
    const auto dir = cos_sin_state(0.01, 0.1);
    const double a = functional_gradient_fd(quadratic_energy, s, dir, 1e-3);
    const double b = functional_gradient_fd(quadratic_energy, s, dir, 1e-6);
    REQUIRE_THAT(a, WithinRel(b, 1e-7));
  }
}

TEST_CASE("background energy offset") {
  auto p = wide_media();
  SECTION("rest everywhere gives zero") {
    ShearProfile sp;
    sp.media = p;  // kappa = 0
    sp.sigma = 0.0;
    sp.lower = {{-p.h1, 0.0}, {-p.l1, 0.0}};
    sp.upper = {{p.l2, 0.0}, {p.h2, 0.0}};
    REQUIRE(background_energy_offset(sp, 10.0) == 0.0);
  }
  SECTION("degenerate strip-only profile gives the rectangle value") {
    auto q = p;
    q.kappa = 1.5;
    ShearProfile sp;
    sp.media = q;
    sp.lower = {{-q.h1, 0.0}, {-q.l1, 0.0}};
    sp.upper = {{q.l2, 0.0}, {q.h2, 0.0}};
    const double band = 7.0;
    const double expected = 0.5 * (q.rho1 * q.l1 + q.rho2 * q.l2) * q.kappa * q.kappa * band;
    REQUIRE_THAT(background_energy_offset(sp, band), WithinRel(expected, 1e-14));
    SECTION("doubling the band doubles the offset") {
      REQUIRE_THAT(background_energy_offset(sp, 2.0 * band), WithinRel(2.0 * expected, 1e-14));
    }
  }
  SECTION("invariant under resampling that preserves the U^2 integral") {
    auto q = p;
    q.kappa = 1.0;
    ShearProfile coarse;
    coarse.media = q;
    coarse.sigma = 0.5;
    coarse.lower = {{-q.h1, 0.0}, {-q.l1, q.kappa}};
    coarse.upper = {{q.l2, q.kappa}, {q.h2, -0.5}};
    coarse.validate();
    // inserting the RMS value at each midpoint preserves the trapezoid
    // quadrature of U^2 segment by segment
    auto refine = [](const std::vector<std::pair<double, double>>& seq) {
      std::vector<std::pair<double, double>> out;
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const auto [ya, ua] = seq[i];
        const auto [yb, ub] = seq[i + 1];
        out.push_back(seq[i]);
        out.emplace_back(0.5 * (ya + yb),
                         std::copysign(std::sqrt(0.5 * (ua * ua + ub * ub)), ua + ub));
      }
      out.push_back(seq.back());
      return out;
    };
    ShearProfile fine = coarse;
    fine.lower = refine(coarse.lower);
    fine.upper = refine(coarse.upper);
    fine.validate();

    const double a = background_energy_offset(coarse, 3.0);
    const double b = background_energy_offset(fine, 3.0);
    REQUIRE_THAT(a, WithinRel(b, 1e-13));
  }
}
