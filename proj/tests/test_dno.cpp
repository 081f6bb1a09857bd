#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "iwave/dno.hpp"
#include "testing.hpp"

using namespace iwave;
using testing_support::random_field;
using testing_support::random_smooth_field;
using testing_support::random_zero_mean_field;
using testing_support::unit_media;
using Catch::Matchers::WithinAbs;

namespace {
const PeriodicGrid g64(64, 2.0 * std::numbers::pi);
const RealField kCos = RealField::from_function(g64, [](double x) { return std::cos(x); });

RealField constant_field(double v) {
  return RealField::from_function(g64, [v](double) { return v; });
}

/// Exact flat-shift DNO multiplier k tanh((h +- delta) k) applied to a field;
/// the closed-form reference for the constant-elevation expansion checks.
RealField exact_shifted_g0(double depth, const RealField& f) {
  return apply_multiplier(
      FourierMultiplier::even([depth](double k) { return g0_symbol(depth, k); }, 0.0), f);
}
}  // namespace

TEST_CASE("g0 applies k tanh(h k)") {
  SECTION("unit depth scales cos by tanh(1)") {
    const auto out = g0(1.0, kCos);
    for (int j = 0; j < g64.n; ++j)
      REQUIRE_THAT(out[j], WithinAbs(std::tanh(1.0) * std::cos(g64.node(j)), 1e-12));
  }
  SECTION("constants map to zero") { REQUIRE(max_abs(g0(2.0, constant_field(3.0))) < 1e-13); }
  SECTION("deep water saturates to the identity on mode 1") {
    const auto out = g0(20.0, kCos);
    REQUIRE(max_abs(out - kCos) < 1e-12);
  }
  SECTION("non-positive depth is rejected") {
    REQUIRE_THROWS_AS(g0(0.0, kCos), std::invalid_argument);
    REQUIRE_THROWS_AS(g0(-1.0, kCos), std::invalid_argument);
  }
}

TEST_CASE("g1 structure") {
  const auto p = unit_media();
  SECTION("vanishes for a flat interface") {
    REQUIRE(max_abs(g1(p, 1, RealField::zeros(g64), kCos)) < 1e-14);
    REQUIRE(max_abs(g1(p, 2, RealField::zeros(g64), kCos)) < 1e-14);
  }
  SECTION("equal depths make the layers exact negatives") {
    const auto eta = random_smooth_field(g64, 21, 8, 0.04);
    const auto f = random_field(g64, 22);
    const auto sum = g1(p, 1, eta, f) + g1(p, 2, eta, f);
    REQUIRE(max_abs(sum) < 1e-15);
  }
  SECTION("bilinear in (eta, f)") {
    const auto eta = random_smooth_field(g64, 23, 8, 0.02);
    const auto f = random_field(g64, 24);
    const auto doubled = g1(p, 1, 2.0 * eta, f);
    const auto base = g1(p, 1, eta, f);
    REQUIRE(max_abs(doubled - 2.0 * base) < 1e-12 * (1.0 + max_abs(base)));
    const auto scaled_f = g1(p, 1, eta, 3.0 * f);
    REQUIRE(max_abs(scaled_f - 3.0 * base) < 1e-12 * (1.0 + max_abs(base)));
  }
}

TEST_CASE("g2 structure") {
  const auto p = unit_media();
  SECTION("vanishes for a flat interface") {
    REQUIRE(max_abs(g2(p, 1, RealField::zeros(g64), kCos)) < 1e-14);
  }
  SECTION("homogeneity of degree two in eta") {
    const auto eta = random_smooth_field(g64, 25, 8, 0.04);
    const auto f = random_field(g64, 26);
    const auto full = g2(p, 1, eta, f);
    const auto half = g2(p, 1, 0.5 * eta, f);
    REQUIRE(max_abs(4.0 * half - full) <= 1e-10 * (1.0 + max_abs(full)));
  }
}

// A constant elevation shifts the layer boundary exactly, so the truncated
// expansion can be checked against the closed form k tanh((h +- delta) k)
// without any discretized oracle.
TEST_CASE("constant-elevation expansions converge at the expected order") {
  const auto p = unit_media();
  auto error_at = [&](int layer, int order, double delta) {
    const double depth = layer == 1 ? p.h1 + delta : p.h2 - delta;
    const auto exact = exact_shifted_g0(depth, kCos);
    const auto approx = apply_G(p, layer, constant_field(delta), order, kCos);
    return max_abs(approx - exact);
  };
  SECTION("order 0 error halves with delta") {
    const double r = error_at(1, 0, 0.05) / error_at(1, 0, 0.025);
    REQUIRE(r > 1.7);
    REQUIRE(r < 2.3);
  }
  SECTION("order 1 error quarters with delta, both layers") {
    for (int layer : {1, 2}) {
      const double r = error_at(layer, 1, 0.05) / error_at(layer, 1, 0.025);
      REQUIRE(r > 3.4);
      REQUIRE(r < 4.6);
    }
  }
  SECTION("order 2 error drops eightfold with delta, both layers") {
    for (int layer : {1, 2}) {
      const double r = error_at(layer, 2, 0.05) / error_at(layer, 2, 0.025);
      REQUIRE(r > 6.2);
      REQUIRE(r < 10.0);
    }
  }
}

TEST_CASE("apply_G reduces to g0 at order zero and for flat interfaces") {
  const auto p = unit_media();
  const auto eta = random_smooth_field(g64, 27, 8, 0.04);
  const auto direct = g0(p.h1, kCos);
  REQUIRE(max_abs(apply_G(p, 1, eta, 0, kCos) - direct) < 1e-15);
  for (int order : {0, 1, 2})
    REQUIRE(max_abs(apply_G(p, 1, RealField::zeros(g64), order, kCos) - direct) < 1e-14);
}

TEST_CASE("flat DNOs are positive semidefinite on zero-mean fields") {
  for (int seed : {31, 32, 33}) {
    const auto f = random_zero_mean_field(g64, seed);
    REQUIRE(inner_product(f, g0(1.0, f)) >= -1e-12);
  }
}

TEST_CASE("apply_G is self-adjoint at every order") {
  const auto p = unit_media();
  const auto eta = random_smooth_field(g64, 41, 10, 0.1 * p.strip_margin());
  for (int layer : {1, 2}) {
    for (int order : {0, 1, 2}) {
      const auto f = random_field(g64, 42 + order);
      const auto g = random_field(g64, 52 + order);
      const double a = inner_product(f, apply_G(p, layer, eta, order, g));
      const double b = inner_product(apply_G(p, layer, eta, order, f), g);
      REQUIRE_THAT(a, WithinAbs(b, 1e-10 * (1.0 + std::abs(a))));
    }
  }
}

TEST_CASE("apply_B flat symbol and algebra") {
  const auto p = unit_media();
  SECTION("flat multiplier equals 3 tanh(1) on the unit mode") {
    const auto out = apply_B(p, RealField::zeros(g64), 2, kCos);
    const double coeff = 3.0 * std::tanh(1.0);  // 2.2847824678672946
    for (int j = 0; j < g64.n; ++j)
      REQUIRE_THAT(out[j], WithinAbs(coeff * std::cos(g64.node(j)), 1e-12));
  }
  SECTION("linear in f") {
    const auto eta = random_smooth_field(g64, 61, 8, 0.04);
    const auto f = random_field(g64, 62);
    const auto g = random_field(g64, 63);
    const auto lhs = apply_B(p, eta, 2, 2.0 * f - g);
    const auto rhs = 2.0 * apply_B(p, eta, 2, f) - apply_B(p, eta, 2, g);
    REQUIRE(max_abs(lhs - rhs) < 1e-11 * (1.0 + max_abs(rhs)));
  }
  SECTION("self-adjoint on random fields") {
    const auto eta = random_smooth_field(g64, 64, 8, 0.05);
    const auto f = random_field(g64, 65);
    const auto g = random_field(g64, 66);
    const double a = inner_product(f, apply_B(p, eta, 2, g));
    const double b = inner_product(apply_B(p, eta, 2, f), g);
    REQUIRE_THAT(a, WithinAbs(b, 1e-10 * (1.0 + std::abs(a))));
  }
}

TEST_CASE("solve_B honors its contracts") {
  const auto p = unit_media();
  SECTION("flat case is an exact diagonal inversion") {
    const auto rhs = random_zero_mean_field(g64, 71);
    const auto x = solve_B(p, RealField::zeros(g64), 0, rhs, 1e-12);
    REQUIRE(max_abs(apply_B(p, RealField::zeros(g64), 0, x) - rhs) < 1e-12 * max_abs(rhs));
    REQUIRE(std::abs(mean(x)) < 1e-13);
  }
  SECTION("recovers a constructed solution under a deformed interface") {
    const auto eta = random_smooth_field(g64, 72, 8, 0.05);
    const auto f0 = random_zero_mean_field(g64, 73);
    const auto rhs = apply_B(p, eta, 2, f0);
    const auto x = solve_B(p, eta, 2, rhs, 1e-12);
    REQUIRE(l2_norm(x - f0) < 1e-9 * l2_norm(f0));
  }
  SECTION("residual contract holds on every returned solution") {
    for (int seed : {74, 75, 76}) {
      const auto eta = random_smooth_field(g64, seed, 10, 0.05);
      const auto rhs = random_zero_mean_field(g64, seed + 100);
      const double tol = 1e-11;
      const auto x = solve_B(p, eta, 2, rhs, tol);
      REQUIRE(l2_norm(apply_B(p, eta, 2, x) - rhs) <= tol * l2_norm(rhs));
    }
  }
  SECTION("nonzero-mean right-hand sides are rejected") {
    REQUIRE_THROWS_AS(solve_B(p, RealField::zeros(g64), 2, constant_field(1.0), 1e-10),
                      std::invalid_argument);
  }
}

TEST_CASE("composite kinetic operator") {
  const auto p = unit_media();
  SECTION("flat multiplier equals tanh(1)/3 on the unit mode") {
    const auto out = composite_kinetic(p, RealField::zeros(g64), 2, kCos, 1e-12);
    const double coeff = std::tanh(1.0) / 3.0;  // 0.25386471865192163
    for (int j = 0; j < g64.n; ++j)
      REQUIRE_THAT(out[j], WithinAbs(coeff * std::cos(g64.node(j)), 1e-12));
  }
  SECTION("annihilates constants") {
    REQUIRE(max_abs(composite_kinetic(p, random_smooth_field(g64, 81, 8, 0.04), 2,
                                      constant_field(2.0), 1e-11)) < 1e-12);
  }
  SECTION("matches the identity route (G1 - rho2 G1 B^-1 G1)/rho1") {
    const auto eta = random_smooth_field(g64, 82, 8, 0.05);
    const auto xi = random_field(g64, 83);
    const auto direct = composite_kinetic(p, eta, 2, xi, 1e-12);
    const auto u = apply_G(p, 1, eta, 2, xi);
    const auto w = apply_G(p, 1, eta, 2, solve_B(p, eta, 2, u, 1e-12));
    const auto via_identity = (1.0 / p.rho1) * (u - p.rho2 * w);
    REQUIRE(max_abs(direct - via_identity) < 1e-10 * (1.0 + max_abs(direct)));
  }
  SECTION("self-adjoint to solver tolerance") {
    const auto eta = random_smooth_field(g64, 84, 8, 0.05);
    const auto x1 = random_field(g64, 85);
    const auto x2 = random_field(g64, 86);
    const double a = inner_product(x1, composite_kinetic(p, eta, 2, x2, 1e-12));
    const double b = inner_product(composite_kinetic(p, eta, 2, x1, 1e-12), x2);
    REQUIRE_THAT(a, WithinAbs(b, 1e-10 * (1.0 + std::abs(a))));
  }
}

TEST_CASE("strip guard warns at half the margin and fails at the margin") {
  const auto p = unit_media();  // margin 0.5
  SECTION("breach throws") {
    const auto eta = RealField::from_function(g64, [](double x) { return 0.6 * std::cos(x); });
    REQUIRE_THROWS_AS(apply_G(p, 1, eta, 1, kCos), strip_breach_error);
  }
  SECTION("warn zone writes a diagnostic and still computes") {
    const auto eta = RealField::from_function(g64, [](double x) { return 0.3 * std::cos(x); });
    std::ostringstream captured;
    auto* old = std::clog.rdbuf(captured.rdbuf());
    const auto out = apply_G(p, 1, eta, 1, kCos);
    std::clog.rdbuf(old);
    REQUIRE(captured.str().find("warning") != std::string::npos);
    REQUIRE(max_abs(out) > 0.0);
  }
  SECTION("quiet inside half the margin") {
    const auto eta = RealField::from_function(g64, [](double x) { return 0.2 * std::cos(x); });
    std::ostringstream captured;
    auto* old = std::clog.rdbuf(captured.rdbuf());
    apply_G(p, 1, eta, 1, kCos);
    std::clog.rdbuf(old);
    REQUIRE(captured.str().empty());
  }
}
