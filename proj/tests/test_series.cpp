#include <doctest.h>

#include "gen.hpp"
#include "ktf/params.hpp"
#include "ktf/seqdet.hpp"
#include "ktf/series.hpp"
#include "require.hpp"

using namespace ktf;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("heun_coefficient_examples") {
    const long n = 4;
    const Rational s = 1;
    const auto p = HeunParams::with_fuchs(q(-1), -Rational(n) * s / 4, q(-n, 2), q(-(n - 1), 2), q(1, 2),
                                          (1 - n - s) / 2);
    CHECK(p.fuchs_holds());
    CHECK(heun_coefficients(p, 5) == std::vector<Rational>{q(1), q(2), q(1), q(0), q(0)});
    CHECK(heun_coefficients(u_params(q(3, 7), 9), 1) == std::vector<Rational>{q(1)});
    auto bad = p;
    bad.gamma = 0;
    CHECK_THROWS_AS(heun_coefficients(bad, 3), Error);
  }

  TEST_CASE("uv_coefficient_examples") {
    testgen::Gen g(301);
    for (int trial = 0; trial < 20; ++trial) {
      const Rational s = g.rational();
      const long n = g.integer(0, 15);
      const auto u = uv_coefficients(SeriesKind::u, s, n, 3);
      CHECK(u[1] == Rational(n) * s / 2);
      CHECK(u[2] == (Rational(n * (n - 4)) * s * s + 2 * n * (n - 1)) / 24);
      CHECK(u[2] == family_value(Family::P, 2, s, Rational(n)) / 24);
      const auto v = uv_coefficients(SeriesKind::v, s, 2, 6);
      CHECK(v == std::vector<Rational>{q(1), q(0), q(0), q(0), q(0), q(0)});
    }
    CHECK(uv_poly(SeriesKind::u, q(1), 4) == QPoly{q(1), q(0), q(2), q(0), q(1)});
    CHECK(uv_poly(SeriesKind::v, q(5), 2) == QPoly{q(0), q(1)});
    CHECK_THROWS_AS(uv_poly(SeriesKind::u, q(0), 2), Error);
  }

  TEST_CASE("hypergeometric_examples") {
    CHECK(hypergeom_poly(HypKind::a, q(2), 4) == QPoly{q(1), q(0), q(10), q(0), q(1)});
    CHECK(hypergeom_poly(HypKind::b, q(1), 4) == QPoly{q(0), q(0), q(1)});
    try {
      hypergeom_poly(HypKind::a, q(1), 4);
      FAIL("expected UndefinedC");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UndefinedC);
    }
    CHECK(hyp2f1_terminating(q(-2), q(3), q(1), 5) == std::vector<Rational>{q(1), q(-6), q(6)});
    CHECK_THROWS_AS(hyp2f1_terminating(q(1, 2), q(1, 3), q(1), 10), Error);
    CHECK_THROWS_AS(connection_constant(q(2), 4), Error);
  }

  TEST_CASE("is_polynomial_examples") {
    CHECK(is_polynomial(PolyKind::u, q(7), 4));
    CHECK_FALSE(is_polynomial(PolyKind::u, q(0), 2));
    CHECK(is_polynomial(PolyKind::v, q(0), 2));
  }

  TEST_CASE("maier_examples") {
    CHECK(maier_check(4, 10).ok());
    CHECK(maier_check(7, 10).ok());
    CHECK(maier_check(0, 5).ok());
  }

  TEST_CASE("connection_constant_is_top_a_coefficient") {
    long cases = 0;
    for (long n = 0; n <= 22; n += 2) {
      const ParamSet set = mod4(n) == 0 ? ParamSet::I0minus : ParamSet::I2minus;
      for (long sv : enumerate(set, n)) {
        const Rational s = sv;
        const long m = to_long((n + s - 1) / 4);
        const QPoly a = hypergeom_poly(HypKind::a, s, n);
        const Rational C = connection_constant(s, n);
        CHECK(a.degree() == 2 * m);
        CHECK(C == a.coeff(2 * static_cast<int>(m)));
        if (mod4(n) == 2 && sv == -1) CHECK(C == rising_factorial(q(-n, 2), m) / factorial(m));
        ++cases;
      }
    }
    CHECK(cases > 10);
  }

  TEST_CASE("heun_specializes_to_uv") {
    testgen::Gen g(302);
    for (int trial = 0; trial < 30; ++trial) {
      const Rational s = g.generic();
      const long n = g.integer(0, 20);
      CHECK(heun_coefficients(u_params(s, n), 15) == uv_coefficients(SeriesKind::u, s, n, 15));
      CHECK(heun_coefficients(v_params(s, n), 15) == uv_coefficients(SeriesKind::v, s, n, 15));
    }
  }

  TEST_CASE("generating_function_bridge") {
    testgen::Gen g(303);
    for (int trial = 0; trial < 30; ++trial) {
      const Rational s = g.rational();
      const long n = g.integer(0, 20);
      const auto u = uv_coefficients(SeriesKind::u, s, n, 11);
      const auto v = uv_coefficients(SeriesKind::v, s, n, 11);
      for (long k = 0; k <= 10; ++k) {
        CHECK(family_value(Family::P, k, s, Rational(n)) == factorial(2 * k) * u[k]);
        CHECK(family_value(Family::Q, k, s, Rational(n)) == factorial(2 * k + 1) * v[k]);
      }
    }
  }

  TEST_CASE("series_property_checks") {
    testgen::require_pass(checks::heun_uv_agreement(10, 12));
    testgen::require_pass(checks::heun_gauss_reduction(8, 20));
    testgen::require_pass(checks::polynomiality_predicates(10));
  }
}
