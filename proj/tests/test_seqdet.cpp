#include <doctest.h>

#include "gen.hpp"
#include "require.hpp"
#include "ktf/rep.hpp"
#include "ktf/seqdet.hpp"
#include "ktf/verify.hpp"

using namespace ktf;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

QMatrix tridiagonal(const Bands& b, const Rational& x) {
  const size_t k = b.diag_x.size();
  QMatrix m(k, k);
  for (size_t j = 0; j < k; ++j) {
    m(j, j) = b.diag_x[j] * x;
    if (j + 1 < k) {
      m(j, j + 1) = b.super[j];
      m(j + 1, j) = b.sub[j];
    }
  }
  return m;
}

Rational krawtchouk_sum(long k, const Rational& x, const Rational& y) {
  Rational acc = 0;
  for (long j = 0; j <= k; ++j) {
    const Rational term = gen_binomial(x, j) * gen_binomial(y - x, k - j);
    acc += (j % 2 ? -term : term);
  }
  return acc;
}

}  // namespace

TEST_SUITE("seqdet") {
  TEST_CASE("continuant_examples") {
    CHECK(continuant<Rational>({}, {}, {}, q(1)) == 1);
    CHECK(continuant<Rational>({q(5)}, {q(2), q(3)}, {q(7)}, q(1)) == 2 * 3 - 7 * 5);
    CHECK_THROWS_AS(continuant<Rational>({q(1)}, {q(2), q(3)}, {}, q(1)), Error);
  }

  TEST_CASE("family_poly_examples") {
    CHECK(family_poly(Family::P, 1, q(4)) == QPoly{q(0), q(4)});
    CHECK(family_poly(Family::P, 2, q(4)) == QPoly::constant(q(24)));
    CHECK(family_poly(Family::Cay, 2, q(2)) == QPoly{q(-2), q(0), q(1)});
    CHECK(family_poly(Family::Kraw, 1, q(7)) == QPoly{q(7), q(-2)});
    CHECK(family_poly(Family::Sylv, 2, q(0)) == QPoly{q(0), q(-4), q(0), q(1)});
    CHECK(family_poly(Family::P, 0, q(3)) == QPoly::constant(q(1)));
    CHECK(family_value(Family::Cay, 3, q(4), q(4)) == 24);
    CHECK_THROWS_AS(parse_family("R"), Error);
  }

  TEST_CASE("zero_set_examples") {
    const ZeroSet p = zero_set(Family::P, 3, q(4));
    CHECK(p.all_of_c);
    const ZeroSet qz = zero_set(Family::Q, 2, q(4));
    CHECK_FALSE(qz.all_of_c);
    CHECK(qz.distinct() == std::vector<Rational>{q(-3), q(3)});
    const ZeroSet c = zero_set(Family::Cay, 3, q(2));
    CHECK(c.distinct() == std::vector<Rational>{q(-2), q(0), q(2)});
    CHECK(c.unresolved_degree == 0);
  }

  TEST_CASE("palindromic_examples") {
    const auto p = check_palindromic(palindrome_config(Family::P), 6, 3);
    CHECK(p.status == CheckStatus::Pass);
    CHECK(p.zero_set == std::vector<Rational>{q(-5), q(-1), q(1), q(5)});
    CHECK(p.signs == std::vector<int>{-1, -1, 1, 1});
    const auto c = check_palindromic(palindrome_config(Family::Cay), 2, 3);
    CHECK(c.status == CheckStatus::Pass);
    CHECK(family_value(Family::Cay, 2, q(0), q(2)) == -2);
    const auto k = check_palindromic(palindrome_config(Family::Kraw), 3, 3);
    CHECK(k.status == CheckStatus::Pass);
    CHECK(k.zero_set == std::vector<Rational>{q(0), q(1), q(2), q(3)});
    CHECK(k.signs == std::vector<int>{1, -1, 1, -1});
    CHECK_THROWS_AS(palindrome_config(Family::Sylv), Error);
  }

  TEST_CASE("odd_n_palindrome_fails") {
    bool some_fail = false;
    for (long n = 3; n <= 9; n += 2) some_fail |= odd_palindrome_check(Family::P, n, 3).fails_for_every_degree;
    CHECK(some_fail);
  }

  TEST_CASE("factorization_examples") {
    const auto qe = verify_factorization(FactorTarget::Q_even, 4);
    CHECK(qe.equal);
    CHECK(qe.lhs == QPoly{q(36), q(0), q(-4)});
    const auto sy = verify_factorization(FactorTarget::Sylv, 2);
    CHECK(sy.equal);
    CHECK(sy.rhs == QPoly{q(0), q(-4), q(0), q(1)});
    CHECK(verify_factorization(FactorTarget::PS_corollary, 3).equal);
    CHECK_THROWS_AS(verify_factorization(FactorTarget::P_even, 3), Error);
  }

  TEST_CASE("identity_examples") {
    CHECK(family_value(Family::Cay, 2, q(1), q(-1)) == 2);
    CHECK(family_poly(Family::Kraw, 1, q(5)) == QPoly{q(5), q(-2)});
    for (Identity id : {Identity::cay_falling, Identity::cay_raising, Identity::cay_factorial,
                        Identity::kraw_from_cay, Identity::cay_binomial_form, Identity::cay_recurrence})
      CHECK_MESSAGE(verify_identity(id, 8), to_string(id));
  }

  TEST_CASE("continuant_matches_cofactor_expansion") {
    testgen::Gen g(201);
    for (int trial = 0; trial < 60; ++trial) {
      const Family f = static_cast<Family>(g.integer(0, 2));  // Kraw is interpolated, no bands
      const long k = g.integer(0, 6);
      const Rational y = g.rational(), x = g.rational();
      const Bands b = family_bands(f, k, y);
      CHECK(family_value(f, k, x, y) == cofactor_det(tridiagonal(b, x)));
    }
  }

  TEST_CASE("cayley_three_term_recurrence") {
    testgen::Gen g(202);
    for (int trial = 0; trial < 50; ++trial) {
      const Rational x = g.rational(), y = g.rational();
      for (long k = 2; k <= 9; ++k) {
        const Rational lhs = family_value(Family::Cay, k, x, y);
        const Rational rhs = x * family_value(Family::Cay, k - 1, x, y) -
                             Rational(k - 1) * (y - k + 2) * family_value(Family::Cay, k - 2, x, y);
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("krawtchouk_matches_binomial_sum") {
    testgen::Gen g(203);
    for (int trial = 0; trial < 40; ++trial) {
      const Rational x = g.rational(), y = g.rational();
      for (long k = 0; k <= 8; ++k) {
        CHECK(family_value(Family::Kraw, k, x, y) == krawtchouk_sum(k, x, y));
        CHECK(family_value(Family::Kraw, k, x, y) ==
              family_value(Family::Cay, k, y - 2 * x, y) / factorial(k));
      }
    }
  }

  TEST_CASE("sylvester_equals_generator_charpoly") {
    for (long n = 0; n <= 12; ++n) {
      QPoly prod = QPoly::constant(q(1));
      for (long l = 0; l <= n; ++l) prod = prod * QPoly{Rational(2 * l - n), q(1)};
      CHECK(family_poly(Family::Sylv, n, q(0)) == prod);
      CHECK(charpoly_EplusEminus(n) == prod);
    }
  }

  TEST_CASE("property_checks_small_range") {
    testgen::require_pass(checks::parity_laws(8, 10));
    testgen::require_pass(checks::odd_q_p_relation(15));
    testgen::require_pass(checks::continuant_cofactor(5, 8));
    testgen::require_pass(checks::cayley_identities(8));
    testgen::require_pass(checks::determinant_series_bridge(6, 10, 3));
    testgen::require_pass(checks::p_even_factorization(16));
    testgen::require_pass(checks::q_even_factorization(16));
    testgen::require_pass(checks::p_odd_factorization(15));
    testgen::require_pass(checks::p_sylvester_product(15));
    testgen::require_pass(checks::krawtchouk_top_factorization(14));
    testgen::require_pass(checks::leading_constants(14));
    testgen::require_pass(checks::factorial_values(14));
  }
}
