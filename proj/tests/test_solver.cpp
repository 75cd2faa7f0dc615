#include <doctest.h>

#include "gen.hpp"
#include "ktf/solver.hpp"
#include "ktf/series.hpp"
#include "require.hpp"

using namespace ktf;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

bool spans_same_line(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return a * b.lead() == b * a.lead();
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("solution_space_examples") {
    const auto a = solution_space(Model::II, q(2), 4);
    REQUIRE(a.dim == 1);
    CHECK(spans_same_line(a.basis[0], QPoly{q(1), q(0), q(10), q(0), q(1)}));
    const auto v = solution_space(Model::I, q(5), 2);
    REQUIRE(v.dim == 1);
    CHECK(v.basis[0] == QPoly{q(0), q(1)});
    CHECK(solution_space(Model::II, q(0), 1).dim == 2);
    CHECK_FALSE(solution_space(Model::II, q(0), 1).anomaly);
  }

  TEST_CASE("expected_dimension_examples") {
    CHECK(expected_dimension(Model::II, q(1), 4) == 1);
    CHECK(expected_dimension(Model::I, q(3), 4) == 2);
    CHECK(expected_dimension(Model::II, q(7), 3) == 0);
    CHECK(solution_space(Model::II, q(7), 3).dim == 0);
  }

  TEST_CASE("mrep_examples") {
    CHECK(m_rep_classify(Model::I, q(0), 4).label() == "(+,+)");
    CHECK(m_rep_classify(Model::I, q(5), 2).label() == "(-,-)");
    CHECK(m_rep_classify(Model::II, q(0), 1).label() == "H");
    CHECK(m_rep_classify(Model::II, q(7), 3).label() == "0");
  }

  TEST_CASE("hom_examples") {
    CHECK(hom_dim(Model::II, q(1), 6, Irr::mp) == 1);
    CHECK(hom_dim(Model::II, q(3), 3, Irr::H) == 0);
    for (const Rational& s : {q(1, 3), q(7, 2), q(-9, 5), q(5, 7), q(-11, 3)})
      CHECK(hom_dim(Model::I, s, 4, Irr::pp) == 1);
  }

  TEST_CASE("basis_match_examples") {
    const auto b = basis_match(Model::II, q(1), 4);
    CHECK(b.ok());
    CHECK(basis_match(Model::I, q(1), 4).ok());
    const auto c = basis_match(Model::II, q(-3), 4);
    CHECK(c.ok());
    CHECK(c.polys.size() == 2);
  }

  TEST_CASE("transfer_examples") {
    const auto r1 = transfer_check(q(1), 4);
    CHECK(r1.projective_ok());
    CHECK_FALSE(r1.rows.empty());
    const auto r2 = transfer_check(q(2), 4);
    CHECK(r2.projective_ok());
    REQUIRE(r2.formula_scalar.has_value());
    CHECK(*r2.formula_scalar == -2);
    CHECK_THROWS_AS(transfer_check(q(1), 3), Error);
  }

  TEST_CASE("kernel_vectors_annihilated") {
    testgen::Gen g(501);
    for (int trial = 0; trial < 40; ++trial) {
      const Model model = g.integer(0, 1) ? Model::I : Model::II;
      const long n = g.integer(0, 14);
      const Rational s = g.integer(0, 2) ? Rational(g.integer(-n - 3, n + 3)) : g.generic();
      const auto sp = solution_space(model, s, n);
      CHECK(sp.dim == sp.basis.size());
      CHECK(sp.dim <= 2);
      for (const auto& p : sp.basis) CHECK(apply_operator(model, s, n, p).is_zero());
    }
  }

  TEST_CASE("models_have_equal_dimensions") {
    testgen::Gen g(502);
    for (int trial = 0; trial < 40; ++trial) {
      const long n = g.integer(0, 14);
      const Rational s = g.integer(-n - 3, n + 3);
      CHECK(solution_space(Model::I, s, n).dim == solution_space(Model::II, s, n).dim);
    }
  }

  TEST_CASE("hom_dimensions_are_zero_or_one") {
    for (long n = 0; n <= 10; ++n)
      for (long s = -n - 2; s <= n + 2; ++s)
        for (Irr sigma : all_irr()) {
          const int h = hom_dim(Model::II, Rational(s), n, sigma);
          CHECK((h == 0 || h == 1));
        }
  }

  TEST_CASE("grid_checks_small_range") {
    auto grid = checks::solver_grid(10);
    testgen::require_pass(grid.dimensions);
    testgen::require_pass(grid.mreps);
    testgen::require_pass(grid.homs);
    testgen::require_pass(grid.bases);
    testgen::require_pass(checks::cayley_transfer(10));
    const auto scalar = checks::cayley_scalar(12);
    CHECK(scalar.informational);
    CHECK(scalar.cases > 0);
  }
}
