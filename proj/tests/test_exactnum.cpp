#include <doctest.h>

#include "gen.hpp"
#include "ktf/exactnum.hpp"
#include "ktf/verify.hpp"

using namespace ktf;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Largest k with a nonzero k x k minor.
size_t minor_rank(const QMatrix& m) {
  const size_t r = m.rows(), c = m.cols();
  size_t best = 0;
  for (size_t k = 1; k <= std::min(r, c); ++k) {
    bool found = false;
    for (unsigned rm = 0; rm < (1u << r) && !found; ++rm) {
      if (static_cast<size_t>(__builtin_popcount(rm)) != k) continue;
      for (unsigned cm = 0; cm < (1u << c) && !found; ++cm) {
        if (static_cast<size_t>(__builtin_popcount(cm)) != k) continue;
        QMatrix sub(k, k);
        size_t i = 0;
        for (size_t a = 0; a < r; ++a) {
          if (!(rm >> a & 1)) continue;
          size_t j = 0;
          for (size_t b = 0; b < c; ++b)
            if (cm >> b & 1) sub(i, j++) = m(a, b);
          ++i;
        }
        if (!is_zero(cofactor_det(sub))) found = true;
      }
    }
    if (found) best = k;
  }
  return best;
}

}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("parse_and_print_rationals") {
    CHECK(parse_rational("-3/4") == q(-3, 4));
    CHECK(parse_rational("6/8") == q(3, 4));
    CHECK(parse_rational("17") == q(17));
    CHECK(to_string(q(-3, 4)) == "-3/4");
    CHECK(to_string(q(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
  }

  TEST_CASE("rising_factorial_examples") {
    CHECK(rising_factorial(q(1), 3) == 6);
    CHECK(rising_factorial(q(-1, 2), 2) == q(-1, 4));
    CHECK(rising_factorial(q(3), 0) == 1);
    CHECK(falling_factorial(q(4), 3) == 24);
    CHECK(factorial(10) == 3628800);
  }

  TEST_CASE("gen_binomial_examples") {
    CHECK(gen_binomial(q(5), 2) == 10);
    CHECK(gen_binomial(q(-1), 2) == 1);
    CHECK(gen_binomial(q(3), -1) == 0);
    CHECK(gen_binomial(q(1, 2), 2) == q(-1, 8));
  }

  TEST_CASE("poly_eval_examples") {
    const QPoly x2m4{q(-4), q(0), q(1)};
    CHECK(x2m4(q(2)) == 0);
    CHECK(QPoly()(q(7)) == 0);
    CHECK(QPoly{q(0), q(4)}(q(3, 2)) == 6);
    CHECK(QPoly().degree() < 0);
    CHECK(serialize(QPoly()) == std::vector<std::string>{"0"});
  }

  TEST_CASE("nullspace_examples") {
    CHECK(nullspace(QMatrix::identity(3)).empty());
    CHECK(nullspace(QMatrix(2, 2)).size() == 2);
    QMatrix m(2, 2);
    m(0, 0) = 1, m(0, 1) = 2, m(1, 0) = 2, m(1, 1) = 4;
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<Rational>{q(1), q(-1, 2)});
  }

  TEST_CASE("rational_roots_examples") {
    const auto r1 = rational_roots(QPoly{q(0), q(-4), q(0), q(1)});
    CHECK(r1.multiset() == std::vector<Rational>{q(-2), q(0), q(2)});
    CHECK(r1.remainder_degree == 0);
    const auto r2 = rational_roots(QPoly{q(1), q(0), q(1)});
    CHECK(r2.roots.empty());
    CHECK(r2.remainder_degree == 2);
    const auto r3 = rational_roots(QPoly{q(1), q(-2), q(1)});
    REQUIRE(r3.roots.size() == 1);
    CHECK(r3.roots[0].first == 1);
    CHECK(r3.roots[0].second == 2);
    CHECK_THROWS_AS(rational_roots(QPoly()), Error);
  }

  TEST_CASE("random_nullspace_vectors_are_annihilated") {
    testgen::Gen g(101);
    for (int trial = 0; trial < 200; ++trial) {
      const size_t r = g.integer(1, 5), c = g.integer(1, 6);
      const QMatrix m = g.matrix(r, c);
      const auto ns = nullspace(m);
      for (const auto& v : ns) {
        const auto mv = m.apply(v);
        for (const auto& x : mv) CHECK(is_zero(x));
      }
      CHECK(rank(m) + ns.size() == c);
    }
  }

  TEST_CASE("rank_matches_minor_oracle") {
    testgen::Gen g(102);
    for (int trial = 0; trial < 150; ++trial) {
      const QMatrix m = g.matrix(g.integer(1, 4), g.integer(1, 4));
      CHECK(rank(m) == minor_rank(m));
    }
  }

  TEST_CASE("solve_returns_a_solution") {
    testgen::Gen g(103);
    for (int trial = 0; trial < 100; ++trial) {
      const QMatrix m = g.matrix(g.integer(1, 5), g.integer(1, 5));
      std::vector<Rational> x(m.cols());
      for (auto& v : x) v = g.rational();
      const auto b = m.apply(x);
      const auto y = solve(m, b);
      REQUIRE(y.has_value());
      CHECK(m.apply(*y) == b);
    }
  }

  TEST_CASE("rational_root_reconstruction") {
    testgen::Gen g(104);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> roots;
      QPoly p = QPoly::constant(g.integer(1, 9) * (g.integer(0, 1) ? 1 : -1));
      const long count = g.integer(0, 6);
      for (long k = 0; k < count; ++k) {
        roots.push_back(g.rational(9, 5));
        p = p * QPoly{-roots.back(), q(1)};
      }
      // an irreducible quadratic factor left over half the time
      const bool extra = g.integer(0, 1);
      if (extra) p = p * QPoly{q(2), q(0), q(1)};
      std::sort(roots.begin(), roots.end());
      const auto rr = rational_roots(p);
      CHECK(rr.multiset() == roots);
      CHECK(rr.remainder_degree == (extra ? 2 : 0));
    }
  }

  TEST_CASE("gauss_field_laws") {
    testgen::Gen g(105);
    for (int trial = 0; trial < 200; ++trial) {
      const Gauss a = g.gauss(), b = g.gauss(), c = g.gauss();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Gauss(0));
      CHECK(Gauss::i() * Gauss::i() == Gauss(-1));
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a * b).norm() == a.norm() * b.norm());
      if (!is_zero(a)) CHECK(a * a.inverse() == Gauss(1));
    }
  }

  TEST_CASE("poly_division_and_gcd") {
    testgen::Gen g(106);
    for (int trial = 0; trial < 100; ++trial) {
      const QPoly a = g.poly(6), b = g.poly(4);
      if (b.is_zero()) continue;
      const auto [qt, r] = QPoly::divmod(a, b);
      CHECK(qt * b + r == a);
      CHECK(r.degree() < b.degree());
      const QPoly c = g.poly(3);
      if (c.is_zero()) continue;
      const QPoly d = poly_gcd(a * c, b * c);
      CHECK(QPoly::divmod(d, c.monic()).second.is_zero());
    }
  }

  TEST_CASE("interpolation_recovers_polynomial") {
    testgen::Gen g(107);
    for (int trial = 0; trial < 50; ++trial) {
      const QPoly p = g.poly(6);
      std::vector<Rational> xs, ys;
      for (long k = 0; k <= 7; ++k) {
        xs.push_back(q(k * 3 - 7, 2));
        ys.push_back(p(xs.back()));
      }
      CHECK(interpolate(xs, ys) == p);
    }
  }

  TEST_CASE("charpoly_matches_cofactor_determinant") {
    testgen::Gen g(108);
    for (int trial = 0; trial < 60; ++trial) {
      const size_t n = g.integer(1, 5);
      const QMatrix m = g.matrix(n, n);
      const QPoly cp = charpoly(m);
      CHECK(cp.degree() == static_cast<int>(n));
      for (long x = -2; x <= 2; ++x) {
        QMatrix xm = Rational(x) * QMatrix::identity(n) - m;
        CHECK(cp(Rational(x)) == cofactor_det(xm));
      }
    }
  }
}
