#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ktf/exactnum.hpp"

namespace ktf {

enum class Family { P, Q, Cay, Kraw, Sylv };

std::string to_string(Family f);
Family parse_family(const std::string& name);

// Determinant of the tridiagonal matrix with the given bands, via
// D_k = diag_k D_{k-1} - super_{k-1} sub_{k-1} D_{k-2}.
template <class T>
T continuant(const std::vector<T>& sub, const std::vector<T>& diag, const std::vector<T>& super,
             const T& one) {
  const size_t k = diag.size();
  if (k == 0) {
    if (!sub.empty() || !super.empty()) throw Error(ErrorKind::LengthMismatch, "continuant band lengths");
    return one;
  }
  if (sub.size() != k - 1 || super.size() != k - 1)
    throw Error(ErrorKind::LengthMismatch, "continuant band lengths");
  T prev2 = one;
  T prev1 = diag[0];
  for (size_t j = 1; j < k; ++j) {
    T cur = diag[j] * prev1 - (super[j - 1] * sub[j - 1]) * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

// a(x) = 2x(2x-1), b(x) = 2x(2x+1)
Rational band_a(const Rational& x);
Rational band_b(const Rational& x);

struct Bands {
  std::vector<Rational> sub;
  std::vector<Rational> diag_x;  // diagonal entries are diag_x[j] * x
  std::vector<Rational> super;
};

// Band data of P_k(x;y), Q_k(x;y), Cay_k(x;y). Sylv and Kraw have no bands of
// their own (Sylv(x;n) = Cay_{n+1}(x;n)).
Bands family_bands(Family f, long k, const Rational& y);

// For Sylv, k plays the role of n and the result is Cay_{n+1}(x;n).
QPoly family_poly(Family f, long k, const Rational& y);
Rational family_value(Family f, long k, const Rational& x, const Rational& y);

struct ZeroSet {
  bool all_of_c = false;
  std::vector<Rational> roots;  // multiset, increasing
  int unresolved_degree = 0;

  std::vector<Rational> distinct() const;
};

ZeroSet zero_set(Family f, long k, const Rational& n);

struct PalindromeConfig {
  Family family;
  std::function<Rational(long)> assoc;                 // a_k
  std::function<std::optional<long>(long)> degree;     // d(n)
  std::function<int(const Rational&, long)> sign;      // theta(s, n)
  std::string assoc_name;
};

PalindromeConfig palindrome_config(Family f);

int sgn_of(const Rational& s);

enum class CheckStatus { Pass, Fail, NotApplicable };
const char* to_string(CheckStatus s);

struct PalindromeReport {
  CheckStatus status = CheckStatus::Pass;
  long n = 0;
  long degree = -1;
  bool all_of_c = false;
  std::vector<Rational> zero_set;      // distinct roots, or sample points when all_of_c
  std::vector<int> signs;              // theta(s) aligned with zero_set
  long identities_checked = 0;
  std::vector<std::string> counterexamples;
};

PalindromeReport check_palindromic(const PalindromeConfig& cfg, long n, long extra_tail);

// Negative check for odd n: tries every candidate degree d in [0, n] and
// both signs; returns true when no choice makes the mirror identity hold on
// the zero set of p_{d+1}(x;n).
struct OddPalindromeReport {
  bool fails_for_every_degree = true;
  std::vector<long> degrees_that_pass;
};
OddPalindromeReport odd_palindrome_check(Family f, long n, long extra_tail);

enum class FactorTarget { P_even, Q_even, P_odd, Sylv, Kraw_np1, PS_corollary };
std::string to_string(FactorTarget t);

struct FactorReport {
  bool equal = false;
  QPoly lhs;
  QPoly rhs;
};

// Product of the diagonal x-coefficients (the leading constants alpha_n,
// beta_n, gamma_n).
Rational diagonal_product(Family f, long k, long n);
Rational alpha_closed_form(long n);
Rational beta_closed_form(long n);
Rational gamma_closed_form(long n);

FactorReport verify_factorization(FactorTarget t, long n);

enum class Identity { cay_falling, cay_raising, cay_factorial, kraw_from_cay, cay_binomial_form, cay_recurrence };
std::string to_string(Identity id);
bool verify_identity(Identity id, long k_max);

// Value of Cay_k via the explicit binomial-sum expression.
Rational cay_binomial_form(long k, const Rational& x, const Rational& y);

}  // namespace ktf
