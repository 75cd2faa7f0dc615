#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktf/exactnum.hpp"

namespace ktf {

// Heun parameters; epsilon is tied to the others by
// gamma + delta + epsilon = alpha + beta + 1.
struct HeunParams {
  Rational a, q, alpha, beta, gamma, delta, epsilon;

  static HeunParams with_fuchs(Rational a, Rational q, Rational alpha, Rational beta, Rational gamma,
                               Rational delta);
  bool fuchs_holds() const;
};

// c_0..c_{count-1} of the local Heun function at z = 0, c_0 = 1.
std::vector<Rational> heun_coefficients(const HeunParams& p, long count);

enum class SeriesKind { u, v };
std::string to_string(SeriesKind k);

// u = Hl(-1, -ns/4; -n/2, -(n-1)/2, 1/2, (1-n-s)/2; t^2)
// v = t Hl(-1, -(n-2)s/4; -(n-1)/2, -(n-2)/2, 3/2, (1-n-s)/2; t^2)
HeunParams u_params(const Rational& s, long n);
HeunParams v_params(const Rational& s, long n);

// U_0..U_{count-1} (or V_k) from the dedicated three-term recurrences.
std::vector<Rational> uv_coefficients(SeriesKind kind, const Rational& s, long n, long count);

// sum_k c_k t^{2k + shift}
QPoly z_series_to_t(const std::vector<Rational>& c, int shift);

// u or v as a polynomial of degree <= n; NotPolynomial when the series does
// not terminate within degree n (decided by two consecutive vanishing terms).
QPoly uv_poly(SeriesKind kind, const Rational& s, long n);

// 2F1(a, b; c; z) built by term ratio. Terminating version: stops at the first
// j with (a+j)(b+j) = 0; UndefinedC when c+j = 0 strictly before that;
// NotPolynomial when no truncation occurs within max_degree + 1 terms.
std::vector<Rational> hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c, long max_degree);
// First `count` coefficients; nullopt when some c+j = 0 with nonzero numerator
// before the series has terminated.
std::optional<std::vector<Rational>> hyp2f1_prefix(const Rational& a, const Rational& b, const Rational& c,
                                                   long count);

enum class HypKind { a, b, c_plus, c_minus };
std::string to_string(HypKind k);

// Parameters of the 2F1 factor and the t-power prefactor.
struct HypData {
  Rational A, B, C;
  std::optional<long> prefactor;  // exponent of t in front; nullopt if not a nonnegative integer
};
HypData hyp_data(HypKind k, const Rational& s, long n);

// Connection constant C(s;n) for n = 0, 2 mod 4 and s in the matching I-minus set.
Rational connection_constant(const Rational& s, long n);

QPoly hypergeom_poly(HypKind k, const Rational& s, long n);

enum class PolyKind { u, v, a, b };
std::string to_string(PolyKind k);
// Classification predicate by n mod 4 against the special parameter sets.
bool is_polynomial(PolyKind k, const Rational& s, long n);

struct MaierReport {
  bool hg1 = false;
  bool hg2 = false;
  bool ok() const { return hg1 && hg2; }
};
MaierReport maier_check(long n, long terms);

}  // namespace ktf
