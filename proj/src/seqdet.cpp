#include "ktf/seqdet.hpp"

#include <algorithm>

#include "ktf/params.hpp"

namespace ktf {

std::string to_string(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::Q: return "Q";
    case Family::Cay: return "Cay";
    case Family::Kraw: return "Kraw";
    case Family::Sylv: return "Sylv";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "P") return Family::P;
  if (name == "Q") return Family::Q;
  if (name == "Cay") return Family::Cay;
  if (name == "Kraw") return Family::Kraw;
  if (name == "Sylv") return Family::Sylv;
  throw Error(ErrorKind::Usage, "unknown family '" + name + "'");
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

Rational band_a(const Rational& x) { return 2 * x * (2 * x - 1); }
Rational band_b(const Rational& x) { return 2 * x * (2 * x + 1); }

Bands family_bands(Family f, long k, const Rational& y) {
  Bands b;
  for (long j = 1; j <= k; ++j) {
    switch (f) {
      case Family::P:
        b.diag_x.push_back(y - 4 * (j - 1));
        if (j < k) {
          b.super.push_back(band_a(Rational(j)));
          b.sub.push_back(-band_a((y - 2 * (j - 1)) / 2));
        }
        break;
      case Family::Q:
        b.diag_x.push_back(y - 2 - 4 * (j - 1));
        if (j < k) {
          b.super.push_back(band_b(Rational(j)));
          b.sub.push_back(-band_b((y - 2 * j) / 2));
        }
        break;
      case Family::Cay:
        b.diag_x.push_back(Rational(1));
        if (j < k) {
          b.super.push_back(Rational(j));
          b.sub.push_back(y - (j - 1));
        }
        break;
      default:
        throw Error(ErrorKind::Usage, "family has no band form: " + to_string(f));
    }
  }
  return b;
}

namespace {

// p_0..p_kmax at a scalar x for the banded families (bands do not depend on k).
std::vector<Rational> banded_values(Family f, long kmax, const Rational& x, const Rational& y) {
  const Bands b = family_bands(f, kmax, y);
  std::vector<Rational> out{Rational(1)};
  if (kmax >= 1) out.push_back(b.diag_x[0] * x);
  for (long j = 2; j <= kmax; ++j)
    out.push_back(b.diag_x[j - 1] * x * out[j - 1] - b.super[j - 2] * b.sub[j - 2] * out[j - 2]);
  return out;
}

Rational kraw_value(long k, const Rational& x, const Rational& y) {
  Rational acc(0);
  for (long j = 0; j <= k; ++j) {
    Rational term = gen_binomial(x, j) * gen_binomial(y - x, k - j);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

QPoly linear(const Rational& root) { return QPoly{-root, Rational(1)}; }

}  // namespace

QPoly family_poly(Family f, long k, const Rational& y) {
  switch (f) {
    case Family::Sylv:
      return family_poly(Family::Cay, k + 1, Rational(k));
    case Family::Kraw: {
      std::vector<Rational> xs, ys;
      for (long j = 0; j <= k; ++j) {
        xs.emplace_back(j);
        ys.push_back(kraw_value(k, Rational(j), y));
      }
      return interpolate(xs, ys);
    }
    default: {
      const Bands b = family_bands(f, k, y);
      std::vector<QPoly> diag, sub, super;
      for (const auto& d : b.diag_x) diag.push_back(QPoly::monomial(d, 1));
      for (const auto& s : b.sub) sub.push_back(QPoly::constant(s));
      for (const auto& s : b.super) super.push_back(QPoly::constant(s));
      return continuant(sub, diag, super, QPoly::constant(Rational(1)));
    }
  }
}

Rational family_value(Family f, long k, const Rational& x, const Rational& y) {
  switch (f) {
    case Family::Sylv: return banded_values(Family::Cay, k + 1, x, Rational(k)).back();
    case Family::Kraw: return kraw_value(k, x, y);
    default: return banded_values(f, k, x, y).back();
  }
}

std::vector<Rational> ZeroSet::distinct() const {
  std::vector<Rational> d = roots;
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

ZeroSet zero_set(Family f, long k, const Rational& n) {
  ZeroSet z;
  const QPoly p = family_poly(f, k, n);
  if (p.is_zero()) {
    z.all_of_c = true;
    return z;
  }
  const RationalRoots r = rational_roots(p);
  z.roots = r.multiset();
  z.unresolved_degree = r.remainder_degree;
  return z;
}

int sgn_of(const Rational& s) { return sgn(s) > 0 ? 1 : (sgn(s) < 0 ? -1 : 0); }

namespace {

int parity_sign(const Rational& e) {
  // (-1)^e for integral e
  return (to_long(e) % 2 == 0) ? 1 : -1;
}

}  // namespace

PalindromeConfig palindrome_config(Family f) {
  PalindromeConfig c;
  c.family = f;
  switch (f) {
    case Family::P:
      c.assoc = [](long k) { return factorial(2 * k); };
      c.assoc_name = "(2k)!";
      c.degree = [](long n) -> std::optional<long> {
        if (n < 0 || n % 2) return std::nullopt;
        return n / 2;
      };
      // Sign factor uses n mod 4 (the n = 2 mod 4 branch carries sgn(s)).
      c.sign = [](const Rational& s, long n) { return mod4(n) == 0 ? 1 : sgn_of(s); };
      break;
    case Family::Q:
      c.assoc = [](long k) { return factorial(2 * k + 1); };
      c.assoc_name = "(2k+1)!";
      c.degree = [](long n) -> std::optional<long> {
        if (n < 2 || n % 2) return std::nullopt;
        return (n - 2) / 2;
      };
      c.sign = [](const Rational& s, long n) { return mod4(n) == 0 ? sgn_of(s) : 1; };
      break;
    case Family::Cay:
      c.assoc = [](long k) { return factorial(k); };
      c.assoc_name = "k!";
      c.degree = [](long n) -> std::optional<long> {
        if (n < 0) return std::nullopt;
        return n;
      };
      c.sign = [](const Rational& s, long n) { return parity_sign((n - s) / 2); };
      break;
    case Family::Kraw:
      c.assoc = [](long) { return Rational(1); };
      c.assoc_name = "1";
      c.degree = [](long n) -> std::optional<long> {
        if (n < 0) return std::nullopt;
        return n;
      };
      c.sign = [](const Rational& s, long) { return parity_sign(s); };
      break;
    case Family::Sylv:
      throw Error(ErrorKind::Usage, "Sylv has no palindromic configuration");
  }
  return c;
}

namespace {

std::vector<Rational> values_upto(Family f, long kmax, const Rational& x, long n) {
  if (f == Family::Kraw) {
    std::vector<Rational> out;
    for (long k = 0; k <= kmax; ++k) out.push_back(kraw_value(k, x, Rational(n)));
    return out;
  }
  return banded_values(f, kmax, x, Rational(n));
}

const std::vector<Rational>& generic_samples() {
  static const std::vector<Rational> s{make_rational(1, 3), make_rational(-7, 2), make_rational(5),
                                       make_rational(-9, 5), make_rational(11, 7)};
  return s;
}

// Mirror identity and tail at one scalar s with a given sign.
bool mirror_holds(const PalindromeConfig& cfg, const std::vector<Rational>& v, long d, long tail, int theta,
                  std::string* why) {
  for (long k = d + 1; k <= d + 1 + tail; ++k)
    if (!is_zero(v[k])) {
      if (why) *why = "p_" + std::to_string(k) + " = " + to_string(v[k]) + " != 0";
      return false;
    }
  for (long k = 0; k <= d; ++k) {
    const Rational lhs = v[k] / cfg.assoc(k);
    const Rational rhs = theta * v[d - k] / cfg.assoc(d - k);
    if (lhs != rhs) {
      if (why)
        *why = "k=" + std::to_string(k) + ": " + to_string(lhs) + " != " + std::to_string(theta) + " * " +
               to_string(v[d - k] / cfg.assoc(d - k));
      return false;
    }
  }
  return true;
}

}  // namespace

PalindromeReport check_palindromic(const PalindromeConfig& cfg, long n, long extra_tail) {
  PalindromeReport rep;
  rep.n = n;
  const auto d = cfg.degree(n);
  if (!d) {
    rep.status = CheckStatus::NotApplicable;
    return rep;
  }
  rep.degree = *d;
  const ZeroSet zs = zero_set(cfg.family, *d + 1, Rational(n));
  rep.all_of_c = zs.all_of_c;
  if (zs.all_of_c) {
    // Certify as polynomial identities in x, then spot-check at sample points.
    const int theta = cfg.sign(Rational(1), n);
    std::vector<QPoly> polys;
    for (long k = 0; k <= *d + 1 + extra_tail; ++k) polys.push_back(family_poly(cfg.family, k, Rational(n)));
    for (long k = *d + 1; k <= *d + 1 + extra_tail; ++k) {
      ++rep.identities_checked;
      if (!polys[k].is_zero()) rep.counterexamples.push_back("p_" + std::to_string(k) + "(x) is not identically 0");
    }
    for (long k = 0; k <= *d; ++k) {
      ++rep.identities_checked;
      const QPoly diff = polys[k] * (Rational(1) / cfg.assoc(k)) -
                         polys[*d - k] * (Rational(theta) / cfg.assoc(*d - k));
      if (!diff.is_zero()) rep.counterexamples.push_back("mirror identity fails as a polynomial at k=" + std::to_string(k));
    }
    for (const auto& s : generic_samples()) {
      rep.zero_set.push_back(s);
      rep.signs.push_back(cfg.sign(s, n));
      std::string why;
      ++rep.identities_checked;
      if (!mirror_holds(cfg, values_upto(cfg.family, *d + 1 + extra_tail, s, n), *d, extra_tail, cfg.sign(s, n), &why))
        rep.counterexamples.push_back("s=" + to_string(s) + ": " + why);
    }
  } else {
    if (zs.unresolved_degree > 0)
      rep.counterexamples.push_back("zero set has " + std::to_string(zs.unresolved_degree) + " non-rational roots");
    for (const auto& s : zs.distinct()) {
      const int theta = cfg.sign(s, n);
      rep.zero_set.push_back(s);
      rep.signs.push_back(theta);
      std::string why;
      ++rep.identities_checked;
      if (!mirror_holds(cfg, values_upto(cfg.family, *d + 1 + extra_tail, s, n), *d, extra_tail, theta, &why))
        rep.counterexamples.push_back("s=" + to_string(s) + ": " + why);
    }
  }
  rep.status = rep.counterexamples.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

OddPalindromeReport odd_palindrome_check(Family f, long n, long extra_tail) {
  OddPalindromeReport rep;
  const PalindromeConfig cfg = palindrome_config(f);
  for (long d = 0; d <= n; ++d) {
    const ZeroSet zs = zero_set(f, d + 1, Rational(n));
    if (zs.unresolved_degree > 0) continue;
    std::vector<Rational> points = zs.all_of_c ? generic_samples() : zs.distinct();
    if (points.empty()) continue;
    bool all_ok = true;
    for (const auto& s : points) {
      const auto v = values_upto(f, d + 1 + extra_tail, s, n);
      if (!mirror_holds(cfg, v, d, extra_tail, 1, nullptr) && !mirror_holds(cfg, v, d, extra_tail, -1, nullptr)) {
        all_ok = false;
        break;
      }
    }
    if (all_ok) {
      rep.fails_for_every_degree = false;
      rep.degrees_that_pass.push_back(d);
    }
  }
  return rep;
}

std::string to_string(FactorTarget t) {
  switch (t) {
    case FactorTarget::P_even: return "P_even";
    case FactorTarget::Q_even: return "Q_even";
    case FactorTarget::P_odd: return "P_odd";
    case FactorTarget::Sylv: return "Sylv";
    case FactorTarget::Kraw_np1: return "Kraw_np1";
    case FactorTarget::PS_corollary: return "PS_corollary";
  }
  return "?";
}

Rational diagonal_product(Family f, long k, long n) {
  const Bands b = family_bands(f, k, Rational(n));
  Rational acc(1);
  for (const auto& d : b.diag_x) acc *= d;
  return acc;
}

namespace {

Rational odd_square_product(long upto) {
  Rational acc(1);
  for (long l = 0; l <= upto; ++l) acc *= Rational((1 + 2 * l) * (1 + 2 * l));
  return acc;
}

Rational power(const Rational& b, long e) {
  Rational acc(1);
  for (long j = 0; j < e; ++j) acc *= b;
  return acc;
}

}  // namespace

Rational alpha_closed_form(long n) {
  if (mod4(n) == 0) return 0;
  return power(Rational(-4), (n + 2) / 4) * odd_square_product((n - 2) / 4);
}

Rational beta_closed_form(long n) {
  if (mod4(n) == 2) return 0;
  return power(Rational(-4), n / 4) * odd_square_product((n - 4) / 4);
}

Rational gamma_closed_form(long n) {
  Rational prod(1);
  for (long l = 0; l <= (n - 3) / 2; ++l) prod *= 3 + 2 * l;
  const long e = mod4(n) == 1 ? (n - 1) / 4 : (n + 1) / 4;
  return (e % 2 ? -prod : prod);
}

FactorReport verify_factorization(FactorTarget t, long n) {
  FactorReport rep;
  const Rational y(n);
  const QPoly one = QPoly::constant(Rational(1));
  auto need = [&](bool ok) {
    if (!ok) throw Error(ErrorKind::ParityMismatch, to_string(t) + " not defined for n=" + std::to_string(n));
  };
  switch (t) {
    case FactorTarget::P_even: {
      need(n >= 0 && n % 2 == 0);
      const long k = (n + 2) / 2;
      rep.lhs = family_poly(Family::P, k, y);
      if (mod4(n) == 2) {
        QPoly prod = one;
        for (long l = 0; l <= (n - 2) / 4; ++l)
          prod = prod * QPoly{Rational(-(4 * l + 1) * (4 * l + 1)), Rational(0), Rational(1)};
        rep.rhs = prod * diagonal_product(Family::P, k, n);
      }
      break;
    }
    case FactorTarget::Q_even: {
      need(n >= 0 && n % 2 == 0);
      const long k = n / 2;
      rep.lhs = family_poly(Family::Q, k, y);
      if (mod4(n) == 0) {
        QPoly prod = one;
        for (long l = 0; l <= (n - 4) / 4 && n >= 4; ++l)
          prod = prod * QPoly{Rational(-(4 * l + 3) * (4 * l + 3)), Rational(0), Rational(1)};
        rep.rhs = prod * diagonal_product(Family::Q, k, n);
      }
      break;
    }
    case FactorTarget::P_odd: {
      need(n >= 1 && n % 2 == 1);
      const long k = (n + 1) / 2;
      rep.lhs = family_poly(Family::P, k, y);
      QPoly prod = one;
      for (long l = 0; l <= (n - 1) / 2; ++l) prod = prod * linear(Rational(n - 1 - 4 * l));
      rep.rhs = prod * diagonal_product(Family::P, k, n);
      break;
    }
    case FactorTarget::Sylv: {
      need(n >= 0);
      rep.lhs = family_poly(Family::Sylv, n, y);
      QPoly prod = one;
      for (long l = 0; l <= n; ++l) prod = prod * linear(Rational(n - 2 * l));
      rep.rhs = prod;
      break;
    }
    case FactorTarget::Kraw_np1: {
      need(n >= 0);
      rep.lhs = family_poly(Family::Kraw, n + 1, y);
      QPoly prod = one;
      for (long l = 0; l <= n; ++l) prod = prod * linear(Rational(l));
      rep.rhs = prod * (power(Rational(-2), n + 1) / factorial(n + 1));
      break;
    }
    case FactorTarget::PS_corollary: {
      need(n >= 1 && n % 2 == 1);
      const long m = (n - 1) / 2;
      rep.lhs = family_poly(Family::P, (n + 1) / 2, y);
      const QPoly sylv = family_poly(Family::Sylv, m, Rational(m));
      const Rational at_half = sylv(make_rational(1, 2));
      rep.rhs = sylv.scale_argument(make_rational(1, 2)) * (power(Rational(2), n + 1) * at_half);
      break;
    }
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

std::string to_string(Identity id) {
  switch (id) {
    case Identity::cay_falling: return "cay_falling";
    case Identity::cay_raising: return "cay_raising";
    case Identity::cay_factorial: return "cay_factorial";
    case Identity::kraw_from_cay: return "kraw_from_cay";
    case Identity::cay_binomial_form: return "cay_binomial_form";
    case Identity::cay_recurrence: return "cay_recurrence";
  }
  return "?";
}

Rational cay_binomial_form(long k, const Rational& x, const Rational& y) {
  Rational acc(0);
  for (long j = 0; j <= k; ++j)
    acc += gen_binomial(Rational(k), j) * falling_factorial((x + y) / 2, j) *
           rising_factorial((x - y) / 2, k - j);
  return acc;
}

namespace {

Rational cay(long k, const Rational& x, const Rational& y) { return family_value(Family::Cay, k, x, y); }

}  // namespace

bool verify_identity(Identity id, long k_max) {
  for (long k = 0; k <= k_max; ++k) {
    switch (id) {
      case Identity::cay_falling:
        for (long x = 0; x <= k; ++x)
          if (cay(k, Rational(x), Rational(x)) != falling_factorial(Rational(x), k)) return false;
        break;
      case Identity::cay_raising:
        for (long x = 0; x <= k; ++x)
          if (cay(k, Rational(x), Rational(-x)) != rising_factorial(Rational(x), k)) return false;
        break;
      case Identity::cay_factorial:
        if (cay(k, Rational(1), Rational(-1)) != factorial(k)) return false;
        break;
      case Identity::kraw_from_cay:
        for (long x = 0; x <= k; ++x)
          for (long y = 0; y <= k; ++y)
            if (family_value(Family::Kraw, k, Rational(x), Rational(y)) !=
                cay(k, Rational(y - 2 * x), Rational(y)) / factorial(k))
              return false;
        break;
      case Identity::cay_binomial_form:
        for (long x = 0; x <= k; ++x)
          for (long y = 0; y <= k; ++y)
            if (cay(k, Rational(x), Rational(y)) != cay_binomial_form(k, Rational(x), Rational(y))) return false;
        break;
      case Identity::cay_recurrence:
        if (k < 1) break;
        for (long x = 0; x <= k + 1; ++x)
          for (long y = 0; y <= k + 1; ++y) {
            const Rational X(x), Y(y);
            const Rational hkp1 = cay(k + 1, X, Y) / factorial(k + 1);
            const Rational hk = cay(k, X, Y) / factorial(k);
            const Rational hkm1 = cay(k - 1, X, Y) / factorial(k - 1);
            if (hkp1 != X / (k + 1) * hk + Rational(k - y - 1) / (k + 1) * hkm1) return false;
          }
        break;
    }
  }
  return true;
}

}  // namespace ktf
