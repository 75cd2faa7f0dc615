#include "ktf/series.hpp"

#include "ktf/params.hpp"

namespace ktf {

HeunParams HeunParams::with_fuchs(Rational a, Rational q, Rational alpha, Rational beta, Rational gamma,
                                  Rational delta) {
  HeunParams p{std::move(a), std::move(q), std::move(alpha), std::move(beta), std::move(gamma), std::move(delta), 0};
  p.epsilon = p.alpha + p.beta + 1 - p.gamma - p.delta;
  return p;
}

bool HeunParams::fuchs_holds() const { return gamma + delta + epsilon == alpha + beta + 1; }

std::vector<Rational> heun_coefficients(const HeunParams& p, long count) {
  std::vector<Rational> c;
  if (count <= 0) return c;
  c.emplace_back(1);
  if (count == 1) return c;
  const Rational r0 = p.a * p.gamma;
  if (is_zero(r0)) throw Error(ErrorKind::DegenerateGamma, "a*gamma = 0");
  c.push_back(p.q / r0);
  for (long k = 1; k + 1 < count; ++k) {
    const Rational P = (k - 1 + p.alpha) * (k - 1 + p.beta);
    const Rational Q = k * ((k - 1 + p.gamma) * (1 + p.a) + p.a * p.delta + p.epsilon);
    const Rational R = (k + 1) * (k + p.gamma) * p.a;
    if (is_zero(R)) throw Error(ErrorKind::DegenerateGamma, "R_" + std::to_string(k) + " = 0");
    c.push_back(((Q + p.q) * c[k] - P * c[k - 1]) / R);
  }
  return c;
}

std::string to_string(SeriesKind k) { return k == SeriesKind::u ? "u" : "v"; }

HeunParams u_params(const Rational& s, long n) {
  return HeunParams::with_fuchs(-1, -n * s / 4, make_rational(-n, 2), make_rational(-(n - 1), 2),
                                make_rational(1, 2), (1 - n - s) / 2);
}

HeunParams v_params(const Rational& s, long n) {
  return HeunParams::with_fuchs(-1, -(n - 2) * s / 4, make_rational(-(n - 1), 2), make_rational(-(n - 2), 2),
                                make_rational(3, 2), (1 - n - s) / 2);
}

std::vector<Rational> uv_coefficients(SeriesKind kind, const Rational& s, long n, long count) {
  std::vector<Rational> c;
  if (count <= 0) return c;
  c.emplace_back(1);
  if (count == 1) return c;
  const bool u = kind == SeriesKind::u;
  c.push_back(u ? Rational(n * s / 2) : Rational((n - 2) * s / 6));
  for (long k = 1; k + 1 < count; ++k) {
    Rational E, F;
    if (u) {
      const long den = (2 * k + 1) * (2 * k + 2);
      E = (n - 4 * k) * s / den;
      F = make_rational((n - 2 * k + 1) * (n - 2 * k + 2), den);
    } else {
      const long den = (2 * k + 2) * (2 * k + 3);
      E = (n - 4 * k - 2) * s / den;
      F = make_rational((n - 2 * k) * (n - 2 * k + 1), den);
    }
    c.push_back(E * c[k] + F * c[k - 1]);
  }
  return c;
}

QPoly z_series_to_t(const std::vector<Rational>& c, int shift) {
  if (c.empty()) return QPoly();
  std::vector<Rational> t(2 * (c.size() - 1) + shift + 1, Rational(0));
  for (size_t k = 0; k < c.size(); ++k) t[2 * k + shift] = c[k];
  return QPoly(std::move(t));
}

QPoly uv_poly(SeriesKind kind, const Rational& s, long n) {
  const int shift = kind == SeriesKind::u ? 0 : 1;
  // first index whose t-degree exceeds n
  const long K = kind == SeriesKind::u ? n / 2 + 1 : (n + 1) / 2;
  auto c = uv_coefficients(kind, s, n, K + 2);
  if (!is_zero(c[K]) || !is_zero(c[K + 1]))
    throw Error(ErrorKind::NotPolynomial,
                to_string(kind) + " series does not terminate within degree " + std::to_string(n));
  c.resize(K);
  return z_series_to_t(c, shift);
}

std::vector<Rational> hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c, long max_degree) {
  std::vector<Rational> out{Rational(1)};
  for (long j = 0;; ++j) {
    const Rational num = (a + j) * (b + j);
    if (is_zero(num)) return out;
    if (is_zero(c + j))
      throw Error(ErrorKind::UndefinedC, "lower parameter " + to_string(c) + " hits 0 before truncation");
    if (j >= max_degree) throw Error(ErrorKind::NotPolynomial, "2F1 does not terminate within the degree bound");
    out.push_back(out[j] * num / ((c + j) * (j + 1)));
  }
}

std::optional<std::vector<Rational>> hyp2f1_prefix(const Rational& a, const Rational& b, const Rational& c,
                                                   long count) {
  std::vector<Rational> out;
  if (count <= 0) return out;
  out.emplace_back(1);
  bool done = false;
  for (long j = 0; j + 1 < count; ++j) {
    if (done) {
      out.emplace_back(0);
      continue;
    }
    const Rational num = (a + j) * (b + j);
    if (is_zero(num)) {
      done = true;
      out.emplace_back(0);
      continue;
    }
    if (is_zero(c + j)) return std::nullopt;
    out.push_back(out[j] * num / ((c + j) * (j + 1)));
  }
  return out;
}

std::string to_string(HypKind k) {
  switch (k) {
    case HypKind::a: return "a";
    case HypKind::b: return "b";
    case HypKind::c_plus: return "cplus";
    case HypKind::c_minus: return "cminus";
  }
  return "?";
}

HypData hyp_data(HypKind k, const Rational& s, long n) {
  HypData d;
  if (k == HypKind::b) {
    d.A = -(n + s - 1) / 4;
    d.B = -(s - 1) / 2;
    d.C = (5 + n - s) / 4;
    const Rational e = (1 + n - s) / 2;
    if (is_integer(e) && sgn(e) >= 0) d.prefactor = to_long(e);
  } else {
    d.A = make_rational(-n, 2);
    d.B = -(n + s - 1) / 4;
    d.C = (3 - n + s) / 4;
    d.prefactor = 0;
  }
  return d;
}

namespace {

bool c_pm_admissible(const Rational& s, long n) {
  return (mod4(n) == 0 && in_set(ParamSet::I0minus, s, n)) || (mod4(n) == 2 && in_set(ParamSet::I2minus, s, n));
}

}  // namespace

Rational connection_constant(const Rational& s, long n) {
  if (!c_pm_admissible(s, n))
    throw Error(ErrorKind::NotApplicable, "C(s;n) needs n = 0, 2 mod 4 and s in the matching I-minus set");
  if (mod4(n) == 2 && s == -1) {
    const long q = n / 4;
    return rising_factorial(make_rational(-n, 2), q) / factorial(q);
  }
  const long m = to_long((n + s - 1) / 4);
  return rising_factorial(make_rational(-n, 2), m) * rising_factorial(Rational(-m), m) /
         rising_factorial((3 - n + s) / 4, m) / factorial(m);
}

QPoly hypergeom_poly(HypKind k, const Rational& s, long n) {
  if (n < 0) throw Error(ErrorKind::NotPolynomial, "n must be nonnegative");
  switch (k) {
    case HypKind::a: {
      const HypData d = hyp_data(k, s, n);
      return z_series_to_t(hyp2f1_terminating(d.A, d.B, d.C, n / 2), 0);
    }
    case HypKind::b: {
      const HypData d = hyp_data(k, s, n);
      if (!d.prefactor || *d.prefactor > n)
        throw Error(ErrorKind::NotPolynomial, "t-power prefactor of b is not in [0, n]");
      const long e = *d.prefactor;
      return z_series_to_t(hyp2f1_terminating(d.A, d.B, d.C, (n - e) / 2), static_cast<int>(e));
    }
    case HypKind::c_plus:
    case HypKind::c_minus: {
      if (!c_pm_admissible(s, n))
        throw Error(ErrorKind::NotPolynomial, "c+/c- need n = 0, 2 mod 4 and s in the matching I-minus set");
      const Rational C = connection_constant(s, n);
      const QPoly a = hypergeom_poly(HypKind::a, s, n);
      const QPoly b = hypergeom_poly(HypKind::b, s, n);
      return k == HypKind::c_plus ? a + b * C : a - b * C;
    }
  }
  return QPoly();
}

std::string to_string(PolyKind k) {
  switch (k) {
    case PolyKind::u: return "u";
    case PolyKind::v: return "v";
    case PolyKind::a: return "a";
    case PolyKind::b: return "b";
  }
  return "?";
}

bool is_polynomial(PolyKind k, const Rational& s, long n) {
  if (n < 0) return false;
  auto in = [&](ParamSet p) { return in_set(p, s, n); };
  const long r = mod4(n);
  switch (k) {
    case PolyKind::u:
      if (r == 0) return true;
      if (r == 1) return in(ParamSet::I1);
      if (r == 2) return in(ParamSet::I2plus) || in(ParamSet::I2minus);
      return in(ParamSet::I3);
    case PolyKind::v:
      if (r == 0) return in(ParamSet::I0plus) || in(ParamSet::I0minus);
      if (r == 1) return in(ParamSet::I1);
      if (r == 2) return true;
      return in(ParamSet::I3);
    case PolyKind::a:
      if (r == 0) return !in(ParamSet::J0);
      if (r == 1) return in(ParamSet::I1);
      if (r == 2) return !in(ParamSet::J2);
      return in(ParamSet::I3);
    case PolyKind::b:
      if (r == 0) return in(ParamSet::I0plus) || in(ParamSet::I0minus) || in(ParamSet::J0);
      if (r == 1) return in(ParamSet::I1);
      if (r == 2) return in(ParamSet::I2plus) || in(ParamSet::I2minus) || in(ParamSet::J2);
      return in(ParamSet::I3);
  }
  return false;
}

namespace {

bool heun_matches_gauss(const HeunParams& hp, const Rational& A, const Rational& B, const Rational& C, long terms) {
  const auto heun = heun_coefficients(hp, terms);
  const auto gauss = hyp2f1_prefix(A, B, C, (terms + 1) / 2 + 1);
  if (!gauss) return false;
  for (long k = 0; k < terms; ++k) {
    const Rational expect = (k % 2) ? Rational(0) : (*gauss)[k / 2];
    if (heun[k] != expect) return false;
  }
  return true;
}

}  // namespace

MaierReport maier_check(long n, long terms) {
  MaierReport r;
  const Rational N(n);
  r.hg1 = heun_matches_gauss(
      HeunParams::with_fuchs(-1, 0, -N / 2, -(N - 1) / 2, make_rational(1, 2), -(N - 1) / 2), -N / 4,
      -(N - 1) / 4, make_rational(3, 4), terms);
  r.hg2 = heun_matches_gauss(
      HeunParams::with_fuchs(-1, 0, -(N - 1) / 2, -(N - 2) / 2, make_rational(3, 2), -(N - 1) / 2),
      -(N - 1) / 4, -(N - 2) / 4, make_rational(5, 4), terms);
  return r;
}

}  // namespace ktf
