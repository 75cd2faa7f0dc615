#include "ktf/exactnum.hpp"

namespace ktf {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DegenerateGamma: return "DegenerateGamma";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::UndefinedC: return "UndefinedC";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::Usage: return "UsageError";
  }
  return "Error";
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den))
    throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
  std::string n(num), d(den);
  if (n[0] == '+') n.erase(0, 1);
  if (d[0] == '+') d.erase(0, 1);
  Integer zn(n, 10), zd(d, 10);
  if (zd == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) { return q.get_num().get_si(); }

Rational factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational rising_factorial(const Rational& base, long count) {
  Rational acc(1);
  for (long j = 0; j < count; ++j) acc *= base + j;
  return acc;
}

Rational falling_factorial(const Rational& base, long count) {
  Rational acc(1);
  for (long j = 0; j < count; ++j) acc *= base - j;
  return acc;
}

Rational gen_binomial(const Rational& top, long m) {
  if (m < 0) return 0;
  return falling_factorial(top, m) / factorial(m);
}

size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Gauss Gauss::inverse() const {
  const Rational nrm = norm();
  if (is_zero(nrm)) throw std::domain_error("inverse of zero in Q(i)");
  return Gauss(re_ / nrm, -im_ / nrm);
}

Gauss& Gauss::operator+=(const Gauss& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gauss& Gauss::operator-=(const Gauss& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gauss& Gauss::operator*=(const Gauss& o) {
  if (is_zero(o.im_) && is_zero(im_)) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Gauss& Gauss::operator/=(const Gauss& o) {
  if (is_zero(o.im_)) {
    if (is_zero(o.re_)) throw std::domain_error("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

size_t bit_size(const Gauss& g) { return bit_size(g.re()) + bit_size(g.im()); }

std::string to_string(const Gauss& g) {
  if (is_zero(g.im())) return to_string(g.re());
  const std::string im = to_string(abs(g.im())) + "i";
  if (is_zero(g.re())) return (sgn(g.im()) < 0 ? "-" : "") + im;
  return to_string(g.re()) + (sgn(g.im()) < 0 ? "-" : "+") + im;
}

void accumulate_denominator(const Rational& x, Integer& l) {
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
}

void accumulate_denominator(const Gauss& x, Integer& l) {
  accumulate_denominator(x.re(), l);
  accumulate_denominator(x.im(), l);
}

GPoly to_gauss(const QPoly& p) {
  std::vector<Gauss> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return GPoly(std::move(c));
}

std::optional<QPoly> to_rational(const GPoly& p) {
  std::vector<Rational> c;
  for (const auto& v : p.coeffs()) {
    if (!is_zero(v.im())) return std::nullopt;
    c.push_back(v.re());
  }
  return QPoly(std::move(c));
}

std::vector<std::string> serialize(const QPoly& p) {
  std::vector<std::string> out;
  if (p.is_zero()) return {"0"};
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  QPoly result;
  for (size_t k = n; k-- > 0;) {
    result = result * QPoly{-xs[k], Rational(1)} + QPoly::constant(dd[k]);
  }
  return result;
}

GMatrix to_gauss(const QMatrix& m) {
  GMatrix g(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) g(i, j) = Gauss(m(i, j));
  return g;
}

std::vector<Rational> RationalRoots::multiset() const {
  std::vector<Rational> out;
  for (const auto& [r, mult] : roots)
    for (int k = 0; k < mult; ++k) out.push_back(r);
  return out;
}

namespace {

using ZPoly = std::vector<Integer>;  // ascending, primitive where noted

ZPoly primitive_integer(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) accumulate_denominator(c, l);
  ZPoly z;
  for (const auto& c : p.coeffs()) {
    const Rational scaled = c * l;
    z.push_back(scaled.get_num());
  }
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0 && g != 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

Integer eval_z(const ZPoly& g, const Integer& y) {
  Integer acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * y + *it;
  return acc;
}

Integer eval_mod(const ZPoly& g, const Integer& y, const Integer& m) {
  Integer acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    acc = acc * y + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

ZPoly derivative_z(const ZPoly& g) {
  ZPoly d;
  for (size_t k = 1; k < g.size(); ++k) d.push_back(g[k] * static_cast<unsigned long>(k));
  return d;
}

// Integer roots of a monic squarefree integer polynomial via p-adic lifting:
// every integer root reduces to a simple root modulo a prime that keeps the
// polynomial squarefree, and lifts uniquely to the symmetric range.
std::vector<Integer> integer_roots_monic(const ZPoly& g) {
  const size_t d = g.size() - 1;
  Integer bound = 0;
  for (size_t k = 0; k < d; ++k) {
    Integer a = abs(g[k]);
    if (a > bound) bound = a;
  }
  bound += 1;
  const ZPoly dg = derivative_z(g);
  Integer p = 2;
  for (int attempt = 0; attempt < 5000; ++attempt) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    std::vector<Integer> residues;
    bool simple = true;
    const unsigned long pu = p.get_ui();
    for (unsigned long r = 0; r < pu && simple; ++r) {
      Integer rz(r);
      if (eval_mod(g, rz, p) != 0) continue;
      if (eval_mod(dg, rz, p) == 0) simple = false;
      residues.push_back(rz);
    }
    if (!simple) continue;
    std::vector<Integer> out;
    for (Integer r : residues) {
      Integer m = p;
      while (m <= 2 * bound) {
        m *= m;
        Integer num = eval_mod(g, r, m);
        Integer den = eval_mod(dg, r, m);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        r = r - num * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      }
      if (2 * r > m) r -= m;
      if (eval_z(g, r) == 0) out.push_back(r);
    }
    return out;
  }
  throw std::runtime_error("rational_roots: no suitable prime found");
}

std::vector<Rational> distinct_rational_roots(const QPoly& sqf) {
  ZPoly f = primitive_integer(sqf);
  std::vector<Rational> roots;
  if (f.size() > 1 && f[0] == 0) {
    roots.emplace_back(0);
    f.erase(f.begin());
  }
  if (f.size() <= 1) return roots;
  const size_t d = f.size() - 1;
  const Integer c = f.back();
  // g(y) = c^{d-1} f(y/c) is monic with integer coefficients.
  ZPoly g(d + 1);
  Integer pw = 1;
  for (size_t k = d; k-- > 0;) {
    g[k] = f[k] * pw;
    pw *= c;
  }
  g[d] = 1;
  for (const auto& y : integer_roots_monic(g)) {
    Rational r(y, c);
    r.canonicalize();
    roots.push_back(r);
  }
  return roots;
}

}  // namespace

RationalRoots rational_roots(const QPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational_roots of the zero polynomial");
  RationalRoots out;
  QPoly rest = p;
  if (p.degree() > 0) {
    const QPoly g = poly_gcd(p, p.derivative());
    const QPoly sqf = QPoly::divmod(p, g).first;
    std::vector<Rational> distinct = distinct_rational_roots(sqf);
    std::sort(distinct.begin(), distinct.end());
    for (const auto& r : distinct) {
      const QPoly lin{-r, Rational(1)};
      int mult = 0;
      while (true) {
        auto [q, rem] = QPoly::divmod(rest, lin);
        if (!rem.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      out.roots.emplace_back(r, mult);
    }
  }
  out.remainder_degree = rest.degree();
  return out;
}

}  // namespace ktf
