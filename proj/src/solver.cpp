#include "ktf/solver.hpp"

#include <algorithm>

#include "ktf/params.hpp"
#include "ktf/series.hpp"

namespace ktf {

SolutionSpace solution_space(Model model, const Rational& s, long n) {
  SolutionSpace sp;
  sp.model = model;
  sp.s = s;
  sp.n = n;
  for (auto& v : nullspace(operator_matrix(model, s, n).m)) sp.basis.emplace_back(std::move(v));
  sp.dim = sp.basis.size();
  sp.anomaly = sp.dim > 2;
  return sp;
}

namespace {

bool in_any(std::initializer_list<ParamSet> sets, const Rational& s, long n) {
  for (auto p : sets)
    if (in_set(p, s, n)) return true;
  return false;
}

}  // namespace

size_t expected_dimension(Model, const Rational& s, long n) {
  switch (mod4(n)) {
    case 0: return in_any({ParamSet::I0plus, ParamSet::I0minus}, s, n) ? 2 : 1;
    case 1: return in_set(ParamSet::I1, s, n) ? 2 : 0;
    case 2: return in_any({ParamSet::I2plus, ParamSet::I2minus}, s, n) ? 2 : 1;
    default: return in_set(ParamSet::I3, s, n) ? 2 : 0;
  }
}

std::vector<Irr> expected_mrep(const Rational& s, long n) {
  std::vector<Irr> out;
  switch (mod4(n)) {
    case 0:
      out.push_back(Irr::pp);
      if (in_set(ParamSet::I0plus, s, n)) out.push_back(Irr::pm);
      if (in_set(ParamSet::I0minus, s, n)) out.push_back(Irr::mp);
      break;
    case 2:
      out.push_back(Irr::mm);
      if (in_set(ParamSet::I2plus, s, n)) out.push_back(Irr::mp);
      if (in_set(ParamSet::I2minus, s, n)) out.push_back(Irr::pm);
      break;
    case 1:
      if (in_set(ParamSet::I1, s, n)) out.push_back(Irr::H);
      break;
    default:
      if (in_set(ParamSet::I3, s, n)) out.push_back(Irr::H);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string MRep::label() const {
  if (constituents.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < constituents.size(); ++k) out += (k ? "+" : "") + to_string(constituents[k]);
  return out;
}

namespace {

// Restricted action of g on the kernel, in kernel coordinates.
GMatrix restricted(const GroupElt& g, const SolutionSpace& sp) {
  const size_t d = sp.dim;
  const long n = sp.n;
  GMatrix basis(n + 1, d);
  for (size_t k = 0; k < d; ++k)
    for (long i = 0; i <= n; ++i) basis(i, k) = Gauss(sp.basis[k].coeff(static_cast<int>(i)));
  GMatrix r(d, d);
  for (size_t k = 0; k < d; ++k) {
    const GPoly img = pi_action(g, n, to_gauss(sp.basis[k]));
    std::vector<Gauss> rhs(n + 1);
    for (long i = 0; i <= n; ++i) rhs[i] = img.coeff(static_cast<int>(i));
    auto x = solve(basis, rhs);
    if (!x || basis.apply(*x) != rhs)
      throw Error(ErrorKind::NotInvariant, "kernel is not stable under " + to_string(g));
    for (size_t j = 0; j < d; ++j) r(j, k) = (*x)[j];
  }
  return r;
}

Gauss trace(const GMatrix& m) {
  Gauss t(0);
  for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::vector<size_t> independent_columns(const GMatrix& m) {
  std::vector<size_t> cols;
  size_t r = 0;
  for (size_t j = 0; j < m.cols(); ++j) {
    GMatrix sub(m.rows(), cols.size() + 1);
    for (size_t k = 0; k <= cols.size(); ++k) {
      const size_t c = k < cols.size() ? cols[k] : j;
      for (size_t i = 0; i < m.rows(); ++i) sub(i, k) = m(i, c);
    }
    const size_t nr = rank(sub);
    if (nr > r) {
      cols.push_back(j);
      r = nr;
    }
  }
  return cols;
}

int multiplicity_from_traces(const std::array<Gauss, 8>& tr, Model model, Irr sigma) {
  Gauss acc(0);
  for (int idx = 0; idx < 8; ++idx) {
    const int j = idx % 4, sign = idx < 4 ? 1 : -1;
    acc += tr[idx] * Gauss(character_value(sigma, model, j, sign));
  }
  acc /= Gauss(8);
  if (!is_zero(acc.im()) || !is_integer(acc.re()) || sgn(acc.re()) < 0)
    throw Error(ErrorKind::NotInvariant, "character inner product is not a nonnegative integer");
  return static_cast<int>(to_long(acc.re()));
}

}  // namespace

MRep m_rep_classify(Model model, const Rational& s, long n) {
  const SolutionSpace sp = solution_space(model, s, n);
  MRep rep;
  rep.dim = sp.dim;
  if (sp.dim == 0) {
    rep.traces.fill(Gauss(0));
    return rep;
  }
  std::array<GMatrix, 8> mats;
  for (int idx = 0; idx < 8; ++idx) {
    const int j = idx % 4, sign = idx < 4 ? 1 : -1;
    if (j == 0) {
      // +-1 acts by the scalar (+-1)^n.
      const Gauss c = (sign < 0 && n % 2) ? Gauss(-1) : Gauss(1);
      mats[idx] = c * GMatrix::identity(sp.dim);
    } else {
      mats[idx] = restricted(m_element(model, j, sign), sp);
    }
    rep.traces[idx] = trace(mats[idx]);
  }
  for (Irr sigma : all_irr()) {
    const int mult = multiplicity_from_traces(rep.traces, model, sigma);
    if (mult == 0) continue;
    for (int k = 0; k < mult; ++k) rep.constituents.push_back(sigma);
    // Isotypic projector (dim sigma / 8) sum chi(g) pi(g), in kernel coordinates.
    GMatrix proj(sp.dim, sp.dim);
    for (int idx = 0; idx < 8; ++idx) {
      const int j = idx % 4, sign = idx < 4 ? 1 : -1;
      proj = proj + Gauss(character_value(sigma, model, j, sign)) * mats[idx];
    }
    proj = Gauss(make_rational(irr_dim(sigma), 8)) * proj;
    std::vector<GPoly> span;
    for (size_t c : independent_columns(proj)) {
      GPoly p;
      for (size_t k = 0; k < sp.dim; ++k) p += to_gauss(sp.basis[k]) * proj(k, c);
      span.push_back(std::move(p));
    }
    rep.spans.push_back(std::move(span));
  }
  size_t total = 0;
  for (Irr c : rep.constituents) total += irr_dim(c);
  if (total != sp.dim) throw Error(ErrorKind::NotInvariant, "constituent dimensions do not add up");
  return rep;
}

int multiplicity(const MRep& rep, Irr sigma) {
  return static_cast<int>(std::count(rep.constituents.begin(), rep.constituents.end(), sigma));
}

int hom_dim(Model model, const Rational& s, long n, Irr sigma) {
  return multiplicity(m_rep_classify(model, s, n), sigma);
}

namespace {

std::vector<std::pair<std::string, QPoly>> predicted_basis(Model model, const Rational& s, long n) {
  std::vector<std::pair<std::string, QPoly>> out;
  const long r = mod4(n);
  auto hyp = [&](HypKind k) { out.emplace_back(to_string(k), hypergeom_poly(k, s, n)); };
  auto uv = [&](SeriesKind k) { out.emplace_back(to_string(k), uv_poly(k, s, n)); };
  if (r % 2 == 1) {
    if (!in_set(r == 1 ? ParamSet::I1 : ParamSet::I3, s, n)) return out;
    if (model == Model::II) {
      hyp(HypKind::a);
      hyp(HypKind::b);
    } else {
      uv(SeriesKind::u);
      uv(SeriesKind::v);
    }
    return out;
  }
  const ParamSet Iplus = r == 0 ? ParamSet::I0plus : ParamSet::I2plus;
  const ParamSet Iminus = r == 0 ? ParamSet::I0minus : ParamSet::I2minus;
  const ParamSet J = r == 0 ? ParamSet::J0 : ParamSet::J2;
  if (model == Model::II) {
    if (in_set(Iplus, s, n)) {
      hyp(HypKind::a);
      hyp(HypKind::b);
    } else if (in_set(Iminus, s, n)) {
      hyp(HypKind::c_plus);
      hyp(HypKind::c_minus);
    } else if (in_set(J, s, n)) {
      hyp(HypKind::b);
    } else {
      hyp(HypKind::a);
    }
  } else {
    const SeriesKind main = r == 0 ? SeriesKind::u : SeriesKind::v;
    const SeriesKind extra = r == 0 ? SeriesKind::v : SeriesKind::u;
    uv(main);
    if (in_set(Iplus, s, n) || in_set(Iminus, s, n)) uv(extra);
  }
  return out;
}

}  // namespace

BasisMatch basis_match(Model model, const Rational& s, long n) {
  BasisMatch bm;
  for (auto& [name, p] : predicted_basis(model, s, n)) {
    bm.names.push_back(name);
    bm.polys.push_back(std::move(p));
  }
  const QMatrix op = operator_matrix(model, s, n).m;
  bm.all_in_kernel = true;
  QMatrix cols(n + 1, bm.polys.size());
  for (size_t k = 0; k < bm.polys.size(); ++k) {
    std::vector<Rational> v(n + 1);
    for (long i = 0; i <= n; ++i) v[i] = cols(i, k) = bm.polys[k].coeff(static_cast<int>(i));
    if (bm.polys[k].degree() > n) bm.all_in_kernel = false;
    for (const auto& x : op.apply(v))
      if (!is_zero(x)) bm.all_in_kernel = false;
  }
  const size_t dim = solution_space(model, s, n).dim;
  bm.spans = bm.polys.size() == dim && rank(cols) == dim;
  return bm;
}

bool TransferReport::projective_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const TransferRow& r) { return r.proportional; });
}

namespace {

// lambda with img = lambda * target, if it exists.
std::optional<Gauss> proportionality(const GPoly& img, const QPoly& target) {
  if (target.is_zero()) return std::nullopt;
  int k = 0;
  while (is_zero(target.coeff(k))) ++k;
  const Gauss lambda = img.coeff(k) / Gauss(target.coeff(k));
  if (is_zero(lambda)) return std::nullopt;
  if (img != to_gauss(target) * lambda) return std::nullopt;
  return lambda;
}

}  // namespace

TransferReport transfer_check(const Rational& s, long n) {
  if (n < 0 || n % 2) throw Error(ErrorKind::ParityMismatch, "transfer_check needs even n");
  TransferReport rep;
  rep.s = s;
  rep.n = n;
  const bool zero = mod4(n) == 0;
  const ParamSet Iplus = zero ? ParamSet::I0plus : ParamSet::I2plus;
  const ParamSet Iminus = zero ? ParamSet::I0minus : ParamSet::I2minus;
  const ParamSet J = zero ? ParamSet::J0 : ParamSet::J2;
  const SeriesKind main = zero ? SeriesKind::u : SeriesKind::v;
  const SeriesKind other = zero ? SeriesKind::v : SeriesKind::u;
  const bool in_plus = in_set(Iplus, s, n), in_minus = in_set(Iminus, s, n), in_j = in_set(J, s, n);

  std::vector<std::pair<HypKind, SeriesKind>> rows;
  if (!in_minus && !in_j) rows.emplace_back(HypKind::a, main);
  if (in_j) rows.emplace_back(HypKind::b, main);
  if (in_minus) rows.emplace_back(HypKind::c_plus, main);
  if (in_plus) rows.emplace_back(HypKind::b, other);
  if (in_minus) rows.emplace_back(HypKind::c_minus, other);

  const GroupElt k0 = cayley_k0();
  for (const auto& [src, tgt] : rows) {
    TransferRow row;
    row.source = to_string(src);
    row.target = to_string(tgt);
    const GPoly img = pi_action(k0, n, to_gauss(hypergeom_poly(src, s, n)));
    const auto lambda = proportionality(img, uv_poly(tgt, s, n));
    row.proportional = lambda.has_value();
    if (lambda) row.lambda_scaled = *lambda;
    if (zero && src == HypKind::a && lambda) {
      // pi(k0) = 2^{n/2} pi(scaled k0) since the unitary k0 is the scaled one over sqrt 2.
      Rational pw(1);
      for (long j = 0; j < n / 2; ++j) pw *= 2;
      rep.exact_scalar = *lambda * Gauss(pw);
      const Rational den = rising_factorial((3 - n + s) / 4, n / 4);
      if (!is_zero(den)) {
        rep.formula_scalar = rising_factorial(make_rational(2 - n, 4), n / 4) / den;
        rep.scalar_matches = *rep.exact_scalar == Gauss(*rep.formula_scalar);
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace ktf
