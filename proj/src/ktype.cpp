#include "ktf/ktype.hpp"

#include "ktf/solver.hpp"

namespace ktf {

std::string to_string(SetTag t) {
  switch (t) {
    case SetTag::I0plus: return "I0plus";
    case SetTag::I0minus: return "I0minus";
    case SetTag::J0: return "J0";
    case SetTag::I1: return "I1";
    case SetTag::I2plus: return "I2plus";
    case SetTag::I2minus: return "I2minus";
    case SetTag::J2: return "J2";
    case SetTag::I3: return "I3";
    case SetTag::Generic: return "Generic";
    case SetTag::Empty: return "Empty";
  }
  return "?";
}

ParamClass param_class(const Rational& s, long n) {
  ParamClass pc;
  pc.n_mod4 = static_cast<int>(mod4(n));
  static const std::pair<ParamSet, SetTag> sets[] = {
      {ParamSet::I0plus, SetTag::I0plus}, {ParamSet::I0minus, SetTag::I0minus}, {ParamSet::J0, SetTag::J0},
      {ParamSet::I1, SetTag::I1},         {ParamSet::I2plus, SetTag::I2plus},   {ParamSet::I2minus, SetTag::I2minus},
      {ParamSet::J2, SetTag::J2},         {ParamSet::I3, SetTag::I3}};
  for (const auto& [set, tag] : sets)
    if (in_set(set, s, n)) {
      pc.tag = tag;
      return pc;
    }
  pc.tag = pc.n_mod4 % 2 ? SetTag::Empty : SetTag::Generic;
  return pc;
}

namespace {

bool congruent(const Rational& s, long r, long m) {
  if (!is_integer(s)) return false;
  const long v = to_long(s);
  return ((v - r) % m + m) % m == 0;
}

}  // namespace

SigmaMembership sigma_member(Irr sigma, const Rational& s, long n) {
  SigmaMembership out;
  if (n < 0) return out;
  const long r = mod4(n);
  const Rational abs_s = abs(s);
  switch (sigma) {
    case Irr::pp: out.literal = r == 0; break;
    case Irr::mm: out.literal = r == 2; break;
    case Irr::pm:
      out.literal = (congruent(s, 3, 4) && sgn(s) > 0 && r == 0 && n > s) ||
                    (congruent(s, -1, 4) && sgn(s) < 0 && r == 2 && n > abs_s);
      break;
    case Irr::mp:
      out.literal = (congruent(s, 1, 4) && sgn(s) > 0 && r == 2 && n > s) ||
                    (congruent(s, -3, 4) && sgn(s) < 0 && r == 0 && n > abs_s);
      break;
    case Irr::H:
      out.literal = congruent(s, 0, 2) && n % 2 == 1 && n > abs_s;
      out.member = out.literal && congruent(s, n - 1, 4);
      out.discrepancy = out.literal != out.member;
      return out;
  }
  out.member = out.literal;
  return out;
}

KTypeDegrees ktype_degrees(Irr sigma, const Rational& s, long n_max) {
  KTypeDegrees out;
  long start = -1;
  switch (sigma) {
    case Irr::pp: start = 0; break;
    case Irr::mm: start = 2; break;
    case Irr::pm:
      if (congruent(s, 3, 4)) start = to_long(abs(s)) + 1;
      break;
    case Irr::mp:
      if (congruent(s, 1, 4)) start = to_long(abs(s)) + 1;
      break;
    case Irr::H:
      if (congruent(s, 0, 2)) start = to_long(abs(s)) + 1;
      break;
  }
  if (start < 0) return out;
  for (long n = start; n <= n_max; n += 4) {
    out.degrees.push_back(n);
    out.spins.push_back(make_rational(n, 2));
  }
  return out;
}

bool KTypeCrosscheck::all_agree() const {
  for (const auto& r : rows)
    if (!r.agree) return false;
  return true;
}

std::vector<long> KTypeCrosscheck::disagreements() const {
  std::vector<long> out;
  for (const auto& r : rows)
    if (!r.agree) out.push_back(r.n);
  return out;
}

std::vector<long> KTypeCrosscheck::discrepancies() const {
  std::vector<long> out;
  for (const auto& r : rows)
    if (r.discrepancy) out.push_back(r.n);
  return out;
}

KTypeCrosscheck ktype_crosscheck(Irr sigma, const Rational& s, long n_max, Model model) {
  KTypeCrosscheck cc;
  cc.sigma = sigma;
  cc.s = s;
  cc.n_max = n_max;
  cc.model = model;
  const auto deg = ktype_degrees(sigma, s, n_max).degrees;
  size_t next = 0;
  for (long n = 0; n <= n_max; ++n) {
    CrosscheckRow row;
    row.n = n;
    while (next < deg.size() && deg[next] < n) ++next;
    row.predicted = next < deg.size() && deg[next] == n;
    row.hom = hom_dim(model, s, n, sigma);
    row.agree = row.predicted == (row.hom == 1) && row.hom <= 1;
    const auto mem = sigma_member(sigma, s, n);
    row.literal_member = mem.literal;
    row.discrepancy = mem.discrepancy;
    cc.rows.push_back(row);
  }
  return cc;
}

}  // namespace ktf
