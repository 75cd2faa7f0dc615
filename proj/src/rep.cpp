#include "ktf/rep.hpp"

namespace ktf {

GroupElt GroupElt::inverse() const {
  const Gauss det_inv = det().inverse();
  return {d * det_inv, -b * det_inv, -c * det_inv, a * det_inv, projective};
}

GroupElt operator*(const GroupElt& x, const GroupElt& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d,
          x.projective || y.projective};
}

std::string to_string(const GroupElt& g) {
  return "[[" + to_string(g.a) + "," + to_string(g.b) + "],[" + to_string(g.c) + "," + to_string(g.d) + "]]";
}

GPoly pi_action(const GroupElt& g, long n, const GPoly& p) {
  if (p.degree() > n) throw Error(ErrorKind::DegreeTooHigh, "deg p exceeds n = " + std::to_string(n));
  if (p.is_zero()) return p;
  const GroupElt h = g.inverse();
  const GPoly num{h.b, h.a};  // a t + b
  const GPoly den{h.d, h.c};  // c t + d
  std::vector<GPoly> num_pow{GPoly::constant(Gauss(1))}, den_pow{GPoly::constant(Gauss(1))};
  for (long k = 1; k <= n; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  GPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Gauss& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    out += num_pow[k] * den_pow[n - k] * c;
  }
  return out;
}

GMatrix pi_matrix(const GroupElt& g, long n) {
  GMatrix m(n + 1, n + 1);
  for (long j = 0; j <= n; ++j) {
    const GPoly img = pi_action(g, n, GPoly::monomial(Gauss(1), static_cast<int>(j)));
    for (long i = 0; i <= n; ++i) m(i, j) = img.coeff(static_cast<int>(i));
  }
  return m;
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::Eplus: return "Eplus";
    case Generator::Eminus: return "Eminus";
    case Generator::Ezero: return "Ezero";
  }
  return "?";
}

OperatorMatrix dpi_matrix(Generator gen, long n) {
  OperatorMatrix op{n, QMatrix(n + 1, n + 1), "dpi_n(" + to_string(gen) + ")"};
  for (long j = 0; j <= n; ++j) {
    switch (gen) {
      case Generator::Eplus:
        if (j > 0) op.m(j - 1, j) = -j;
        break;
      case Generator::Eminus:
        if (j < n) op.m(j + 1, j) = j - n;
        break;
      case Generator::Ezero:
        op.m(j, j) = n - 2 * j;
        break;
    }
  }
  return op;
}

std::string to_string(Model m) { return m == Model::I ? "I" : "II"; }

Model parse_model(const std::string& s) {
  if (s == "I") return Model::I;
  if (s == "II") return Model::II;
  throw Error(ErrorKind::Usage, "unknown model '" + s + "'");
}

OperatorMatrix operator_matrix(Model model, const Rational& s, long n) {
  OperatorMatrix op{n, QMatrix(n + 1, n + 1), ""};
  if (model == Model::I) {
    op.scale_note = "-2i * dpi_n^I(D_s)";
    for (long j = 0; j <= n; ++j) {
      if (j >= 2) op.m(j - 2, j) = j * (j - 1);
      op.m(j, j) = s * (2 * j - n);
      if (j + 2 <= n) op.m(j + 2, j) = -(n - j) * (n - j - 1);
    }
  } else {
    op.scale_note = "2 * dpi_n^II(D_s)";
    for (long j = 0; j <= n; ++j) {
      if (j >= 1) op.m(j - 1, j) = j * (2 * j + s - n - 1);
      if (j + 1 <= n) op.m(j + 1, j) = -2 * j * j + (s + 3 * n - 1) * j - n * s - n * n + n;
    }
  }
  return op;
}

QPoly apply_operator(Model model, const Rational& s, long n, const QPoly& p) {
  const QPoly d1 = p.derivative();
  const QPoly d2 = d1.derivative();
  const QPoly t = QPoly::x();
  const Rational one(1);
  if (model == Model::I) {
    // (1 - t^4) p'' + 2((n-1)t^2 + s) t p' - n((n-1)t^2 + s) p
    const QPoly w{s, Rational(0), Rational(n - 1)};
    return QPoly{one, 0, 0, 0, -one} * d2 + w * t * d1 * Rational(2) - w * p * Rational(n);
  }
  // 2(1 - t^2) t p'' + ((s+3n-3) t^2 + (s-n+1)) p' - n(s+n-1) t p
  return QPoly{0, Rational(2), 0, Rational(-2)} * d2 + QPoly{s - n + 1, 0, s + 3 * n - 3} * d1 -
         t * p * Rational(n * (s + n - 1));
}

GroupElt m_element(Model model, int j, int sign) {
  const Gauss i = Gauss::i(), one(1), zero(0);
  GroupElt g = GroupElt::identity();
  const GroupElt diag{i, zero, zero, -i, false};
  const GroupElt w{zero, one, -one, zero, false};
  const GroupElt off{zero, i, i, zero, false};
  switch (j) {
    case 0: break;
    case 1: g = model == Model::I ? diag : w; break;
    case 2: g = model == Model::I ? w : diag; break;
    case 3: g = model == Model::I ? off : -off; break;
    default: throw Error(ErrorKind::Usage, "m_j needs j in 0..3");
  }
  return sign < 0 ? -g : g;
}

GroupElt cayley_k0() { return {Gauss::i(), Gauss(1), Gauss(-1), -Gauss::i(), true}; }

std::string to_string(Irr s) {
  switch (s) {
    case Irr::pp: return "(+,+)";
    case Irr::pm: return "(+,-)";
    case Irr::mp: return "(-,+)";
    case Irr::mm: return "(-,-)";
    case Irr::H: return "H";
  }
  return "?";
}

Irr parse_irr(const std::string& s) {
  if (s == "pp" || s == "(+,+)") return Irr::pp;
  if (s == "pm" || s == "(+,-)") return Irr::pm;
  if (s == "mp" || s == "(-,+)") return Irr::mp;
  if (s == "mm" || s == "(-,-)") return Irr::mm;
  if (s == "H") return Irr::H;
  throw Error(ErrorKind::Usage, "unknown sigma '" + s + "'");
}

int irr_dim(Irr s) { return s == Irr::H ? 2 : 1; }

const std::vector<Irr>& all_irr() {
  static const std::vector<Irr> v{Irr::pp, Irr::pm, Irr::mp, Irr::mm, Irr::H};
  return v;
}

int character_value(Irr sigma, Model, int j, int sign) {
  static const int table[4][4] = {
      {1, 1, 1, 1},    // (+,+)
      {1, -1, -1, 1},  // (+,-)
      {1, -1, 1, -1},  // (-,+)
      {1, 1, -1, -1},  // (-,-)
  };
  if (j < 0 || j > 3) throw Error(ErrorKind::Usage, "m_j needs j in 0..3");
  switch (sigma) {
    case Irr::pp: return table[0][j];
    case Irr::pm: return table[1][j];
    case Irr::mp: return table[2][j];
    case Irr::mm: return table[3][j];
    case Irr::H: return j == 0 ? 2 * sign : 0;
  }
  return 0;
}

QPoly charpoly_EplusEminus(long n) {
  return charpoly(dpi_matrix(Generator::Eplus, n).m + dpi_matrix(Generator::Eminus, n).m);
}

}  // namespace ktf
