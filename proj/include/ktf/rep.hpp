#pragma once

#include <string>
#include <vector>

#include "ktf/exactnum.hpp"

namespace ktf {

// 2x2 matrix [[a, b], [c, d]] over Q(i). `projective` marks a scaled
// representative whose determinant need not be 1.
struct GroupElt {
  Gauss a, b, c, d;
  bool projective = false;

  static GroupElt identity() { return {Gauss(1), Gauss(0), Gauss(0), Gauss(1), false}; }
  Gauss det() const { return a * d - b * c; }
  GroupElt inverse() const;
  GroupElt operator-() const { return {-a, -b, -c, -d, projective}; }
  friend GroupElt operator*(const GroupElt& x, const GroupElt& y);
  friend bool operator==(const GroupElt& x, const GroupElt& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

std::string to_string(const GroupElt& g);

// (ct+d)^n p((at+b)/(ct+d)) with [[a,b],[c,d]] = g^{-1} (exact inverse).
GPoly pi_action(const GroupElt& g, long n, const GPoly& p);
// Matrix of pi_action in the monomial basis (columns = images of t^j).
GMatrix pi_matrix(const GroupElt& g, long n);

enum class Generator { Eplus, Eminus, Ezero };
std::string to_string(Generator g);

struct OperatorMatrix {
  long n = 0;
  QMatrix m;
  std::string scale_note;
};

OperatorMatrix dpi_matrix(Generator gen, long n);

enum class Model { I, II };
std::string to_string(Model m);
Model parse_model(const std::string& s);

// Model I stores -2i * dpi^I (real coefficients); model II stores 2 * dpi^II.
OperatorMatrix operator_matrix(Model model, const Rational& s, long n);

// Apply the stored operator to p directly from its differential-operator form.
QPoly apply_operator(Model model, const Rational& s, long n, const QPoly& p);

// m_j (j = 0..3) of the given model, times sign (+1 or -1).
GroupElt m_element(Model model, int j, int sign);
// The scaled Cayley element [[i, 1], [-1, -i]] (sqrt(2) times the unitary one).
GroupElt cayley_k0();

enum class Irr { pp, pm, mp, mm, H };
std::string to_string(Irr s);
Irr parse_irr(const std::string& s);
int irr_dim(Irr s);
const std::vector<Irr>& all_irr();

// Character value on sign * m_j. Characters do not depend on the sign; H gives
// 2 sign on m_0 and 0 elsewhere. Same table for both models.
int character_value(Irr sigma, Model model, int j, int sign = 1);

QPoly charpoly_EplusEminus(long n);

}  // namespace ktf
