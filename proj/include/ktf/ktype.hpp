#pragma once

#include <string>
#include <vector>

#include "ktf/exactnum.hpp"
#include "ktf/params.hpp"
#include "ktf/rep.hpp"

namespace ktf {

enum class SetTag { I0plus, I0minus, J0, I1, I2plus, I2minus, J2, I3, Generic, Empty };
std::string to_string(SetTag t);

struct ParamClass {
  int n_mod4 = 0;
  SetTag tag = SetTag::Generic;
};

ParamClass param_class(const Rational& s, long n);

struct SigmaMembership {
  bool member = false;       // the predicate in use (corrected one for H)
  bool literal = false;      // the predicate exactly as printed
  bool discrepancy = false;  // literal != corrected (H only)
};

// For the four characters the printed predicate; for H the corrected one,
// which adds s = n-1 (mod 4) to {s even, n odd, n > |s|}.
SigmaMembership sigma_member(Irr sigma, const Rational& s, long n);

struct KTypeDegrees {
  std::vector<long> degrees;  // Pol_n[t] degrees n
  std::vector<Rational> spins;  // n/2
};

// Degree list of the K-types of sigma at parameter s, cut at n_max. Empty when
// s is outside the admissible lattice for sigma.
KTypeDegrees ktype_degrees(Irr sigma, const Rational& s, long n_max);

struct CrosscheckRow {
  long n = 0;
  bool predicted = false;  // n in the degree list
  int hom = 0;             // multiplicity computed from the kernel
  bool agree = false;
  bool literal_member = false;
  bool discrepancy = false;
};

struct KTypeCrosscheck {
  Irr sigma = Irr::pp;
  Rational s;
  long n_max = 0;
  Model model = Model::II;
  std::vector<CrosscheckRow> rows;
  bool all_agree() const;
  std::vector<long> disagreements() const;
  std::vector<long> discrepancies() const;  // literal-vs-corrected H membership
};

KTypeCrosscheck ktype_crosscheck(Irr sigma, const Rational& s, long n_max, Model model = Model::II);

}  // namespace ktf
