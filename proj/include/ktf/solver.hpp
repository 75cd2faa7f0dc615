#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ktf/exactnum.hpp"
#include "ktf/rep.hpp"

namespace ktf {

struct SolutionSpace {
  Model model = Model::II;
  Rational s;
  long n = 0;
  std::vector<QPoly> basis;  // lowest nonzero coefficient of each vector is 1
  size_t dim = 0;
  bool anomaly = false;      // dim > 2
};

SolutionSpace solution_space(Model model, const Rational& s, long n);

// Predicted dimension from the n mod 4 case split.
size_t expected_dimension(Model model, const Rational& s, long n);

struct MRep {
  std::vector<Irr> constituents;               // with multiplicity, sorted
  std::vector<std::vector<GPoly>> spans;       // isotypic spanning vectors, aligned with distinct constituents
  std::array<Gauss, 8> traces;                 // on m_0..m_3 then -m_0..-m_3
  size_t dim = 0;
  std::string label() const;                   // e.g. "(+,+)+(+,-)" or "H" or "0"
};

MRep m_rep_classify(Model model, const Rational& s, long n);

// Predicted constituents from the case tables (same for both models).
std::vector<Irr> expected_mrep(const Rational& s, long n);

// Multiplicity of sigma via the character inner product over the eight elements.
int hom_dim(Model model, const Rational& s, long n, Irr sigma);
int multiplicity(const MRep& rep, Irr sigma);

struct BasisMatch {
  std::vector<std::string> names;  // predicted spanning polynomials
  std::vector<QPoly> polys;
  bool all_in_kernel = false;
  bool spans = false;
  bool ok() const { return all_in_kernel && spans; }
};
BasisMatch basis_match(Model model, const Rational& s, long n);

struct TransferRow {
  std::string source, target;
  bool proportional = false;
  Gauss lambda_scaled;  // pi(scaled k0) source = lambda_scaled * target
};

struct TransferReport {
  Rational s;
  long n = 0;
  std::vector<TransferRow> rows;
  // n = 0 mod 4 and s outside I0- and J0: scalar of a -> u under the unitary k0.
  std::optional<Gauss> exact_scalar;
  std::optional<Rational> formula_scalar;
  bool scalar_matches = false;
  bool projective_ok() const;
};

TransferReport transfer_check(const Rational& s, long n);

}  // namespace ktf
