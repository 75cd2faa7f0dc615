#pragma once

#include <string>
#include <vector>

#include "ktf/seqdet.hpp"

namespace ktf {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  bool informational = false;  // reported, never fails the suite
  long cases = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;

  void fail(const std::string& why);
  const char* status() const;
};

struct SuiteReport {
  std::string suite;
  long max_n = 0;
  std::vector<CheckResult> checks;  // sorted by name
  bool pass() const;
};

extern const std::vector<std::string> kSuites;  // all, determinants, palindromic, solver, ktype, appendix

SuiteReport run_suite(const std::string& suite, long max_n);

namespace checks {

// determinants
CheckResult sylvester_factorization(long max_n);
CheckResult determinant_series_bridge(long k_max, long max_n, int samples_per_n);
CheckResult p_even_factorization(long max_n);
CheckResult q_even_factorization(long max_n);
CheckResult p_odd_factorization(long max_n);
CheckResult p_sylvester_product(long max_n);
CheckResult krawtchouk_top_factorization(long max_n);
CheckResult leading_constants(long max_n);

// palindromic
CheckResult palindromic(Family f, long max_n);
CheckResult factorial_values(long max_n);
CheckResult odd_n_not_palindromic(long max_odd_n);

// solver; the four grid checks share one pass over (model, s, n)
struct SolverGrid {
  CheckResult dimensions, mreps, homs, bases;
};
SolverGrid solver_grid(long max_n);
CheckResult polynomiality_predicates(long max_n);
CheckResult cayley_transfer(long max_n);
CheckResult cayley_scalar(long max_n);

// ktype
CheckResult ktype_lists(long s_max, long n_max);
CheckResult h_literal_discrepancy(long s_max, long n_max);
CheckResult ktype_model_independence(long s_max, long n_max);

// appendix and structural properties
CheckResult heun_gauss_reduction(long max_n, long terms);
CheckResult heun_uv_agreement(int samples, long terms);
CheckResult sl2_relations(long max_n);
CheckResult projective_multiplicativity(int samples, long max_n);
CheckResult intertwining(long max_n, int s_count);
CheckResult q8_structure();
CheckResult parity_laws(long k_max, int samples);
CheckResult odd_q_p_relation(long max_n);
CheckResult continuant_cofactor(long max_size, int samples);
CheckResult cayley_identities(long k_max);

}  // namespace checks

// Laplace expansion along the first row; independent determinant oracle.
Rational cofactor_det(const QMatrix& m);

}  // namespace ktf
