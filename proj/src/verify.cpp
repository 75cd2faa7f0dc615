#include "ktf/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ktf/ktype.hpp"
#include "ktf/params.hpp"
#include "ktf/rep.hpp"
#include "ktf/series.hpp"
#include "ktf/solver.hpp"

namespace ktf {

namespace {

constexpr size_t kMaxCounterexamples = 20;
constexpr unsigned kSeed = 20240917u;

std::string pair_str(const Rational& s, long n) { return "(s=" + to_string(s) + ", n=" + std::to_string(n) + ")"; }

std::string poly_str(const QPoly& p) {
  std::string out = "[";
  const auto c = serialize(p);
  for (size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + c[k];
  return out + "]";
}

const std::vector<Rational>& generic_s() {
  static const std::vector<Rational> v{make_rational(1, 3), make_rational(7, 2), make_rational(-9, 5),
                                       make_rational(5, 7), make_rational(-11, 3)};
  return v;
}

// Special sets at n, every integer with |s| <= n+3, and the generic rationals.
std::vector<Rational> s_grid(long n) {
  std::vector<Rational> out;
  for (auto p : {ParamSet::I0plus, ParamSet::I0minus, ParamSet::J0, ParamSet::I1, ParamSet::I2plus,
                 ParamSet::I2minus, ParamSet::J2, ParamSet::I3})
    for (long s : enumerate(p, n)) out.emplace_back(s);
  for (long s = -n - 3; s <= n + 3; ++s) out.emplace_back(s);
  for (const auto& s : generic_s()) out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational random_rational(std::mt19937& rng, int num_range = 20, int den_max = 9) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_max);
  return make_rational(num(rng), den(rng));
}

template <class F>
void guarded(CheckResult& r, const std::string& where, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.fail(where + ": " + error_kind_name(e.kind()) + ": " + e.what());
  }
}

}  // namespace

void CheckResult::fail(const std::string& why) {
  if (!informational) pass = false;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(why);
}

const char* CheckResult::status() const {
  if (informational) return "info";
  return pass ? "pass" : "fail";
}

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Rational cofactor_det(const QMatrix& m) {
  const size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc(0);
  for (size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    QMatrix minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const Rational term = m(0, j) * cofactor_det(minor);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

namespace checks {

CheckResult sylvester_factorization(long max_n) {
  CheckResult r{"sylvester_factorization"};
  for (long n = 0; n <= max_n; ++n) {
    ++r.cases;
    const QPoly cp = charpoly_EplusEminus(n);
    const FactorReport f = verify_factorization(FactorTarget::Sylv, n);
    if (!f.equal) r.fail("n=" + std::to_string(n) + ": determinant " + poly_str(f.lhs) + " vs product " + poly_str(f.rhs));
    if (cp != f.lhs) r.fail("n=" + std::to_string(n) + ": charpoly " + poly_str(cp) + " vs determinant " + poly_str(f.lhs));
  }
  return r;
}

CheckResult determinant_series_bridge(long k_max, long max_n, int samples_per_n) {
  CheckResult r{"determinant_series_bridge"};
  for (long n = 0; n <= max_n; ++n)
    for (int i = 0; i < samples_per_n; ++i) {
      const Rational s = make_rational(7 * i - 31 + static_cast<int>(n % 5), (i % 4) + 1);
      const auto U = uv_coefficients(SeriesKind::u, s, n, k_max + 1);
      const auto V = uv_coefficients(SeriesKind::v, s, n, k_max + 1);
      for (long k = 0; k <= k_max; ++k) {
        ++r.cases;
        const Rational p = family_value(Family::P, k, s, Rational(n));
        const Rational q = family_value(Family::Q, k, s, Rational(n));
        if (p != factorial(2 * k) * U[k]) r.fail("P_" + std::to_string(k) + " at " + pair_str(s, n));
        if (q != factorial(2 * k + 1) * V[k]) r.fail("Q_" + std::to_string(k) + " at " + pair_str(s, n));
      }
    }
  return r;
}

namespace {

CheckResult factor_check(const std::string& name, FactorTarget t, long max_n, const std::function<bool(long)>& admissible) {
  CheckResult r{name};
  for (long n = 0; n <= max_n; ++n) {
    if (!admissible(n)) continue;
    ++r.cases;
    const FactorReport f = verify_factorization(t, n);
    if (!f.equal)
      r.fail("n=" + std::to_string(n) + ": determinant " + poly_str(f.lhs) + " vs product " + poly_str(f.rhs));
  }
  return r;
}

}  // namespace

CheckResult p_even_factorization(long max_n) {
  return factor_check("p_even_factorization", FactorTarget::P_even, max_n, [](long n) { return n % 2 == 0; });
}

CheckResult q_even_factorization(long max_n) {
  return factor_check("q_even_factorization", FactorTarget::Q_even, max_n, [](long n) { return n % 2 == 0; });
}

CheckResult p_odd_factorization(long max_n) {
  return factor_check("p_odd_factorization", FactorTarget::P_odd, max_n, [](long n) { return n % 2 == 1; });
}

CheckResult p_sylvester_product(long max_n) {
  return factor_check("p_sylvester_product", FactorTarget::PS_corollary, max_n, [](long n) { return n % 2 == 1; });
}

CheckResult krawtchouk_top_factorization(long max_n) {
  return factor_check("krawtchouk_top_factorization", FactorTarget::Kraw_np1, max_n, [](long) { return true; });
}

CheckResult leading_constants(long max_n) {
  CheckResult r{"leading_constants"};
  for (long n = 0; n <= max_n; ++n) {
    ++r.cases;
    const std::string at = "n=" + std::to_string(n);
    if (n % 2 == 0) {
      if (diagonal_product(Family::P, (n + 2) / 2, n) != alpha_closed_form(n)) r.fail("alpha " + at);
      if (n >= 2 && diagonal_product(Family::Q, n / 2, n) != beta_closed_form(n)) r.fail("beta " + at);
    } else if (diagonal_product(Family::P, (n + 1) / 2, n) != gamma_closed_form(n)) {
      r.fail("gamma " + at);
    }
  }
  return r;
}

CheckResult palindromic(Family f, long max_n) {
  std::string name = to_string(f);
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  CheckResult r{name + "_palindromic"};
  const PalindromeConfig cfg = palindrome_config(f);
  for (long n = 0; n <= max_n; ++n) {
    const PalindromeReport rep = check_palindromic(cfg, n, 3);
    if (rep.status == CheckStatus::NotApplicable) continue;
    r.cases += rep.identities_checked;
    for (const auto& c : rep.counterexamples) r.fail("n=" + std::to_string(n) + ": " + c);
  }
  return r;
}

namespace {

std::vector<Rational> as_rationals(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<long> concat(std::vector<long> a, const std::vector<long>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

CheckResult factorial_values(long max_n) {
  CheckResult r{"factorial_values"};
  for (long n = 0; n <= max_n; ++n) {
    const Rational N(n);
    const std::string at = "n=" + std::to_string(n);
    // P at d = n/2
    if (n % 2 == 0) {
      const long d = n / 2;
      const ZeroSet z = zero_set(Family::P, d + 1, N);
      ++r.cases;
      if (mod4(n) == 0) {
        if (!z.all_of_c) r.fail("P " + at + ": zero set is not all of C");
        if (family_poly(Family::P, d, N) != QPoly::constant(factorial(n))) r.fail("P " + at + ": P_{n/2} != n!");
      } else {
        const auto want = as_rationals(concat(enumerate(ParamSet::I2plus, n), enumerate(ParamSet::I2minus, n)));
        if (z.all_of_c || z.distinct() != want) r.fail("P " + at + ": zero set differs from I2+ and I2-");
        for (const auto& s : want)
          if (family_value(Family::P, d, s, N) != sgn_of(s) * factorial(n))
            r.fail("P " + at + ": value at s=" + to_string(s));
      }
    }
    // Q at d = (n-2)/2
    if (n >= 2 && n % 2 == 0) {
      const long d = (n - 2) / 2;
      const ZeroSet z = zero_set(Family::Q, d + 1, N);
      ++r.cases;
      if (mod4(n) == 2) {
        if (!z.all_of_c) r.fail("Q " + at + ": zero set is not all of C");
        if (family_poly(Family::Q, d, N) != QPoly::constant(factorial(n - 1)))
          r.fail("Q " + at + ": Q_{(n-2)/2} != (n-1)!");
      } else {
        const auto want = as_rationals(concat(enumerate(ParamSet::I0plus, n), enumerate(ParamSet::I0minus, n)));
        if (z.all_of_c || z.distinct() != want) r.fail("Q " + at + ": zero set differs from I0+ and I0-");
        for (const auto& s : want)
          if (family_value(Family::Q, d, s, N) != sgn_of(s) * factorial(n - 1))
            r.fail("Q " + at + ": value at s=" + to_string(s));
      }
    }
    // Cay and Kraw at d = n
    {
      ++r.cases;
      std::vector<long> cay_roots, kraw_roots;
      for (long l = 0; l <= n; ++l) {
        cay_roots.push_back(n - 2 * l);
        kraw_roots.push_back(l);
      }
      const ZeroSet zc = zero_set(Family::Cay, n + 1, N);
      if (zc.all_of_c || zc.distinct() != as_rationals(cay_roots)) r.fail("Cay " + at + ": zero set");
      for (long s : cay_roots) {
        const Rational want = ((n - s) / 2) % 2 ? Rational(-factorial(n)) : factorial(n);
        if (family_value(Family::Cay, n, Rational(s), N) != want) r.fail("Cay " + at + ": value at s=" + std::to_string(s));
      }
      const ZeroSet zk = zero_set(Family::Kraw, n + 1, N);
      if (zk.all_of_c || zk.distinct() != as_rationals(kraw_roots)) r.fail("Kraw " + at + ": zero set");
      for (long s : kraw_roots)
        if (family_value(Family::Kraw, n, Rational(s), N) != Rational(s % 2 ? -1 : 1))
          r.fail("Kraw " + at + ": value at s=" + std::to_string(s));
    }
  }
  return r;
}

CheckResult odd_n_not_palindromic(long max_odd_n) {
  CheckResult r{"odd_n_not_palindromic"};
  for (Family f : {Family::P, Family::Q}) {
    bool witnessed = false;
    for (long n = 1; n <= max_odd_n; n += 2) {
      ++r.cases;
      const auto rep = odd_palindrome_check(f, n, 2);
      if (rep.fails_for_every_degree) {
        witnessed = true;
      } else {
        std::string d;
        for (long x : rep.degrees_that_pass) d += (d.empty() ? "" : ",") + std::to_string(x);
        r.notes.push_back(to_string(f) + " n=" + std::to_string(n) + ": identity holds at degree " + d);
      }
    }
    if (!witnessed) r.fail(to_string(f) + ": no odd n <= " + std::to_string(max_odd_n) + " breaks the identity");
  }
  return r;
}

SolverGrid solver_grid(long max_n) {
  SolverGrid g{CheckResult("solution_dimensions"), CheckResult("m_representation_tables"),
               CheckResult("hom_dimensions"), CheckResult("basis_spans")};
  for (long n = 0; n <= max_n; ++n)
    for (const Rational& s : s_grid(n)) {
      size_t dims[2] = {0, 0};
      for (Model model : {Model::I, Model::II}) {
        const std::string at = "model " + to_string(model) + " " + pair_str(s, n);
        const SolutionSpace sp = solution_space(model, s, n);
        dims[model == Model::I ? 0 : 1] = sp.dim;
        ++g.dimensions.cases;
        if (sp.dim != expected_dimension(model, s, n) || sp.anomaly)
          g.dimensions.fail(at + ": dim " + std::to_string(sp.dim) + ", expected " +
                            std::to_string(expected_dimension(model, s, n)));
        guarded(g.mreps, at, [&] {
          const MRep rep = m_rep_classify(model, s, n);
          ++g.mreps.cases;
          if (rep.constituents != expected_mrep(s, n)) {
            MRep want;
            want.constituents = expected_mrep(s, n);
            g.mreps.fail(at + ": " + rep.label() + ", expected " + want.label());
          }
          if (n % 2 == 1 && rep.dim == 2) {
            bool ok = rep.traces[0] == Gauss(2) && rep.traces[4] == Gauss(-2);
            for (int j : {1, 2, 3, 5, 6, 7}) ok = ok && is_zero(rep.traces[j]);
            if (!ok) g.mreps.fail(at + ": traces do not match the 2-dimensional character");
          }
          for (Irr sigma : all_irr()) {
            ++g.homs.cases;
            const int h = multiplicity(rep, sigma);
            const int want = sigma_member(sigma, s, n).member ? 1 : 0;
            if (h != want)
              g.homs.fail(at + " sigma " + to_string(sigma) + ": " + std::to_string(h) + ", expected " +
                          std::to_string(want));
          }
        });
        if (sp.dim > 0)
          guarded(g.bases, at, [&] {
            ++g.bases.cases;
            const BasisMatch bm = basis_match(model, s, n);
            if (!bm.ok()) {
              std::string names;
              for (const auto& x : bm.names) names += (names.empty() ? "" : ",") + x;
              g.bases.fail(at + ": predicted {" + names + "} " + (bm.all_in_kernel ? "does not span" : "not in kernel"));
            }
          });
      }
      if (dims[0] != dims[1]) g.dimensions.fail("models disagree " + pair_str(s, n));
    }
  return g;
}

namespace {

bool kernel_contains(Model model, const Rational& s, long n, const QPoly& p) {
  if (p.degree() > n) return false;
  std::vector<Rational> v(n + 1);
  for (long i = 0; i <= n; ++i) v[i] = p.coeff(static_cast<int>(i));
  for (const auto& x : operator_matrix(model, s, n).m.apply(v))
    if (!is_zero(x)) return false;
  return true;
}

// Truncation to degree n lies in the kernel and the next five series terms vanish.
std::optional<QPoly> series_oracle(const std::optional<std::vector<Rational>>& c, long K, int shift, Model model,
                                   const Rational& s, long n) {
  if (!c) return std::nullopt;
  for (long k = K; k < K + 5; ++k)
    if (!is_zero((*c)[k])) return std::nullopt;
  const QPoly p = z_series_to_t(std::vector<Rational>(c->begin(), c->begin() + K), shift);
  if (!kernel_contains(model, s, n, p)) return std::nullopt;
  return p;
}

}  // namespace

CheckResult polynomiality_predicates(long max_n) {
  CheckResult r{"polynomiality_predicates"};
  for (long n = 0; n <= max_n; ++n)
    for (long si = -n - 2; si <= n + 2; ++si) {
      const Rational s(si);
      auto record = [&](PolyKind k, bool oracle) {
        ++r.cases;
        if (is_polynomial(k, s, n) != oracle)
          r.fail(to_string(k) + " " + pair_str(s, n) + ": predicate " + (oracle ? "false" : "true") +
                 ", kernel says " + (oracle ? "true" : "false"));
      };
      for (SeriesKind k : {SeriesKind::u, SeriesKind::v}) {
        const int shift = k == SeriesKind::u ? 0 : 1;
        const long K = k == SeriesKind::u ? n / 2 + 1 : (n + 1) / 2;
        const auto c = uv_coefficients(k, s, n, K + 5);
        record(k == SeriesKind::u ? PolyKind::u : PolyKind::v,
               series_oracle(c, K, shift, Model::I, s, n).has_value());
      }
      const HypData da = hyp_data(HypKind::a, s, n);
      const long Ka = n / 2 + 1;
      const auto a = series_oracle(hyp2f1_prefix(da.A, da.B, da.C, Ka + 5), Ka, 0, Model::II, s, n);
      record(PolyKind::a, a.has_value());
      const HypData db = hyp_data(HypKind::b, s, n);
      std::optional<QPoly> b;
      if (db.prefactor && *db.prefactor <= n) {
        const long e = *db.prefactor;
        const long Kb = (n - e) / 2 + 1;
        b = series_oracle(hyp2f1_prefix(db.A, db.B, db.C, Kb + 5), Kb, static_cast<int>(e), Model::II, s, n);
      }
      record(PolyKind::b, b.has_value() && !(a && *a == *b));
    }
  return r;
}

CheckResult cayley_transfer(long max_n) {
  CheckResult r{"cayley_transfer"};
  for (long n = 0; n <= max_n; n += 2)
    for (const Rational& s : s_grid(n))
      guarded(r, pair_str(s, n), [&] {
        const TransferReport t = transfer_check(s, n);
        for (const auto& row : t.rows) {
          ++r.cases;
          if (!row.proportional) r.fail(row.source + " -> " + row.target + " at " + pair_str(s, n));
        }
      });
  return r;
}

CheckResult cayley_scalar(long max_n) {
  CheckResult r{"cayley_scalar"};
  r.informational = true;
  long matched = 0;
  for (long n = 0; n <= max_n; n += 4)
    for (const Rational& s : s_grid(n))
      guarded(r, pair_str(s, n), [&] {
        const TransferReport t = transfer_check(s, n);
        if (!t.exact_scalar || !t.formula_scalar) return;
        ++r.cases;
        if (t.scalar_matches) ++matched;
        else
          r.fail(pair_str(s, n) + ": computed " + to_string(*t.exact_scalar) + ", formula " +
                 to_string(*t.formula_scalar));
      });
  r.notes.push_back(std::to_string(matched) + " of " + std::to_string(r.cases) + " scalars match the closed form");
  return r;
}

CheckResult ktype_lists(long s_max, long n_max) {
  CheckResult r{"ktype_lists"};
  for (Irr sigma : all_irr())
    for (long s = -s_max; s <= s_max; ++s) {
      const KTypeCrosscheck cc = ktype_crosscheck(sigma, Rational(s), n_max);
      r.cases += static_cast<long>(cc.rows.size());
      for (long n : cc.disagreements()) r.fail("sigma " + to_string(sigma) + " " + pair_str(Rational(s), n));
    }
  return r;
}

CheckResult h_literal_discrepancy(long s_max, long n_max) {
  CheckResult r{"h_literal_discrepancy"};
  long flagged = 0;
  for (long s = -s_max; s <= s_max; ++s)
    for (long n = 0; n <= n_max; ++n) {
      const auto mem = sigma_member(Irr::H, Rational(s), n);
      if (!mem.literal && !mem.member) continue;
      ++r.cases;
      const int h = hom_dim(Model::II, Rational(s), n, Irr::H);
      if (h != (mem.member ? 1 : 0)) r.fail(pair_str(Rational(s), n) + ": kernel multiplicity " + std::to_string(h));
      if (mem.discrepancy) {
        ++flagged;
        if (r.notes.size() < 12) r.notes.push_back("literal set contains " + pair_str(Rational(s), n) + " but Hom = 0");
      }
    }
  r.notes.push_back(std::to_string(flagged) + " pairs in the literal set are rejected by the kernel");
  return r;
}

CheckResult ktype_model_independence(long s_max, long n_max) {
  CheckResult r{"ktype_model_independence"};
  for (Irr sigma : all_irr())
    for (long s = -s_max; s <= s_max; ++s) {
      const auto a = ktype_crosscheck(sigma, Rational(s), n_max, Model::I);
      const auto b = ktype_crosscheck(sigma, Rational(s), n_max, Model::II);
      for (size_t k = 0; k < a.rows.size(); ++k) {
        ++r.cases;
        if (a.rows[k].hom != b.rows[k].hom)
          r.fail("sigma " + to_string(sigma) + " " + pair_str(Rational(s), a.rows[k].n));
      }
    }
  return r;
}

CheckResult heun_gauss_reduction(long max_n, long terms) {
  CheckResult r{"heun_gauss_reduction"};
  for (long n = 0; n <= max_n; ++n) {
    r.cases += 2;
    const MaierReport m = maier_check(n, terms);
    if (!m.hg1) r.fail("first reduction, n=" + std::to_string(n));
    if (!m.hg2) r.fail("second reduction, n=" + std::to_string(n));
  }
  return r;
}

CheckResult heun_uv_agreement(int samples, long terms) {
  CheckResult r{"heun_uv_agreement"};
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<long> nd(0, 30);
  for (int i = 0; i < samples; ++i) {
    const Rational s = random_rational(rng);
    const long n = nd(rng);
    r.cases += 2;
    guarded(r, pair_str(s, n), [&] {
      if (heun_coefficients(u_params(s, n), terms) != uv_coefficients(SeriesKind::u, s, n, terms))
        r.fail("u " + pair_str(s, n));
      if (heun_coefficients(v_params(s, n), terms) != uv_coefficients(SeriesKind::v, s, n, terms))
        r.fail("v " + pair_str(s, n));
    });
  }
  return r;
}

CheckResult sl2_relations(long max_n) {
  CheckResult r{"sl2_relations"};
  for (long n = 0; n <= max_n; ++n) {
    ++r.cases;
    const QMatrix ep = dpi_matrix(Generator::Eplus, n).m;
    const QMatrix em = dpi_matrix(Generator::Eminus, n).m;
    const QMatrix e0 = dpi_matrix(Generator::Ezero, n).m;
    if (e0 * ep - ep * e0 != Rational(2) * ep) r.fail("[E0,E+] n=" + std::to_string(n));
    if (e0 * em - em * e0 != Rational(-2) * em) r.fail("[E0,E-] n=" + std::to_string(n));
    if (ep * em - em * ep != e0) r.fail("[E+,E-] n=" + std::to_string(n));
  }
  return r;
}

namespace {

GroupElt random_elt(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    GroupElt g{Gauss(d(rng), d(rng)), Gauss(d(rng), d(rng)), Gauss(d(rng), d(rng)), Gauss(d(rng), d(rng)), true};
    if (!is_zero(g.det())) return g;
  }
}

// lambda with a = lambda b, for nonzero b.
std::optional<Gauss> ratio(const GPoly& a, const GPoly& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Gauss>(Gauss(0)) : std::nullopt;
  const int k = b.degree();
  const Gauss lambda = a.coeff(k) / b.coeff(k);
  if (a != b * lambda) return std::nullopt;
  return lambda;
}

}  // namespace

CheckResult projective_multiplicativity(int samples, long max_n) {
  CheckResult r{"projective_multiplicativity"};
  std::mt19937 rng(kSeed + 1);
  std::uniform_int_distribution<long> nd(0, max_n);
  std::uniform_int_distribution<int> cd(-5, 5);
  for (int i = 0; i < samples; ++i) {
    const GroupElt g = random_elt(rng), h = random_elt(rng);
    const long n = nd(rng);
    std::vector<Gauss> c;
    for (long k = 0; k <= n; ++k) c.emplace_back(cd(rng), cd(rng));
    const GPoly p(c);
    ++r.cases;
    const auto lambda = ratio(pi_action(g, n, pi_action(h, n, p)), pi_action(g * h, n, p));
    if (!lambda || (!p.is_zero() && is_zero(*lambda))) r.fail("sample " + std::to_string(i) + " n=" + std::to_string(n));
  }
  return r;
}

CheckResult intertwining(long max_n, int s_count) {
  CheckResult r{"intertwining"};
  static const std::vector<Rational> svals{Rational(0), Rational(1), Rational(-1), Rational(2), make_rational(1, 3),
                                           make_rational(-7, 2), Rational(5), make_rational(-9, 5),
                                           make_rational(11, 7), Rational(3)};
  const Gauss minus_i = -Gauss::i();
  for (long n = 0; n <= max_n; ++n) {
    const GMatrix K = pi_matrix(cayley_k0(), n);
    for (int k = 0; k < s_count && k < static_cast<int>(svals.size()); ++k) {
      ++r.cases;
      const Rational& s = svals[k];
      const GMatrix oi = to_gauss(operator_matrix(Model::I, s, n).m);
      const GMatrix oii = to_gauss(operator_matrix(Model::II, s, n).m);
      if (oi * K != minus_i * (K * oii)) r.fail(pair_str(s, n));
    }
  }
  return r;
}

CheckResult q8_structure() {
  CheckResult r{"q8_structure"};
  const GroupElt one = GroupElt::identity();
  for (Model model : {Model::I, Model::II}) {
    std::vector<GroupElt> elts;
    for (int sign : {1, -1})
      for (int j = 0; j < 4; ++j) elts.push_back(m_element(model, j, sign));
    for (const auto& a : elts)
      for (const auto& b : elts) {
        ++r.cases;
        if (std::find(elts.begin(), elts.end(), a * b) == elts.end())
          r.fail("model " + to_string(model) + ": product leaves the group");
      }
    for (int j = 1; j < 4; ++j) {
      const GroupElt m = m_element(model, j, 1);
      if (!(m * m == -one)) r.fail("model " + to_string(model) + ": m_" + std::to_string(j) + "^2 != -1");
    }
  }
  const GroupElt k0 = cayley_k0();
  ++r.cases;
  if (k0.det() != Gauss(2)) r.fail("det of the scaled Cayley element is not 2");
  const GroupElt minus_two{Gauss(-2), Gauss(0), Gauss(0), Gauss(-2), false};
  if (!(k0 * k0 == minus_two)) r.fail("square of the scaled Cayley element is not -2");
  for (int j = 0; j < 4; ++j) {
    ++r.cases;
    const GroupElt conj = k0.inverse() * m_element(Model::I, j, 1) * k0;
    const GroupElt target = m_element(Model::II, j, 1);
    if (!(conj == target) && !(conj == -target)) r.fail("k0^-1 m_" + std::to_string(j) + "^I k0 != +-m_j^II");
  }
  return r;
}

CheckResult parity_laws(long k_max, int samples) {
  CheckResult r{"parity_laws"};
  std::mt19937 rng(kSeed + 2);
  for (int i = 0; i < samples; ++i) {
    const Rational x = random_rational(rng), y = random_rational(rng);
    for (long k = 0; k <= k_max; ++k)
      for (Family f : {Family::P, Family::Q}) {
        ++r.cases;
        const Rational sign = k % 2 ? -1 : 1;
        if (family_value(f, k, -x, y) != sign * family_value(f, k, x, y))
          r.fail(to_string(f) + "_" + std::to_string(k) + " at x=" + to_string(x) + ", y=" + to_string(y));
      }
  }
  return r;
}

CheckResult odd_q_p_relation(long max_n) {
  CheckResult r{"odd_q_p_relation"};
  for (long n = 1; n <= max_n; n += 2) {
    ++r.cases;
    const long k = (n + 1) / 2;
    const Rational sign = k % 2 ? -1 : 1;
    if (family_poly(Family::Q, k, Rational(n)) != family_poly(Family::P, k, Rational(n)) * sign)
      r.fail("n=" + std::to_string(n));
  }
  return r;
}

CheckResult continuant_cofactor(long max_size, int samples) {
  CheckResult r{"continuant_cofactor"};
  std::mt19937 rng(kSeed + 3);
  for (long k = 0; k <= max_size; ++k)
    for (int i = 0; i < samples; ++i) {
      ++r.cases;
      std::vector<Rational> sub, diag, super;
      QMatrix m(k, k);
      for (long j = 0; j < k; ++j) {
        diag.push_back(random_rational(rng));
        m(j, j) = diag.back();
        if (j + 1 < k) {
          super.push_back(random_rational(rng));
          sub.push_back(random_rational(rng));
          m(j, j + 1) = super.back();
          m(j + 1, j) = sub.back();
        }
      }
      if (continuant(sub, diag, super, Rational(1)) != cofactor_det(m)) r.fail("size " + std::to_string(k));
    }
  return r;
}

CheckResult cayley_identities(long k_max) {
  CheckResult r{"cayley_identities"};
  for (Identity id : {Identity::cay_falling, Identity::cay_raising, Identity::cay_factorial, Identity::kraw_from_cay,
                      Identity::cay_binomial_form, Identity::cay_recurrence}) {
    ++r.cases;
    if (!verify_identity(id, k_max)) r.fail(to_string(id));
  }
  return r;
}

}  // namespace checks

const std::vector<std::string> kSuites{"all", "determinants", "palindromic", "solver", "ktype", "appendix"};

SuiteReport run_suite(const std::string& suite, long max_n) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw Error(ErrorKind::Usage, "unknown suite '" + suite + "'");
  SuiteReport rep;
  rep.suite = suite;
  rep.max_n = max_n;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  auto& c = rep.checks;
  const long small = std::min<long>(max_n, 12);
  if (want("determinants")) {
    c.push_back(checks::sylvester_factorization(max_n));
    c.push_back(checks::determinant_series_bridge(std::min<long>(max_n, 15), max_n, 10));
    c.push_back(checks::p_even_factorization(max_n));
    c.push_back(checks::q_even_factorization(max_n));
    c.push_back(checks::p_odd_factorization(max_n));
    c.push_back(checks::p_sylvester_product(max_n));
    c.push_back(checks::krawtchouk_top_factorization(max_n));
    c.push_back(checks::leading_constants(max_n));
    c.push_back(checks::cayley_identities(small));
  }
  if (want("palindromic")) {
    for (Family f : {Family::P, Family::Q, Family::Cay, Family::Kraw}) c.push_back(checks::palindromic(f, max_n));
    c.push_back(checks::factorial_values(max_n));
    c.push_back(checks::odd_n_not_palindromic(std::min<long>(max_n, 9)));
  }
  if (want("solver")) {
    auto g = checks::solver_grid(max_n);
    c.push_back(std::move(g.dimensions));
    c.push_back(std::move(g.mreps));
    c.push_back(std::move(g.homs));
    c.push_back(std::move(g.bases));
    c.push_back(checks::polynomiality_predicates(max_n));
    c.push_back(checks::cayley_transfer(max_n));
    c.push_back(checks::cayley_scalar(max_n));
  }
  if (want("ktype")) {
    c.push_back(checks::ktype_lists(small, max_n));
    c.push_back(checks::h_literal_discrepancy(small, max_n));
    c.push_back(checks::ktype_model_independence(std::min<long>(max_n, 6), max_n));
  }
  if (want("appendix")) {
    c.push_back(checks::heun_gauss_reduction(small, 30));
    c.push_back(checks::heun_uv_agreement(30, 15));
    c.push_back(checks::sl2_relations(max_n));
    c.push_back(checks::projective_multiplicativity(20, std::min<long>(max_n, 8)));
    c.push_back(checks::intertwining(std::min<long>(max_n, 16), 10));
    c.push_back(checks::q8_structure());
    c.push_back(checks::parity_laws(small, 20));
    c.push_back(checks::odd_q_p_relation(max_n));
    c.push_back(checks::continuant_cofactor(6, 20));
  }
  std::sort(c.begin(), c.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return rep;
}

}  // namespace ktf
