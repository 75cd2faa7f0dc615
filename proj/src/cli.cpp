#include "ktf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "ktf/ktype.hpp"
#include "ktf/rep.hpp"
#include "ktf/seqdet.hpp"
#include "ktf/series.hpp"
#include "ktf/solver.hpp"
#include "ktf/verify.hpp"

namespace ktf::cli {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered jpoly(const QPoly& p) { return serialize(p); }

ordered jgauss(const Gauss& g) { return {{"re", to_string(g.re())}, {"im", to_string(g.im())}}; }

ordered jgpoly(const GPoly& p) {
  ordered a = ordered::array();
  if (p.is_zero()) a.push_back(jgauss(Gauss(0)));
  for (const auto& c : p.coeffs()) a.push_back(jgauss(c));
  return a;
}

ordered jrationals(const std::vector<Rational>& v) {
  ordered a = ordered::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

long parse_count(const std::string& flag, const std::string& text) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const Error&) {
    throw Error(ErrorKind::Usage, flag + " expects a nonnegative integer, got '" + text + "'");
  }
  if (!is_integer(q) || sgn(q) < 0 || q > 100000)
    throw Error(ErrorKind::Usage, flag + " expects a nonnegative integer, got '" + text + "'");
  return to_long(q);
}

Rational parse_value(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw Error(ErrorKind::Usage, flag + " expects a rational 'p/q' or an integer, got '" + text + "'");
  }
}

// Result of a subcommand: the document plus whether it counts as a pass.
struct Outcome {
  ordered doc;
  bool ok = true;
};

// CSV: a table for list-shaped documents, key,value rows otherwise.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string scalar_text(const ordered& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) out += (k ? ";" : "") + scalar_text(v[k]);
    return out;
  }
  if (v.is_object() && v.contains("re") && v.contains("im") && v.size() == 2)
    return to_string(Gauss(parse_rational(v["re"].get<std::string>()), parse_rational(v["im"].get<std::string>())));
  return v.dump();
}

std::string to_csv(const ordered& doc) {
  std::ostringstream os;
  if (doc.contains("checks")) {
    os << "check,status,cases,counterexamples\n";
    for (const auto& c : doc["checks"])
      os << csv_field(c["name"].get<std::string>()) << ',' << c["status"].get<std::string>() << ','
         << c["cases"].get<long>() << ',' << csv_field(scalar_text(c["counterexamples"])) << '\n';
    return os.str();
  }
  for (const char* key : {"poly", "coefficients"})
    if (doc.contains(key)) {
      os << "index,coefficient\n";
      for (size_t k = 0; k < doc[key].size(); ++k) os << k << ',' << csv_field(scalar_text(doc[key][k])) << '\n';
      return os.str();
    }
  os << "key,value\n";
  for (const auto& [k, v] : doc.items()) os << csv_field(k) << ',' << csv_field(scalar_text(v)) << '\n';
  return os.str();
}

std::string to_pretty(const ordered& doc) {
  std::ostringstream os;
  for (const auto& [k, v] : doc.items()) {
    if (k == "checks") continue;
    os << k << ": " << scalar_text(v) << '\n';
  }
  if (doc.contains("checks"))
    for (const auto& c : doc["checks"]) {
      std::string status = c["status"].get<std::string>();
      for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      os << '[' << status << "] " << c["name"].get<std::string>() << " (" << c["cases"].get<long>() << " cases)\n";
      for (const auto& x : c["counterexamples"]) os << "    " << x.get<std::string>() << '\n';
      for (const auto& x : c["notes"]) os << "    note: " << x.get<std::string>() << '\n';
    }
  return os.str();
}

Outcome cmd_seq(const std::string& family, const std::string& k_text, const std::optional<std::string>& y_text,
                const std::optional<std::string>& x_text) {
  const Family f = parse_family(family);
  const long k = parse_count("--k", k_text);
  if (!y_text && f != Family::Sylv) throw Error(ErrorKind::Usage, "--y is required for family " + family);
  const Rational y = y_text ? parse_value("--y", *y_text) : Rational(k);
  std::optional<Rational> x;
  if (x_text) x = parse_value("--x", *x_text);
  Outcome o;
  o.doc["family"] = to_string(f);
  o.doc["k"] = k;
  o.doc["y"] = to_string(f == Family::Sylv ? Rational(k) : y);
  if (x) {
    o.doc["x"] = to_string(*x);
    o.doc["value"] = to_string(family_value(f, k, *x, y));
  } else {
    o.doc["poly"] = jpoly(family_poly(f, k, y));
  }
  return o;
}

Outcome cmd_heun(const std::string& kind, const std::string& s_text, const std::string& n_text,
                 const std::optional<std::string>& terms_text) {
  const Rational s = parse_value("--s", s_text);
  const long n = parse_count("--n", n_text);
  std::optional<long> terms;
  if (terms_text) terms = parse_count("--terms", *terms_text);
  Outcome o;
  o.doc["kind"] = kind;
  o.doc["s"] = to_string(s);
  o.doc["n"] = n;
  if (kind == "u" || kind == "v") {
    const SeriesKind k = kind == "u" ? SeriesKind::u : SeriesKind::v;
    if (terms) {
      o.doc["variable"] = kind == "u" ? "t^2" : "t^2 (times t)";
      o.doc["coefficients"] = jrationals(uv_coefficients(k, s, n, *terms));
    } else {
      o.doc["poly"] = jpoly(uv_poly(k, s, n));
    }
    return o;
  }
  HypKind hk;
  if (kind == "a") hk = HypKind::a;
  else if (kind == "b") hk = HypKind::b;
  else if (kind == "cplus") hk = HypKind::c_plus;
  else if (kind == "cminus") hk = HypKind::c_minus;
  else throw Error(ErrorKind::Usage, "--kind must be one of u, v, a, b, cplus, cminus");
  if (terms && (hk == HypKind::a || hk == HypKind::b)) {
    const HypData d = hyp_data(hk, s, n);
    const auto c = hyp2f1_prefix(d.A, d.B, d.C, *terms);
    if (!c) throw Error(ErrorKind::UndefinedC, "lower parameter hits a nonpositive integer before truncation");
    o.doc["variable"] = "t^2";
    if (hk == HypKind::b) {
      if (d.prefactor) o.doc["prefactor_t_power"] = *d.prefactor;
      else o.doc["prefactor_t_power"] = to_string((1 + n - s) / 2);
    }
    o.doc["coefficients"] = jrationals(*c);
    return o;
  }
  if (hk == HypKind::c_plus || hk == HypKind::c_minus) o.doc["C"] = to_string(connection_constant(s, n));
  o.doc["poly"] = jpoly(hypergeom_poly(hk, s, n));
  return o;
}

Outcome cmd_sol(const std::string& model_text, const std::string& s_text, const std::string& n_text) {
  const Model model = parse_model(model_text);
  const Rational s = parse_value("--s", s_text);
  const long n = parse_count("--n", n_text);
  const SolutionSpace sp = solution_space(model, s, n);
  const MRep rep = m_rep_classify(model, s, n);
  const size_t expected = expected_dimension(model, s, n);
  MRep want;
  want.constituents = expected_mrep(s, n);
  Outcome o;
  o.doc["model"] = to_string(model);
  o.doc["s"] = to_string(s);
  o.doc["n"] = n;
  o.doc["scale_note"] = operator_matrix(model, s, n).scale_note;
  o.doc["dim"] = sp.dim;
  ordered basis = ordered::array();
  for (const auto& b : sp.basis) basis.push_back(jpoly(b));
  o.doc["basis"] = basis;
  o.doc["mrep"] = rep.label();
  ordered cons = ordered::array();
  for (size_t k = 0, d = 0; k < rep.constituents.size(); ++k) {
    if (k && rep.constituents[k] == rep.constituents[k - 1]) continue;
    ordered c;
    c["sigma"] = to_string(rep.constituents[k]);
    ordered span = ordered::array();
    for (const auto& p : rep.spans[d]) span.push_back(jgpoly(p));
    c["span"] = span;
    cons.push_back(c);
    ++d;
  }
  o.doc["constituents"] = cons;
  o.doc["expected"] = expected;
  o.doc["expected_mrep"] = want.label();
  o.doc["match"] = sp.dim == expected && rep.constituents == want.constituents;
  return o;
}

Outcome cmd_ktype(const std::string& sigma_text, const std::string& s_text, const std::string& max_text) {
  const Irr sigma = parse_irr(sigma_text);
  const Rational s = parse_value("--s", s_text);
  const long n_max = parse_count("--max-n", max_text);
  const KTypeDegrees deg = ktype_degrees(sigma, s, n_max);
  const KTypeCrosscheck cc = ktype_crosscheck(sigma, s, n_max);
  Outcome o;
  o.doc["sigma"] = to_string(sigma);
  o.doc["s"] = to_string(s);
  o.doc["max_n"] = n_max;
  o.doc["degrees"] = deg.degrees;
  o.doc["spins"] = jrationals(deg.spins);
  ordered x;
  x["model"] = to_string(cc.model);
  x["agree"] = cc.all_agree();
  x["disagreements"] = cc.disagreements();
  x["h_literal_discrepancies"] = cc.discrepancies();
  o.doc["crosscheck"] = x;
  o.ok = cc.all_agree();
  return o;
}

Outcome cmd_verify(const std::string& suite, const std::string& max_text) {
  const long max_n = parse_count("--max-n", max_text);
  const SuiteReport rep = run_suite(suite, max_n);
  Outcome o;
  o.doc["suite"] = rep.suite;
  o.doc["max_n"] = rep.max_n;
  o.doc["status"] = rep.pass() ? "pass" : "fail";
  ordered checks = ordered::array();
  for (const auto& c : rep.checks) {
    ordered j;
    j["name"] = c.name;
    j["status"] = c.status();
    j["cases"] = c.cases;
    j["counterexamples"] = c.counterexamples;
    j["notes"] = c.notes;
    checks.push_back(j);
  }
  o.doc["checks"] = checks;
  o.ok = rep.pass();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact determinant, series and representation computations", "ktf"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--out", out_path, "Write the result to FILE instead of stdout");

  std::string family, k, kind, s, n, model, sigma, max_n = "25", suite = "all", verify_max = "16";
  std::optional<std::string> y, x, terms;

  auto* seq = app.add_subcommand("seq", "Determinant families P, Q, Cay, Kraw, Sylv");
  seq->add_option("--family", family)->required();
  seq->add_option("--k", k)->required();
  seq->add_option("--y", y);
  seq->add_option("--x", x);

  auto* heun = app.add_subcommand("heun", "Series and hypergeometric polynomials");
  heun->add_option("--kind", kind)->required();
  heun->add_option("--s", s)->required();
  heun->add_option("--n", n)->required();
  heun->add_option("--terms", terms);

  auto* sol = app.add_subcommand("sol", "Solution space and M-representation");
  sol->add_option("--model", model)->required();
  sol->add_option("--s", s)->required();
  sol->add_option("--n", n)->required();

  auto* kt = app.add_subcommand("ktype", "K-type degree list with kernel cross-check");
  kt->add_option("--sigma", sigma)->required();
  kt->add_option("--s", s)->required();
  kt->add_option("--max-n", max_n);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite)->check(CLI::IsMember(kSuites));
  ver->add_option("--max-n", verify_max);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  Outcome o;
  try {
    if (seq->parsed()) o = cmd_seq(family, k, y, x);
    else if (heun->parsed()) o = cmd_heun(kind, s, n, terms);
    else if (sol->parsed()) o = cmd_sol(model, s, n);
    else if (kt->parsed()) o = cmd_ktype(sigma, s, max_n);
    else o = cmd_verify(suite, verify_max);
  } catch (const Error& e) {
    const bool usage = e.kind() == ErrorKind::Usage || e.kind() == ErrorKind::Parse;
    err << (usage ? "usage error: " : "error: ") << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    return usage ? kUsage : kFailure;
  }

  std::string text;
  if (format == "json") text = o.doc.dump() + "\n";
  else if (format == "csv") text = to_csv(o.doc);
  else text = to_pretty(o.doc);

  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot open " << out_path << '\n';
      return kFailure;
    }
    f << text;
  }
  return o.ok ? kOk : kFailure;
}

}  // namespace ktf::cli
