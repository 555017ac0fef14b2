#ifndef HYPERWEYL_CLI_HPP
#define HYPERWEYL_CLI_HPP

#include "identities.hpp"
#include "weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hyperweyl::cli {

enum ExitCode : int { Ok = 0, Failure = 1, Usage = 2, Unstable = 3 };

/// Reads and validates an eval table file.
inline EvalData load_eval_table(const std::string& path, const CoeffAlgebraSpec& spec) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open eval table '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed eval table '" + path + "': " + e.what());
  }
  try {
    return eval_from_json(j, spec);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed eval table '" + path + "': " + e.what());
  }
}

/// "3" or "1,1" (commas or spaces).
inline Weight parse_weight(const std::string& text) {
  Weight w;
  std::string t = text;
  for (auto& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw std::invalid_argument("cannot parse weight '" + text + "'");
    w.coords.push_back(v);
  }
  if (w.coords.empty()) throw std::invalid_argument("empty weight");
  return w;
}

inline std::string weight_str(const Weight& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.coords.size(); ++i) out += (i ? "," : "") + std::to_string(w.coords[i]);
  return out + "]";
}

inline FieldSpec parse_field(unsigned p) {
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{p};
}

// ---------------------------------------------------------------------------
// subcommands

struct VerifyArgs {
  std::string id = "all";
  std::string type = "A1";
  std::string coeff = "poly:1";
  int pmax = 3;
  int rmax = 0;
  int smax = 0;
  int adeg = 3;
  int max_word = 4;
  int samples = 50;
};

struct SweepSummary {
  std::string identity;
  std::string type;
  std::string coeff;
  std::size_t cases = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // case, note
};

/// Prints sweep results; Failure iff some case failed.
inline int print_verify(const std::vector<SweepSummary>& summaries, bool json, std::ostream& out) {
  bool all_pass = true;
  nlohmann::json report = nlohmann::json::array();
  for (const auto& s : summaries) {
    all_pass = all_pass && s.failures.empty();
    if (json) {
      nlohmann::json failures = nlohmann::json::array();
      for (const auto& [c, note] : s.failures) failures.push_back({{"case", c}, {"note", note}});
      report.push_back({{"identity", s.identity},
                        {"type", s.type},
                        {"coeff", s.coeff},
                        {"cases", s.cases},
                        {"failed", s.failures.size()},
                        {"failures", failures}});
      continue;
    }
    out << s.identity << " " << s.type << " " << s.coeff << ": " << s.cases << " cases, ";
    if (s.failures.empty())
      out << "all pass\n";
    else
      out << s.failures.size() << " FAILED\n";
    for (const auto& [c, note] : s.failures) out << "  FAIL " << c << "  " << note << "\n";
  }
  if (json) out << nlohmann::json{{"verify", report}, {"pass", all_pass}}.dump(2) << "\n";
  return all_pass ? Ok : Failure;
}

inline int run_verify(const VerifyArgs& a, bool json, std::ostream& out) {
  const auto datum = parse_root_datum(a.type);
  const auto spec = CoeffAlgebraSpec::parse(a.coeff);
  IdentityLimits lim;
  lim.max_power = std::max({a.pmax, a.rmax, a.smax});
  lim.max_adeg = a.adeg;
  lim.max_word = a.max_word;
  lim.samples = a.samples;
  if (lim.max_power < 1 || lim.max_adeg < 0 || lim.max_word < 1 || lim.samples < 0)
    throw std::invalid_argument("sweep limits out of range");
  std::vector<Identity> ids;
  if (a.id == "all")
    ids.assign(all_identities().begin(), all_identities().end());
  else
    ids.push_back(parse_identity(a.id));
  Envelope probe(datum, spec);

  std::vector<SweepSummary> summaries;
  for (Identity id : ids) {
    auto cases = identity_sweep(id, datum, spec, lim);
    std::erase_if(cases, [&](const IdentityCase& c) {
      const bool uses_rs = id == Identity::Basicrel || id == Identity::Commutrels5 || id == Identity::AkReduction;
      return uses_rs && ((a.rmax > 0 && c.r > a.rmax) || (a.smax > 0 && id == Identity::Basicrel && c.s > a.smax));
    });
    const auto reports = run_sweep(datum, spec, cases, lim);
    SweepSummary sum{identity_name(id), datum.label(), spec.str(), cases.size(), {}};
    for (std::size_t i = 0; i < cases.size(); ++i)
      if (!reports[i].pass) sum.failures.emplace_back(case_str(datum, cases[i]), reports[i].note);
    summaries.push_back(std::move(sum));
  }
  return print_verify(summaries, json, out);
}

struct LambdaArgs {
  std::string type = "A1";
  std::string coeff = "poly:1";
  int node = 1;
  std::string a = "t";
  int r = 0;
  int rmax = -1;
  int k = 1;
};

inline int run_lambda(const LambdaArgs& a, bool json, std::ostream& out) {
  const auto datum = parse_root_datum(a.type);
  const auto spec = CoeffAlgebraSpec::parse(a.coeff);
  if (a.node < 1 || a.node > datum.rank()) throw std::invalid_argument("node out of range");
  const auto b = Monomial::parse(a.a, spec.nvars);
  if (!spec.contains(b)) throw std::invalid_argument(b.str() + " is not in " + spec.str());
  if (a.r < 0 || a.k < 1) throw std::invalid_argument("need r >= 0 and k >= 1");
  Hyperalgebra H(datum, spec);
  const int lo = a.rmax >= 0 ? 0 : a.r;
  const int hi = a.rmax >= 0 ? a.rmax : a.r;
  nlohmann::json rows = nlohmann::json::array();
  for (int r = lo; r <= hi; ++r) {
    const Monomial ak = b.pow(a.k);
    const OracleElt poly = H.lambda_poly(a.node - 1, ak, r);
    nlohmann::json row{{"r", r}, {"a", ak.str()}, {"value", oracle_str(datum, poly)}};
    std::string reduction;
    if (a.k > 1 && r > 0) {
      if (b.is_one()) throw std::invalid_argument("reduction needs a != 1");
      const auto red = H.lambda_power_reduction(a.node - 1, b, a.k, r);
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [prod, m] : red.terms) {
        std::string p;
        for (const auto& [s, n] : prod) {
          if (!p.empty()) p += ' ';
          p += "L(" + std::to_string(a.node) + "," + b.str() + "," + std::to_string(s) + ")";
          if (n > 1) p += "^" + std::to_string(n);
        }
        terms.push_back({p.empty() ? "1" : p, m.get_str()});
        if (!reduction.empty()) reduction += sgn(m) < 0 ? " - " : " + ";
        else if (sgn(m) < 0) reduction += "-";
        const Rational am = abs(m);
        reduction += (am == 1 ? "" : am.get_str() + "*") + (p.empty() ? "1" : p);
      }
      row["reduction"] = terms;
      row["integral"] = red.integral();
    }
    rows.push_back(row);
    if (!json) {
      if (a.rmax >= 0 || a.k > 1) out << "L(" << a.node << "," << ak.str() << "," << r << ") = ";
      out << row["value"].get<std::string>() << "\n";
      if (!reduction.empty()) out << "  = " << reduction << "\n";
    }
  }
  if (json)
    out << nlohmann::json{{"type", datum.label()}, {"coeff", spec.str()}, {"node", a.node}, {"lambda", rows}}.dump(2)
        << "\n";
  return Ok;
}

struct WeylArgs {
  std::string type = "A1";
  std::string lambda;
  std::string coeff = "poly:1";
  unsigned characteristic = 0;
  std::string eval = "graded";
  int slack = 2;
  std::vector<int> max_exp;
  std::vector<int> max_drop;
  bool allow_unstable = false;
};

inline void print_result(const WeylModuleResult& r, bool json, std::ostream& out) {
  if (json) {
    out << result_to_json(r).dump(2) << "\n";
    return;
  }
  out << "type " << r.type << "  lambda " << weight_str(r.lambda) << "  coeff " << r.coeff.str() << "  field "
      << r.field.name() << "  eval " << r.eval << "\n";
  out << "dimension " << r.dimension << "\n";
  out << "spanning set " << r.spanning_size << ", degree bound " << r.degree_bound << ", slack " << r.window.slack
      << ", stabilized " << (r.stabilized ? "yes" : "NO") << "\n";
  out << std::left << std::setw(16) << "weight"
      << "mult\n";
  for (const auto& [w, n] : ordered_character(r)) out << std::left << std::setw(16) << weight_str(w) << n << "\n";
}

inline int run_weyl(const WeylArgs& a, bool local, bool json, std::ostream& out) {
  const auto datum = parse_root_datum(a.type);
  const auto spec = local ? CoeffAlgebraSpec::parse(a.coeff) : CoeffAlgebraSpec::constant();
  if (a.slack < 0) throw std::invalid_argument("slack must be >= 0");
  EvalData eval;
  if (local && a.eval != "graded") {
    eval = load_eval_table(a.eval, spec);
    if (!a.lambda.empty() && !(parse_weight(a.lambda) == eval.lambda()))
      throw std::invalid_argument("--lambda disagrees with the eval table");
    if (a.characteristic != 0 && a.characteristic != eval.field().characteristic)
      throw std::invalid_argument("--char disagrees with the eval table");
  } else {
    if (a.lambda.empty()) throw std::invalid_argument("--lambda is required");
    eval = EvalData::graded(parse_weight(a.lambda), parse_field(a.characteristic));
  }
  if (eval.lambda().rank() != static_cast<std::size_t>(datum.rank()))
    throw std::invalid_argument("lambda needs " + std::to_string(datum.rank()) + " coordinates");
  Window w = default_window(datum, eval.lambda(), a.slack);
  if (!a.max_exp.empty()) {
    if (a.max_exp.size() != w.max_exponent.size())
      throw std::invalid_argument("--max-exp needs one entry per positive root");
    w.max_exponent = a.max_exp;
  }
  if (!a.max_drop.empty()) {
    if (a.max_drop.size() != static_cast<std::size_t>(datum.rank()))
      throw std::invalid_argument("--max-drop needs one entry per simple root");
    w.max_drop.coords = a.max_drop;
  }
  const auto r = relation_closure(datum, spec, eval, w);
  print_result(r, json, out);
  if (!r.stabilized && !a.allow_unstable) return Unstable;
  return Ok;
}

struct BasisArgs {
  std::string type = "A1";
  std::string coeff = "poly:1";
  int samples = 500;
  int max_word = 4;
  int adeg = 3;
  int pmax = 3;
};

inline int run_basis_check(const BasisArgs& a, bool json, std::ostream& out) {
  const auto datum = parse_root_datum(a.type);
  const auto spec = CoeffAlgebraSpec::parse(a.coeff);
  IdentityLimits lim;
  lim.samples = a.samples;
  lim.max_word = a.max_word;
  lim.max_adeg = a.adeg;
  lim.max_power = a.pmax;
  if (lim.samples < 0 || lim.max_word < 1 || lim.max_adeg < 0 || lim.max_power < 1)
    throw std::invalid_argument("sweep limits out of range");
  Envelope probe(datum, spec);
  const auto cases = identity_sweep(Identity::GAformsIntegrality, datum, spec, lim);
  const auto reports = run_sweep(datum, spec, cases, lim);
  std::size_t failed = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (reports[i].pass) continue;
    ++failed;
    failures.push_back({{"case", case_str(datum, cases[i])}, {"note", reports[i].note}});
  }
  if (json) {
    out << nlohmann::json{{"type", datum.label()},
                          {"coeff", spec.str()},
                          {"products", cases.size()},
                          {"failed", failed},
                          {"failures", failures}}
               .dump(2)
        << "\n";
  } else {
    out << "basis-check " << datum.label() << " " << spec.str() << ": " << cases.size() << " products, ";
    if (failed == 0)
      out << "all integral, round trip exact\n";
    else
      out << failed << " FAILED\n";
    for (const auto& f : failures)
      out << "  FAIL " << f["case"].get<std::string>() << "  " << f["note"].get<std::string>() << "\n";
  }
  return failed == 0 ? Ok : Failure;
}

// ---------------------------------------------------------------------------
// entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in hyperalgebras of map algebras", "hyperweyl"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check straightening identities over a parameter sweep");
  verify->add_option("--id", va.id, "Identity name or 'all'")->capture_default_str();
  verify->add_option("--type", va.type, "Root system type")->capture_default_str();
  verify->add_option("--coeff", va.coeff, "Coefficient algebra: const, poly:m, laurent")->capture_default_str();
  verify->add_option("--pmax", va.pmax, "Largest divided-power exponent")->capture_default_str();
  verify->add_option("--rmax", va.rmax, "Largest r (0: pmax)");
  verify->add_option("--smax", va.smax, "Largest s (0: pmax)");
  verify->add_option("--adeg", va.adeg, "Largest A-degree")->capture_default_str();
  verify->add_option("--max-word", va.max_word, "Random word length")->capture_default_str();
  verify->add_option("--samples", va.samples, "Random samples")->capture_default_str();
  verify->add_flag("--json", json, "Emit JSON");

  LambdaArgs la;
  auto* lambda = app.add_subcommand("lambda", "Expand Lambda polynomials in the h (x) b");
  lambda->add_option("--type", la.type)->capture_default_str();
  lambda->add_option("--coeff", la.coeff)->capture_default_str();
  lambda->add_option("--i", la.node, "Node")->capture_default_str();
  lambda->add_option("--a", la.a, "Basis element")->capture_default_str();
  lambda->add_option("--r", la.r, "Order")->capture_default_str();
  lambda->add_option("--rmax", la.rmax, "Print all orders 0..rmax");
  lambda->add_option("--k", la.k, "Expand Lambda_{a^k,r} in the Lambda_{a,s}")->capture_default_str();
  lambda->add_flag("--json", json, "Emit JSON");

  WeylArgs wa;
  auto* weyl = app.add_subcommand("weyl", "Weyl module of g");
  weyl->add_option("--type", wa.type)->capture_default_str();
  weyl->add_option("--lambda", wa.lambda, "Highest weight, e.g. 3 or 1,1")->required();
  weyl->add_option("--char", wa.characteristic, "0 or a prime")->capture_default_str();
  weyl->add_option("--slack", wa.slack)->capture_default_str();
  weyl->add_flag("--allow-unstable", wa.allow_unstable, "Exit 0 on a non-stabilized result");
  weyl->add_flag("--json", json, "Emit JSON");

  WeylArgs lw;
  auto* local = app.add_subcommand("local-weyl", "Local Weyl module of g (x) A");
  local->add_option("--type", lw.type)->capture_default_str();
  local->add_option("--lambda", lw.lambda, "Highest weight, e.g. 3 or 1,1");
  local->add_option("--coeff", lw.coeff)->capture_default_str();
  local->add_option("--char", lw.characteristic, "0 or a prime")->capture_default_str();
  local->add_option("--eval", lw.eval, "'graded' or an eval table JSON file")->capture_default_str();
  local->add_option("--slack", lw.slack)->capture_default_str();
  local->add_option("--max-exp", lw.max_exp, "Max A-exponent per positive root")->delimiter(',');
  local->add_option("--max-drop", lw.max_drop, "Max weight drop in simple roots")->delimiter(',');
  local->add_flag("--allow-unstable", lw.allow_unstable, "Exit 0 on a non-stabilized result");
  local->add_flag("--json", json, "Emit JSON");

  BasisArgs ba;
  auto* basis = app.add_subcommand("basis-check", "Random products straighten integrally and round-trip");
  basis->add_option("--type", ba.type)->capture_default_str();
  basis->add_option("--coeff", ba.coeff)->capture_default_str();
  basis->add_option("--samples", ba.samples)->capture_default_str();
  basis->add_option("--max-word", ba.max_word)->capture_default_str();
  basis->add_option("--adeg", ba.adeg)->capture_default_str();
  basis->add_option("--pmax", ba.pmax)->capture_default_str();
  basis->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return Usage;
  }

  try {
    if (verify->parsed()) return run_verify(va, json, out);
    if (lambda->parsed()) return run_lambda(la, json, out);
    if (weyl->parsed()) return run_weyl(wa, false, json, out);
    if (local->parsed()) return run_weyl(lw, true, json, out);
    if (basis->parsed()) return run_basis_check(ba, json, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hyperweyl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hyperweyl::cli

#endif
