#ifndef AUTMG_CLI_HPP
#define AUTMG_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "closedforms.hpp"
#include "errors.hpp"
#include "genfun.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "recurrence.hpp"
#include "verify.hpp"

namespace autmg::cli {

enum class ExitCode : int
{
  ok = 0,
  check_failed = 1,
  usage = 2,
  budget = 3,
};

struct RunResult
{
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct RunConfig
{
  std::string command;
  std::int64_t n = 0;
  std::int64_t n_max = 6;
  std::int64_t k = 0;
  std::int64_t k_max = 10;
  std::string format = "text";
  std::string which = "J";
  std::vector<std::string> suites{"all"};
  std::string sequence;
  std::int64_t terms = 10;
  std::optional<std::int64_t> budget;
  bool format_given = false;
};

class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::json rational_json(const Rational& r) { return {{"num", num(r).str()}, {"den", den(r).str()}}; }

namespace detail {

inline void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed)
{
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw usage_error("format '" + cfg.format + "' is not available for '" + cfg.command + "'");
}

inline std::string pole_factor(std::int64_t a) { return a == 1 ? "(1-t)" : "(1-" + std::to_string(a) + "*t)"; }

inline std::string run_table(const RunConfig& cfg)
{
  if (cfg.format == "bfile") throw usage_error("table values are not an integer sequence; bfile is unavailable");
  require_format(cfg, {"text", "csv", "json"});
  if (cfg.n_max < 1 || cfg.k_max < 0) throw usage_error("table needs --n-max >= 1 and --k-max >= 0");
  const auto table = build_table(cfg.n_max, cfg.k_max);
  auto value = [&](std::int64_t n, std::int64_t k) -> const Rational& {
    return cfg.which == "I" ? table.I(n, k) : table.J(n, k);
  };

  std::ostringstream out;
  if (cfg.format == "csv") {
    out << "n";
    for (std::int64_t k = 0; k <= cfg.k_max; ++k) out << ",k=" << k;
    out << "\n";
    for (std::int64_t n = 1; n <= cfg.n_max; ++n) {
      out << n;
      for (std::int64_t k = 0; k <= cfg.k_max; ++k) out << "," << to_string(value(n, k));
      out << "\n";
    }
  } else if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t n = 1; n <= cfg.n_max; ++n) {
      nlohmann::json values = nlohmann::json::array();
      for (std::int64_t k = 0; k <= cfg.k_max; ++k) values.push_back(rational_json(value(n, k)));
      rows.push_back({{"n", n}, {"values", values}});
    }
    nlohmann::json doc = {{"which", cfg.which}, {"n_max", cfg.n_max}, {"k_max", cfg.k_max}, {"rows", rows}};
    out << doc.dump(2) << "\n";
  } else {
    for (std::int64_t n = 1; n <= cfg.n_max; ++n)
      for (std::int64_t k = 0; k <= cfg.k_max; ++k)
        out << cfg.which << "(" << n << "," << k << ") = " << to_string(value(n, k)) << "\n";
  }
  return out.str();
}

/// Text form lists terms by ascending coefficient, e.g.
/// "J(3,k) = (-25/8)*5^k + (3/4)*3^k + (27/8)*9^k".
inline std::string run_formula(const RunConfig& cfg)
{
  require_format(cfg, {"text", "csv", "json"});
  if (cfg.n < 1) throw usage_error("formula needs --n >= 1");
  const auto f = zn_to_expsum(cfg.n);
  std::ostringstream out;
  if (cfg.format == "json") {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.terms()) terms.push_back({{"coefficient", rational_json(t.coefficient)}, {"base", t.base}});
    out << nlohmann::json{{"n", cfg.n}, {"terms", terms}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "base,coefficient\n";
    for (const auto& t : f.terms()) out << t.base << "," << to_string(t.coefficient) << "\n";
  } else {
    auto terms = f.terms();
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.coefficient < b.coefficient; });
    out << "J(" << cfg.n << ",k) = ";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i > 0) out << " + ";
      out << "(" << to_string(terms[i].coefficient) << ")*" << terms[i].base << "^k";
    }
    out << "\n";
  }
  return out.str();
}

/// Text form: "Z_4(t) = (4 - 34*t) / (1-4*t)(1-6*t)(1-8*t)(1-10*t)(1-16*t)".
inline std::string run_genfun(const RunConfig& cfg)
{
  require_format(cfg, {"text", "json"});
  if (cfg.n < 1) throw usage_error("genfun needs --n >= 1");
  const auto z = zn_ratfun(cfg.n);
  std::ostringstream out;
  if (cfg.format == "json") {
    nlohmann::json numerator = nlohmann::json::array();
    for (const auto& c : z.numerator().coeffs()) numerator.push_back(rational_json(c));
    out << nlohmann::json{{"n", cfg.n}, {"numerator", numerator}, {"poles", z.poles()}}.dump(2) << "\n";
  } else {
    out << "Z_" << cfg.n << "(t) = (" << z.numerator().to_string() << ") / ";
    for (auto a : z.poles()) out << pole_factor(a);
    out << "\n";
  }
  return out.str();
}

inline std::string matrix_text(const MultigraphMatrix& g)
{
  std::string s = "[";
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (u > 0) s += "; ";
    for (std::size_t v = 0; v < g.size(); ++v) s += (v > 0 ? " " : "") + std::to_string(g.at(u, v));
  }
  return s + "]";
}

inline std::int64_t oracle_cap(const RunConfig& cfg) { return cfg.budget.value_or(6); }

inline std::string run_oracle(const RunConfig& cfg)
{
  require_format(cfg, {"text", "csv", "json"});
  if (cfg.n < 1 || cfg.k < 0) throw usage_error("oracle needs --n >= 1 and --k >= 0");
  if (cfg.n + cfg.k > oracle_cap(cfg))
    throw budget_exceeded("n + k = " + std::to_string(cfg.n + cfg.k) + " exceeds oracle cap " +
                          std::to_string(oracle_cap(cfg)) + " (raise with --budget)");
  const auto classes = enumerate_classes(cfg.n, cfg.k);
  Rational total(0);
  for (const auto& c : classes) total += Rational(1) / Rational(c.aut_order);

  std::ostringstream out;
  if (cfg.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : classes) {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t u = 0; u < c.rep.size(); ++u) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t v = 0; v < c.rep.size(); ++v) row.push_back(c.rep.at(u, v));
        rows.push_back(row);
      }
      list.push_back({{"matrix", rows}, {"aut_order", c.aut_order.str()}});
    }
    out << nlohmann::json{{"n", cfg.n}, {"k", cfg.k}, {"classes", list}, {"I", rational_json(total)}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "class,aut_order,matrix\n";
    for (std::size_t i = 0; i < classes.size(); ++i)
      out << i + 1 << "," << classes[i].aut_order.str() << "," << matrix_text(classes[i].rep) << "\n";
  } else {
    out << "connected multigraphs with n=" << cfg.n << " k=" << cfg.k << ": " << classes.size() << " classes\n";
    for (std::size_t i = 0; i < classes.size(); ++i)
      out << "  " << i + 1 << ": |Aut| = " << classes[i].aut_order.str() << "  " << matrix_text(classes[i].rep)
          << "\n";
    out << "I(" << cfg.n << "," << cfg.k << ") = " << to_string(total) << "\n";
  }
  return out.str();
}

/// b-file: "index value" per line, 1-based.
inline std::string run_oeis(const RunConfig& cfg)
{
  if (cfg.format_given && cfg.format != "bfile") throw usage_error("oeis output is only available as a b-file");
  if (cfg.terms < 1) throw usage_error("oeis needs --terms >= 1");
  std::ostringstream out;
  if (cfg.sequence == "A001865") {
    for (std::int64_t n = 1; n <= cfg.terms; ++n) out << n << " " << to_string(unicyclic_J(n)) << "\n";
  } else if (cfg.sequence == "A000272") {
    for (std::int64_t n = 1; n <= cfg.terms; ++n) out << n << " " << dziobek_T(n).str() << "\n";
  } else {
    throw usage_error("unknown or non-integer sequence '" + cfg.sequence + "' (available: A000272, A001865)");
  }
  return out.str();
}

inline RunResult run_verify(const RunConfig& cfg)
{
  require_format(cfg, {"text"});
  if (cfg.n_max < 1 || cfg.k_max < 0) throw usage_error("verify needs --n-max >= 1 and --k-max >= 0");
  std::set<std::string> suites;
  for (const auto& s : cfg.suites) {
    if (s != "recurrence" && s != "closedforms" && s != "genfun" && s != "oracle" && s != "all")
      throw usage_error("unknown suite '" + s + "'");
    suites.insert(s);
  }
  verify::Config vc;
  vc.n_max = cfg.n_max;
  vc.k_max = cfg.k_max;
  vc.oracle_cap = oracle_cap(cfg);

  const auto results = verify::run(suites, vc);
  std::ostringstream out;
  std::size_t passed = 0;
  std::size_t cases = 0;
  for (const auto& r : results) {
    cases += r.cases;
    if (r.passed()) {
      ++passed;
      out << "PASS " << r.name << " (" << r.cases << " cases)\n";
      continue;
    }
    out << "FAIL " << r.name << " (" << r.failures.size() << " of " << r.cases << " cases)\n";
    for (const auto& f : r.failures)
      out << "  at " << f.where << ": expected " << f.expected << ", got " << f.got << " [" << f.routes << "]\n";
  }
  out << "checks: " << results.size() << " run, " << passed << " passed, " << results.size() - passed
      << " failed; " << cases << " cases\n";
  return {passed == results.size() ? 0 : static_cast<int>(ExitCode::check_failed), out.str(), ""};
}

} // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline RunResult run(const std::vector<std::string>& args)
{
  RunConfig cfg;
  CLI::App app{"Exact enumeration of connected multigraphs weighted by inverse automorphism order", "autmg"};
  app.require_subcommand(1, 1);

  const std::vector<std::string> formats{"json", "csv", "text", "bfile"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option_function<std::string>(
          "--format",
          [&](const std::string& f) {
            cfg.format = f;
            cfg.format_given = true;
          },
          "json|csv|text|bfile")
      ->check(CLI::IsMember(formats));
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option_function<std::int64_t>("--budget", [&](std::int64_t b) { cfg.budget = b; },
                                           "largest n + k the multigraph oracle may enumerate (default 6)");
  };

  auto* table = app.add_subcommand("table", "I(n,k) or J(n,k) table from the recurrences");
  table->add_option("--n-max", cfg.n_max, "largest n (default 6)");
  table->add_option("--k-max", cfg.k_max, "largest k (default 10)");
  table->add_option("--which", cfg.which, "I or J (default J)")->check(CLI::IsMember({"I", "J"}));
  add_format(table);

  auto* verify = app.add_subcommand("verify", "cross-check every route against the others");
  verify->add_option("--suite", cfg.suites, "recurrence, closedforms, genfun, oracle or all")->delimiter(',');
  verify->add_option("--n-max", cfg.n_max, "largest n (default 6)");
  verify->add_option("--k-max", cfg.k_max, "largest k (default 10)");
  add_budget(verify);
  add_format(verify);

  auto* formula = app.add_subcommand("formula", "exponential-sum formula for J(n,k) at fixed n");
  formula->add_option("--n", cfg.n)->required();
  add_format(formula);

  auto* genfun = app.add_subcommand("genfun", "rational generating function Z_n(t)");
  genfun->add_option("--n", cfg.n)->required();
  add_format(genfun);

  auto* oracle = app.add_subcommand("oracle", "brute-force multigraph enumeration");
  oracle->add_option("--n", cfg.n)->required();
  oracle->add_option("--k", cfg.k)->required();
  add_budget(oracle);
  add_format(oracle);

  auto* oeis = app.add_subcommand("oeis", "integer sequence as an OEIS b-file");
  oeis->add_option("--sequence", cfg.sequence, "A001865 or A000272")->required();
  oeis->add_option("--terms", cfg.terms, "number of terms (default 10)");
  add_format(oeis);

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : static_cast<int>(ExitCode::usage), out.str(), err.str()};
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "verify") return detail::run_verify(cfg);
    std::string text;
    if (cfg.command == "table")
      text = detail::run_table(cfg);
    else if (cfg.command == "formula")
      text = detail::run_formula(cfg);
    else if (cfg.command == "genfun")
      text = detail::run_genfun(cfg);
    else if (cfg.command == "oracle")
      text = detail::run_oracle(cfg);
    else
      text = detail::run_oeis(cfg);
    return {0, text, ""};
  } catch (const usage_error& e) {
    return {static_cast<int>(ExitCode::usage), "", std::string("error: ") + e.what() + "\n" + app.help()};
  } catch (const budget_exceeded& e) {
    return {static_cast<int>(ExitCode::budget), "", std::string("error: ") + e.what() + "\n"};
  }
}

} // namespace autmg::cli

#endif // AUTMG_CLI_HPP
