#ifndef AUTMG_VERIFY_HPP
#define AUTMG_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "closedforms.hpp"
#include "genfun.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "recurrence.hpp"

// Cross-route checks behind `autmg verify`. Each check compares two
// independently computed values and records every disagreement.

namespace autmg::verify {

struct Failure
{
  std::string where;
  std::string expected;
  std::string got;
  std::string routes;
};

struct CheckResult
{
  explicit CheckResult(std::string check_name)
    : name(std::move(check_name))
  {
  }

  std::string name;
  std::size_t cases = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }

  template <typename T>
  void expect_equal(const std::string& where, const T& expected, const T& got, const std::string& routes)
  {
    ++cases;
    if (!(expected == got)) failures.push_back({where, render(expected), render(got), routes});
  }

  void expect_true(const std::string& where, bool ok, const std::string& routes)
  {
    ++cases;
    if (!ok) failures.push_back({where, "true", "false", routes});
  }

private:
  static std::string render(const Rational& r) { return to_string(r); }
  static std::string render(const Integer& i) { return i.str(); }
  static std::string render(const Polynomial& p) { return p.to_string(); }
  static std::string render(std::int64_t v) { return std::to_string(v); }
  static std::string render(std::size_t v) { return std::to_string(v); }
  static std::string render(bool v) { return v ? "true" : "false"; }
  static std::string render(const std::set<std::int64_t>& s)
  {
    std::string out = "{";
    for (auto v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
  }
};

struct Config
{
  std::int64_t n_max = 6;
  std::int64_t k_max = 10;
  /// Oracle enumeration runs for n + k <= oracle_cap.
  std::int64_t oracle_cap = 6;
  SearchBudget budget{};
};

inline std::string at(std::int64_t n, std::int64_t k)
{
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

inline std::string at(std::int64_t n) { return "n=" + std::to_string(n); }

/// Checks canonical_form(pi . g) == canonical_form(g) for every symmetric
/// matrix on `n` vertices with entries <= max_mult and every relabelling pi.
///
/// canonical_form is computed once per matrix and looked up by index, so
/// the sweep costs |matrices| * (n! + n!) rather than |matrices| * n!^2.
inline void canonical_invariance_sweep(std::size_t n, int max_mult, CheckResult& result)
{
  const std::size_t cells = n * (n + 1) / 2;
  const auto radix = static_cast<std::uint64_t>(max_mult + 1);
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) total *= radix;

  auto decode = [&](std::uint64_t index) {
    MultigraphMatrix g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u; v < n; ++v) {
        g.set(u, v, static_cast<int>(index % radix));
        index /= radix;
      }
    return g;
  };
  auto encode = [&](const MultigraphMatrix& g) {
    std::uint64_t index = 0;
    std::uint64_t scale = 1;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u; v < n; ++v) {
        index += static_cast<std::uint64_t>(g.at(u, v)) * scale;
        scale *= radix;
      }
    return index;
  };

  std::vector<std::uint64_t> canon(total);
  for (std::uint64_t i = 0; i < total; ++i) canon[i] = encode(canonical_form(decode(i)));

  std::vector<std::size_t> perm(n);
  for (std::uint64_t i = 0; i < total; ++i) {
    const MultigraphMatrix g = decode(i);
    if (canon[canon[i]] != canon[i]) {
      result.expect_true("idempotence, matrix #" + std::to_string(i), false, "canonical_form twice vs once");
      continue;
    }
    for (std::size_t p = 0; p < n; ++p) perm[p] = p;
    bool ok = true;
    do {
      if (canon[encode(g.permuted(perm))] != canon[i]) ok = false;
    } while (ok && std::next_permutation(perm.begin(), perm.end()));
    result.expect_true("n=" + std::to_string(n) + " matrix #" + std::to_string(i), ok,
                       "canonical_form(pi.g) vs canonical_form(g)");
  }
}

using CheckFn = std::function<CheckResult(const Config&)>;

struct Check
{
  std::string suite;
  std::string name;
  CheckFn run;
};

inline std::vector<Check> all_checks()
{
  std::vector<Check> checks;

  checks.push_back({"recurrence", "recurrence.boundary", [](const Config& c) {
                      CheckResult r{"recurrence.boundary"};
                      for (std::int64_t n = -2; n <= c.n_max; ++n)
                        for (std::int64_t k = -3; k <= c.k_max; ++k) {
                          if (n >= 1 && k >= 0) continue;
                          r.expect_equal(at(n, k), Rational(0), compute_I(n, k), "boundary vs I-recurrence");
                          r.expect_equal(at(n, k), Rational(0), compute_J(n, k), "boundary vs J-recurrence");
                        }
                      return r;
                    }});

  checks.push_back({"recurrence", "recurrence.normalization", [](const Config& c) {
                      CheckResult r{"recurrence.normalization"};
                      const auto table = build_table(c.n_max, c.k_max);
                      for (std::int64_t n = 1; n <= c.n_max; ++n)
                        for (std::int64_t k = 0; k <= c.k_max; ++k)
                          r.expect_equal(at(n, k), table.J(n, k), Rational(normalization_factor(n, k)) * table.I(n, k),
                                         "J-recurrence vs 2^k (n+k-1)! I-recurrence");
                      return r;
                    }});

  checks.push_back({"recurrence", "recurrence.row_one", [](const Config& c) {
                      CheckResult r{"recurrence.row_one"};
                      for (std::int64_t k = 0; k <= c.k_max; ++k)
                        r.expect_equal(at(1, k), Rational(1), compute_J(1, k), "J(1,k) = 1 vs J-recurrence");
                      return r;
                    }});

  checks.push_back({"closedforms", "closedforms.abel", [](const Config& c) {
                      CheckResult r{"closedforms.abel"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n)
                        for (std::int64_t j = 0; j <= c.k_max; ++j) {
                          const auto [lhs, rhs] = abel_sides(n, j);
                          r.expect_equal("(n,j)=" + at(n, j), lhs, rhs, "n(n+j)^{n-1} vs Abel sum");
                        }
                      return r;
                    }});

  checks.push_back({"closedforms", "closedforms.dziobek", [](const Config& c) {
                      CheckResult r{"closedforms.dziobek"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n) {
                        const Integer t = dziobek_T(n);
                        r.expect_equal(at(n), Rational(power(Rational(n), n - 2)), Rational(t),
                                       "Cayley n^{n-2} vs Dziobek recurrence");
                        r.expect_equal(at(n), Rational(n) * compute_J(n, 0), Rational(t),
                                       "n J(n,0) vs Dziobek recurrence");
                      }
                      return r;
                    }});

  checks.push_back({"closedforms", "closedforms.tree_sum", [](const Config& c) {
                      CheckResult r{"closedforms.tree_sum"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n) {
                        const auto [j0, i0] = tree_sum(n);
                        r.expect_equal(at(n, 0), compute_J(n, 0), j0, "J-recurrence vs n^{n-3}");
                        r.expect_equal(at(n, 0), compute_I(n, 0), i0, "I-recurrence vs n^{n-2}/n!");
                      }
                      return r;
                    }});

  checks.push_back({"closedforms", "closedforms.unicyclic", [](const Config& c) {
                      CheckResult r{"closedforms.unicyclic"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n)
                        r.expect_equal(at(n, 1), compute_J(n, 1), unicyclic_J(n), "J-recurrence vs unicyclic sum");
                      return r;
                    }});

  checks.push_back({"closedforms", "closedforms.vanishing_window", [](const Config& c) {
                      CheckResult r{"closedforms.vanishing_window"};
                      for (std::int64_t n = 2; n <= c.n_max; ++n) {
                        const auto f = zn_to_expsum(n);
                        for (std::int64_t k = -(n - 1); k <= -1; ++k)
                          r.expect_equal(at(n, k), Rational(0), expsum_eval(f, k), "zero vs exponential sum");
                        for (std::int64_t k = 0; k <= c.k_max; ++k)
                          r.expect_equal(at(n, k), compute_J(n, k), expsum_eval(f, k),
                                         "J-recurrence vs exponential sum");
                      }
                      return r;
                    }});

  checks.push_back({"genfun", "genfun.bivariate_vs_recurrence", [](const Config& c) {
                      CheckResult r{"genfun.bivariate_vs_recurrence"};
                      for (const auto& [key, value] : bivariate_gf_I(c.n_max, c.k_max))
                        r.expect_equal(at(key.first, key.second), compute_I(key.first, key.second), value,
                                       "I-recurrence vs bivariate log generating function");
                      return r;
                    }});

  checks.push_back({"genfun", "genfun.cn_vs_enumeration", [](const Config& c) {
                      CheckResult r{"genfun.cn_vs_enumeration"};
                      for (std::int64_t n = 1; n <= std::min<std::int64_t>(c.n_max, 6); ++n)
                        r.expect_equal(at(n), enumerate_connected_simple(n, c.budget), cn_poly(n),
                                       "edge-subset enumeration vs P_n(1+t)");
                      return r;
                    }});

  checks.push_back({"genfun", "genfun.expsum_vs_recurrence", [](const Config& c) {
                      CheckResult r{"genfun.expsum_vs_recurrence"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n) {
                        const auto f = zn_to_expsum(n);
                        r.expect_equal(at(n, 0), power(Rational(n), n - 3), expsum_eval(f, 0),
                                       "n^{n-3} vs exponential sum at k=0");
                        for (std::int64_t k = 0; k <= c.k_max; ++k)
                          r.expect_equal(at(n, k), compute_J(n, k), expsum_eval(f, k),
                                         "J-recurrence vs exponential sum");
                      }
                      return r;
                    }});

  checks.push_back({"genfun", "genfun.pn_boundary", [](const Config& c) {
                      CheckResult r{"genfun.pn_boundary"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n)
                        r.expect_equal(at(n), Rational(n == 1 ? 1 : 0), pn_poly(n).poly(Rational(1)),
                                       "delta_{n,1} vs P_n(1)");
                      return r;
                    }});

  checks.push_back({"genfun", "genfun.pn_degree", [](const Config& c) {
                      CheckResult r{"genfun.pn_degree"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n) {
                        const auto p = pn_poly(n).poly;
                        r.expect_equal(at(n), n * (n - 1) / 2, p.degree(), "n(n-1)/2 vs deg P_n");
                        r.expect_equal(at(n), Rational(1), p.leading(), "1 vs leading coefficient of P_n");
                      }
                      return r;
                    }});

  checks.push_back({"genfun", "genfun.pn_two_route", [](const Config& c) {
                      CheckResult r{"genfun.pn_two_route"};
                      for (const auto& p : pn_from_log_gf(c.n_max))
                        r.expect_equal(at(p.n), pn_poly(p.n).poly, p.poly, "differential recurrence vs log(g)");
                      return r;
                    }});

  checks.push_back({"genfun", "genfun.poles_vs_square_sums", [](const Config& c) {
                      CheckResult r{"genfun.poles_vs_square_sums"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n) {
                        const auto poles = zn_ratfun(n).poles();
                        r.expect_equal(at(n), distinct_square_sums(n).values,
                                       std::set<std::int64_t>(poles.begin(), poles.end()),
                                       "distinct square sums vs poles of Z_n");
                      }
                      return r;
                    }});

  checks.push_back({"genfun", "genfun.rn_series_vs_recurrence", [](const Config& c) {
                      CheckResult r{"genfun.rn_series_vs_recurrence"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n) {
                        const auto series = rn_series(n, c.k_max);
                        for (std::int64_t k = 0; k <= c.k_max; ++k)
                          r.expect_equal(at(n, k), compute_I(n, k), series[static_cast<std::size_t>(k)],
                                         "I-recurrence vs R_n series");
                      }
                      return r;
                    }});

  checks.push_back({"genfun", "genfun.zn_series_vs_recurrence", [](const Config& c) {
                      CheckResult r{"genfun.zn_series_vs_recurrence"};
                      for (std::int64_t n = 1; n <= c.n_max; ++n) {
                        const auto series = zn_ratfun(n).series(static_cast<std::size_t>(c.k_max));
                        for (std::int64_t k = 0; k <= c.k_max; ++k)
                          r.expect_equal(at(n, k), compute_J(n, k), series[static_cast<std::size_t>(k)],
                                         "J-recurrence vs Z_n expansion");
                      }
                      return r;
                    }});

  checks.push_back({"oracle", "oracle.aut_conventions", [](const Config&) {
                      CheckResult r{"oracle.aut_conventions"};
                      for (int s = 0; s <= 6; ++s) {
                        MultigraphMatrix g(1);
                        g.set(0, 0, s);
                        r.expect_equal("loops s=" + std::to_string(s),
                                       ipower(Integer(2), static_cast<std::uint64_t>(s)) * factorial(s), aut_order(g),
                                       "2^s s! vs aut_order");
                      }
                      for (int m = 1; m <= 6; ++m) {
                        MultigraphMatrix g(2);
                        g.set(0, 1, m);
                        r.expect_equal("edges r=" + std::to_string(m), Integer(2) * factorial(m), aut_order(g),
                                       "2 r! vs aut_order");
                      }
                      return r;
                    }});

  checks.push_back({"oracle", "oracle.canonical_invariance", [](const Config&) {
                      CheckResult r{"oracle.canonical_invariance"};
                      for (std::size_t n = 1; n <= 4; ++n) canonical_invariance_sweep(n, 3, r);
                      return r;
                    }});

  checks.push_back({"oracle", "oracle.connected_simple_shape", [](const Config& c) {
                      CheckResult r{"oracle.connected_simple_shape"};
                      for (std::int64_t n = 1; n <= std::min<std::int64_t>(c.n_max, 6); ++n) {
                        const auto p = enumerate_connected_simple(n, c.budget);
                        bool nonneg_integers = true;
                        for (const auto& coeff : p.coeffs()) nonneg_integers = nonneg_integers && coeff >= 0 && is_integer(coeff);
                        r.expect_true(at(n), nonneg_integers, "coefficients are non-negative integers");
                        r.expect_equal(at(n), power(Rational(n), n - 2),
                                       p[static_cast<std::size_t>(n - 1)], "Cayley n^{n-2} vs t^{n-1} coefficient");
                        for (std::int64_t e = 0; e < n - 1; ++e)
                          r.expect_equal(at(n), Rational(0), p[static_cast<std::size_t>(e)], "no connected graph below n-1 edges");
                        r.expect_equal(at(n), n * (n - 1) / 2, p.degree(), "n(n-1)/2 vs degree");
                        r.expect_equal(at(n), Rational(1), p.leading(), "1 vs leading coefficient");
                      }
                      return r;
                    }});

  checks.push_back({"oracle", "oracle.orbit_divisibility", [](const Config& c) {
                      CheckResult r{"oracle.orbit_divisibility"};
                      for (std::int64_t n = 1; n <= std::min(c.n_max, c.oracle_cap); ++n)
                        for (std::int64_t k = 0; k <= c.k_max && n + k <= c.oracle_cap; ++k)
                          for (const auto& cls : enumerate_classes(n, k, c.budget)) {
                            const auto gamma = vertex_symmetry_count(cls.rep);
                            r.expect_true(at(n, k), gamma >= 1 && factorial(n) % gamma == 0, "|Gamma| divides n!");
                          }
                      return r;
                    }});

  checks.push_back({"oracle", "oracle.vs_recurrence", [](const Config& c) {
                      CheckResult r{"oracle.vs_recurrence"};
                      for (std::int64_t n = 1; n <= std::min(c.n_max, c.oracle_cap); ++n)
                        for (std::int64_t k = 0; k <= c.k_max && n + k <= c.oracle_cap; ++k)
                          r.expect_equal(at(n, k), oracle_I(n, k, c.budget), compute_I(n, k),
                                         "multigraph enumeration vs I-recurrence");
                      return r;
                    }});

  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return checks;
}

/// Runs every check whose suite is selected ("all" selects everything).
/// Results come back sorted by check name.
inline std::vector<CheckResult> run(const std::set<std::string>& suites, const Config& config)
{
  const bool everything = suites.count("all") != 0;
  std::vector<CheckResult> results;
  for (const auto& check : all_checks())
    if (everything || suites.count(check.suite) != 0) results.push_back(check.run(config));
  return results;
}

} // namespace autmg::verify

#endif // AUTMG_VERIFY_HPP
