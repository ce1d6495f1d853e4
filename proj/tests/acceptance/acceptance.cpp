// Acceptance suite: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "autmg/autmg.hpp"
#include "autmg/cli.hpp"

using namespace autmg;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

/// Collects mismatches for one criterion.
class Criterion
{
public:
  void require(bool ok, const std::string& what)
  {
    ++checks_;
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  template <typename T>
  void equal(const T& expected, const T& got, const std::string& what)
  {
    require(expected == got, what);
  }

  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct Entry
{
  int id;
  std::string title;
  double seconds;
  std::function<void(Criterion&)> body;
};

std::string at(std::int64_t n, std::int64_t k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

Rational from_json(const nlohmann::json& j)
{
  return make_rational(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
}

Polynomial sparse(std::initializer_list<std::pair<std::size_t, std::int64_t>> terms)
{
  Polynomial p;
  for (const auto& [e, c] : terms) p += Polynomial::monomial(R(c), e);
  return p;
}

using Terms = std::vector<std::pair<Rational, std::int64_t>>;

void theorem_table(Criterion& c)
{
  const std::map<std::int64_t, Terms> formulas{
    {1, {{R(1), 1}}},
    {2, {{R(-1, 2), 2}, {R(1), 4}}},
    {3, {{R(3, 4), 3}, {R(-25, 8), 5}, {R(27, 8), 9}}},
    {4, {{R(-2), 4}, {R(27, 2), 6}, {R(-8), 8}, {R(-250, 12), 10}, {R(64, 3), 16}}},
  };
  const std::map<std::int64_t, std::pair<Polynomial, std::vector<std::int64_t>>> genfuns{
    {1, {Polynomial{R(1)}, {1}}},
    {2, {Polynomial{R(1, 2)}, {2, 4}}},
    {3, {Polynomial{R(1)}, {3, 5, 9}}},
    {4, {Polynomial{R(4), R(-34)}, {4, 6, 8, 10, 16}}},
  };
  for (std::int64_t n = 1; n <= 4; ++n) {
    const auto f = cli::run({"formula", "--n", std::to_string(n), "--format", "json"});
    c.equal(0, f.exit_code, "formula --n " + std::to_string(n) + " exit code");
    Terms got;
    const auto formula_doc = nlohmann::json::parse(f.out);
    for (const auto& t : formula_doc.at("terms"))
      got.emplace_back(from_json(t.at("coefficient")), t.at("base").get<std::int64_t>());
    c.equal(formulas.at(n), got, "formula terms for n=" + std::to_string(n));

    const auto g = cli::run({"genfun", "--n", std::to_string(n), "--format", "json"});
    c.equal(0, g.exit_code, "genfun --n " + std::to_string(n) + " exit code");
    const auto doc = nlohmann::json::parse(g.out);
    std::vector<Rational> coeffs;
    for (const auto& x : doc.at("numerator")) coeffs.push_back(from_json(x));
    c.equal(genfuns.at(n).first, Polynomial(coeffs), "Z numerator for n=" + std::to_string(n));
    c.equal(genfuns.at(n).second, doc.at("poles").get<std::vector<std::int64_t>>(),
            "Z poles for n=" + std::to_string(n));
  }
}

void listed_polynomials(Criterion& c)
{
  const std::vector<Polynomial> p{
    sparse({{0, 1}}),
    sparse({{0, -1}, {1, 1}}),
    sparse({{0, 2}, {1, -3}, {3, 1}}),
    sparse({{0, -6}, {1, 12}, {2, -3}, {3, -4}, {6, 1}}),
    sparse({{0, 24}, {1, -60}, {2, 30}, {3, 20}, {4, -10}, {6, -5}, {10, 1}}),
    sparse({{0, -120}, {1, 360}, {2, -270}, {3, -90}, {4, 120}, {6, 20}, {7, -15}, {10, -6}, {15, 1}}),
    sparse({{0, 720}, {1, -2520}, {2, 2520}, {3, 210}, {4, -1260}, {5, 210}, {6, -70}, {7, 210}, {9, -35},
            {10, 42}, {11, -21}, {15, -7}, {21, 1}}),
  };
  for (std::int64_t n = 1; n <= 7; ++n) c.equal(p[static_cast<std::size_t>(n - 1)], pn_poly(n).poly, "P_" + std::to_string(n));
  const auto p7 = pn_poly(7).poly;
  c.equal(std::size_t{13}, static_cast<std::size_t>(std::count_if(p7.coeffs().begin(), p7.coeffs().end(),
                                                                    [](const Rational& x) { return x != 0; })),
          "P_7 term count");
  c.equal(std::int64_t{21}, p7.degree(), "P_7 degree");

  const std::vector<SimplePoleRatFun> z{
    SimplePoleRatFun(Polynomial{R(1)}, {1}),
    SimplePoleRatFun(Polynomial{R(1, 2)}, {2, 4}),
    SimplePoleRatFun(Polynomial{R(1)}, {3, 5, 9}),
    SimplePoleRatFun(Polynomial{R(4), R(-34)}, {4, 6, 8, 10, 16}),
    SimplePoleRatFun(Polynomial{R(25), R(-606), R(3557)}, {5, 7, 9, 11, 13, 17, 25}),
    SimplePoleRatFun(R(24) * Polynomial{R(9), R(-451), R(7292), R(-37860)}, {6, 8, 10, 12, 14, 18, 20, 26, 36}),
  };
  for (std::int64_t n = 1; n <= 6; ++n) c.equal(z[static_cast<std::size_t>(n - 1)], zn_ratfun(n), "Z_" + std::to_string(n));
}

void oracle_cross_validation(Criterion& c)
{
  c.equal(R(7, 12), oracle_I(2, 2), "oracle I(2,2)");
  c.equal(R(2, 3), oracle_I(4, 0), "oracle I(4,0)");
  for (std::int64_t n = 1; n <= 6; ++n)
    for (std::int64_t k = 0; n + k <= 6; ++k) c.equal(compute_I(n, k), oracle_I(n, k), "oracle vs recurrence " + at(n, k));
}

void theorem_one(Criterion& c)
{
  for (std::int64_t n = 1; n <= 12; ++n) {
    c.equal(power(R(n), n - 3), compute_J(n, 0), "J(n,0) = n^{n-3} at n=" + std::to_string(n));
    c.equal(power(R(n), n - 2), Rational(dziobek_T(n)), "T(n) = n^{n-2} at n=" + std::to_string(n));
  }
  for (std::int64_t n = 1; n <= 8; ++n) c.equal(compute_J(n, 1), unicyclic_J(n), "unicyclic_J at n=" + std::to_string(n));
  const std::int64_t prefix[] = {1, 3, 17, 142, 1569};
  for (std::int64_t n = 1; n <= 5; ++n) c.equal(R(prefix[n - 1]), unicyclic_J(n), "A001865 term " + std::to_string(n));
}

void four_routes(Criterion& c)
{
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto series = zn_ratfun(n).series(12);
    const auto formula = zn_to_expsum(n);
    for (std::int64_t k = 0; k <= 12; ++k) {
      const Rational j = compute_J(n, k);
      c.equal(j, series[static_cast<std::size_t>(k)], "Z_n expansion " + at(n, k));
      c.equal(j, expsum_eval(formula, k), "exponential sum " + at(n, k));
      c.equal(j, Rational(normalization_factor(n, k)) * compute_I(n, k), "normalized I-recurrence " + at(n, k));
    }
  }
}

void theorem_two(Criterion& c)
{
  const auto gf = bivariate_gf_I(5, 6);
  const auto table = build_table(5, 6);
  c.equal(std::size_t{35}, gf.size(), "bivariate grid size");
  for (std::int64_t n = 1; n <= 5; ++n)
    for (std::int64_t k = 0; k <= 6; ++k) {
      c.equal(table.I(n, k), gf.at({n, k}), "bivariate " + at(n, k));
      c.equal(table.I(n, k), rn_series(n, 6)[static_cast<std::size_t>(k)], "R_n series " + at(n, k));
    }
  const auto r1 = rn_series(1, 6);
  for (std::int64_t k = 0; k <= 6; ++k)
    c.equal(Rational(1) / Rational(ipower(Integer(2), static_cast<std::uint64_t>(k)) * factorial(k)),
            r1[static_cast<std::size_t>(k)], "R_1 = e^{x/2} coefficient " + std::to_string(k));
}

void vanishing_window(Criterion& c)
{
  for (std::int64_t n = 2; n <= 8; ++n) {
    const auto f = zn_to_expsum(n);
    for (std::int64_t k = -(n - 1); k <= -1; ++k) c.equal(R(0), expsum_eval(f, k), "window " + at(n, k));
  }
}

void abel(Criterion& c)
{
  for (std::int64_t n = 1; n <= 10; ++n)
    for (std::int64_t j = 0; j <= 10; ++j) c.require(abel_check(n, j), "Abel identity at (n,j)=" + at(n, j));
}

void connected_graphs(Criterion& c)
{
  for (std::int64_t n = 1; n <= 5; ++n) {
    const auto counted = enumerate_connected_simple(n);
    const auto derived = cn_poly(n);
    c.equal(counted, derived, "C_n vs enumeration at n=" + std::to_string(n));
    c.equal(power(R(n), n - 2), derived[static_cast<std::size_t>(n - 1)], "Cayley coefficient at n=" + std::to_string(n));
    c.equal(R(1), derived.leading(), "leading coefficient at n=" + std::to_string(n));
  }
}

void square_sums(Criterion& c)
{
  const std::size_t expected[] = {1, 2, 3, 5, 7, 9};
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto sums = distinct_square_sums(n);
    c.equal(expected[n - 1], sums.count, "distinct square sums at n=" + std::to_string(n));
    c.equal(sums.count, zn_ratfun(n).poles().size(), "pole count at n=" + std::to_string(n));
  }
  std::set<std::vector<std::int64_t>> at18;
  const auto groups = compositions_by_square_sum(6);
  for (const auto& comp : groups.at(18)) {
    auto parts = comp.parts;
    std::sort(parts.begin(), parts.end());
    at18.insert(parts);
  }
  const std::set<std::vector<std::int64_t>> collision{std::vector<std::int64_t>{1, 1, 4}, std::vector<std::int64_t>{3, 3}};
  c.equal(collision, at18, "square sum 18 collision at n=6");
  const auto poles = zn_ratfun(6).poles();
  c.equal(std::ptrdiff_t{1}, std::count(poles.begin(), poles.end(), std::int64_t{18}), "pole 18 merged once");
}

} // namespace

int main()
{
  const std::vector<Entry> entries{
    {1, "explicit formulas and generating functions for n = 1..4", 1.0, theorem_table},
    {2, "listed P_1..P_7 and Z_1..Z_6", 5.0, listed_polynomials},
    {3, "oracle I(n,k) equals recurrence for n + k <= 6", 60.0, oracle_cross_validation},
    {4, "tree and unicyclic closed forms, Dziobek recurrence", 1.0, theorem_one},
    {5, "four routes to J(n,k) agree, n <= 6, k <= 12", 10.0, four_routes},
    {6, "bivariate log generating function and R_n series", 10.0, theorem_two},
    {7, "exponential sums vanish at k = -(n-1)..-1, n = 2..8", 5.0, vanishing_window},
    {8, "Abel identity for 1 <= n, j <= 10", 1.0, abel},
    {9, "connected labelled graph enumerator, n = 1..5", 10.0, connected_graphs},
    {10, "distinct square sums equal pole counts, n = 1..6", 1.0, square_sums},
  };

  int failed = 0;
  for (const auto& entry : entries) {
    Criterion c;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.body(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < entry.seconds;
    const bool ok = error.empty() && c.failed() == 0 && c.checks() > 0 && in_time;
    if (!ok) ++failed;

    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " [" << entry.id << "] " << entry.title << " (" << c.checks() << " checks, "
         << static_cast<long>(elapsed * 1000) << " ms, limit " << entry.seconds << " s)";
    std::cout << line.str() << "\n";
    if (!error.empty()) std::cout << "    exception: " << error << "\n";
    if (!in_time) std::cout << "    over time limit\n";
    for (const auto& f : c.failures()) std::cout << "    mismatch: " << f << "\n";
  }
  std::cout << (entries.size() - static_cast<std::size_t>(failed)) << "/" << entries.size() << " criteria passed\n";
  return failed;
}
