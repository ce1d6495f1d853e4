#ifndef AUTMG_GENFUN_HPP
#define AUTMG_GENFUN_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bivariate_series.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "ratfun.hpp"
#include "series.hpp"

namespace autmg {

/// Ordered sequence of positive parts.
struct Composition
{
  std::vector<std::int64_t> parts;

  std::int64_t total() const
  {
    std::int64_t s = 0;
    for (auto p : parts) s += p;
    return s;
  }

  std::int64_t square_sum() const
  {
    std::int64_t s = 0;
    for (auto p : parts) s += p * p;
    return s;
  }

  std::size_t length() const { return parts.size(); }

  /// -(-1)^m / (m * n_1! ... n_m!), the weight each composition carries in
  /// the log-expansion sums.
  Rational log_weight() const
  {
    Integer denom = Integer(static_cast<std::int64_t>(parts.size()));
    for (auto p : parts) denom *= factorial(p);
    const Rational w = Rational(1) / Rational(denom);
    return parts.size() % 2 == 1 ? w : Rational(-w);
  }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// All 2^{n-1} compositions of n in lexicographic order of parts.
inline std::vector<Composition> compositions(std::int64_t n)
{
  if (n < 1) throw std::domain_error("compositions: n must be >= 1");
  std::vector<Composition> out;
  std::vector<std::int64_t> prefix;
  auto recurse = [&](auto&& self, std::int64_t remaining) -> void {
    if (remaining == 0) {
      out.push_back({prefix});
      return;
    }
    for (std::int64_t first = 1; first <= remaining; ++first) {
      prefix.push_back(first);
      self(self, remaining - first);
      prefix.pop_back();
    }
  };
  recurse(recurse, n);
  return out;
}

/// Compositions of n grouped by their square sum.
inline std::map<std::int64_t, std::vector<Composition>> compositions_by_square_sum(std::int64_t n)
{
  std::map<std::int64_t, std::vector<Composition>> groups;
  for (auto& c : compositions(n)) groups[c.square_sum()].push_back(std::move(c));
  return groups;
}

/// Merged log weights per square sum: sum over compositions with that square
/// sum of -(-1)^m / (m * prod n_i!).
inline std::map<std::int64_t, Rational> square_sum_weights(std::int64_t n)
{
  std::map<std::int64_t, Rational> weights;
  for (const auto& c : compositions(n)) weights[c.square_sum()] += c.log_weight();
  return weights;
}

struct SquareSums
{
  std::size_t count;
  std::set<std::int64_t> values;
};

inline SquareSums distinct_square_sums(std::int64_t n)
{
  SquareSums out{0, {}};
  for (const auto& c : compositions(n)) out.values.insert(c.square_sum());
  out.count = out.values.size();
  return out;
}

struct PnPolynomial
{
  std::int64_t n;
  Polynomial poly;

  friend bool operator==(const PnPolynomial&, const PnPolynomial&) = default;
};

namespace detail {

class PnMemo
{
public:
  Polynomial get(std::int64_t n)
  {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<std::int64_t>(polys_.size()) < n) polys_.push_back(next());
    return polys_[static_cast<std::size_t>(n - 1)];
  }

private:
  // Solves 2z P' = N P + S with N = n(n-1), S = sum_i i(n-i) C(n,i) P_i P_{n-i}
  // coefficient by coefficient: (2d - N) p_d = s_d. At d = N/2 the equation
  // is vacuous and p_d comes from the boundary condition P_n(1) = [n == 1].
  Polynomial next() const
  {
    const auto n = static_cast<std::int64_t>(polys_.size()) + 1;
    if (n == 1) return Polynomial::constant(Rational(1));
    Polynomial rhs;
    for (std::int64_t i = 1; i < n; ++i) {
      rhs += Rational(binomial(n, i) * (i * (n - i))) *
             (polys_[static_cast<std::size_t>(i - 1)] * polys_[static_cast<std::size_t>(n - i - 1)]);
    }
    const std::int64_t big_n = n * (n - 1);
    const std::int64_t free_degree = big_n / 2;
    if (rhs[static_cast<std::size_t>(free_degree)] != 0)
      throw consistency_error("P_" + std::to_string(n) + " has no polynomial solution");
    const std::int64_t top = std::max(rhs.degree(), free_degree);
    std::vector<Rational> p(static_cast<std::size_t>(top) + 1);
    Rational others(0);
    for (std::int64_t d = 0; d <= top; ++d) {
      if (d == free_degree) continue;
      p[static_cast<std::size_t>(d)] = rhs[static_cast<std::size_t>(d)] / Rational(2 * d - big_n);
      others += p[static_cast<std::size_t>(d)];
    }
    p[static_cast<std::size_t>(free_degree)] = -others;
    return Polynomial(std::move(p));
  }

  std::mutex mutex_;
  std::vector<Polynomial> polys_;
};

inline PnMemo& pn_memo()
{
  static PnMemo memo;
  return memo;
}

} // namespace detail

/// P_n(z) from the differential recurrence, P_1 = 1, P_n(1) = [n == 1].
inline PnPolynomial pn_poly(std::int64_t n)
{
  if (n < 1) throw std::domain_error("pn_poly: n must be >= 1");
  return {n, detail::pn_memo().get(n)};
}

/// C_n(t) = P_n(1 + t): edge enumerator of connected labeled graphs on n vertices.
inline Polynomial cn_poly(std::int64_t n) { return pn_poly(n).poly.taylor_shift(Rational(1)); }

/// P_n as n! [y^n] log(sum_{m>=0} y^m z^{m(m-1)/2} / m!), an independent
/// second route to pn_poly.
inline std::vector<PnPolynomial> pn_from_log_gf(std::int64_t n_max)
{
  if (n_max < 1) throw std::domain_error("pn_from_log_gf: n_max must be >= 1");
  std::vector<Polynomial> g;
  for (std::int64_t m = 0; m <= n_max; ++m)
    g.push_back(Polynomial::monomial(Rational(1) / Rational(factorial(m)), static_cast<std::size_t>(m * (m - 1) / 2)));
  const auto f = log_by_recurrence(g, Polynomial{});
  std::vector<PnPolynomial> out;
  for (std::int64_t n = 1; n <= n_max; ++n)
    out.push_back({n, Rational(factorial(n)) * f[static_cast<std::size_t>(n)]});
  return out;
}

/// Z_n(t) = sum_k J(n,k) t^k as a proper rational function in lowest terms.
///
/// Assembled as (2t)^{1-n} sum_q w_q / (1 - q t) over distinct square sums q
/// with merged weights w_q. The combined numerator must vanish to order n-1
/// at t = 0; that cancellation is checked, not assumed.
inline SimplePoleRatFun zn_ratfun(std::int64_t n)
{
  if (n < 1) throw std::domain_error("zn_ratfun: n must be >= 1");
  const auto weights = square_sum_weights(n);

  Polynomial numerator;
  for (const auto& [q, w] : weights) {
    Polynomial term = Polynomial::constant(w);
    for (const auto& [other, unused] : weights)
      if (other != q) term *= Polynomial::one_minus(Rational(other));
    numerator += term;
  }
  try {
    numerator = numerator.divide_by_power_of_t(static_cast<std::size_t>(n - 1));
  } catch (const std::domain_error&) {
    throw consistency_error("Z_" + std::to_string(n) + " numerator not divisible by t^" + std::to_string(n - 1));
  }
  numerator *= Rational(1) / Rational(ipower(Integer(2), static_cast<std::uint64_t>(n - 1)));

  // Drop any pole whose residue cancels exactly.
  std::vector<std::int64_t> poles;
  for (const auto& [q, unused] : weights) {
    if (!numerator.is_zero() && numerator(Rational(1) / Rational(q)) == 0)
      numerator = numerator.divide_by_one_minus(Rational(q));
    else
      poles.push_back(q);
  }
  return SimplePoleRatFun(std::move(numerator), std::move(poles));
}

inline ExponentialSumFormula zn_to_expsum(std::int64_t n) { return partial_fractions(zn_ratfun(n), n); }

/// R_n(x) = sum_k I(n,k) x^k through x^{k_max}, from
/// R_n(x) = x^{1-n} sum_q w_q e^{q x / 2}.
inline Series1 rn_series(std::int64_t n, std::int64_t k_max)
{
  if (n < 1 || k_max < 0) throw std::domain_error("rn_series: need n >= 1 and k_max >= 0");
  const auto order = static_cast<std::size_t>(k_max + n - 1);
  Series1 sum(order);
  for (const auto& [q, w] : square_sum_weights(n)) sum += w * series_exp(Series1::linear(Rational(q, 2), order));
  for (std::int64_t i = 0; i < n - 1; ++i)
    if (sum[static_cast<std::size_t>(i)] != 0)
      throw consistency_error("R_" + std::to_string(n) + " has a pole at x = 0 (coefficient " + std::to_string(i) +
                              ")");
  Series1 out(static_cast<std::size_t>(k_max));
  for (std::int64_t k = 0; k <= k_max; ++k) out[static_cast<std::size_t>(k)] = sum[static_cast<std::size_t>(k + n - 1)];
  return out;
}

/// I(n,k) read off x log(sum_{m=0}^{n_max} s^m / m! e^{x m^2 / 2}) as the
/// coefficient of s^n x^{n+k}.
inline std::map<std::pair<std::int64_t, std::int64_t>, Rational> bivariate_gf_I(std::int64_t n_max, std::int64_t k_max)
{
  if (n_max < 1 || k_max < 0) throw std::domain_error("bivariate_gf_I: need n_max >= 1 and k_max >= 0");
  const auto x_order = static_cast<std::size_t>(n_max + k_max);
  BivariateSeries inner(static_cast<std::size_t>(n_max), x_order);
  for (std::int64_t m = 0; m <= n_max; ++m) {
    const Series1 e = series_exp(Series1::linear(Rational(m * m, 2), x_order));
    const Rational scale = Rational(1) / Rational(factorial(m));
    for (std::size_t j = 0; j <= x_order; ++j) inner.set(static_cast<std::size_t>(m), j, scale * e[j]);
  }
  const BivariateSeries h = series_log(inner);
  std::map<std::pair<std::int64_t, std::int64_t>, Rational> out;
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t k = 0; k <= k_max; ++k)
      out[{n, k}] = h.get(static_cast<std::size_t>(n), static_cast<std::size_t>(n + k - 1));
  return out;
}

} // namespace autmg

#endif // AUTMG_GENFUN_HPP
