#ifndef AUTMG_BIVARIATE_SERIES_HPP
#define AUTMG_BIVARIATE_SERIES_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "series.hpp"

namespace autmg {

/// Truncated power series in two variables, stored sparsely.
///
/// The first exponent belongs to the primary variable (the one log expands
/// in), the second to the secondary one. Absent keys are zero.
class BivariateSeries
{
public:
  using Key = std::pair<std::size_t, std::size_t>;

  BivariateSeries(std::size_t max_primary, std::size_t max_secondary)
    : max_primary_(max_primary)
    , max_secondary_(max_secondary)
  {
  }

  std::size_t max_primary() const { return max_primary_; }
  std::size_t max_secondary() const { return max_secondary_; }

  Rational get(std::size_t i, std::size_t j) const
  {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void set(std::size_t i, std::size_t j, const Rational& c)
  {
    if (i > max_primary_ || j > max_secondary_)
      throw std::out_of_range("bivariate coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                              ") beyond truncation");
    if (c == 0)
      coeffs_.erase({i, j});
    else
      coeffs_[{i, j}] = c;
  }

  void add(std::size_t i, std::size_t j, const Rational& c)
  {
    if (i > max_primary_ || j > max_secondary_) return;
    set(i, j, get(i, j) + c);
  }

  const std::map<Key, Rational>& terms() const { return coeffs_; }

  /// Coefficient of primary^i as a series in the secondary variable.
  Series1 primary_slice(std::size_t i) const
  {
    Series1 s(max_secondary_);
    for (auto it = coeffs_.lower_bound({i, 0}); it != coeffs_.end() && it->first.first == i; ++it)
      s[it->first.second] = it->second;
    return s;
  }

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b)
  {
    return a.max_primary_ == b.max_primary_ && a.max_secondary_ == b.max_secondary_ && a.coeffs_ == b.coeffs_;
  }

private:
  std::size_t max_primary_;
  std::size_t max_secondary_;
  std::map<Key, Rational> coeffs_;
};

/// log(g) for a bivariate series with constant term 1, expanded in the
/// primary variable via g * f' = g'.
///
/// The primary-degree-0 part g_0 may depend on the secondary variable; it is
/// split off as log(g) = log(g_0) + log(g / g_0).
inline BivariateSeries series_log(const BivariateSeries& g)
{
  if (g.get(0, 0) != 1) throw std::domain_error("series_log: constant term must be 1");
  const std::size_t order = g.max_secondary();
  const Series1 g0 = g.primary_slice(0);
  const Series1 g0_inv = series_inverse(g0);

  std::vector<Series1> normalized;
  normalized.reserve(g.max_primary() + 1);
  for (std::size_t i = 0; i <= g.max_primary(); ++i) normalized.push_back(g.primary_slice(i) * g0_inv);

  std::vector<Series1> f = log_by_recurrence(normalized, Series1(order));
  f[0] = series_log(g0);

  BivariateSeries out(g.max_primary(), order);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j <= order; ++j)
      if (f[i][j] != 0) out.set(i, j, f[i][j]);
  return out;
}

} // namespace autmg

#endif // AUTMG_BIVARIATE_SERIES_HPP
