#ifndef AUTMG_RECURRENCE_HPP
#define AUTMG_RECURRENCE_HPP

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace autmg {

/// Memo over the (n, k) grid, n >= 1, k >= 0, filled one anti-diagonal
/// n + k = d at a time. Outside the grid every entry is 0.
///
/// `Rule` is a callable (n, k, lookup) -> Rational; `lookup(n', k')` may only
/// touch cells with n' + k' < n + k. Touching anything else throws
/// consistency_error, so a rule that is not well-founded on this order
/// cannot silently read garbage.
template <typename Rule>
class DiagonalMemo
{
public:
  explicit DiagonalMemo(Rule rule = Rule{})
    : rule_(std::move(rule))
  {
  }

  Rational at(std::int64_t n, std::int64_t k)
  {
    if (n < 1 || k < 0) return Rational(0);
    fill_through(n + k);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  /// Order in which cells on diagonals 1..diag are computed.
  static std::vector<std::pair<std::int64_t, std::int64_t>> fill_order(std::int64_t diag)
  {
    std::vector<std::pair<std::int64_t, std::int64_t>> order;
    for (std::int64_t d = 1; d <= diag; ++d)
      for (std::int64_t n = 1; n <= d; ++n) order.emplace_back(n, d - n);
    return order;
  }

  std::int64_t filled_diagonal() const { return filled_; }

private:
  void fill_through(std::int64_t diag)
  {
    while (filled_ < diag) {
      const std::int64_t d = filled_ + 1;
      rows_.resize(static_cast<std::size_t>(d) + 1);
      auto lookup = [this, d](std::int64_t n, std::int64_t k) -> const Rational& {
        static const Rational zero(0);
        if (n < 1 || k < 0) return zero;
        if (n + k >= d)
          throw consistency_error("recurrence read (" + std::to_string(n) + "," + std::to_string(k) +
                                  ") while filling diagonal " + std::to_string(d));
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      };
      for (std::int64_t n = 1; n <= d; ++n) rows_[static_cast<std::size_t>(n)].push_back(rule_(n, d - n, lookup));
      filled_ = d;
    }
  }

  Rule rule_;
  std::vector<std::vector<Rational>> rows_{std::vector<Rational>{}};
  std::int64_t filled_ = 0;
};

/// I(n,k) = (n^2 I(n,k-1) + sum_{i<n} sum_{j<=k} i(n-i) I(i,j) I(n-i,k-j)) / (2(n+k-1)),
/// I(1,0) = 1.
struct IRule
{
  template <typename Lookup>
  Rational operator()(std::int64_t n, std::int64_t k, Lookup&& I) const
  {
    if (n == 1 && k == 0) return Rational(1);
    Rational acc = Rational(n * n) * I(n, k - 1);
    for (std::int64_t i = 1; i < n; ++i) {
      const Rational weight(i * (n - i));
      for (std::int64_t j = 0; j <= k; ++j) acc += weight * I(i, j) * I(n - i, k - j);
    }
    return acc / Rational(2 * (n + k - 1));
  }
};

/// J(n,k) = n^2 J(n,k-1) + 1/2 sum_{i<n} sum_{j<=k} C(n+k-2, i+j-1) i(n-i) J(i,j) J(n-i,k-j),
/// J(1,0) = 1.
struct JRule
{
  template <typename Lookup>
  Rational operator()(std::int64_t n, std::int64_t k, Lookup&& J) const
  {
    if (n == 1 && k == 0) return Rational(1);
    Rational sum(0);
    for (std::int64_t i = 1; i < n; ++i)
      for (std::int64_t j = 0; j <= k; ++j)
        sum += Rational(binomial(n + k - 2, i + j - 1) * (i * (n - i))) * J(i, j) * J(n - i, k - j);
    return Rational(n * n) * J(n, k - 1) + sum / Rational(2);
  }
};

using IRecurrence = DiagonalMemo<IRule>;
using JRecurrence = DiagonalMemo<JRule>;

namespace detail {

template <typename Memo>
Rational shared_lookup(std::int64_t n, std::int64_t k)
{
  static std::mutex mutex;
  static Memo memo;
  std::lock_guard<std::mutex> lock(mutex);
  return memo.at(n, k);
}

} // namespace detail

/// I(n,k) from its recurrence; 0 for n < 1 or k < 0. Memoized process-wide.
inline Rational compute_I(std::int64_t n, std::int64_t k) { return detail::shared_lookup<IRecurrence>(n, k); }

/// J(n,k) from its own recurrence (not derived from I). Memoized process-wide.
inline Rational compute_J(std::int64_t n, std::int64_t k) { return detail::shared_lookup<JRecurrence>(n, k); }

/// J(n,k) / I(n,k) = 2^k (n+k-1)!
inline Integer normalization_factor(std::int64_t n, std::int64_t k)
{
  return ipower(Integer(2), static_cast<std::uint64_t>(k)) * factorial(n + k - 1);
}

/// Dense I and J tables for 1 <= n <= n_max, 0 <= k <= k_max.
class IJTable
{
public:
  IJTable(std::int64_t n_max, std::int64_t k_max, std::vector<std::vector<Rational>> i_entries,
          std::vector<std::vector<Rational>> j_entries)
    : n_max_(n_max)
    , k_max_(k_max)
    , i_(std::move(i_entries))
    , j_(std::move(j_entries))
  {
  }

  std::int64_t n_max() const { return n_max_; }
  std::int64_t k_max() const { return k_max_; }

  const Rational& I(std::int64_t n, std::int64_t k) const { return i_.at(index(n, k)).at(static_cast<std::size_t>(k)); }
  const Rational& J(std::int64_t n, std::int64_t k) const { return j_.at(index(n, k)).at(static_cast<std::size_t>(k)); }

  /// Cells where J != 2^k (n+k-1)! I.
  std::vector<std::pair<std::int64_t, std::int64_t>> normalization_violations() const
  {
    std::vector<std::pair<std::int64_t, std::int64_t>> bad;
    for (std::int64_t n = 1; n <= n_max_; ++n)
      for (std::int64_t k = 0; k <= k_max_; ++k)
        if (J(n, k) != Rational(normalization_factor(n, k)) * I(n, k)) bad.emplace_back(n, k);
    return bad;
  }

private:
  std::size_t index(std::int64_t n, std::int64_t k) const
  {
    if (n < 1 || n > n_max_ || k < 0 || k > k_max_)
      throw std::out_of_range("IJTable index (" + std::to_string(n) + "," + std::to_string(k) + ")");
    return static_cast<std::size_t>(n - 1);
  }

  std::int64_t n_max_;
  std::int64_t k_max_;
  std::vector<std::vector<Rational>> i_;
  std::vector<std::vector<Rational>> j_;
};

/// Both tables from fresh, independent memos; neither is derived from the other.
inline IJTable build_table(std::int64_t n_max, std::int64_t k_max)
{
  if (n_max < 1 || k_max < 0) throw std::domain_error("build_table: need n_max >= 1 and k_max >= 0");
  IRecurrence i_memo;
  JRecurrence j_memo;
  std::vector<std::vector<Rational>> i_rows(static_cast<std::size_t>(n_max));
  std::vector<std::vector<Rational>> j_rows(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t k = 0; k <= k_max; ++k) {
      i_rows[static_cast<std::size_t>(n - 1)].push_back(i_memo.at(n, k));
      j_rows[static_cast<std::size_t>(n - 1)].push_back(j_memo.at(n, k));
    }
  return IJTable(n_max, k_max, std::move(i_rows), std::move(j_rows));
}

} // namespace autmg

#endif // AUTMG_RECURRENCE_HPP
