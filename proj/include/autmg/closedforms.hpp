#ifndef AUTMG_CLOSEDFORMS_HPP
#define AUTMG_CLOSEDFORMS_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "ratfun.hpp"

namespace autmg {

/// Tree totals: (J(n,0), I(n,0)) = (n^{n-3}, n^{n-2} / n!).
inline std::pair<Rational, Rational> tree_sum(std::int64_t n)
{
  if (n < 1) throw std::domain_error("tree_sum: n must be >= 1");
  return {power(Rational(n), n - 3), power(Rational(n), n - 2) / Rational(factorial(n))};
}

/// T(n) by Dziobek's convolution recurrence
///   T(1) = 1,  T(n) = 1/(2(n-1)) sum_{i=1}^{n-1} C(n,i) i(n-i) T(i) T(n-i),
/// deliberately not by the closed form n^{n-2}.
inline Integer dziobek_T(std::int64_t n)
{
  if (n < 1) throw std::domain_error("dziobek_T: n must be >= 1");
  std::vector<Integer> t(static_cast<std::size_t>(n) + 1);
  t[1] = 1;
  for (std::int64_t m = 2; m <= n; ++m) {
    Integer sum = 0;
    for (std::int64_t i = 1; i < m; ++i)
      sum += binomial(m, i) * (i * (m - i)) * t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(m - i)];
    const Integer divisor = 2 * (m - 1);
    if (sum % divisor != 0) throw consistency_error("Dziobek recurrence produced a non-integer");
    t[static_cast<std::size_t>(m)] = sum / divisor;
  }
  return t[static_cast<std::size_t>(n)];
}

/// J(n,1) = n! sum_{mu=1}^{n} n^{n-mu-1} / (n-mu)!
inline Rational unicyclic_J(std::int64_t n)
{
  if (n < 1) throw std::domain_error("unicyclic_J: n must be >= 1");
  Rational sum(0);
  for (std::int64_t mu = 1; mu <= n; ++mu) sum += power(Rational(n), n - mu - 1) / Rational(factorial(n - mu));
  return Rational(factorial(n)) * sum;
}

/// Both sides of n (n+j)^{n-1} = sum_{i=1}^{n} C(n,i) i^{i-1} (n+j-i)^{n-i}, with 0^0 = 1.
inline std::pair<Integer, Integer> abel_sides(std::int64_t n, std::int64_t j)
{
  if (n < 1 || j < 0) throw std::domain_error("abel identity needs n >= 1, j >= 0");
  const Integer lhs = Integer(n) * ipower(Integer(n + j), static_cast<std::uint64_t>(n - 1));
  Integer rhs = 0;
  for (std::int64_t i = 1; i <= n; ++i)
    rhs += binomial(n, i) * ipower(Integer(i), static_cast<std::uint64_t>(i - 1)) *
           ipower(Integer(n + j - i), static_cast<std::uint64_t>(n - i));
  return {lhs, rhs};
}

inline bool abel_check(std::int64_t n, std::int64_t j)
{
  const auto [lhs, rhs] = abel_sides(n, j);
  return lhs == rhs;
}

} // namespace autmg

#endif // AUTMG_CLOSEDFORMS_HPP
