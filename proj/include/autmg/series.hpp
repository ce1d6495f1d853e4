#ifndef AUTMG_SERIES_HPP
#define AUTMG_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace autmg {

/// Truncated power series in one variable: coefficients of x^0..x^order.
class Series1
{
public:
  explicit Series1(std::size_t order = 0)
    : coeffs_(order + 1)
  {
  }

  /// Pads with zeros or drops terms beyond `order`.
  Series1(std::vector<Rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs))
  {
    coeffs_.resize(order + 1);
  }

  static Series1 constant(const Rational& c, std::size_t order)
  {
    Series1 s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c * x, truncated.
  static Series1 linear(const Rational& c, std::size_t order)
  {
    Series1 s(order);
    if (order >= 1) s.coeffs_[1] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }

  Series1& operator+=(const Series1& o)
  {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Series1& operator-=(const Series1& o)
  {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Series1& operator*=(const Rational& c)
  {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
  friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
  friend Series1 operator*(Series1 a, const Rational& c) { return a *= c; }
  friend Series1 operator*(const Rational& c, Series1 a) { return a *= c; }

  /// Truncated Cauchy product.
  friend Series1 operator*(const Series1& a, const Series1& b)
  {
    a.check_order(b);
    Series1 out(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  Series1& operator*=(const Series1& o) { return *this = *this * o; }

  friend bool operator==(const Series1& a, const Series1& b) { return a.coeffs_ == b.coeffs_; }

private:
  void check_order(const Series1& o) const
  {
    if (o.order() != order()) throw std::invalid_argument("series truncation orders differ");
  }

  std::vector<Rational> coeffs_;
};

/// exp(s) for a series with zero constant term.
///
/// Uses g' = s' g, i.e. d * g_d = sum_{k=1}^{d} k s_k g_{d-k}.
inline Series1 series_exp(const Series1& s)
{
  if (s[0] != 0) throw std::domain_error("series_exp: constant term must be 0");
  Series1 g(s.order());
  g[0] = 1;
  for (std::size_t d = 1; d <= s.order(); ++d) {
    Rational acc(0);
    for (std::size_t k = 1; k <= d; ++k) acc += Rational(k) * s[k] * g[d - k];
    g[d] = acc / Rational(d);
  }
  return g;
}

/// Multiplicative inverse of a series with nonzero constant term.
inline Series1 series_inverse(const Series1& s)
{
  if (s[0] == 0) throw std::domain_error("series_inverse: constant term is 0");
  Series1 out(s.order());
  const Rational inv0 = Rational(1) / s[0];
  out[0] = inv0;
  for (std::size_t d = 1; d <= s.order(); ++d) {
    Rational acc(0);
    for (std::size_t k = 1; k <= d; ++k) acc += s[k] * out[d - k];
    out[d] = -acc * inv0;
  }
  return out;
}

/// log(g) coefficient-wise from g * f' = g', for a sequence g_0, g_1, ... of
/// ring elements in the expansion variable with g_0 equal to `one`.
///
/// The coefficient type needs +, -, a (possibly truncated) ring product and
/// scaling by Rational. Returned f has f_0 = zero.
template <typename Coeff>
std::vector<Coeff> log_by_recurrence(const std::vector<Coeff>& g, const Coeff& zero)
{
  std::vector<Coeff> f(g.size(), zero);
  for (std::size_t d = 1; d < g.size(); ++d) {
    Coeff acc = g[d] * Rational(d);
    for (std::size_t k = 1; k < d; ++k) acc = acc - (f[k] * g[d - k]) * Rational(k);
    f[d] = acc * (Rational(1) / Rational(d));
  }
  return f;
}

/// log(s) for a series with constant term 1.
inline Series1 series_log(const Series1& s)
{
  if (s[0] != 1) throw std::domain_error("series_log: constant term must be 1");
  auto f = log_by_recurrence(s.coeffs(), Rational(0));
  return Series1(std::move(f), s.order());
}

} // namespace autmg

#endif // AUTMG_SERIES_HPP
