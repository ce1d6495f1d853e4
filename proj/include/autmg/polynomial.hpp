#ifndef AUTMG_POLYNOMIAL_HPP
#define AUTMG_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace autmg {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are indexed by exponent. The representation is kept trimmed:
/// the highest stored coefficient is nonzero, so the zero polynomial is the
/// empty sequence and has degree -1.
class Polynomial
{
public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
  {
    trim();
  }

  Polynomial(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs)
  {
    trim();
  }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

  static Polynomial monomial(const Rational& c, std::size_t exponent)
  {
    std::vector<Rational> coeffs(exponent + 1);
    coeffs[exponent] = c;
    return Polynomial(std::move(coeffs));
  }

  /// 1 - a*t
  static Polynomial one_minus(const Rational& a) { return Polynomial{Rational(1), -a}; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^i; zero beyond the degree.
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const
  {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const
  {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
    return Polynomial(std::move(out));
  }

  /// p(t + shift), expanded.
  Polynomial taylor_shift(const Rational& shift) const
  {
    // Horner in polynomial arithmetic: ((c_d)(t+s) + c_{d-1})(t+s) + ...
    Polynomial acc;
    const Polynomial linear{shift, Rational(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + constant(*it);
    return acc;
  }

  /// Exact division by t^k. Throws if any of the low k coefficients is nonzero.
  Polynomial divide_by_power_of_t(std::size_t k) const
  {
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) throw std::domain_error("polynomial not divisible by t^" + std::to_string(k));
    }
    if (k >= coeffs_.size()) return {};
    return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  /// Exact division by (1 - a*t). Throws when 1/a is not a root.
  Polynomial divide_by_one_minus(const Rational& a) const
  {
    if (a == 0) return *this;
    if ((*this)(Rational(1) / a) != 0) throw std::domain_error("polynomial not divisible by (1 - a t)");
    if (is_zero()) return {};
    // p(t) = (1 - a t) q(t)  =>  q_i = p_i + a q_{i-1}
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry(0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      carry = coeffs_[i] + a * carry;
      q[i] = carry;
    }
    return Polynomial(std::move(q));
  }

  Polynomial& operator+=(const Polynomial& o)
  {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o)
  {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Rational& c)
  {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
  {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Ascending powers, e.g. "4 - 34*t + t^3". Zero prints as "0".
  std::string to_string(const std::string& var = "t") const
  {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string power;
      if (i == 1)
        power = var;
      else if (i > 1)
        power = var + "^" + std::to_string(i);
      if (power.empty())
        out += autmg::to_string(mag);
      else if (mag == 1)
        out += power;
      else
        out += autmg::to_string(mag) + "*" + power;
    }
    return out;
  }

private:
  void trim()
  {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

} // namespace autmg

#endif // AUTMG_POLYNOMIAL_HPP
