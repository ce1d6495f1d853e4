#ifndef AUTMG_RATFUN_HPP
#define AUTMG_RATFUN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace autmg {

/// k -> sum_i c_i * a_i^k, with distinct positive integer bases a_i.
class ExponentialSumFormula
{
public:
  struct Term
  {
    Rational coefficient;
    std::int64_t base;

    friend bool operator==(const Term&, const Term&) = default;
  };

  ExponentialSumFormula() = default;

  /// Zero coefficients are dropped and terms are sorted by base.
  explicit ExponentialSumFormula(std::vector<Term> terms, std::optional<std::int64_t> n_label = std::nullopt)
    : n_label_(n_label)
  {
    for (auto& t : terms) {
      if (t.base <= 0) throw std::invalid_argument("exponential sum base must be positive");
      if (t.coefficient != 0) terms_.push_back(std::move(t));
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.base < b.base; });
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (terms_[i].base == terms_[i - 1].base)
        throw std::invalid_argument("exponential sum bases must be distinct");
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::optional<std::int64_t> n_label() const { return n_label_; }

  friend bool operator==(const ExponentialSumFormula&, const ExponentialSumFormula&) = default;

private:
  std::vector<Term> terms_;
  std::optional<std::int64_t> n_label_;
};

/// Exact sum of c_i * a_i^k; negative k uses 1 / a_i^{-k}.
inline Rational expsum_eval(const ExponentialSumFormula& f, std::int64_t k)
{
  Rational acc(0);
  for (const auto& t : f.terms()) acc += t.coefficient * power(Rational(t.base), k);
  return acc;
}

/// numerator(t) / prod_i (1 - a_i t) with distinct positive integers a_i and
/// deg(numerator) < number of poles.
class SimplePoleRatFun
{
public:
  SimplePoleRatFun(Polynomial numerator, std::vector<std::int64_t> poles)
    : numerator_(std::move(numerator))
    , poles_(std::move(poles))
  {
    for (std::size_t i = 0; i < poles_.size(); ++i) {
      if (poles_[i] <= 0) throw std::invalid_argument("pole reciprocal must be a positive integer");
      if (i > 0 && poles_[i] == poles_[i - 1]) throw std::invalid_argument("repeated pole");
      if (i > 0 && poles_[i] < poles_[i - 1]) throw std::invalid_argument("poles must be strictly increasing");
    }
    if (numerator_.degree() >= static_cast<std::int64_t>(poles_.size()))
      throw std::invalid_argument("rational function is not proper");
  }

  const Polynomial& numerator() const { return numerator_; }
  const std::vector<std::int64_t>& poles() const { return poles_; }

  Polynomial denominator() const
  {
    Polynomial d = Polynomial::constant(Rational(1));
    for (auto a : poles_) d *= Polynomial::one_minus(Rational(a));
    return d;
  }

  /// Taylor expansion at t = 0 up to t^order.
  Series1 series(std::size_t order) const
  {
    Series1 s(numerator_.coeffs(), order);
    for (auto a : poles_) {
      // multiply by 1/(1 - a t): running prefix sum s_d += a * s_{d-1}
      for (std::size_t d = 1; d <= order; ++d) s[d] += Rational(a) * s[d - 1];
    }
    return s;
  }

  friend bool operator==(const SimplePoleRatFun&, const SimplePoleRatFun&) = default;

private:
  Polynomial numerator_;
  std::vector<std::int64_t> poles_;
};

/// f(t) = sum_i c_i / (1 - a_i t), so [t^k] f = sum_i c_i a_i^k.
/// Residues: c_i = numerator(1/a_i) / prod_{j != i} (1 - a_j / a_i).
inline ExponentialSumFormula partial_fractions(const SimplePoleRatFun& f,
                                               std::optional<std::int64_t> n_label = std::nullopt)
{
  const auto& poles = f.poles();
  std::vector<ExponentialSumFormula::Term> terms;
  terms.reserve(poles.size());
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const Rational inv_a = Rational(1) / Rational(poles[i]);
    Rational denom(1);
    for (std::size_t j = 0; j < poles.size(); ++j) {
      if (j == i) continue;
      if (poles[j] == poles[i]) throw std::invalid_argument("partial_fractions: repeated pole");
      denom *= Rational(1) - Rational(poles[j]) * inv_a;
    }
    terms.push_back({f.numerator()(inv_a) / denom, poles[i]});
  }
  return ExponentialSumFormula(std::move(terms), n_label);
}

} // namespace autmg

#endif // AUTMG_RATFUN_HPP
