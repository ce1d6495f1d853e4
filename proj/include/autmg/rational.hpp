#ifndef AUTMG_RATIONAL_HPP
#define AUTMG_RATIONAL_HPP

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace autmg {

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction, always in lowest terms with a positive denominator.
/// Division by zero throws std::overflow_error.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den)
{
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) return Rational(Integer(-num), Integer(-den));
  return Rational(num, den);
}

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r)
{
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(const std::string& text)
{
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

/// base^exp with 0^0 = 1. Negative exponents give the exact reciprocal power.
inline Rational power(const Rational& base, std::int64_t exp)
{
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / power(base, -exp);
  }
  Rational result(1);
  Rational b = base;
  auto e = static_cast<std::uint64_t>(exp);
  while (e != 0) {
    if ((e & 1U) != 0) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

inline Integer ipower(const Integer& base, std::uint64_t exp)
{
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

namespace detail {

class FactorialTable
{
public:
  Integer get(std::size_t n)
  {
    std::lock_guard<std::mutex> lock(mutex_);
    while (values_.size() <= n) values_.push_back(values_.back() * Integer(values_.size()));
    return values_[n];
  }

private:
  std::mutex mutex_;
  std::vector<Integer> values_{Integer(1)};
};

inline FactorialTable& factorial_table()
{
  static FactorialTable table;
  return table;
}

} // namespace detail

inline Integer factorial(std::int64_t n)
{
  if (n < 0) throw std::domain_error("factorial of a negative number");
  return detail::factorial_table().get(static_cast<std::size_t>(n));
}

/// C(a, b), zero outside 0 <= b <= a.
inline Integer binomial(std::int64_t a, std::int64_t b)
{
  if (a < 0 || b < 0 || b > a) return Integer(0);
  return factorial(a) / (factorial(b) * factorial(a - b));
}

} // namespace autmg

#endif // AUTMG_RATIONAL_HPP
