#ifndef AUTMG_ERRORS_HPP
#define AUTMG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace autmg {

/// An enumeration or search would exceed its configured budget.
class budget_exceeded : public std::runtime_error
{
public:
  explicit budget_exceeded(const std::string& what)
    : std::runtime_error("search too large: " + what)
  {
  }
};

/// Two algebraic routes that must agree did not. Always an implementation bug.
class consistency_error : public std::logic_error
{
public:
  explicit consistency_error(const std::string& what)
    : std::logic_error("internal consistency violation: " + what)
  {
  }
};

} // namespace autmg

#endif // AUTMG_ERRORS_HPP
