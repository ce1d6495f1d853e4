#ifndef AUTMG_AUTMG_HPP
#define AUTMG_AUTMG_HPP

#include "bivariate_series.hpp"
#include "closedforms.hpp"
#include "errors.hpp"
#include "genfun.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "ratfun.hpp"
#include "recurrence.hpp"
#include "series.hpp"

#endif // AUTMG_AUTMG_HPP
