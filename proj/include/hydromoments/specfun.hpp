#pragma once

#include "hydromoments/errors.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/hypergeometric.hpp"
#include "hydromoments/specfun/log_signed.hpp"
#include "hydromoments/specfun/polynomials.hpp"
#include "hydromoments/specfun/quadrature.hpp"
#include "hydromoments/specfun/rational.hpp"
