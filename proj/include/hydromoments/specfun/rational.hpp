#pragma once

#include <gmpxx.h>

#include <string>

namespace hydro::specfun {

using Rational = mpq_class;

// Exact binary value of a finite double.
Rational toRational(double x);

// True when x is a dyadic rational with denominator at most 2^10 and moderate size;
// such parameters are eligible for exact-rational evaluation.
bool isSimpleRational(double x);

// "p/q", or "p" when the denominator is 1.
std::string toString(const Rational& q);

// Parses "p", "p/q" or a decimal literal such as "-0.5" into an exact rational.
Rational parseRational(const std::string& text);

double toDouble(const Rational& q);

// p/q in canonical form (gmpxx arithmetic requires canonical operands).
Rational makeRational(long p, long q);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace hydro::specfun
