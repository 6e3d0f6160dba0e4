#ifndef JETPROLONG_NUMERIC_HPP
#define JETPROLONG_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace jetprolong
{

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int k);

// k (k - 1) ... (k - r + 1); zero when r > k.
BigInt falling_factorial(int k, int r);

BigInt binomial(int k, int r);

} // namespace jetprolong

#endif
