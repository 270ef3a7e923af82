#ifndef LCT_BIGINT_HPP
#define LCT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace lct {

/// Arbitrary-precision signed integer; every count in this library is exact.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// Multiplicative binomial; exact at every intermediate step.
BigInt binomial(int n, int k);

/// base^exp for exp >= 0.
BigInt int_pow(int base, int exp);

/// lo * (lo+1) * ... * hi, empty product when lo > hi.
BigInt range_product(int lo, int hi);

}  // namespace lct

#endif
