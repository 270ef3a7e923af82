#include "lct/bigint.hpp"

#include <stdexcept>

namespace lct {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) at this point
  }
  return r;
}

BigInt int_pow(int base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  BigInt r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

BigInt range_product(int lo, int hi) {
  BigInt r = 1;
  for (int i = lo; i <= hi; ++i) r *= i;
  return r;
}

}  // namespace lct
