#include "crossfam/bigcount.hpp"

namespace crossfam {

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  // result stays integral at every step: after multiplying by (n-k+i) it is
  // C(n-k+i, i) * i!, divisible by i.
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_decimal(const BigCount& v) { return v.str(); }

}
