#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace crossfam {

/// Exact unbounded integer used for every count, bound, and product.
/// All arithmetic in this project is exact; there is no floating point.
using BigCount = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k), exact. Returns 0 when k > n; C(0, 0) = 1.
BigCount binomial(unsigned n, unsigned k);

std::string to_decimal(const BigCount& v);

}
