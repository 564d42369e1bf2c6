#pragma once

#include <vector>

#include "crossfam/bigcount.hpp"
#include "crossfam/params.hpp"

namespace crossfam {

/// Universe-size threshold above which the product bound is tight and star
/// pairs are the only optimizers:
///   max{ r(s-t) C(r+s-t, t), (r-t) C(r, t) C(r+s-t, t+1) } + t + 1.
/// Requires 1 <= t <= r <= s.
BigCount n0_threshold(int r, int s, int t);

/// C(n-t, r-t) * C(n-t, s-t), the star-pair product.
BigCount pair_bound(const Params& p);

/// Product over the list of C(n-t, r_i-t), the star-tuple product.
BigCount k_bound(int n, const std::vector<int>& uniformities, int t);

/// n >= n0_threshold of the two largest uniformities.
bool threshold_applicable(const Params& p);

}
