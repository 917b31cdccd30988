#pragma once

#include "polarize/ratio.hpp"

namespace polarize {

/// C(n, k) for n >= 0; returns 0 for k < 0 or k > n (the "0 otherwise"
/// boundary the sigma recurrences rely on). Throws std::invalid_argument
/// for negative n.
BigInt binomial(int n, int k);

/// C(m, h) * C(m - h, l) = m! / (h! l! (m-h-l)!); 0 when h < 0, l < 0 or
/// h + l > m. Throws std::invalid_argument for negative m.
BigInt multinomial3(int m, int h, int l);

}  // namespace polarize
