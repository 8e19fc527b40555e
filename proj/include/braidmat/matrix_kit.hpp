#pragma once

#include <cstdint>
#include <functional>

#include "braidmat/matrix.hpp"

namespace braidmat {

// Enumerates every T0 pair mask on n strands (1 <= n <= 7) in ascending
// bitset order, invoking the sink for each. Masks encode (0,2)-matrices.
void enumerate_t0(int n, const std::function<void(const UpperMask&)>& sink);

uint64_t count_t0(int n);

}  // namespace braidmat
