#pragma once

#include <cstdint>
#include <vector>

namespace eii {

bool is_prime(std::uint64_t n);
// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace eii
