#pragma once

#include <cstdint>
#include <vector>

namespace quadevo::ga {

/// Fixed-length bit string encoding one candidate root. Bit 0 is the sign
/// (1 = negative); bits 1..b-1 are the magnitude, bit 1 most significant.
struct Chromosome {
    std::vector<std::uint8_t> bits;

    std::size_t length() const { return bits.size(); }
    bool operator==(const Chromosome&) const = default;
};

/// Signed fixed-point decoding: ±(magnitude / 2^fractional_bits).
/// Requires 0 <= fractional_bits <= length-2 and length >= 2.
double decode(const Chromosome& c, int fractional_bits);

} // namespace quadevo::ga
