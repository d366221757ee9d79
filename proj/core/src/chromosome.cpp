#include "quadevo/chromosome.hpp"

#include <cassert>
#include <cmath>

namespace quadevo::ga {

double decode(const Chromosome& c, int fractional_bits) {
    assert(c.bits.size() >= 2);
    assert(fractional_bits >= 0);
    assert(static_cast<std::size_t>(fractional_bits) <= c.bits.size() - 2);

    std::uint64_t magnitude = 0;
    for (std::size_t i = 1; i < c.bits.size(); ++i) {
        magnitude = (magnitude << 1) | c.bits[i];
    }
    const double value = std::ldexp(static_cast<double>(magnitude), -fractional_bits);
    return c.bits[0] ? -value : value;
}

} // namespace quadevo::ga
