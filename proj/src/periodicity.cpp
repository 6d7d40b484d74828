#include "reps/periodicity.hpp"

#include <numeric>

namespace reps {

std::optional<int> implied_gcd_period(int len, int p, int q) {
    if (len < 1 || p < 1 || q < 1)
        throw std::invalid_argument("implied_gcd_period needs positive arguments");
    if (len < p + q) return std::nullopt;
    return std::gcd(p, q);
}

}  // namespace reps
