#include "reps/points.hpp"

namespace reps {

Rational region_weight(int p) {
    if (p < 1) throw std::invalid_argument("region_weight: period must be >= 1");
    Rational sum(0);
    const int hi = 4 * p / 3;
    for (int q = p; q <= hi; ++q) sum += Rational(1, BigInt(q) * q);
    return Rational(2 * p / 3 + 1) * sum;
}

// Decide (floor(2p/3)+1) * sum 1/q^2 > 1/6 exactly. With S the true sum and
// L the sum of floor(2^96 / q^2) over the same q, L <= 2^96*S < L + terms;
// both bounds fit comfortably in 128 bits for p up to ~10^7, and the margin
// of the weight above 1/6 dwarfs the floor error, so the interval test almost
// always decides. A genuinely undecided gap falls back to exact rationals.
bool region_weight_exceeds_sixth(int p) {
    if (p < 1) throw std::invalid_argument("region_weight_exceeds_sixth: period must be >= 1");
    using u128 = unsigned __int128;
    const u128 scale = u128(1) << 96;
    const int hi = 4 * p / 3;
    u128 lower = 0;
    u128 terms = 0;
    for (long long q = p; q <= hi; ++q) {
        lower += scale / (u128(q) * u128(q));
        ++terms;
    }
    const u128 six_k = u128(6) * u128(2 * p / 3 + 1);
    if (six_k * lower > scale) return true;
    if (six_k * (lower + terms) <= scale) return false;
    return region_weight(p) > Rational(1, 6);
}

}  // namespace reps
