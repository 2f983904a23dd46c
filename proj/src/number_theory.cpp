#include "minrep/number_theory.hpp"

#include <bit>
#include <limits>

namespace minrep {

namespace {
constexpr std::uint64_t kThreePow27 = 7625597484987ULL;
}

unsigned logstar3(std::uint64_t n) {
    if (n < 3) return 0;
    if (n < 27) return 1;
    if (n < kThreePow27) return 2;
    // 3^^4 = 3^(3^27) is far beyond 64 bits.
    return 3;
}

unsigned logstar3(const BigNat& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) return logstar3(n.convert_to<std::uint64_t>());
    // Anything materializable is below 3^(3^27), a number with ~3.6e12 digits.
    return 3;
}

unsigned obs_a(std::uint64_t n) {
    for (unsigned a = 1;; ++a) {
        // a^a with saturation; a <= 16 already exceeds 2^64.
        std::uint64_t p = 1;
        bool saturated = false;
        for (unsigned i = 0; i < a; ++i) {
            if (p > std::numeric_limits<std::uint64_t>::max() / a) {
                saturated = true;
                break;
            }
            p *= a;
        }
        if (saturated || p >= n) return a;
    }
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

bool is_power_of_four(std::uint64_t n) {
    return n > 1 && (n & (n - 1)) == 0 && (std::countr_zero(n) % 2 == 0);
}

}  // namespace minrep
