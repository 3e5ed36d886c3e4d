#pragma once

#include "zinbiel/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace zinbiel {

/// Default seed for every randomized check; override with --seed / ZINBIEL_SEED.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Deterministic source of small random rationals.
///
/// Uses the standardized mt19937_64 stream and maps draws by modulo instead
/// of std::uniform_int_distribution, whose output is implementation-defined;
/// the same seed therefore produces the same values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    long long integer(long long lo, long long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(eng_() % span);
    }

    /// Numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(long long max_num = 9, long long max_den = 9) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    Rational nonzero_rational(long long max_num = 9, long long max_den = 9) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    std::vector<Rational> vector(std::size_t n, long long max_num = 9,
                                 long long max_den = 9) {
        std::vector<Rational> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(rational(max_num, max_den));
        return v;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace zinbiel
