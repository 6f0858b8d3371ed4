#ifndef ABELSUM_PRNG_HPP
#define ABELSUM_PRNG_HPP

#include <cstdint>

#include "abelsum/exactnum.hpp"

namespace abelsum {

/// 64-bit linear congruential generator,
///   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64),
/// draws taken from the top 31 bits. Deliberately simple and fully specified
/// (constants documented in the README) so seeded runs are reproducible
/// across languages.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = 6364136223846793005ULL * state_ + 1442695040888963407ULL;
        return state_ >> 33;
    }

    /// Uniform-enough draw in [0, bound); bound in [1, 2^31).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// Inclusive range [lo, hi].
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Random rational with numerator in [-9,9] and denominator drawn from
/// [-9,9] until nonzero; canonicalized.
inline exactnum::Rational random_rational(Lcg64& rng) {
    const std::int64_t num = rng.next_in(-9, 9);
    std::int64_t den = 0;
    while (den == 0) den = rng.next_in(-9, 9);
    return exactnum::make_rational(exactnum::Integer(num), exactnum::Integer(den));
}

/// As random_rational, redrawing the numerator until the value is nonzero.
inline exactnum::Rational random_nonzero_rational(Lcg64& rng) {
    for (;;) {
        exactnum::Rational r = random_rational(rng);
        if (r != 0) return r;
    }
}

}  // namespace abelsum

#endif
