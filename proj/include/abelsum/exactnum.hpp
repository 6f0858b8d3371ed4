#ifndef ABELSUM_EXACTNUM_HPP
#define ABELSUM_EXACTNUM_HPP

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace abelsum::exactnum {

/// Arbitrary-precision integer. Values produced by this module are
/// nonnegative; the alias documents intent, the operations maintain it.
using Natural = mpz_class;
using Integer = mpz_class;

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Factories here canonicalize and GMP keeps arithmetic
/// results canonical, so equality is structural.
using Rational = mpq_class;

/// Per-evaluation instrumentation shared by all sum evaluators: counts the
/// terms actually summed.
struct EvalStats {
    std::uint64_t terms = 0;
};

/// Thrown by multinomial() when the parts do not sum to m.
struct PartsMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a zero base meets a negative exponent. The message names the
/// offending term (k, or composition and coordinate) when raised from a sum.
struct ZeroToNegative : std::domain_error {
    using std::domain_error::domain_error;
};

/// Growable memo table of factorials. Reads are concurrent; growth is
/// serialized and monotone. Returned references stay valid for the cache
/// lifetime (deque storage never relocates settled entries).
class FactCache {
public:
    /// n!, extending the table as a side effect.
    const Natural& factorial(std::uint64_t n);

    /// Largest n currently cached, or -1 semantics via count: number of
    /// cached entries (factorials 0!..(size-1)! are present).
    std::uint64_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::deque<Natural> table_;
};

/// Process-wide cache used by the convenience factorial() overload.
FactCache& default_fact_cache();

/// n! through the given cache (default: the process-wide one).
const Natural& factorial(std::uint64_t n, FactCache& cache = default_fact_cache());

/// C(n,k); 0 when k > n.
Natural binomial(std::uint64_t n, std::uint64_t k);

/// m!/(k1!...kn!). Throws PartsMismatch unless sum(parts) == m.
Natural multinomial(std::uint64_t m, std::span<const std::uint64_t> parts);

/// base^exp over the integers with 0^0 = 1.
Natural pow_ui(std::uint64_t base, std::uint64_t exp);

/// base^exp over the rationals with 0^0 = 1.
/// Throws ZeroToNegative when base == 0 and exp < 0.
Rational pow_zz(const Rational& base, std::int64_t exp);

/// num/den reduced to lowest terms, denominator made positive.
/// Throws std::invalid_argument when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optionally signed) into a canonical Rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

/// "n" when the denominator is 1, else "n/d", lowest terms.
std::string to_string(const Rational& value);

}  // namespace abelsum::exactnum

#endif
