#ifndef ABELSUM_HURWITZ_HPP
#define ABELSUM_HURWITZ_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelsum/exactnum.hpp"

namespace abelsum::hurwitz {

using exactnum::EvalStats;
using exactnum::Natural;
using exactnum::Rational;

/// Ordered tuple (k1,...,kn) of naturals; a weak composition when the parts
/// sum to the order m.
using Composition = std::vector<std::uint64_t>;

/// Thrown by hurwitz_closed_p0 when fewer than two variables are supplied
/// (the weight alpha_k(n-1) needs n-1 >= 1).
struct TooFewVariables : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Streams every weak composition of m into n parts exactly once, in
/// lexicographic order on (k1,...,kn). Total count is C(m+n-1, n-1).
class CompositionEnumerator {
public:
    /// Throws std::invalid_argument when n == 0.
    CompositionEnumerator(std::uint64_t m, std::size_t n);

    bool done() const { return done_; }
    const Composition& current() const { return parts_; }
    void advance();

private:
    Composition parts_;
    bool done_ = false;
};

/// All compositions of m into n parts, lexicographic. Convenience for tests
/// and small m; the enumerator streams without materializing.
std::vector<Composition> all_compositions(std::uint64_t m, std::size_t n);

/// Parameters of the multinomial Abel-Hurwitz sum
///   A_m(x1..xn; p1..pn) = sum_{k1+..+kn=m} m!/(k1!..kn!) prod (xj+kj)^{kj+pj}.
struct HurwitzParams {
    std::vector<Rational> xs;
    std::vector<std::int64_t> ps;
    std::uint64_t m = 0;
};

/// The naive sum over all C(m+n-1,n-1) compositions, 0^0 = 1. Throws
/// exactnum::ZeroToNegative naming the offending composition and coordinate.
Rational hurwitz_naive(const HurwitzParams& params, EvalStats* stats = nullptr);

/// Rising-factorial weight alpha_k(r) = (r+k-1)!/(r-1)! = r(r+1)...(r+k-1).
/// Requires r >= 1.
Natural rising_alpha(std::uint64_t k, std::uint64_t r);

/// Closed form for all-zero exponent shifts:
///   A_m(x1..xn; 0..0) = sum_{k=0}^m C(m,k) (x1+..+xn+m)^{m-k} alpha_k(n-1).
/// Throws TooFewVariables when xs has fewer than two entries.
Rational hurwitz_closed_p0(std::span<const Rational> xs, std::uint64_t m,
                           EvalStats* stats = nullptr);

}  // namespace abelsum::hurwitz

#endif
