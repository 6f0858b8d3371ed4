#ifndef ABELSUM_ABEL_HPP
#define ABELSUM_ABEL_HPP

#include <cstdint>

#include "abelsum/exactnum.hpp"

namespace abelsum::abel {

using exactnum::EvalStats;
using exactnum::Natural;
using exactnum::Rational;

/// Parameters of the binomial Abel sum
///   A_m(x,y;p,q) = sum_{k=0}^m C(m,k) (x+k)^{k+p} (y+m-k)^{m-k+q}.
struct AbelParams {
    Rational x;
    Rational y;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::uint64_t m = 0;
};

/// Thrown by abel_closed_theorem when x == 0 (the k = 0 term of the naive
/// sum is already undefined there).
struct ZeroX : std::domain_error {
    using std::domain_error::domain_error;
};

/// The (m+1)-term sum evaluated literally, 0^0 = 1. Throws
/// exactnum::ZeroToNegative (naming the offending k) when a zero base meets
/// a negative exponent.
Rational abel_naive(const AbelParams& params, EvalStats* stats = nullptr);

/// Riordan's closed form for (p,q) = (0,0):
///   A_m(x,y;0,0) = sum_{k=0}^m C(m,k) k! (x+y+m)^{m-k}.
Rational abel_closed_riordan(const Rational& x, const Rational& y, std::uint64_t m,
                             EvalStats* stats = nullptr);

/// Abel's Binomial Theorem, the closed form for (p,q) = (-1,0):
///   A_m(x,y;-1,0) = (x+y+m)^m / x.   Throws ZeroX when x == 0.
Rational abel_closed_theorem(const Rational& x, const Rational& y, std::uint64_t m,
                             EvalStats* stats = nullptr);

}  // namespace abelsum::abel

#endif
