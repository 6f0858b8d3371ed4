#include "abelsum/abel.hpp"

#include <string>

namespace abelsum::abel {

using exactnum::binomial;
using exactnum::pow_zz;
using exactnum::ZeroToNegative;

Rational abel_naive(const AbelParams& params, EvalStats* stats) {
    const std::uint64_t m = params.m;
    Rational sum(0);
    for (std::uint64_t k = 0; k <= m; ++k) {
        const Rational bx = params.x + static_cast<unsigned long>(k);
        const Rational by = params.y + static_cast<unsigned long>(m - k);
        const std::int64_t ex = static_cast<std::int64_t>(k) + params.p;
        const std::int64_t ey = static_cast<std::int64_t>(m - k) + params.q;
        if (bx == 0 && ex < 0)
            throw ZeroToNegative("term k=" + std::to_string(k) + ": x+k = 0 with exponent " +
                                 std::to_string(ex));
        if (by == 0 && ey < 0)
            throw ZeroToNegative("term k=" + std::to_string(k) + ": y+m-k = 0 with exponent " +
                                 std::to_string(ey));
        sum += Rational(binomial(m, k)) * pow_zz(bx, ex) * pow_zz(by, ey);
        if (stats) ++stats->terms;
    }
    return sum;
}

Rational abel_closed_riordan(const Rational& x, const Rational& y, std::uint64_t m,
                             EvalStats* stats) {
    Rational s = x + y;
    s += static_cast<unsigned long>(m);
    // sum_{k} C(m,k) k! (x+y+m)^{m-k} = sum_{e} (m!/e!) s^e with e = m-k.
    // Ascending powers start at s^0 = 1, which also covers the 0^0 = 1
    // boundary when s = 0.
    Natural coeff = exactnum::factorial(m);  // m!/e! at e = 0
    Rational spow(1);
    Rational sum(0);
    for (std::uint64_t e = 0; e <= m; ++e) {
        if (e > 0) {
            mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(e));
            spow *= s;
        }
        sum += coeff * spow;
        if (stats) ++stats->terms;
    }
    return sum;
}

Rational abel_closed_theorem(const Rational& x, const Rational& y, std::uint64_t m,
                             EvalStats* stats) {
    if (x == 0) throw ZeroX("Abel's binomial theorem needs x != 0 (the k=0 term divides by x)");
    Rational s = x + y;
    s += static_cast<unsigned long>(m);
    if (stats) ++stats->terms;
    return pow_zz(s, static_cast<std::int64_t>(m)) / x;
}

}  // namespace abelsum::abel
