#include "abelsum/hurwitz.hpp"

#include <string>

namespace abelsum::hurwitz {

using exactnum::binomial;
using exactnum::multinomial;
using exactnum::pow_zz;
using exactnum::ZeroToNegative;

CompositionEnumerator::CompositionEnumerator(std::uint64_t m, std::size_t n) {
    if (n == 0) throw std::invalid_argument("compositions need at least one part");
    parts_.assign(n, 0);
    parts_.back() = m;  // (0,...,0,m) is lexicographically first
}

void CompositionEnumerator::advance() {
    const std::size_t n = parts_.size();
    // find the rightmost h with mass strictly after it; move one unit onto
    // k_h and flush the rest of that mass to the last slot
    std::uint64_t suffix = 0;
    for (std::size_t i = n; i-- > 1;) {
        suffix += parts_[i];
        if (suffix > 0) {
            const std::size_t h = i - 1;
            ++parts_[h];
            for (std::size_t j = h + 1; j < n; ++j) parts_[j] = 0;
            parts_.back() = suffix - 1;
            return;
        }
    }
    done_ = true;
}

std::vector<Composition> all_compositions(std::uint64_t m, std::size_t n) {
    std::vector<Composition> out;
    for (CompositionEnumerator e(m, n); !e.done(); e.advance()) out.push_back(e.current());
    return out;
}

namespace {

std::string format_composition(const Composition& ks) {
    std::string out = "(";
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(ks[i]);
    }
    return out + ")";
}

}  // namespace

Rational hurwitz_naive(const HurwitzParams& params, EvalStats* stats) {
    const std::size_t n = params.xs.size();
    if (n == 0) throw std::invalid_argument("hurwitz sum needs at least one variable");
    if (params.ps.size() != n)
        throw std::invalid_argument("xs and ps must have the same length (got " +
                                    std::to_string(n) + " and " +
                                    std::to_string(params.ps.size()) + ")");
    Rational sum(0);
    for (CompositionEnumerator e(params.m, n); !e.done(); e.advance()) {
        const Composition& ks = e.current();
        Rational term(multinomial(params.m, ks));
        for (std::size_t j = 0; j < n; ++j) {
            const Rational base = params.xs[j] + static_cast<unsigned long>(ks[j]);
            const std::int64_t exp = static_cast<std::int64_t>(ks[j]) + params.ps[j];
            if (base == 0 && exp < 0)
                throw ZeroToNegative("composition " + format_composition(ks) + ", coordinate " +
                                     std::to_string(j + 1) + ": x_j+k_j = 0 with exponent " +
                                     std::to_string(exp));
            term *= pow_zz(base, exp);
        }
        sum += term;
        if (stats) ++stats->terms;
    }
    return sum;
}

Natural rising_alpha(std::uint64_t k, std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("rising_alpha needs r >= 1");
    Natural out(1);
    for (std::uint64_t i = 0; i < k; ++i) out *= static_cast<unsigned long>(r + i);
    return out;
}

Rational hurwitz_closed_p0(std::span<const Rational> xs, std::uint64_t m, EvalStats* stats) {
    if (xs.size() < 2)
        throw TooFewVariables("closed form needs n >= 2 variables, got " +
                              std::to_string(xs.size()));
    const std::uint64_t r = xs.size() - 1;
    Rational s(static_cast<unsigned long>(m));
    for (const Rational& x : xs) s += x;
    // iterate k = m down to 0 so the power of s ascends from s^0 = 1 (which
    // covers s = 0 through the 0^0 = 1 convention); the coefficients
    // C(m,k) and alpha_k(r) step down by exact division
    Natural bin(1);                      // C(m,k) at k = m
    Natural ral = rising_alpha(m, r);    // alpha_k(r) at k = m
    Rational spow(1);
    Rational sum(0);
    for (std::uint64_t i = 0; i <= m; ++i) {
        const std::uint64_t k = m - i;
        if (i > 0) {
            spow *= s;
            bin *= static_cast<unsigned long>(k + 1);
            mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(), static_cast<unsigned long>(m - k));
            mpz_divexact_ui(ral.get_mpz_t(), ral.get_mpz_t(), static_cast<unsigned long>(r + k));
        }
        sum += bin * ral * spow;
        if (stats) ++stats->terms;
    }
    return sum;
}

}  // namespace abelsum::hurwitz
