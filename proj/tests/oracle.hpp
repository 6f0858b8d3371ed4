#ifndef ABELSUM_TESTS_ORACLE_HPP
#define ABELSUM_TESTS_ORACLE_HPP

// Independent reference routes used only by tests. Everything here
// recomputes values by the most direct method available (iterated
// multiplication, literal term-by-term summation, exhaustive enumeration)
// and must stay clear of the library's recurrence and closed-form paths.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// n! by iterated multiplication.
inline mpz_class factorial_iter(std::uint64_t n) {
    mpz_class f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

// C(n,k) via the factorial ratio; 0 when k > n.
inline mpz_class binomial_ratio(std::uint64_t n, std::uint64_t k) {
    if (k > n) return mpz_class(0);
    mpz_class num = factorial_iter(n);
    mpz_class den = factorial_iter(k) * factorial_iter(n - k);
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

// m!/(k1!...kn!) via the factorial ratio.
inline mpz_class multinomial_ratio(std::uint64_t m, std::span<const std::uint64_t> parts) {
    mpz_class den = 1;
    for (std::uint64_t p : parts) den *= factorial_iter(p);
    mpz_class out;
    mpz_class num = factorial_iter(m);
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

// b^e by repeated multiplication, 0^0 = 1. Precondition: b != 0 when e < 0.
inline mpq_class pow_repeat(const mpq_class& b, std::int64_t e) {
    mpq_class out = 1;
    const std::uint64_t mag = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    for (std::uint64_t i = 0; i < mag; ++i) out *= b;
    if (e < 0) {
        mpq_class inv;
        mpq_inv(inv.get_mpq_t(), out.get_mpq_t());
        out = inv;
    }
    return out;
}

// Literal A_m(x,y;p,q) summation on top of the ratio/repeat helpers above.
inline mpq_class abel_sum_literal(const mpq_class& x, const mpq_class& y, std::int64_t p,
                                  std::int64_t q, std::uint64_t m) {
    mpq_class sum = 0;
    for (std::uint64_t k = 0; k <= m; ++k) {
        mpq_class bx = x + static_cast<unsigned long>(k);
        mpq_class by = y + static_cast<unsigned long>(m - k);
        sum += mpq_class(binomial_ratio(m, k)) *
               pow_repeat(bx, static_cast<std::int64_t>(k) + p) *
               pow_repeat(by, static_cast<std::int64_t>(m - k) + q);
    }
    return sum;
}

// Recursive exhaustive enumeration of weak compositions, as a cross-check
// for the library's iterative enumerator.
inline void compositions_recursive(std::uint64_t m, std::size_t n,
                                   std::vector<std::uint64_t>& prefix,
                                   std::vector<std::vector<std::uint64_t>>& out) {
    if (n == 1) {
        prefix.push_back(m);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::uint64_t first = 0; first <= m; ++first) {
        prefix.push_back(first);
        compositions_recursive(m - first, n - 1, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<std::uint64_t>> compositions_all(std::uint64_t m, std::size_t n) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> prefix;
    compositions_recursive(m, n, prefix, out);
    return out;
}

}  // namespace oracle

#endif
