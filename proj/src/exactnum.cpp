#include "abelsum/exactnum.hpp"

#include <mutex>

namespace abelsum::exactnum {

const Natural& FactCache::factorial(std::uint64_t n) {
    {
        std::shared_lock lock(mutex_);
        if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    if (table_.empty()) table_.emplace_back(1);
    while (table_.size() <= n) {
        // deque growth never relocates settled entries, so references handed
        // out under the shared lock stay valid
        table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
    }
    return table_[n];
}

std::uint64_t FactCache::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

FactCache& default_fact_cache() {
    static FactCache cache;
    return cache;
}

const Natural& factorial(std::uint64_t n, FactCache& cache) { return cache.factorial(n); }

Natural binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Natural(0);
    Natural out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Natural multinomial(std::uint64_t m, std::span<const std::uint64_t> parts) {
    std::uint64_t total = 0;
    for (std::uint64_t p : parts) total += p;
    if (total != m)
        throw PartsMismatch("multinomial parts sum to " + std::to_string(total) +
                            ", expected m = " + std::to_string(m));
    // m!/(k1!...kn!) as a product of binomials, C(m,k1) C(m-k1,k2) ...,
    // keeping the computation division-free
    Natural out(1);
    std::uint64_t rem = m;
    for (std::uint64_t p : parts) {
        out *= binomial(rem, p);
        rem -= p;
    }
    return out;
}

Natural pow_ui(std::uint64_t base, std::uint64_t exp) {
    Natural out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

Rational pow_zz(const Rational& base, std::int64_t exp) {
    if (exp == 0) return Rational(1);  // 0^0 = 1
    if (base == 0) {
        if (exp < 0)
            throw ZeroToNegative("zero base raised to negative exponent " + std::to_string(exp));
        return Rational(0);
    }
    const std::uint64_t mag =
        exp < 0 ? static_cast<std::uint64_t>(-(exp + 1)) + 1 : static_cast<std::uint64_t>(exp);
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()),
               static_cast<unsigned long>(mag));
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()),
               static_cast<unsigned long>(mag));
    // powers of a canonical fraction are canonical; inversion keeps it so
    if (exp < 0) mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational rational_from_string(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("not a rational: \"" + text + "\" (expected n or n/d)");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        return make_rational(Integer(num), Integer(den));
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace abelsum::exactnum
