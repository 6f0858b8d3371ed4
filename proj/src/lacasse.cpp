#include "abelsum/lacasse.hpp"

#include <cmath>
#include <vector>

namespace abelsum::lacasse {

namespace {

Natural pow_uu(std::uint64_t base, std::uint64_t exp) { return exactnum::pow_ui(base, exp); }

// k^k for k = 0..m with 0^0 = 1; the shared factor cache of the naive sums.
std::vector<Natural> self_powers(std::uint64_t m) {
    std::vector<Natural> xx(m + 1);
    for (std::uint64_t i = 0; i <= m; ++i) xx[i] = pow_uu(i, i);
    return xx;
}

void divexact(Natural& value, std::uint64_t divisor) {
    mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(divisor));
}

// Kahan-Neumaier compensated accumulation; the float sums are all-positive
// but compensation keeps the error at machine level regardless of order.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

// lg[i] = log(i!) for i = 0..max_index.
std::vector<double> log_factorials(std::uint64_t max_index) {
    std::vector<double> lg(max_index + 1);
    for (std::uint64_t i = 0; i <= max_index; ++i)
        lg[i] = std::lgamma(static_cast<double>(i) + 1.0);
    return lg;
}

// w[i] = i*log(i/m), with the x*log(x) := 0 convention at i = 0.
std::vector<double> log_weights(std::uint64_t m) {
    const double logm = std::log(static_cast<double>(m));
    std::vector<double> w(m + 1, 0.0);
    for (std::uint64_t i = 1; i <= m; ++i)
        w[i] = static_cast<double>(i) * (std::log(static_cast<double>(i)) - logm);
    return w;
}

void require_positive_order(std::uint64_t m, const char* what) {
    if (m == 0)
        throw ZeroOrder(std::string(what) + " requires m >= 1 (the definition divides by m)");
}

}  // namespace

const char* to_string(Method method) { return method == Method::naive ? "naive" : "closed"; }
const char* to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Natural alpha_naive(std::uint64_t m, EvalStats* stats) {
    const std::vector<Natural> xx = self_powers(m);
    Natural bin(1);  // C(m,k)
    Natural sum(0);
    for (std::uint64_t k = 0; k <= m; ++k) {
        sum += bin * xx[k] * xx[m - k];
        if (stats) ++stats->terms;
        if (k < m) {
            bin *= static_cast<unsigned long>(m - k);
            divexact(bin, k + 1);
        }
    }
    return sum;
}

Natural alpha_closed(std::uint64_t m, EvalStats* stats) {
    // Horner form of sum_j m^j (m!/j!): acc = (..(c_m m + c_{m-1}) m + ..) m + c_0
    // with c_j = m!/j! stepped by one word multiplication, so every big
    // operand only ever meets a single word.
    Natural acc(1);    // the j = m term, c_m = 1
    Natural coeff(1);  // m!/j!
    if (stats) ++stats->terms;
    for (std::uint64_t j = m; j-- > 0;) {
        coeff *= static_cast<unsigned long>(j + 1);
        acc *= static_cast<unsigned long>(m);
        acc += coeff;
        if (stats) ++stats->terms;
    }
    return acc;
}

Natural beta_naive(std::uint64_t m, EvalStats* stats) {
    const std::vector<Natural> xx = self_powers(m);
    Natural binj(1);  // C(m,j)
    Natural sum(0);
    for (std::uint64_t j = 0; j <= m; ++j) {
        const Natural outer = binj * xx[j];
        Natural bink(1);  // C(m-j,k)
        for (std::uint64_t k = 0; k + j <= m; ++k) {
            sum += outer * bink * xx[k] * xx[m - j - k];
            if (stats) ++stats->terms;
            if (k + j < m) {
                bink *= static_cast<unsigned long>(m - j - k);
                divexact(bink, k + 1);
            }
        }
        if (j < m) {
            binj *= static_cast<unsigned long>(m - j);
            divexact(binj, j + 1);
        }
    }
    return sum;
}

Natural beta_closed(std::uint64_t m, EvalStats* stats) {
    // Horner form of sum_j m^{m-j} d_j with d_j = C(m,j)(j+1)!:
    // d_{j+1} = d_j (m-j)(j+2)/(j+1), the division exact.
    Natural acc(1);  // d_0
    Natural d(1);
    if (stats) ++stats->terms;
    for (std::uint64_t j = 0; j < m; ++j) {
        d *= static_cast<unsigned long>(m - j);
        d *= static_cast<unsigned long>(j + 2);
        divexact(d, j + 1);
        acc *= static_cast<unsigned long>(m);
        acc += d;
        if (stats) ++stats->terms;
    }
    return acc;
}

Natural diff_direct(std::uint64_t m, EvalStats* stats) {
    // Horner over k with coefficients e_k = (m!/k!)(m-k); the k = m term
    // vanishes, which is what makes the whole sum telescope.
    Natural acc(0);      // e_m
    Natural falling(1);  // m!/k!
    if (stats) ++stats->terms;
    for (std::uint64_t k = m; k-- > 0;) {
        falling *= static_cast<unsigned long>(k + 1);
        acc *= static_cast<unsigned long>(m);
        acc += falling * static_cast<unsigned long>(m - k);
        if (stats) ++stats->terms;
    }
    return acc;
}

Natural alpha(std::uint64_t m, Method method, EvalStats* stats) {
    return method == Method::naive ? alpha_naive(m, stats) : alpha_closed(m, stats);
}

Natural beta(std::uint64_t m, Method method, EvalStats* stats) {
    return method == Method::naive ? beta_naive(m, stats) : beta_closed(m, stats);
}

XiValue xi_exact(std::uint64_t m, Method method, EvalStats* stats) {
    require_positive_order(m, "xi");
    XiValue out;
    out.m = m;
    out.method = method;
    out.mode = Mode::exact;
    out.exact = exactnum::make_rational(alpha(m, method, stats), pow_uu(m, m));
    return out;
}

XiValue xi2_exact(std::uint64_t m, Method method, EvalStats* stats) {
    require_positive_order(m, "xi2");
    XiValue out;
    out.m = m;
    out.method = method;
    out.mode = Mode::exact;
    out.exact = exactnum::make_rational(beta(m, method, stats), pow_uu(m, m));
    return out;
}

XiValue xi_float(std::uint64_t m, Method method, EvalStats* stats) {
    require_positive_order(m, "xi");
    CompensatedSum acc;
    if (method == Method::naive) {
        // term_k = C(m,k) (k/m)^k (1-k/m)^{m-k}, assembled in the log domain
        const std::vector<double> lg = log_factorials(m);
        const std::vector<double> w = log_weights(m);
        for (std::uint64_t k = 0; k <= m; ++k) {
            acc.add(std::exp(lg[m] - lg[k] - lg[m - k] + w[k] + w[m - k]));
            if (stats) ++stats->terms;
        }
    } else {
        // term_j = m^j (m!/j!) / m^m; ascending j runs smallest to largest
        const std::vector<double> lg = log_factorials(m);
        const double logm = std::log(static_cast<double>(m));
        for (std::uint64_t j = 0; j <= m; ++j) {
            acc.add(std::exp(lg[m] - lg[j] + static_cast<double>(j) * logm -
                             static_cast<double>(m) * logm));
            if (stats) ++stats->terms;
        }
    }
    XiValue out;
    out.m = m;
    out.method = method;
    out.mode = Mode::floating;
    out.approx = acc.value();
    return out;
}

XiValue xi2_float(std::uint64_t m, Method method, EvalStats* stats) {
    require_positive_order(m, "xi2");
    CompensatedSum acc;
    if (method == Method::naive) {
        // term(j,k) = m!/(j!k!r!) (j/m)^j (k/m)^k (r/m)^r with r = m-j-k;
        // per-index profile B[i] folds the weight and the factorial together
        const std::vector<double> lg = log_factorials(m);
        const std::vector<double> w = log_weights(m);
        std::vector<double> profile(m + 1);
        for (std::uint64_t i = 0; i <= m; ++i) profile[i] = w[i] - lg[i];
        const double logmfact = lg[m];
        for (std::uint64_t j = 0; j <= m; ++j) {
            for (std::uint64_t k = 0; k + j <= m; ++k) {
                acc.add(std::exp(logmfact + profile[j] + profile[k] + profile[m - j - k]));
                if (stats) ++stats->terms;
            }
        }
    } else {
        // term_j = m^{-j} C(m,j) (j+1)!
        const std::vector<double> lg = log_factorials(m + 1);
        const double logm = std::log(static_cast<double>(m));
        for (std::uint64_t j = 0; j <= m; ++j) {
            acc.add(std::exp(lg[m] - lg[j] - lg[m - j] + lg[j + 1] -
                             static_cast<double>(j) * logm));
            if (stats) ++stats->terms;
        }
    }
    XiValue out;
    out.m = m;
    out.method = method;
    out.mode = Mode::floating;
    out.approx = acc.value();
    return out;
}

std::vector<VerificationRecord> verify_conjecture(std::uint64_t m_lo, std::uint64_t m_hi,
                                                  Method method) {
    if (m_lo == 0) throw BadRange("verification range must start at m >= 1");
    if (m_lo > m_hi)
        throw BadRange("empty verification range [" + std::to_string(m_lo) + ", " +
                       std::to_string(m_hi) + "]");
    std::vector<VerificationRecord> records;
    records.reserve(m_hi - m_lo + 1);
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        const auto start = std::chrono::steady_clock::now();
        VerificationRecord rec;
        rec.m = m;
        rec.method = method;
        rec.lhs = beta(m, method) - alpha(m, method);
        rec.rhs = pow_uu(m, m + 1);
        rec.holds = (rec.lhs == rec.rhs);
        rec.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - start);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace abelsum::lacasse
