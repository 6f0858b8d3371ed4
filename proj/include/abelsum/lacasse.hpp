#ifndef ABELSUM_LACASSE_HPP
#define ABELSUM_LACASSE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "abelsum/exactnum.hpp"

namespace abelsum::lacasse {

using exactnum::EvalStats;
using exactnum::Natural;
using exactnum::Rational;

enum class Method { naive, closed };
enum class Mode { exact, floating };

/// Thrown by the xi evaluators and verify_conjecture when m = 0 (the
/// definitions divide by m).
struct ZeroOrder : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown by verify_conjecture on an empty or zero-based range.
struct BadRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One xi / xi2 evaluation result. `exact` is set by the exact evaluators,
/// `approx` by the float ones; the exact value is alpha(m)/m^m resp.
/// beta(m)/m^m in lowest terms.
struct XiValue {
    std::uint64_t m = 0;
    std::optional<Rational> exact;
    std::optional<double> approx;
    Method method = Method::closed;
    Mode mode = Mode::exact;
};

/// One range-verification result for beta(m) - alpha(m) = m^{m+1}.
struct VerificationRecord {
    std::uint64_t m = 0;
    Natural lhs;  // beta(m) - alpha(m)
    Natural rhs;  // m^{m+1}
    bool holds = false;
    Method method = Method::closed;
    std::chrono::nanoseconds elapsed{0};
};

/// alpha(m) = m^m xi(m) = sum_k C(m,k) k^k (m-k)^{m-k}, 0^0 = 1.
Natural alpha_naive(std::uint64_t m, EvalStats* stats = nullptr);

/// alpha(m) = sum_j m^j m!/j!.
Natural alpha_closed(std::uint64_t m, EvalStats* stats = nullptr);

/// beta(m) = m^m xi2(m) = sum_j sum_k C(m,j) C(m-j,k) j^j k^k (m-j-k)^{m-j-k};
/// (m+1)(m+2)/2 terms.
Natural beta_naive(std::uint64_t m, EvalStats* stats = nullptr);

/// beta(m) = sum_j m^{m-j} C(m,j) (j+1)!.
Natural beta_closed(std::uint64_t m, EvalStats* stats = nullptr);

/// The telescoping difference sum_k m^k (m!/k!) (m-k), which collapses to
/// m^{m+1}. Evaluated term by term, not via the collapsed form.
Natural diff_direct(std::uint64_t m, EvalStats* stats = nullptr);

/// Method-dispatching conveniences.
Natural alpha(std::uint64_t m, Method method, EvalStats* stats = nullptr);
Natural beta(std::uint64_t m, Method method, EvalStats* stats = nullptr);

/// Exact xi(m) = alpha(m)/m^m. Throws ZeroOrder when m = 0.
XiValue xi_exact(std::uint64_t m, Method method = Method::closed, EvalStats* stats = nullptr);

/// Exact xi2(m) = beta(m)/m^m. Throws ZeroOrder when m = 0.
XiValue xi2_exact(std::uint64_t m, Method method = Method::closed, EvalStats* stats = nullptr);

/// Log-domain float evaluation of xi(m): every term is exp of a sum of
/// log-gamma/log values (m^m is never formed, which would overflow double
/// near m = 144), terms are positive, summation is compensated. No
/// intermediate overflow for m <= 1e6. Throws ZeroOrder when m = 0.
XiValue xi_float(std::uint64_t m, Method method, EvalStats* stats = nullptr);

/// Same contract as xi_float; the naive path sums (m+1)(m+2)/2 terms.
XiValue xi2_float(std::uint64_t m, Method method, EvalStats* stats = nullptr);

/// Checks beta(m) - alpha(m) = m^{m+1} exactly for every m in
/// [m_lo, m_hi], with both sides computed by the chosen method. Records are
/// returned in ascending m. Throws BadRange when m_lo = 0 or m_lo > m_hi.
std::vector<VerificationRecord> verify_conjecture(std::uint64_t m_lo, std::uint64_t m_hi,
                                                  Method method);

const char* to_string(Method method);
const char* to_string(Mode mode);

}  // namespace abelsum::lacasse

#endif
