#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "abelsum/abel.hpp"
#include "abelsum/hurwitz.hpp"
#include "abelsum/lacasse.hpp"
#include "oracle.hpp"

using namespace abelsum;
using exactnum::EvalStats;
using exactnum::Natural;
using exactnum::Rational;
using lacasse::Method;

namespace {

Natural pow_m(std::uint64_t base, std::uint64_t exp) {
    Natural out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

double rel_err(double approx, const Rational& exact) {
    const double e = mpq_get_d(exact.get_mpq_t());
    return std::abs(approx - e) / e;
}

Rational xi_exact_value(std::uint64_t m) { return *lacasse::xi_exact(m).exact; }
Rational xi2_exact_value(std::uint64_t m) { return *lacasse::xi2_exact(m).exact; }

}  // namespace

TEST_CASE("alpha examples") {
    CHECK(lacasse::alpha_naive(1) == 2);
    CHECK(lacasse::alpha_naive(2) == 10);
    CHECK(lacasse::alpha_naive(3) == 78);
    CHECK(lacasse::alpha_closed(3) == 78);
    CHECK(lacasse::alpha_closed(0) == 1);
    CHECK(lacasse::alpha_closed(4) == 824);
    CHECK(lacasse::alpha_naive(0) == 1);
}

TEST_CASE("beta examples") {
    CHECK(lacasse::beta_naive(1) == 3);
    CHECK(lacasse::beta_naive(2) == 18);
    CHECK(lacasse::beta_naive(3) == 159);
    CHECK(lacasse::beta_closed(2) == 18);
    CHECK(lacasse::beta_closed(3) == 159);
    CHECK(lacasse::beta_closed(4) == 1848);
    CHECK(lacasse::beta_closed(0) == 1);
}

TEST_CASE("diff_direct examples") {
    CHECK(lacasse::diff_direct(1) == 1);
    CHECK(lacasse::diff_direct(2) == 8);
    CHECK(lacasse::diff_direct(3) == 81);
    CHECK(lacasse::diff_direct(0) == 0);
}

TEST_CASE("closed forms equal naive sums (reduced sweep; acceptance runs the full one)") {
    for (std::uint64_t m = 0; m <= 200; ++m) {
        if (lacasse::alpha_closed(m) != lacasse::alpha_naive(m)) {
            CAPTURE(m);
            REQUIRE(false);
        }
    }
    for (std::uint64_t m = 0; m <= 120; ++m) {
        if (lacasse::beta_closed(m) != lacasse::beta_naive(m)) {
            CAPTURE(m);
            REQUIRE(false);
        }
    }
}

TEST_CASE("telescoping chain") {
    for (std::uint64_t m = 0; m <= 200; ++m) {
        const Natural diff = lacasse::diff_direct(m);
        if (diff != pow_m(m, m + 1)) {
            CAPTURE(m);
            REQUIRE(false);
        }
        if (diff != lacasse::beta_closed(m) - lacasse::alpha_closed(m)) {
            CAPTURE(m);
            REQUIRE(false);
        }
    }
}

TEST_CASE("xi_exact examples") {
    CHECK(xi_exact_value(1) == 2);
    CHECK(xi_exact_value(2) == exactnum::make_rational(5, 2));
    CHECK(xi_exact_value(3) == exactnum::make_rational(26, 9));
    CHECK_THROWS_AS((void)lacasse::xi_exact(0), lacasse::ZeroOrder);
}

TEST_CASE("xi2_exact examples") {
    CHECK(xi2_exact_value(1) == 3);
    CHECK(xi2_exact_value(2) == exactnum::make_rational(9, 2));
    CHECK(xi2_exact_value(3) == exactnum::make_rational(53, 9));
    CHECK_THROWS_AS((void)lacasse::xi2_exact(0), lacasse::ZeroOrder);
}

TEST_CASE("xi values agree across methods and their denominators divide m^m") {
    for (std::uint64_t m = 1; m <= 60; ++m) {
        const auto closed = lacasse::xi_exact(m, Method::closed);
        const auto naive = lacasse::xi_exact(m, Method::naive);
        REQUIRE(closed.exact.has_value());
        REQUIRE(naive.exact.has_value());
        CHECK(*closed.exact == *naive.exact);
        const Natural mm = pow_m(m, m);
        CHECK(mpz_divisible_p(mm.get_mpz_t(), closed.exact->get_den().get_mpz_t()));

        const auto closed2 = lacasse::xi2_exact(m, Method::closed);
        CHECK(mpz_divisible_p(mm.get_mpz_t(), closed2.exact->get_den().get_mpz_t()));
        // Theorem: xi2 - xi = m, exactly
        CHECK(*closed2.exact - *closed.exact == m);
    }
}

TEST_CASE("bridges to the general abel/hurwitz evaluators (reduced sweep)") {
    const Rational zero(0);
    for (std::uint64_t m = 0; m <= 30; ++m) {
        CHECK(lacasse::alpha_naive(m) == abel::abel_naive({zero, zero, 0, 0, m}));
        CHECK(lacasse::beta_naive(m) ==
              hurwitz::hurwitz_naive({{zero, zero, zero}, {0, 0, 0}, m}));
    }
}

TEST_CASE("instrumented term counts") {
    for (std::uint64_t m : {0, 1, 5, 40, 137}) {
        EvalStats naive_stats, closed_stats;
        (void)lacasse::beta_naive(m, &naive_stats);
        (void)lacasse::beta_closed(m, &closed_stats);
        CHECK(naive_stats.terms == (m + 1) * (m + 2) / 2);
        CHECK(closed_stats.terms == m + 1);

        EvalStats a_naive, a_closed, d_stats;
        (void)lacasse::alpha_naive(m, &a_naive);
        (void)lacasse::alpha_closed(m, &a_closed);
        (void)lacasse::diff_direct(m, &d_stats);
        CHECK(a_naive.terms == m + 1);
        CHECK(a_closed.terms == m + 1);
        CHECK(d_stats.terms == m + 1);
    }
}

TEST_CASE("float spot values") {
    CHECK(rel_err(*lacasse::xi_float(2, Method::closed).approx, *lacasse::xi_exact(2).exact) <=
          1e-12);
    CHECK(*lacasse::xi_float(2, Method::closed).approx == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(*lacasse::xi_float(1, Method::naive).approx == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(*lacasse::xi2_float(2, Method::closed).approx == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(*lacasse::xi2_float(1, Method::naive).approx == doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)lacasse::xi_float(0, Method::closed), lacasse::ZeroOrder);
    CHECK_THROWS_AS((void)lacasse::xi2_float(0, Method::naive), lacasse::ZeroOrder);
}

TEST_CASE("float path term counts") {
    for (std::uint64_t m : {1, 2, 9, 50}) {
        EvalStats s1, s2;
        (void)lacasse::xi_float(m, Method::naive, &s1);
        (void)lacasse::xi2_float(m, Method::naive, &s2);
        CHECK(s1.terms == m + 1);
        CHECK(s2.terms == (m + 1) * (m + 2) / 2);
    }
}

TEST_CASE("xi_float(4000, closed) matches the exact value to 1e-9") {
    const auto exact = lacasse::xi_exact(4000, Method::closed);
    const auto approx = lacasse::xi_float(4000, Method::closed);
    REQUIRE(approx.approx.has_value());
    CHECK(*approx.approx > 0.0);
    CHECK(std::isfinite(*approx.approx));
    CHECK(rel_err(*approx.approx, *exact.exact) <= 1e-9);
}

TEST_CASE("xi2_float naive and closed agree at m=100 to 1e-10") {
    const auto exact = lacasse::xi2_exact(100);
    const double naive = *lacasse::xi2_float(100, Method::naive).approx;
    const double closed = *lacasse::xi2_float(100, Method::closed).approx;
    CHECK(rel_err(naive, *exact.exact) <= 1e-10);
    CHECK(rel_err(closed, *exact.exact) <= 1e-10);
    CHECK(std::abs(naive - closed) / closed <= 1e-10);
}

TEST_CASE("xi2 float fidelity sweep to m = 2000, both methods") {
    double worst_naive = 0.0, worst_closed = 0.0;
    for (std::uint64_t m = 1; m <= 2000; ++m) {
        const Rational exact = *lacasse::xi2_exact(m, Method::closed).exact;
        const double e = mpq_get_d(exact.get_mpq_t());
        const double n = *lacasse::xi2_float(m, Method::naive).approx;
        const double c = *lacasse::xi2_float(m, Method::closed).approx;
        worst_naive = std::max(worst_naive, std::abs(n - e) / e);
        worst_closed = std::max(worst_closed, std::abs(c - e) / e);
    }
    MESSAGE("xi2 float worst relative error: naive=", worst_naive, " closed=", worst_closed);
    CHECK(worst_naive <= 1e-9);
    CHECK(worst_closed <= 1e-9);
}

TEST_CASE("verify_conjecture examples") {
    const auto records = lacasse::verify_conjecture(1, 4, Method::closed);
    REQUIRE(records.size() == 4);
    const std::array<long, 4> lhs{1, 8, 81, 1024};
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].m == i + 1);
        CHECK(records[i].lhs == lhs[i]);
        CHECK(records[i].rhs == pow_m(records[i].m, records[i].m + 1));
        CHECK(records[i].holds);
    }

    const auto one = lacasse::verify_conjecture(1, 1, Method::naive);
    REQUIRE(one.size() == 1);
    CHECK(one[0].lhs == 1);
    CHECK(one[0].rhs == 1);
    CHECK(one[0].holds);

    CHECK_THROWS_AS((void)lacasse::verify_conjecture(0, 5, Method::closed), lacasse::BadRange);
    CHECK_THROWS_AS((void)lacasse::verify_conjecture(7, 3, Method::closed), lacasse::BadRange);
}

TEST_CASE("beta_naive at m=3 equals the literal double sum") {
    // brute-force cross-check of the double sum, independent of the
    // library's recurrence coefficients
    mpz_class sum = 0;
    for (std::uint64_t j = 0; j <= 3; ++j)
        for (std::uint64_t k = 0; k + j <= 3; ++k) {
            auto xx = [](std::uint64_t v) {
                mpz_class r = 1;
                for (std::uint64_t i = 0; i < v; ++i) r *= static_cast<unsigned long>(v);
                return r;
            };
            sum += oracle::binomial_ratio(3, j) * oracle::binomial_ratio(3 - j, k) * xx(j) *
                   xx(k) * xx(3 - j - k);
        }
    CHECK(sum == 159);
    CHECK(lacasse::beta_naive(3) == sum);
}
