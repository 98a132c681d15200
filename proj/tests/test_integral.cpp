#include "mpls/integral.hpp"
#include "mpls/lfunc.hpp"
#include "support.hpp"

using namespace mpls;
using mpls::test::close;

namespace {

const AdditiveCharacter std_psi{1};

// Residue count of x in (Z/p^N)^* with lo <= v(1 - x^2) < hi, divided by p^N; hi < 0 means no upper bound.
Q count_measure(long p, int lo, int hi) {
    const int N = lo + 4;
    const long m = ipow(p, N);
    long hits = 0;
    for (long x = 1; x < m; ++x) {
        if (x % p == 0) continue;
        long w = (1 - (x * x) % m + m) % m;
        int v = w == 0 ? N : valuation(Q(w), p);
        hits += v >= lo && (hi < 0 || v < hi);
    }
    return Q(hits) / Q(m);
}

}  // namespace

TEST_CASE("decomposition at odd p") {
    for (long p : {3L, 5L, 7L}) {
        const double q = double(p);
        auto d = localcoef_decompose(MultiplicativeCharacter::unramified(p, std::polar(1.0, 0.3)), std_psi);
        CHECK(d.p == p);
        CHECK(close(d.I0, 1.0 - 1.0 / q));
        CHECK(std::abs(d.I1) < 1e-12);
        REQUIRE(d.J.size() >= 1);
        CHECK(close(d.J[0], std::pow(q, -0.5)));
        for (std::size_t i = 1; i < d.J.size(); ++i) CHECK(std::abs(d.J[i]) < 1e-12);

        // The unit shell averages chi to zero; on the next shell (pi, u) cancels chi(u).
        auto l = localcoef_decompose(MultiplicativeCharacter::legendre(p), std_psi);
        CHECK(std::abs(l.I0) < 1e-12);
        CHECK(std::abs(l.I1) == doctest::Approx(1.0 - 1.0 / q));
    }
    auto two = localcoef_decompose(MultiplicativeCharacter::unramified(2, 1.0), std_psi);
    CHECK(two.J.size() == 3);
    auto extra = localcoef_decompose(MultiplicativeCharacter::unramified(2, 1.0), std_psi, 3);
    REQUIRE(extra.J.size() == 6);
    for (int i = 3; i < 6; ++i) CHECK(std::abs(extra.J[i]) < 1e-12);
}

TEST_CASE("integral agrees with the closed SL_2 coefficient") {
    const cd s{0.31, 0.42};
    for (long p : {3L, 5L, 7L}) {
        const double q = double(p);
        for (const auto& chi : {MultiplicativeCharacter::unramified(p, std::polar(1.0, 0.8)),
                                MultiplicativeCharacter::legendre(p, std::polar(1.0, -1.3))}) {
            SL2Closed c = sl2_localcoef_closed(chi, std_psi);
            REQUIRE(c.known);
            cd inv = localcoef_eval(localcoef_decompose(chi, std_psi), s);
            CHECK(close(inv * c.value.eval_s(s, q), 1.0, 1e-9));
            CHECK(close(gamma_tilde_integral(chi, std_psi, s), inv, 1e-9));
        }
    }
}

TEST_CASE("Tate integral stabilizes past the conductor") {
    const cd s{0.4, 0.2};
    for (long p : {2L, 3L, 5L}) {
        auto chi = MultiplicativeCharacter::unramified(p, std::polar(1.0, 1.7));
        CHECK(close(tate_gamma_integral(chi, std_psi, s, 3), tate_gamma_integral(chi, std_psi, s, 6), 1e-12));
    }
}

TEST_CASE("phi-tilde closed forms") {
    for (long p : {2L, 3L, 5L}) {
        Place pl = Place::finite(p);
        for (int n : {-1, 0, 1, 2})
            for (const Q& y : {Q(1), Q(p), make_q(1, p), Q(p + 2), make_q(3, p * p)}) {
                CAPTURE(p);
                CAPTURE(n);
                CHECK(close(phi_tilde(IndicatorFunction::ball(n), y, std_psi, pl),
                            phi_tilde_direct(IndicatorFunction::ball(n), y, std_psi, pl), 1e-9));
                CHECK(close(phi_tilde(IndicatorFunction::coset(Q(1), n + 4), y, std_psi, pl),
                            phi_tilde_direct(IndicatorFunction::coset(Q(1), n + 4), y, std_psi, pl), 1e-9));
            }
    }
    CHECK(IndicatorFunction::ball(1).contains(Q(3), 3));
    CHECK_FALSE(IndicatorFunction::ball(2).contains(Q(3), 3));
    CHECK(IndicatorFunction::coset(Q(1), 1).contains(Q(4), 3));
}

TEST_CASE("zeta of balls") {
    const cd s{0.6, 0.3};
    for (long p : {3L, 5L}) {
        const double q = double(p);
        auto chi = MultiplicativeCharacter::unramified(p, std::polar(1.0, 0.5));
        for (int n = -1; n <= 2; ++n) {
            cd ratio = zeta(IndicatorFunction::ball(n + 1), chi, s) / zeta(IndicatorFunction::ball(n), chi, s);
            CHECK(close(ratio, chi.value_at_pi() * std::pow(q, -s), 1e-10));
        }
        // Ramified characters integrate to zero over balls.
        CHECK(std::abs(zeta(IndicatorFunction::ball(0), MultiplicativeCharacter::legendre(p), s)) < 1e-12);
    }
}

TEST_CASE("measures of H(n) and D(n)") {
    for (long p : {2L, 3L, 5L}) {
        Place pl = Place::finite(p);
        for (int n = 1; n <= 5; ++n) {
            CAPTURE(p);
            CAPTURE(n);
            CHECK(measure_H(n, pl) == count_measure(p, n, -1));
            CHECK(measure_D(n, pl) == count_measure(p, n - 1, n));
        }
    }
    CHECK(measure_H(1, Place::finite(3)) == make_q(2, 3));
}
