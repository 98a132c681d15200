#include "mpls/realarch.hpp"
#include "support.hpp"

using namespace mpls;
using mpls::test::close;

TEST_CASE("complex Gamma") {
    CHECK(close(complex_gamma(5.0), 24.0, 1e-14));
    CHECK(close(complex_gamma(0.5), std::sqrt(M_PI), 1e-14));
    CHECK(close(complex_gamma(-0.5), -2.0 * std::sqrt(M_PI), 1e-14));
    for (cd z : {cd(0.3, 1.2), cd(-2.7, 0.4), cd(4.1, -3.3), cd(9.5, 0.1)}) {
        CHECK(close(complex_gamma(z + 1.0), z * complex_gamma(z), 1e-13));
        CHECK(close(complex_gamma(z) * complex_gamma(1.0 - z), M_PI / std::sin(M_PI * z), 1e-13));
        CHECK(close(complex_gamma(z) * complex_rgamma(z), 1.0, 1e-13));
        CHECK(close(complex_gamma(std::conj(z)), std::conj(complex_gamma(z)), 1e-14));
    }
    // Against the real Gamma from the standard library.
    for (double x : {0.1, 1.7, 3.3, 7.25, -1.5, -3.9}) CHECK(close(complex_gamma(x), std::tgamma(x), 1e-13));
    CHECK_THROWS_AS(complex_gamma(-2.0), DomainError);
    CHECK(std::abs(complex_rgamma(-3.0)) < 1e-15);
    CHECK(std::abs(complex_rgamma(0.0)) < 1e-15);
}

TEST_CASE("archimedean L-factors") {
    const cd s{0.3, 0.9};
    CHECK(close(L_real(0, s), std::pow(M_PI, -s / 2.0) * complex_gamma(s / 2.0)));
    CHECK(close(L_real(1, s), std::pow(M_PI, -(s + 1.0) / 2.0) * complex_gamma((s + 1.0) / 2.0)));
    CHECK(close(L_complex(3, s), std::pow(2 * M_PI, -(s + 1.5)) * complex_gamma(s + 1.5)));
    CHECK(close(L_complex(-3, s), L_complex(3, s)));
}

TEST_CASE("real Weil factor") {
    CHECK(gamma_psi_real(1, 2) == FourthRoot(0));
    CHECK(gamma_psi_real(1, -1) == FourthRoot(3));
    CHECK(gamma_psi_real(-1, -1) == FourthRoot(1));
    CHECK(gamma_psi_real(-1, 3) == FourthRoot(0));
    for (double a : {1.0, -2.5})
        for (double x : {1.0, -1.0})
            for (double y : {1.0, -1.0}) {
                int hilbert = (x < 0 && y < 0) ? -1 : 1;
                CHECK(gamma_psi_real(a, x * y) ==
                      gamma_psi_real(a, x) * gamma_psi_real(a, y) * FourthRoot::from_sign(hilbert));
            }
}

TEST_CASE("real SL_2 local coefficient forms") {
    CHECK(close(sl2_localcoef_real(1, 1.0, 1.0, 0.5), std::polar(1.0, -M_PI / 4) / (2.0 * std::sqrt(M_PI)), 1e-12));
    for (int parity : {1, -1})
        for (double a : {1.3, -0.7})
            for (cd s : {cd(0.3, 0.4), cd(1.7, -1.1), cd(-0.6, 2.0)}) {
                CAPTURE(parity);
                CAPTURE(a);
                CHECK(close(sl2_localcoef_real(parity, a, a, s), sl2_localcoef_real_L(parity, a, s), 1e-10));
                for (double b : {0.8, -2.1})
                    CHECK(close(sl2_localcoef_real(parity, a, b, s), sl2_localcoef_real_ktype(parity, a, b, s), 1e-10));
            }
}

TEST_CASE("admissible Fourier types") {
    CHECK(admissible_fourier_type(1, 1.0, 1));
    CHECK(admissible_fourier_type(1, 1.0, 5));
    CHECK(admissible_fourier_type(1, 1.0, -3));
    CHECK_FALSE(admissible_fourier_type(1, 1.0, 3));
    CHECK_FALSE(admissible_fourier_type(1, 1.0, 2));
    CHECK(admissible_fourier_type(-1, 1.0, -1));
    CHECK(admissible_fourier_type(1, -2.0, -1));
    CHECK(admissible_fourier_type(-1, -2.0, 1));
}

TEST_CASE("complex place") {
    for (int n : {0, 1, 2, -3})
        for (cd s : {cd(0.3, 0.0), cd(0.2, 1.1), cd(-0.4, -0.7)}) {
            CAPTURE(n);
            ComplexLocalCoef c = sl2_localcoef_complex(n, s);
            CHECK(close(c.doubled, std::pow(2.0, 1.0 - 4.0 * s) * c.tate, 1e-10));
            DuplicationSides d = complex_duplication_sides(n, s);
            CHECK(close(d.rhs, std::pow(2.0, 2.0 - 4.0 * s) * d.lhs, 1e-10));
        }
}
