#include "mpls/realarch.hpp"

#include <cmath>
#include <numbers>

#include <gsl/gsl_sf_gamma.h>

namespace mpls {

namespace {

constexpr double kPi = std::numbers::pi;
const cd I{0.0, 1.0};

// Gamma on Re z >= 1/2 from GSL's complex log-Gamma.
cd gamma_right(cd z) {
    gsl_sf_result lnr, arg;
    gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
    return std::polar(std::exp(lnr.val), arg.val);
}

bool near_pole(cd z) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return std::abs(z - cd(r, 0.0)) < 1e-13;
}

int sgn(double x) {
    if (x == 0.0) throw DomainError("real place: argument must be nonzero");
    return x > 0 ? 1 : -1;
}

void check_parity(int parity) {
    if (parity != 1 && parity != -1) throw DomainError("parity must be +1 or -1");
}

}  // namespace

cd complex_gamma(cd z) {
    if (near_pole(z)) throw DomainError("Gamma pole at " + std::to_string(z.real()));
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma_right(1.0 - z));
    return gamma_right(z);
}

cd complex_rgamma(cd z) {
    if (near_pole(z)) return 0.0;
    if (z.real() < 0.5) return std::sin(kPi * z) * gamma_right(1.0 - z) / kPi;
    return 1.0 / gamma_right(z);
}

cd L_real(int n, cd s) {
    if (n != 0 && n != 1) throw DomainError("L_R: n must be 0 or 1");
    cd z = (s + static_cast<double>(n)) / 2.0;
    return std::pow(kPi, -z) * complex_gamma(z);
}

cd L_complex(int n, cd s) {
    cd z = s + std::abs(n) / 2.0;
    return std::pow(2.0 * kPi, -z) * complex_gamma(z);
}

FourthRoot gamma_psi_real(double a, double y) {
    int sa = sgn(a);
    if (sgn(y) > 0) return FourthRoot(0);
    return FourthRoot(sa > 0 ? 3 : 1);
}

cd sl2_localcoef_real(int parity, double a, double b, cd s) {
    check_parity(parity);
    int sa = sgn(a);
    double t = sa * sgn(b) * parity / 4.0;
    cd pre = std::exp(-I * kPi * static_cast<double>(parity * sa) / 4.0);
    return pre * complex_gamma((1.0 - s) / 2.0 + t) * complex_gamma((1.0 + s) / 2.0 - t) * complex_rgamma(s) /
           (2.0 * kPi);
}

cd sl2_localcoef_real_L(int parity, double a, cd s) {
    check_parity(parity);
    int sa = sgn(a);
    int n = parity == 1 ? 0 : 1;
    cd pre = std::exp(-I * kPi * static_cast<double>(parity * sa) / 4.0) * std::pow(2.0, s - 0.5) * std::pow(kPi, -s);
    // 1 / L_R(0, 2s) = pi^s / Gamma(s) and 1 / L_R(n, 1/2 - s) stay finite at the poles of Gamma.
    cd zn = (0.5 - s + static_cast<double>(n)) / 2.0;
    cd inv_l_2s = std::pow(kPi, s) * complex_rgamma(s);
    // For n = 0, L_R(0, 1 - 2s) / L_R(0, 1/2 - s) = pi^{-u/2} Gamma(u) / Gamma(u/2) with u = 1/2 - s;
    // duplication removes the 0 * inf at s = 1/2.
    cd ratio = n == 0 ? std::pow(kPi, -zn - 0.5) * std::pow(2.0, 2.0 * zn - 1.0) * complex_gamma(zn + 0.5)
                      : L_real(0, 1.0 - 2.0 * s) * std::pow(kPi, zn) * complex_rgamma(zn);
    return pre * L_real(n, s + 0.5) * ratio * inv_l_2s;
}

cd sl2_localcoef_real_ktype(int parity, double a, double b, cd s) {
    check_parity(parity);
    double n = parity * sgn(a) / 2.0;
    cd pre = std::exp(-I * kPi * n / 2.0) * complex_rgamma(s) / (2.0 * kPi);
    if (sgn(b) > 0) return pre * complex_gamma((-s + 1.0 + n) / 2.0) * complex_gamma((s + 1.0 - n) / 2.0);
    return pre * complex_gamma((-s + 1.0 - n) / 2.0) * complex_gamma((s + 1.0 + n) / 2.0);
}

bool admissible_fourier_type(int parity, double a, int twice_n) {
    check_parity(parity);
    int r = twice_n - parity * sgn(a);
    return ((r % 4) + 4) % 4 == 0;
}

ComplexLocalCoef sl2_localcoef_complex(int n, cd s) {
    auto gamma_c = [](int m, cd z) { return L_complex(-m, 1.0 - z) / L_complex(m, z); };
    ComplexLocalCoef out;
    out.tate = gamma_c(n, s);
    out.doubled = gamma_c(2 * n, 2.0 * s) / gamma_c(n, s + 0.5);
    return out;
}

DuplicationSides complex_duplication_sides(int n, cd s) {
    double m = std::abs(n);
    DuplicationSides out;
    out.lhs = complex_gamma(1.0 + m / 2.0 - s) * complex_rgamma(m / 2.0 + s);
    out.rhs = 2.0 * complex_gamma(1.0 + m - 2.0 * s) * complex_gamma(0.5 + m / 2.0 + s) * complex_rgamma(m + 2.0 * s) *
              complex_rgamma(0.5 + m / 2.0 - s);
    return out;
}

}  // namespace mpls
