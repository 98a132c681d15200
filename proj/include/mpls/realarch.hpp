#pragma once

#include "mpls/rational.hpp"
#include "mpls/weil.hpp"

namespace mpls {

// Complex Gamma: GSL's complex log-Gamma on Re z >= 1/2, reflection elsewhere; relative error
// about 1e-14 for |Re z| <= 10. Throws DomainError at the poles.
cd complex_gamma(cd z);
// 1 / Gamma(z); entire.
cd complex_rgamma(cd z);

// L_R(chi_{0,n}, s), n = 0 for the trivial character and 1 for sign.
cd L_real(int n, cd s);
// L_C(chi_{n,0}, s) = (2 pi)^{-(s + |n|/2)} Gamma(s + |n|/2).
cd L_complex(int n, cd s);

// gamma_{psi_a}(y) at the real place.
FourthRoot gamma_psi_real(double a, double y);

// C_{psi_b}(chi x gamma_{psi_a}^{-1}, s), chi(-1) = parity, in the Gamma-quotient form.
cd sl2_localcoef_real(int parity, double a, double b, cd s);
// C_{psi_a}(chi x gamma_{psi_a}^{-1}, s) in the L-function form.
cd sl2_localcoef_real_L(int parity, double a, cd s);
// The same coefficient through the K-type formula with Fourier type n = parity sign(a) / 2.
// Positive b uses the psi_b branch, negative b the psi_{-b} branch.
cd sl2_localcoef_real_ktype(int parity, double a, double b, cd s);

// Twice the admissible Fourier types: 2n in parity * sign(a) + 4Z.
bool admissible_fourier_type(int parity, double a, int twice_n);

struct ComplexLocalCoef {
    cd tate;     // L(chi^{-1}, 1 - s) / L(chi, s)
    cd doubled;  // gamma(chi^2, 2s) / gamma(chi, s + 1/2); equals 2^{1-4s} tate
};
ComplexLocalCoef sl2_localcoef_complex(int n, cd s);

// Both sides of Gamma(1+|n|/2-s)/Gamma(|n|/2+s) = 2 Gamma(1+|n|-2s)Gamma(1/2+|n|/2+s)/(Gamma(|n|+2s)Gamma(1/2+|n|/2-s)).
struct DuplicationSides {
    cd lhs;
    cd rhs;
};
DuplicationSides complex_duplication_sides(int n, cd s);

}  // namespace mpls
