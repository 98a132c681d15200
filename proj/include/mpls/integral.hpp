#pragma once

#include "mpls/field.hpp"

#include <vector>

namespace mpls {

// Shells ||u|| = q^k of the integral of gamma_{psi_g}^{-1}(u) chi_(s)(u) psi_w(u) d*u.
// Shells k <= k0 have psi_w trivial and repeat with period two, giving
//   A = x^{k0} (I0 + x^{-1} I1) / (1 - x^{-2}),  x = chi(pi)^{-1} q^s,
// and the remaining shells k0+1 .. k0+J.size() give sum x^k J_k.
struct LocalCoefDecomposition {
    long p = 3;
    int k0 = 0;
    cd I0{0.0, 0.0};  // shell k0
    cd I1{0.0, 0.0};  // shell k0 - 1
    std::vector<cd> J;
    cd chi_at_pi{1.0, 0.0};
};

// psi_g twists the Weil factor, psi_w is the Whittaker character. `extra` adds shells past the
// truncation point max(2e+1, m(chi)), which must contribute zero.
LocalCoefDecomposition localcoef_decompose(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi_g,
                                           const AdditiveCharacter& psi_w, int extra = 0);
LocalCoefDecomposition localcoef_decompose(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, int extra = 0);

// C^{-1}(s).
cd localcoef_eval(const LocalCoefDecomposition& d, cd s);

// Integral of chi_(s)(u) psi(u) d*u over 0 < ||u|| <= q^m.
cd tate_gamma_integral(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, cd s, int m);

// Shell-by-shell sum of gamma_psi^{-1}(u) chi_(s)(u) psi(u) over 0 < ||u|| <= q^{max(m(chi), 2e+1)}, psi normalized.
cd gamma_tilde_integral(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, cd s);

struct IndicatorFunction {
    enum class Kind { Ball, Coset };
    Kind kind = Kind::Ball;
    Q a = 0;
    int n = 0;

    static IndicatorFunction ball(int n) { return {Kind::Ball, Q(0), n}; }
    static IndicatorFunction coset(const Q& a, int n) { return {Kind::Coset, a, n}; }
    bool contains(const Q& x, long p) const;
};

// Closed forms for the transform phi -> integral of phi(x) psi(xy) gamma_psi^{-1}(xy) dx, psi normalized.
cd phi_tilde(const IndicatorFunction& phi, const Q& y, const AdditiveCharacter& psi, const Place& place);
// Same transform by direct finite sums over residues.
cd phi_tilde_direct(const IndicatorFunction& phi, const Q& y, const AdditiveCharacter& psi, const Place& place);

// Mellin transform of an indicator function.
cd zeta(const IndicatorFunction& phi, const MultiplicativeCharacter& chi, cd s);
// Mellin transform of the closed-form phi_tilde; requires 0 < Re(s) < 1.
cd zeta_tilde(const IndicatorFunction& phi, const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, cd s);

// Measures of H(n) = {x unit : ||1 - x^2|| <= q^{-n}} and D(n) = {x unit : ||1 - x^2|| = q^{1-n}}.
Q measure_H(int n, const Place& place);
Q measure_D(int n, const Place& place);

}  // namespace mpls
