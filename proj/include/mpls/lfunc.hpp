#pragma once

#include "mpls/field.hpp"

#include <string>
#include <vector>

namespace mpls {

// scalar * Y^degree * prod(1 - zeros_i Y) / prod(1 - poles_j Y), Y = q^{-s}.
struct GammaRat {
    cd scalar{1.0, 0.0};
    int degree = 0;
    std::vector<cd> zeros;
    std::vector<cd> poles;

    static GammaRat constant(cd c);
    static GammaRat monomial(cd c, int degree);
    // 1 - beta Y^power for power in {-2, -1, 1, 2}.
    static GammaRat one_minus(cd beta, int power);

    GammaRat operator*(const GammaRat& o) const;
    GammaRat operator/(const GammaRat& o) const;
    GammaRat inverse() const;
    GammaRat pow(int k) const;

    // The function s -> f(a s + b) for a in {-2, -1, 1, 2}.
    GammaRat substitute(int a, double b, double q) const;

    // Cancels zero/pole pairs closer than tol.
    GammaRat& reduce(double tol = 1e-9);

    cd eval(cd y) const;
    cd eval_s(cd s, double q) const;
    // Zero multiplicity minus pole multiplicity at Y = y0.
    int order_at(cd y0 = 1.0, double tol = 1e-9) const;
    bool is_monomial(double tol = 1e-9) const;
};

// Greedy multiset matching of the factors; on failure `why` names the unmatched parts.
bool equals(const GammaRat& a, const GammaRat& b, double tol = 1e-9, std::string* why = nullptr);

struct SatakeParams {
    std::vector<cd> values;
    bool unitary(double tol = 1e-12) const;
};

// L(chi, s + shift) = 1 / (1 - alpha q^{-shift} Y).
GammaRat l_factor(cd alpha, double shift, double q);
// L(chi, a s + b); ramified characters give 1.
GammaRat l_factor(const MultiplicativeCharacter& chi, int a, double b);

// gamma(chi, s + shift, psi) for unramified chi and normalized psi.
GammaRat tate_gamma_sym(cd alpha, double q, double shift = 0.0);
// General chi, psi normalized. Ramified chi gives the Gauss-sum monomial
// chi(pi)^m q^m conj(G(chi, psi)) Y^m.
GammaRat tate_gamma_sym(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, double shift = 0.0);

// gamma(tau, sym^2, 2s) = prod_{i<=j} gamma(a_i a_j, 2s).
GammaRat sym2_gamma(const SatakeParams& mu, double q);
GammaRat rankin_gamma(const SatakeParams& a, const SatakeParams& b, double q, double shift = 0.0);

// prod_{i,j} gamma(alpha_j eta_i^{-1}, s) gamma(eta_i alpha_j, s).
GammaRat metaplectic_gamma_ps(const SatakeParams& eta, const SatakeParams& alpha, double q);
// L_psi(sigma x tau, s + shift) = prod_{i,j} L(eta_i alpha_j, s + shift) L(eta_i^{-1} alpha_j, s + shift).
GammaRat L_psi_sym(const SatakeParams& eta, const SatakeParams& alpha, double q, double shift = 0.0);
// L_psi(sigma x tau^, 1 - s) / L_psi(sigma x tau, s).
GammaRat metaplectic_gamma_ratio(const SatakeParams& eta, const SatakeParams& alpha, double q);

struct SL2Closed {
    GammaRat value;
    bool known = true;  // false when chi^2 is ramified: only the monomial shape is asserted
    cd k{1.0, 0.0};
    int d = 0;
};

// C_psi(chi x gamma_psi^{-1}, s) = k Y^{-d} L(chi, s+1/2) L(chi^{-2}, 1-2s) / (L(chi^{-1}, 1/2-s) L(chi^2, 2s)).
SL2Closed sl2_localcoef_closed(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi);

// GL_2 local coefficient in the variable x = s1 - s2, beta = beta1 / beta2.
GammaRat gl_localcoef_sym(const MultiplicativeCharacter& beta, const AdditiveCharacter& psi);

// Unramified data at an odd prime, psi standard.
GammaRat sp_localcoef_product(const SatakeParams& mu, long p);
GammaRat sp_localcoef_closed(const SatakeParams& mu, long p);

// C_forward(s) * C_backward(-s).
GammaRat beta_product(const GammaRat& forward, const GammaRat& backward);

struct ReflectionReport {
    std::string kind;  // "w", "w'", "tau"
    int i = 0;         // 1-based
    int j = 0;
    bool in_stabilizer = false;
    int order = 0;
};

struct ReducibilityVerdict {
    std::vector<ReflectionReport> reflections;
    bool irreducible = true;
};

ReducibilityVerdict reducibility_ps(const std::vector<MultiplicativeCharacter>& alphas, const AdditiveCharacter& psi);

}  // namespace mpls
