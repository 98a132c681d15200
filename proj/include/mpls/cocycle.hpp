#pragma once

#include "mpls/symplectic.hpp"
#include "mpls/weil.hpp"

namespace mpls {

// Residual sign conventions for the Leray form in Rao's formula.
struct LerayConvention {
    bool negate = false;            // use -Q instead of Q
    bool hasse_with_diagonal = false;  // prod_{i<=j} instead of prod_{i<j}
    bool reverse_triple = false;    // (V^*, V^* s2^{-1}, V^* s1) instead of (V^*, V^* s1, V^* s2^{-1})
};

// The convention that passes the calibration identities (see tests/test_cocycle.cpp).
extern const LerayConvention kRaoConvention;

struct LerayForm {
    std::vector<Q> diag;
    int rank = 0;
    int l = 0;
    int j1 = 0, j2 = 0, j = 0;
};

// Triple-index form Q(x1, x2, x3) = <x1, x2> on {x1 + x2 + x3 = 0}, x_i in the Lagrangians
// V^*, V^* s1, V^* s2^{-1}; radical removed, diagonalized.
LerayForm leray_form(const QMatrix& s1, const QMatrix& s2, const LerayConvention& conv = kRaoConvention);

int hasse_with(const std::vector<Q>& diag, const Place& place, const LerayConvention& conv);

int rao_cocycle(const QMatrix& s1, const QMatrix& s2, const Place& place,
                const LerayConvention& conv = kRaoConvention);

// SL_2 only; x = c if c != 0 else d.
Q kubota_x(const QMatrix& g);
int kubota_cocycle(const QMatrix& g1, const QMatrix& g2, const Place& place);

struct MetaplecticElement {
    QMatrix g;
    int eps = 1;
    bool operator==(const MetaplecticElement& o) const { return eps == o.eps && g == o.g; }
};

MetaplecticElement mp_identity(int n);
MetaplecticElement mp_mul(const MetaplecticElement& x, const MetaplecticElement& y, const Place& place);
MetaplecticElement mp_inv(const MetaplecticElement& x, const Place& place);

// Splitting of SL_2(O) at odd p.
int iota2(const QMatrix& k, long p);

int v_lambda(const QMatrix& g, const Q& lambda, const Place& place);
int gsp_cocycle(const QMatrix& g, const QMatrix& h, const Place& place);

MetaplecticElement tau_bar(const MetaplecticElement& x);

// Angles are t = r * pi with r rational, reduced into [0, 4).
int so2_theta(const Q& r);
QMatrix so2_k_signs(const Q& r);  // k(t) with entries replaced by the exact signs of cos t, sin t
int so2_cocycle(const Q& r1, const Q& r2);
// Floating angles; |sin|, |cos| below 1e-12 count as zero.
int so2_cocycle(double t1, double t2);

}  // namespace mpls
