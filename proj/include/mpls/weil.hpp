#pragma once

#include "mpls/field.hpp"

#include <string>

namespace mpls {

// i^k, k mod 4.
struct FourthRoot {
    int k = 0;

    FourthRoot() = default;
    explicit FourthRoot(int exponent) : k(((exponent % 4) + 4) % 4) {}
    static FourthRoot from_sign(int s) { return FourthRoot(s < 0 ? 2 : 0); }
    // Nearest fourth root of unity; throws if z is farther than tol.
    static FourthRoot snap(cd z, double tol = 1e-6);

    FourthRoot operator*(const FourthRoot& o) const { return FourthRoot(k + o.k); }
    FourthRoot inverse() const { return FourthRoot(-k); }
    bool operator==(const FourthRoot& o) const { return k == o.k; }
    bool operator!=(const FourthRoot& o) const { return k != o.k; }
    cd value() const;
    std::string str() const { return "i^" + std::to_string(k); }
};

// Normalized Weil factor of x -> psi(a x^2). Depends only on the square class of a.
FourthRoot gamma_psi(const Q& a, const AdditiveCharacter& psi, const Place& place);

// c_psi for normalized psi and a of valuation 0 or 1.
cd c_psi(const Q& a, const AdditiveCharacter& psi, const Place& place);

// ||a||^{1/2} c_psi(a) / c_psi(1) after removing even powers of p; psi must be normalized.
cd gamma_psi_bruteforce(const Q& a, const AdditiveCharacter& psi, const Place& place);

// xi_{alpha, chi} at odd p, with chi trivial or the Legendre character of the units.
struct XiFunction {
    int alpha = 1;
    bool chi_legendre = false;
    long p = 3;
    int operator()(const Q& x) const;
};

int xi(int alpha, bool chi_legendre, const Q& x, long p);

}  // namespace mpls
