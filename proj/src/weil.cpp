#include "mpls/weil.hpp"

#include <cmath>

namespace mpls {

FourthRoot FourthRoot::snap(cd z, double tol) {
    static const cd roots[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int best = 0;
    for (int j = 1; j < 4; ++j)
        if (std::abs(z - roots[j]) < std::abs(z - roots[best])) best = j;
    if (std::abs(z - roots[best]) > tol) throw DomainError("value is not a fourth root of unity");
    return FourthRoot(best);
}

cd FourthRoot::value() const {
    switch (k) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

namespace {

FourthRoot gamma_std(const Q& a, long p) {
    const Q rep = square_class(a, Place::finite(p)).rep;
    if (p == 2) {
        const bool twice = valuation(rep, 2) == 1;
        const long u = (twice ? rep / 2 : rep).get_num().get_si();
        if (!twice) return FourthRoot(((u % 4) + 4) % 4 == 1 ? 0 : 3);
        switch (u) {
            case 1: return FourthRoot(0);
            case -1: return FourthRoot(3);
            case 5: return FourthRoot(2);
            default: return FourthRoot(1);
        }
    }
    if (valuation(rep, p) == 0) return FourthRoot(0);
    const FourthRoot gp(p % 4 == 1 ? 0 : 1);
    return gp * FourthRoot::from_sign(unit_legendre(rep / p, p));
}

}  // namespace

FourthRoot gamma_psi(const Q& a, const AdditiveCharacter& psi, const Place& place) {
    if (a == 0) throw DomainError("gamma_psi of zero");
    if (psi.a == 0) throw DomainError("gamma_psi: trivial additive character");
    switch (place.kind) {
        case Place::Kind::Complex: return FourthRoot(0);
        case Place::Kind::Real: return a > 0 ? FourthRoot(0) : FourthRoot(psi.a > 0 ? 3 : 1);
        case Place::Kind::Finite: break;
    }
    // gamma_{psi_b}(a) = gamma_{psi_std}(a) (a, b)
    return gamma_std(a, place.p) * FourthRoot::from_sign(hilbert_symbol(a, psi.a, place));
}

cd c_psi(const Q& a, const AdditiveCharacter& psi, const Place& place) {
    if (!place.is_finite()) throw DomainError("c_psi needs a finite place");
    const long p = place.p;
    if (!psi.normalized(p)) throw DomainError("c_psi: psi must be normalized (conductor 0)");
    const long v = valuation(a, p);
    if (v != 0 && v != 1) throw DomainError("c_psi: argument must have valuation 0 or 1");
    const int e = p == 2 ? 1 : 0;
    const int top = v == 0 ? e : e + 1;
    cd c = 1.0;
    for (int n = 1; n <= top; ++n) {
        const Q scale = psi.a * a / q_pow(Q(p), 2 * n);  // psi(pi^{-2n} x^2 a)
        const int level = static_cast<int>(2 * n - v) + (p == 2 ? 1 : 0);
        const cd integral = unit_sum(
            [&](long x) { return RationalAngle(frac_p(scale * Q(x) * Q(x), p)).value(); }, level, place);
        c += std::pow(static_cast<double>(p), n) * integral;
    }
    return c;
}

cd gamma_psi_bruteforce(const Q& a, const AdditiveCharacter& psi, const Place& place) {
    if (a == 0) throw DomainError("gamma_psi of zero");
    if (!place.is_finite()) throw DomainError("gamma_psi_bruteforce needs a finite place");
    const long p = place.p;
    if (!psi.normalized(p)) throw DomainError("gamma_psi_bruteforce: psi must be normalized (conductor 0)");
    const long v = valuation(a, p);
    const long half = v >= 0 ? v / 2 : -((-v + 1) / 2);
    const Q r = a / q_pow(Q(p), 2 * half);
    const double norm = std::pow(static_cast<double>(p), -static_cast<double>(valuation(r, p)));
    return std::sqrt(norm) * c_psi(r, psi, place) / c_psi(Q(1), psi, place);
}

int xi(int alpha, bool chi_legendre, const Q& x, long p) {
    if (p == 2) throw DomainError("xi is defined at odd p only");
    if (x == 0) throw DomainError("xi of zero");
    const Place place = Place::finite(p);
    const long v = valuation(x, p);
    const Q eps = unit_part(x, p);
    const long n = v >= 0 ? v / 2 : -((-v + 1) / 2);
    int r = chi_legendre ? unit_legendre(eps, p) : 1;
    if (n & 1) r *= hilbert_symbol(Q(p), Q(p), place);
    if (v - 2 * n == 1) r *= alpha * hilbert_symbol(eps, Q(p), place);
    return r;
}

int XiFunction::operator()(const Q& x) const { return xi(alpha, chi_legendre, x, p); }

}  // namespace mpls
