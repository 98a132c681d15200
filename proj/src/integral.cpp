#include "mpls/integral.hpp"

#include "mpls/weil.hpp"

#include <algorithm>
#include <cmath>

namespace mpls {

namespace {

int two_e_plus_one(long p) { return p == 2 ? 3 : 1; }

Q p_pow(long p, long k) { return q_pow(Q(p), k); }

// Shells needed so that a geometric tail of ratio q^{-rate} drops below 1e-16.
int tail_length(double rate, double q) {
    if (rate <= 0.0) throw DomainError("principal value sum needs 0 < Re(s) (and Re(s) < 1 for transforms)");
    double k = std::ceil(37.0 / (rate * std::log(q))) + 2.0;
    if (k > 4000.0) throw DomainError("Re(s) too close to the boundary of the convergence strip");
    return int(k);
}

cd weil_inv(const Q& x, const AdditiveCharacter& psi, const Place& place) {
    return gamma_psi(x, psi, place).inverse().value();
}

}  // namespace

LocalCoefDecomposition localcoef_decompose(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi_g,
                                           const AdditiveCharacter& psi_w, int extra) {
    const long p = chi.p();
    const Place place = Place::finite(p);
    const int m = chi.conductor();
    const int n_w = int(psi_w.conductor(p));
    const int base = std::max(m, two_e_plus_one(p));

    LocalCoefDecomposition d;
    d.p = p;
    d.k0 = -n_w;
    d.chi_at_pi = chi.value_at_pi();

    // Integral over the unit shell ||u|| = q^k.
    auto shell = [&](int k, bool with_psi) {
        const Q scale = p_pow(p, -k);
        const int level = std::max(base, k + n_w);
        return unit_sum(
            [&](long r) {
                const Q u = scale * Q(r);
                cd v = weil_inv(u, psi_g, place) * chi.unit_value(r);
                if (with_psi) v *= psi_value(psi_w, u, place).value();
                return v;
            },
            level, place);
    };

    d.I0 = shell(d.k0, false);
    d.I1 = shell(d.k0 - 1, false);
    for (int k = d.k0 + 1; k <= d.k0 + base + extra; ++k) d.J.push_back(shell(k, true));
    return d;
}

LocalCoefDecomposition localcoef_decompose(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, int extra) {
    return localcoef_decompose(chi, psi, psi, extra);
}

cd localcoef_eval(const LocalCoefDecomposition& d, cd s) {
    const double q = double(d.p);
    const cd x = std::exp(s * std::log(q)) / d.chi_at_pi;
    cd total = 0.0;
    if (d.I0 != cd(0.0) || d.I1 != cd(0.0)) {
        const cd denom = 1.0 - 1.0 / (x * x);
        if (std::abs(denom) < 1e-12) throw DomainError("localcoef_eval: s is a pole of the A-part");
        total += std::pow(x, d.k0) * (d.I0 + d.I1 / x) / denom;
    }
    for (std::size_t i = 0; i < d.J.size(); ++i) total += std::pow(x, d.k0 + 1 + int(i)) * d.J[i];
    return total;
}

cd tate_gamma_integral(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, cd s, int m) {
    const long p = chi.p();
    const Place place = Place::finite(p);
    const int n = int(psi.conductor(p));
    const int mc = chi.conductor();
    if (m < std::max(mc, 1) - n) throw DomainError("tate_gamma_integral: truncation below the stable range");
    if (s.real() <= 0.0) throw DomainError("tate_gamma_integral: needs Re(s) > 0");
    const double q = double(p);
    const cd x = std::exp(s * std::log(q)) / chi.value_at_pi();

    cd total = 0.0;
    if (!chi.ramified()) total += (1.0 - 1.0 / q) * std::pow(x, -n) / (1.0 - 1.0 / x);
    for (int k = -n + 1; k <= m; ++k) {
        const Q scale = p_pow(p, -k);
        cd shell = unit_sum([&](long r) { return psi_value(psi, scale * Q(r), place).value() * chi.unit_value(r); },
                            std::max(mc, k + n), place);
        total += std::pow(x, k) * shell;
    }
    return total;
}

cd gamma_tilde_integral(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, cd s) {
    const long p = chi.p();
    const Place place = Place::finite(p);
    if (!psi.normalized(p)) throw DomainError("gamma_tilde_integral: psi must be normalized");
    const double q = double(p);
    const int top = std::max(chi.conductor(), two_e_plus_one(p));
    const int bottom = -tail_length(s.real(), q);
    const cd x = std::exp(s * std::log(q)) / chi.value_at_pi();

    cd total = 0.0;
    for (int k = bottom; k <= top; ++k) {
        const Q scale = p_pow(p, -k);
        cd shell = unit_sum(
            [&](long r) {
                const Q u = scale * Q(r);
                return weil_inv(u, psi, place) * chi.unit_value(r) * psi_value(psi, u, place).value();
            },
            std::max({top, k, 1}), place);
        total += std::pow(x, k) * shell;
    }
    return total;
}

bool IndicatorFunction::contains(const Q& x, long p) const {
    const Q d = kind == Kind::Ball ? x : Q(x - a);
    return d == 0 || valuation(d, p) >= n;
}

namespace {

void check_phi_tilde_inputs(const IndicatorFunction& phi, const Q& y, const AdditiveCharacter& psi, const Place& place) {
    if (!place.is_finite()) throw DomainError("phi_tilde: finite place required");
    if (!psi.normalized(place.p)) throw DomainError("phi_tilde: psi must be normalized");
    if (y == 0) throw DomainError("phi_tilde: y must be nonzero");
    if (phi.kind == IndicatorFunction::Kind::Coset && (phi.a == 0 || valuation(phi.a, place.p) >= phi.n))
        throw DomainError("phi_tilde: coset representative must lie outside P^n");
}

// Integral of psi(x) gamma_psi^{-1}(x) over ||x|| <= q^t, using the even/odd unit integrals below ||x|| = 1.
cd ball_constant(int t, const AdditiveCharacter& psi, const Place& place) {
    const long p = place.p;
    const double q = double(p);
    cd total = 1.0 / (c_psi(Q(-1), psi, place) * (1.0 + 1.0 / q));
    for (int k = 1; k <= t; ++k) {
        const Q scale = p_pow(p, -k);
        cd shell = unit_sum(
            [&](long r) {
                const Q u = scale * Q(r);
                return psi_value(psi, u, place).value() * weil_inv(u, psi, place);
            },
            std::max(k, two_e_plus_one(p)), place);
        total += std::pow(q, k) * shell;
    }
    return total;
}

}  // namespace

cd phi_tilde(const IndicatorFunction& phi, const Q& y, const AdditiveCharacter& psi, const Place& place) {
    check_phi_tilde_inputs(phi, y, psi, place);
    const long p = place.p;
    const double q = double(p);
    const long M = -valuation(y, p);  // ||y|| = q^M
    if (phi.kind == IndicatorFunction::Kind::Coset) {
        if (valuation(phi.a, p) > phi.n - two_e_plus_one(p))
            throw DomainError("phi_tilde: closed form needs ||a|| >= q^{2e+1-n}");
        if (M > phi.n) return 0.0;
        const Q ay = phi.a * y;
        return psi_value(psi, ay, place).value() * weil_inv(ay, psi, place) * std::pow(q, -phi.n);
    }
    if (M <= phi.n) {
        const cd base = 1.0 / (c_psi(Q(-1), psi, place) * (1.0 + 1.0 / q) * std::pow(q, phi.n));
        return ((phi.n - M) % 2 == 0) ? base : base / q;
    }
    const int t = int(std::min<long>(M - phi.n, 2 * (p == 2 ? 1 : 0) + 2));
    return ball_constant(t, psi, place) * std::pow(q, -double(M));
}

cd phi_tilde_direct(const IndicatorFunction& phi, const Q& y, const AdditiveCharacter& psi, const Place& place) {
    check_phi_tilde_inputs(phi, y, psi, place);
    const long p = place.p;
    const double q = double(p);
    const long vy = valuation(y, p);
    const int e21 = two_e_plus_one(p);
    auto integrand = [&](const Q& x) {
        const Q xy = x * y;
        return psi_value(psi, xy, place).value() * weil_inv(xy, psi, place);
    };

    if (phi.kind == IndicatorFunction::Kind::Coset) {
        const long va = valuation(phi.a, p);
        const long depth = std::max({0L, -vy - phi.n, va + e21 - phi.n}) + 1;
        const long count = ipow(p, int(depth));
        const Q step = p_pow(p, phi.n);
        cd total = 0.0;
        for (long t = 0; t < count; ++t) total += integrand(phi.a + step * Q(t));
        return total * std::pow(q, -phi.n) / double(count);
    }

    // Ball: shells ||x|| = q^{-k}, k >= n, truncated once q^{-k} is negligible.
    const int span = int(std::ceil(40.0 / std::log(q)));
    cd total = 0.0;
    for (int k = phi.n + span; k >= phi.n; --k) {
        const Q scale = p_pow(p, k);
        const int level = int(std::max<long>(e21, -(k + vy)));
        total += std::pow(q, -k) * unit_sum([&](long r) { return integrand(scale * Q(r)); }, level, place);
    }
    return total;
}

cd zeta(const IndicatorFunction& phi, const MultiplicativeCharacter& chi, cd s) {
    const long p = chi.p();
    const double q = double(p);
    const cd t = chi.value_at_pi() * std::exp(-s * std::log(q));  // chi(pi) q^{-s}
    const bool ball = phi.kind == IndicatorFunction::Kind::Ball || phi.a == 0 || valuation(phi.a, p) >= phi.n;
    if (ball) {
        if (chi.ramified()) return 0.0;
        if (std::abs(t) >= 1.0) throw DomainError("zeta: needs Re(s) > 0");
        return (1.0 - 1.0 / q) * std::pow(t, phi.n) / (1.0 - t);
    }
    const long va = valuation(phi.a, p);
    const Q unit = phi.a / p_pow(p, va);
    const long rel = phi.n - va;  // the coset is a (1 + P^rel)
    const long depth = std::max(0L, long(chi.conductor()) - rel);
    const long count = ipow(p, int(depth));
    const Q step = p_pow(p, rel);
    cd acc = 0.0;
    for (long j = 0; j < count; ++j) acc += chi.unit_value(Q(unit + step * Q(j)));
    // d*x = q^{v(a)} dx on the coset, which has measure q^{-n}
    return std::pow(t, va) * std::pow(q, double(va - phi.n)) * acc / double(count);
}

cd zeta_tilde(const IndicatorFunction& phi, const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, cd s) {
    const long p = chi.p();
    const Place place = Place::finite(p);
    const double q = double(p);
    if (s.real() <= 0.0 || s.real() >= 1.0) throw DomainError("zeta_tilde: needs 0 < Re(s) < 1");
    const cd x = std::exp(s * std::log(q)) / chi.value_at_pi();  // chi_(s)(pi^{-1})
    const int low = -tail_length(s.real(), q);
    const int m = chi.conductor();
    const int e21 = two_e_plus_one(p);

    cd total = 0.0;
    if (phi.kind == IndicatorFunction::Kind::Coset) {
        const long va = valuation(phi.a, p);
        for (int j = low; j <= phi.n; ++j) {
            const Q scale = p_pow(p, -j);
            const int level = int(std::max<long>({long(m), long(e21), j - va}));
            cd shell = unit_sum([&](long r) { return phi_tilde(phi, scale * Q(r), psi, place) * chi.unit_value(r); },
                                level, place);
            total += std::pow(x, j) * shell;
        }
        return total;
    }
    if (chi.ramified()) return 0.0;
    const cd unit_mass = 1.0 - 1.0 / q;
    const int high = phi.n + tail_length(1.0 - s.real(), q);
    for (int j = high; j >= low; --j) total += std::pow(x, j) * phi_tilde(phi, p_pow(p, -j), psi, place) * unit_mass;
    return total;
}

namespace {

// Valuation of 1 - r^2 capped at cap.
long depth_of(long r, long p, long cap) {
    Z d = Z(1) - Z(r) * Z(r);
    if (d == 0) return cap;
    long v = 0;
    while (v < cap && d % p == 0) {
        d /= p;
        ++v;
    }
    return v;
}

Q measure_count(int n, const Place& place, bool exact_level) {
    if (!place.is_finite()) throw DomainError("measure: finite place required");
    if (n < 1) throw DomainError("measure: n must be at least 1");
    const long p = place.p;
    const int level = std::max(n, two_e_plus_one(p));
    const long mod = ipow(p, level);
    long count = 0;
    for (long r = 1; r < mod; ++r) {
        if (r % p == 0) continue;
        long v = depth_of(r, p, level);
        if (exact_level ? v == n - 1 : v >= n) ++count;
    }
    Q out(count, mod);
    out.canonicalize();
    return out;
}

}  // namespace

Q measure_H(int n, const Place& place) { return measure_count(n, place, false); }
Q measure_D(int n, const Place& place) { return measure_count(n, place, true); }

}  // namespace mpls
