#include "mpls/lfunc.hpp"

#include "mpls/weil.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mpls {

namespace {

bool close(cd a, cd b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(a)); }

std::string fmt_list(const std::vector<cd>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

// Removes from a and b every pair that matches within tol.
void cancel_common(std::vector<cd>& a, std::vector<cd>& b, double tol) {
    std::vector<bool> used(b.size(), false);
    std::vector<cd> rest_a;
    for (const cd& x : a) {
        bool hit = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && close(x, b[j], tol)) {
                used[j] = true;
                hit = true;
                break;
            }
        }
        if (!hit) rest_a.push_back(x);
    }
    std::vector<cd> rest_b;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!used[j]) rest_b.push_back(b[j]);
    a = std::move(rest_a);
    b = std::move(rest_b);
}

void sort_params(std::vector<cd>& v) {
    std::sort(v.begin(), v.end(), [](cd x, cd y) {
        double ax = std::arg(x), ay = std::arg(y);
        if (ax != ay) return ax < ay;
        return std::abs(x) < std::abs(y);
    });
}

}  // namespace

GammaRat GammaRat::constant(cd c) {
    GammaRat r;
    r.scalar = c;
    return r;
}

GammaRat GammaRat::monomial(cd c, int degree) {
    GammaRat r;
    r.scalar = c;
    r.degree = degree;
    return r;
}

GammaRat GammaRat::one_minus(cd beta, int power) {
    GammaRat r;
    if (beta == cd(0.0)) return r;
    switch (power) {
    case 1:
        r.zeros = {beta};
        break;
    case 2: {
        cd root = std::sqrt(beta);
        r.zeros = {root, -root};
        break;
    }
    case -1:
        r.scalar = -beta;
        r.degree = -1;
        r.zeros = {1.0 / beta};
        break;
    case -2: {
        cd root = std::sqrt(beta);
        r.scalar = -beta;
        r.degree = -2;
        r.zeros = {1.0 / root, -1.0 / root};
        break;
    }
    default:
        throw DomainError("one_minus: power must be in {-2, -1, 1, 2}");
    }
    return r;
}

GammaRat GammaRat::operator*(const GammaRat& o) const {
    GammaRat r;
    r.scalar = scalar * o.scalar;
    r.degree = degree + o.degree;
    r.zeros = zeros;
    r.zeros.insert(r.zeros.end(), o.zeros.begin(), o.zeros.end());
    r.poles = poles;
    r.poles.insert(r.poles.end(), o.poles.begin(), o.poles.end());
    r.reduce();
    return r;
}

GammaRat GammaRat::inverse() const {
    if (scalar == cd(0.0)) throw DomainError("GammaRat: inverse of zero");
    GammaRat r;
    r.scalar = 1.0 / scalar;
    r.degree = -degree;
    r.zeros = poles;
    r.poles = zeros;
    return r;
}

GammaRat GammaRat::operator/(const GammaRat& o) const { return *this * o.inverse(); }

GammaRat GammaRat::pow(int k) const {
    GammaRat base = k < 0 ? inverse() : *this;
    GammaRat r;
    for (int i = 0; i < std::abs(k); ++i) r = r * base;
    return r;
}

GammaRat GammaRat::substitute(int a, double b, double q) const {
    if (a != 1 && a != -1 && a != 2 && a != -2) throw DomainError("substitute: a must be in {-2, -1, 1, 2}");
    // Y -> q^{-b} Y^a
    double shift = std::pow(q, -b);
    GammaRat r = monomial(scalar * std::pow(shift, degree), a * degree);
    for (const cd& z : zeros) r = r * one_minus(z * shift, a);
    for (const cd& p : poles) r = r / one_minus(p * shift, a);
    return r;
}

GammaRat& GammaRat::reduce(double tol) {
    cancel_common(zeros, poles, tol);
    sort_params(zeros);
    sort_params(poles);
    return *this;
}

cd GammaRat::eval(cd y) const {
    cd num = scalar * std::pow(y, degree);
    cd den = 1.0;
    for (const cd& z : zeros) num *= 1.0 - z * y;
    for (const cd& p : poles) den *= 1.0 - p * y;
    if (std::abs(den) < 1e-300) throw DomainError("GammaRat: evaluation at a pole");
    return num / den;
}

cd GammaRat::eval_s(cd s, double q) const { return eval(std::exp(-s * std::log(q))); }

int GammaRat::order_at(cd y0, double tol) const {
    int order = 0;
    for (const cd& z : zeros)
        if (std::abs(1.0 - z * y0) <= tol) ++order;
    for (const cd& p : poles)
        if (std::abs(1.0 - p * y0) <= tol) --order;
    return order;
}

bool GammaRat::is_monomial(double tol) const {
    GammaRat r = *this;
    r.reduce(tol);
    return r.zeros.empty() && r.poles.empty();
}

bool equals(const GammaRat& a, const GammaRat& b, double tol, std::string* why) {
    GammaRat x = a, y = b;
    x.reduce(tol);
    y.reduce(tol);
    std::ostringstream os;
    bool ok = true;
    if (!close(x.scalar, y.scalar, tol)) {
        os << "scalar " << x.scalar << " vs " << y.scalar << "; ";
        ok = false;
    }
    if (x.degree != y.degree) {
        os << "degree " << x.degree << " vs " << y.degree << "; ";
        ok = false;
    }
    std::vector<cd> za = x.zeros, zb = y.zeros, pa = x.poles, pb = y.poles;
    cancel_common(za, zb, tol);
    cancel_common(pa, pb, tol);
    if (!za.empty() || !zb.empty()) {
        os << "unmatched zeros " << fmt_list(za) << " vs " << fmt_list(zb) << "; ";
        ok = false;
    }
    if (!pa.empty() || !pb.empty()) {
        os << "unmatched poles " << fmt_list(pa) << " vs " << fmt_list(pb) << "; ";
        ok = false;
    }
    if (why) *why = os.str();
    return ok;
}

bool SatakeParams::unitary(double tol) const {
    return std::all_of(values.begin(), values.end(), [tol](cd v) { return std::abs(std::abs(v) - 1.0) <= tol; });
}

GammaRat l_factor(cd alpha, double shift, double q) {
    if (alpha == cd(0.0)) throw DomainError("l_factor: alpha must be nonzero");
    return GammaRat::one_minus(alpha * std::pow(q, -shift), 1).inverse();
}

GammaRat l_factor(const MultiplicativeCharacter& chi, int a, double b) {
    if (chi.ramified()) return GammaRat{};
    return GammaRat::one_minus(chi.value_at_pi() * std::pow(double(chi.p()), -b), a).inverse();
}

GammaRat tate_gamma_sym(cd alpha, double q, double shift) {
    // L(alpha^{-1}, 1 - s) / L(alpha, s)
    GammaRat g = GammaRat::one_minus(alpha, 1) / GammaRat::one_minus(1.0 / (alpha * q), -1);
    return shift == 0.0 ? g : g.substitute(1, shift, q);
}

GammaRat tate_gamma_sym(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi, double shift) {
    double q = double(chi.p());
    if (!psi.normalized(chi.p())) throw DomainError("tate_gamma_sym: psi must be normalized");
    if (!chi.ramified()) return tate_gamma_sym(chi.value_at_pi(), q, shift);
    int m = chi.conductor();
    cd scalar = std::pow(chi.value_at_pi(), m) * std::pow(q, m) * std::conj(gauss_sum(chi, psi));
    GammaRat g = GammaRat::monomial(scalar, m);
    return shift == 0.0 ? g : g.substitute(1, shift, q);
}

GammaRat sym2_gamma(const SatakeParams& mu, double q) {
    GammaRat r;
    for (std::size_t i = 0; i < mu.values.size(); ++i)
        for (std::size_t j = i; j < mu.values.size(); ++j)
            r = r * tate_gamma_sym(mu.values[i] * mu.values[j], q).substitute(2, 0.0, q);
    return r;
}

GammaRat rankin_gamma(const SatakeParams& a, const SatakeParams& b, double q, double shift) {
    GammaRat r;
    for (const cd& x : a.values)
        for (const cd& y : b.values) r = r * tate_gamma_sym(x * y, q, shift);
    return r;
}

GammaRat metaplectic_gamma_ps(const SatakeParams& eta, const SatakeParams& alpha, double q) {
    GammaRat r;
    for (const cd& e : eta.values)
        for (const cd& a : alpha.values) r = r * tate_gamma_sym(a / e, q) * tate_gamma_sym(e * a, q);
    return r;
}

GammaRat L_psi_sym(const SatakeParams& eta, const SatakeParams& alpha, double q, double shift) {
    GammaRat r;
    for (const cd& e : eta.values)
        for (const cd& a : alpha.values) r = r * l_factor(e * a, shift, q) * l_factor(a / e, shift, q);
    return r;
}

GammaRat metaplectic_gamma_ratio(const SatakeParams& eta, const SatakeParams& alpha, double q) {
    SatakeParams dual;
    for (const cd& a : alpha.values) dual.values.push_back(1.0 / a);
    return L_psi_sym(eta, dual, q).substitute(-1, 1.0, q) / L_psi_sym(eta, alpha, q);
}

SL2Closed sl2_localcoef_closed(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi) {
    long p = chi.p();
    Place place = Place::finite(p);
    MultiplicativeCharacter chi2 = chi.pow(2);
    SL2Closed out;
    if (chi2.ramified()) {
        out.known = false;
        return out;
    }
    int e = p == 2 ? 1 : 0;
    int m = chi.conductor();
    int n = int(psi.conductor(p));
    AdditiveCharacter psi0 = psi.normalization(p);

    cd gamma_pi_n = gamma_psi(q_pow(Q(p), n), psi0, place).value();
    cd c_minus = c_psi(Q(-1), psi0, place);
    cd chi_term = chi(Q(-1)) * std::pow(chi.value_at_pi(), 2 * e - m - n);
    out.k = c_minus * chi_term / (gamma_pi_n * gauss_sum(chi, psi0)) * std::pow(double(p), -0.5 * m);
    out.d = m - 2 * e + n;

    GammaRat l_ratio = l_factor(chi, 1, 0.5) * l_factor(chi.pow(-2), -2, 1.0) /
                       (l_factor(chi.inverse(), -1, 0.5) * l_factor(chi2, 2, 0.0));
    out.value = GammaRat::monomial(out.k, -out.d) * l_ratio;
    return out;
}

GammaRat gl_localcoef_sym(const MultiplicativeCharacter& beta, const AdditiveCharacter& psi) {
    long p = beta.p();
    int m = beta.conductor();
    int n = int(psi.conductor(p));
    AdditiveCharacter psi_inv{-psi.a};
    cd scalar = std::pow(beta.value_at_pi(), m - n) / gauss_sum(beta, psi_inv);
    GammaRat r = GammaRat::monomial(scalar, m - n);
    return r * l_factor(beta.inverse(), -1, 1.0) / l_factor(beta, 1, 0.0);
}

namespace {

void require_odd_unramified(const SatakeParams& mu, long p) {
    if (p == 2 || !is_prime(p)) throw DomainError("Sp_2m local coefficient: requires an odd prime");
    for (const cd& v : mu.values)
        if (v == cd(0.0)) throw DomainError("Sp_2m local coefficient: Satake parameters must be nonzero");
}

}  // namespace

GammaRat sp_localcoef_product(const SatakeParams& mu, long p) {
    require_odd_unramified(mu, p);
    AdditiveCharacter psi{1};
    double q = double(p);
    GammaRat r;
    for (const cd& a : mu.values) r = r * sl2_localcoef_closed(MultiplicativeCharacter::unramified(p, a), psi).value;
    for (std::size_t i = 0; i < mu.values.size(); ++i)
        for (std::size_t j = i + 1; j < mu.values.size(); ++j) {
            auto beta = MultiplicativeCharacter::unramified(p, mu.values[i] * mu.values[j]);
            r = r * gl_localcoef_sym(beta, psi).substitute(2, 0.0, q);
        }
    return r;
}

GammaRat sp_localcoef_closed(const SatakeParams& mu, long p) {
    require_odd_unramified(mu, p);
    double q = double(p);
    GammaRat denom;
    for (const cd& a : mu.values) denom = denom * tate_gamma_sym(a, q, 0.5);
    return sym2_gamma(mu, q) / denom;
}

GammaRat beta_product(const GammaRat& forward, const GammaRat& backward) {
    return forward * backward.substitute(-1, 0.0, 1.0);
}

ReducibilityVerdict reducibility_ps(const std::vector<MultiplicativeCharacter>& alphas, const AdditiveCharacter& psi) {
    if (alphas.empty()) throw DomainError("reducibility: empty character list");
    long p = alphas.front().p();
    for (const auto& a : alphas) {
        if (a.p() != p) throw DomainError("reducibility: characters must share one prime");
        if (std::abs(std::abs(a.value_at_pi()) - 1.0) > 1e-9)
            throw DomainError("reducibility: characters must be unitary");
    }
    ReducibilityVerdict out;
    int n = int(alphas.size());
    auto gl_pair = [&](const MultiplicativeCharacter& beta) {
        return beta_product(gl_localcoef_sym(beta, psi), gl_localcoef_sym(beta.inverse(), psi)).order_at();
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ReflectionReport w{"w", i + 1, j + 1, alphas[i].approx_equal(alphas[j]), 0};
            w.order = gl_pair(alphas[i] * alphas[j].inverse());
            out.reflections.push_back(w);
            ReflectionReport wp{"w'", i + 1, j + 1, (alphas[i] * alphas[j]).approx_equal(MultiplicativeCharacter::unramified(p, 1.0)), 0};
            wp.order = gl_pair(alphas[i] * alphas[j]);
            out.reflections.push_back(wp);
        }
    for (int r = 0; r < n; ++r) {
        const auto& chi = alphas[r];
        ReflectionReport t{"tau", r + 1, r + 1, chi.pow(2).approx_equal(MultiplicativeCharacter::unramified(p, 1.0)), 0};
        SL2Closed f = sl2_localcoef_closed(chi, psi);
        SL2Closed b = sl2_localcoef_closed(chi.inverse(), psi);
        // chi^2 ramified: both factors are monomials, no zero at s = 0
        t.order = (f.known && b.known) ? beta_product(f.value, b.value).order_at() : 0;
        out.reflections.push_back(t);
    }
    for (const auto& r : out.reflections)
        if (r.in_stabilizer && r.order <= 0) out.irreducible = false;
    return out;
}

}  // namespace mpls
