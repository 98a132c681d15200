#include "mpls/cocycle.hpp"

#include <cmath>

namespace mpls {

const LerayConvention kRaoConvention{};

LerayForm leray_form(const QMatrix& s1, const QMatrix& s2, const LerayConvention& conv) {
    const int n = half_dim(s1);
    if (half_dim(s2) != n) throw DomainError("leray_form: rank mismatch");
    const QMatrix s2inv = s2.inverse();
    QMatrix b1(n, 2 * n);
    for (int i = 0; i < n; ++i) b1(i, n + i) = 1;
    QMatrix b2 = s1.block(n, 0, n, 2 * n);
    QMatrix b3 = s2inv.block(n, 0, n, 2 * n);
    if (conv.reverse_triple) std::swap(b2, b3);

    QMatrix stacked(3 * n, 2 * n);
    stacked.set_block(0, 0, b1);
    stacked.set_block(n, 0, b2);
    stacked.set_block(2 * n, 0, b3);
    const QMatrix ker = stacked.left_kernel();
    const int dim = ker.rows();

    // x1 = c1 B1, x2 = c2 B2 for each kernel vector (c1, c2, c3).
    const QMatrix x1 = ker.block(0, 0, dim, n) * b1;
    const QMatrix x2 = ker.block(0, n, dim, n) * b2;
    const QMatrix pair = x1 * J(n) * x2.transpose();
    QMatrix form(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) form(a, b) = (pair(a, b) + pair(b, a)) / 2;
    if (conv.negate) form = -form;

    LerayForm lf;
    lf.diag = diagonalize_symmetric(form).diag;
    lf.rank = static_cast<int>(lf.diag.size());
    lf.j1 = cell_index(s1);
    lf.j2 = cell_index(s2);
    lf.j = cell_index(s1 * s2);
    const int twice_l = lf.j1 + lf.j2 - lf.j - lf.rank;
    if (twice_l < 0 || twice_l % 2 != 0) throw std::logic_error("leray_form: 2l is not a nonnegative even integer");
    lf.l = twice_l / 2;
    return lf;
}

int hasse_with(const std::vector<Q>& diag, const Place& place, const LerayConvention& conv) {
    int h = hasse_invariant(diag, place);
    if (conv.hasse_with_diagonal)
        for (const auto& a : diag) h *= hilbert_symbol(a, a, place);
    return h;
}

int rao_cocycle(const QMatrix& s1, const QMatrix& s2, const Place& place, const LerayConvention& conv) {
    const Q x1 = x_value(s1), x2 = x_value(s2), x12 = x_value(s1 * s2);
    const LerayForm lf = leray_form(s1, s2, conv);
    Q d = 1;
    for (const auto& a : lf.diag) d *= a;
    int c = hilbert_symbol(x1, x2, place) * hilbert_symbol(-x1 * x2, x12, place);
    c *= hilbert_symbol(lf.l % 2 ? Q(-1) : Q(1), d, place);
    if ((lf.l * (lf.l - 1) / 2) % 2 == 1) c *= hilbert_symbol(Q(-1), Q(-1), place);
    c *= hasse_with(lf.diag, place, conv);
    return c;
}

Q kubota_x(const QMatrix& g) {
    if (g.rows() != 2 || g.cols() != 2) throw DomainError("kubota_x: expected a 2 x 2 matrix");
    return g(1, 0) != 0 ? g(1, 0) : g(1, 1);
}

int kubota_cocycle(const QMatrix& g1, const QMatrix& g2, const Place& place) {
    const Q x1 = kubota_x(g1), x2 = kubota_x(g2), x12 = kubota_x(g1 * g2);
    return hilbert_symbol(x1, x2, place) * hilbert_symbol(-x1 * x2, x12, place);
}

MetaplecticElement mp_identity(int n) { return {QMatrix::identity(2 * n), 1}; }

MetaplecticElement mp_mul(const MetaplecticElement& x, const MetaplecticElement& y, const Place& place) {
    if (x.g.rows() != y.g.rows()) throw DomainError("mp_mul: rank mismatch");
    return {x.g * y.g, x.eps * y.eps * rao_cocycle(x.g, y.g, place)};
}

MetaplecticElement mp_inv(const MetaplecticElement& x, const Place& place) {
    const QMatrix gi = x.g.inverse();
    return {gi, x.eps * rao_cocycle(x.g, gi, place)};
}

int iota2(const QMatrix& k, long p) {
    if (p == 2) throw DomainError("iota2 is defined at odd p only");
    if (k.rows() != 2 || k.cols() != 2) throw DomainError("iota2: expected a 2 x 2 matrix");
    const Q& c = k(1, 0);
    if (c != 0 && valuation(c, p) > 0) return hilbert_symbol(c, k(1, 1), Place::finite(p));
    return 1;
}

int v_lambda(const QMatrix& g, const Q& lambda, const Place& place) {
    if (lambda == 0) throw DomainError("v_lambda: lambda must be nonzero");
    const int j = cell_index(g);
    int v = hilbert_symbol(x_value(g), q_pow(lambda, j + 1), place);
    if ((j * (j - 1) / 2) % 2 == 1) v *= hilbert_symbol(lambda, lambda, place);
    return v;
}

int gsp_cocycle(const QMatrix& g, const QMatrix& h, const Place& place) {
    const Q lh = similitude(h);
    const QMatrix pg = p_of(g);
    return v_lambda(pg, lh, place) * rao_cocycle(conj_lambda(pg, lh), p_of(h), place);
}

MetaplecticElement tau_bar(const MetaplecticElement& x) {
    const QMatrix s = sigma_0(half_dim(x.g));
    return {s * x.g.transpose() * s.inverse(), x.eps};
}

namespace {

// Reduce r into [0, m).
Q reduce_mod(const Q& r, long m) {
    Q t = r / m;
    Z fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return r - Q(fl * m);
}

int sin_sign(const Q& r) {
    const Q t = reduce_mod(r, 2);
    if (t == 0 || t == 1) return 0;
    return t < 1 ? 1 : -1;
}

int cos_sign(const Q& r) { return sin_sign(r + Q(1, 2)); }

int real_sign_kubota(int s1, int c1, int s2, int c2, int s12, int c12) {
    // x(k(t)) = -sin t if sin t != 0, else cos t; only signs matter at the real place.
    const int x1 = s1 != 0 ? -s1 : c1;
    const int x2 = s2 != 0 ? -s2 : c2;
    const int x12 = s12 != 0 ? -s12 : c12;
    const Place r = Place::real();
    return hilbert_symbol(Q(x1), Q(x2), r) * hilbert_symbol(Q(-x1 * x2), Q(x12), r);
}

}  // namespace

int so2_theta(const Q& r) {
    const Q t = reduce_mod(r, 4);
    return (t <= 1 || t > 3) ? 1 : -1;
}

QMatrix so2_k_signs(const Q& r) {
    const int s = sin_sign(r), c = cos_sign(r);
    return QMatrix::from_rows({{Q(c), Q(s)}, {Q(-s), Q(c)}});
}

int so2_cocycle(const Q& r1, const Q& r2) {
    return real_sign_kubota(sin_sign(r1), cos_sign(r1), sin_sign(r2), cos_sign(r2), sin_sign(r1 + r2),
                            cos_sign(r1 + r2));
}

int so2_cocycle(double t1, double t2) {
    auto sgn = [](double v) { return std::abs(v) < 1e-12 ? 0 : (v > 0 ? 1 : -1); };
    return real_sign_kubota(sgn(std::sin(t1)), sgn(std::cos(t1)), sgn(std::sin(t2)), sgn(std::cos(t2)),
                            sgn(std::sin(t1 + t2)), sgn(std::cos(t1 + t2)));
}

}  // namespace mpls
