#include "mpls/symplectic.hpp"

#include <algorithm>
#include <random>

namespace mpls {

int half_dim(const QMatrix& g) {
    if (g.rows() != g.cols() || g.rows() % 2 != 0) throw DomainError("expected a 2n x 2n matrix");
    return g.rows() / 2;
}

QMatrix J(int n) {
    QMatrix j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
    }
    return j;
}

bool is_symplectic(const QMatrix& g) {
    const int n = half_dim(g);
    return g * J(n) * g.transpose() == J(n);
}

Q similitude(const QMatrix& g) {
    const int n = half_dim(g);
    const QMatrix m = g * J(n) * g.transpose();
    const Q lambda = m(0, n);
    if (lambda == 0 || m != J(n).scaled(lambda)) throw DomainError("matrix is not a symplectic similitude");
    return lambda;
}

namespace {

void check_set(int n, const IndexSet& S) {
    for (int i : S)
        if (i < 0 || i >= n) throw DomainError("index set entry out of range");
}

QMatrix e_S(int n, const IndexSet& S) {
    QMatrix e(n, n);
    for (int i : S) e(i, i) = 1;
    return e;
}

QMatrix square_block(const QMatrix& g, int bi, int bj) {
    const int n = half_dim(g);
    return g.block(bi * n, bj * n, n, n);
}

}  // namespace

QMatrix tau_S(int n, const IndexSet& S) {
    check_set(n, S);
    const QMatrix e = e_S(n, S);
    const QMatrix rest = QMatrix::identity(n) - e;
    return blocks(rest, -e, e, rest);
}

QMatrix tau(int n) {
    IndexSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return tau_S(n, all);
}

QMatrix a_S(int n, const IndexSet& S, const Q& lambda) {
    check_set(n, S);
    if (lambda == 0) throw DomainError("a_S: lambda must be nonzero");
    QMatrix m = QMatrix::identity(2 * n);
    for (int i : S) {
        m(i, i) = 1 / lambda;
        m(n + i, n + i) = lambda;
    }
    return m;
}

QMatrix hat(const QMatrix& g) {
    const int n = g.rows();
    return blocks(g, QMatrix(n, n), QMatrix(n, n), g.inverse().transpose());
}

QMatrix n_k(const QMatrix& k) {
    if (!k.is_symmetric()) throw DomainError("n_k: k must be symmetric");
    const int n = k.rows();
    return blocks(QMatrix::identity(n), k, QMatrix(n, n), QMatrix::identity(n));
}

QMatrix p_k(const QMatrix& k) {
    if (!k.is_symmetric()) throw DomainError("p_k: k must be symmetric");
    const int n = k.rows();
    return blocks(k, -QMatrix::identity(n), QMatrix(n, n), k.inverse());
}

QMatrix i_lambda(int n, const Q& lambda) {
    if (lambda == 0) throw DomainError("i(lambda): lambda must be nonzero");
    QMatrix m = QMatrix::identity(2 * n);
    for (int i = 0; i < n; ++i) m(n + i, n + i) = lambda;
    return m;
}

QMatrix w_perm(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<int> seen(n, 0);
    QMatrix w(n, n);
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || seen[perm[i]]++) throw DomainError("w_perm: not a permutation");
        w(i, perm[i]) = 1;
    }
    return w;
}

QMatrix omega_n(int n) {
    QMatrix w(n, n);
    for (int i = 0; i < n; ++i) w(i, n - 1 - i) = 1;
    return w;
}

QMatrix omega_prime(int m) {
    const QMatrix w = omega_n(m);
    return blocks(QMatrix(m, m), -w, w, QMatrix(m, m));
}

QMatrix epsilon_n(int n) {
    QMatrix e(n, n);
    for (int i = 0; i < n; ++i) e(i, i) = (i % 2 == 0) ? 1 : -1;
    return e;
}

QMatrix sigma_0(int n) {
    const QMatrix e = epsilon_n(n);
    return blocks(QMatrix(n, n), e, e, QMatrix(n, n));
}

QMatrix embed_i(int r, int n, const QMatrix& g) {
    if (half_dim(g) != r || r > n) throw DomainError("embed_i: rank mismatch");
    QMatrix m = QMatrix::identity(2 * n);
    const int off = n - r;
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) m.set_block(bi * n + off, bj * n + off, g.block(bi * r, bj * r, r, r));
    return m;
}

QMatrix embed_j(int r, int n, const QMatrix& g) {
    if (half_dim(g) != r || r > n) throw DomainError("embed_j: rank mismatch");
    QMatrix m = QMatrix::identity(2 * n);
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) m.set_block(bi * n, bj * n, g.block(bi * r, bj * r, r, r));
    return m;
}

QMatrix siegel(const QMatrix& a, const QMatrix& b) {
    const int n = a.rows();
    return blocks(a, b, QMatrix(n, n), a.inverse().transpose());
}

bool in_siegel(const QMatrix& g) { return square_block(g, 1, 0).is_zero(); }

int cell_index(const QMatrix& g) { return square_block(g, 1, 0).rank(); }

namespace {

// Invertible P, Q with P c Q = diag(I_j, 0).
void rank_normal_form(const QMatrix& c, QMatrix& P, QMatrix& Qm, int& j) {
    const int n = c.rows();
    QMatrix m(c);
    P = QMatrix::identity(n);
    Qm = QMatrix::identity(n);
    j = 0;
    for (int k = 0; k < n; ++k) {
        int pr = -1, pc = -1;
        for (int i = k; i < n && pr < 0; ++i)
            for (int l = k; l < n; ++l)
                if (m(i, l) != 0) { pr = i; pc = l; break; }
        if (pr < 0) break;
        for (int l = 0; l < n; ++l) {
            std::swap(m(k, l), m(pr, l));
            std::swap(P(k, l), P(pr, l));
        }
        for (int i = 0; i < n; ++i) {
            std::swap(m(i, k), m(i, pc));
            std::swap(Qm(i, k), Qm(i, pc));
        }
        const Q inv = 1 / m(k, k);
        for (int l = 0; l < n; ++l) {
            m(k, l) *= inv;
            P(k, l) *= inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            const Q f = m(i, k);
            for (int l = 0; l < n; ++l) {
                m(i, l) -= f * m(k, l);
                P(i, l) -= f * P(k, l);
            }
        }
        for (int l = 0; l < n; ++l) {
            if (l == k || m(k, l) == 0) continue;
            const Q f = m(k, l);
            for (int i = 0; i < n; ++i) {
                m(i, l) -= f * m(i, k);
                Qm(i, l) -= f * Qm(i, k);
            }
        }
        ++j;
    }
}

}  // namespace

BruhatData bruhat_factor(const QMatrix& g) {
    if (!is_symplectic(g)) throw DomainError("bruhat_factor: matrix is not symplectic");
    const int n = half_dim(g);
    QMatrix P, Qm;
    int j = 0;
    rank_normal_form(square_block(g, 1, 0), P, Qm, j);
    IndexSet S(j);
    for (int i = 0; i < j; ++i) S[i] = i;

    // hat(u) g hat(v) has lower-left block P C Q.
    const QMatrix hu = hat(P.inverse().transpose());
    const QMatrix hv = hat(Qm);
    const QMatrix g1 = hu * g * hv;

    QMatrix k(n, n), kp(n, n);
    for (int a = 0; a < j; ++a)
        for (int b = 0; b < j; ++b) {
            k(a, b) = -g1(a, b);
            kp(a, b) = -g1(n + a, n + b);
        }
    const QMatrix g2 = n_k(k) * g1 * n_k(kp);
    const QMatrix ts = tau_S(n, S);
    const QMatrix p = g2 * ts.inverse();
    if (!in_siegel(p)) throw std::logic_error("bruhat_factor: reduction did not reach the Siegel parabolic");

    BruhatData d;
    d.S = S;
    d.p1 = hu.inverse() * n_k(-k) * p;
    d.p2 = n_k(-kp) * hv.inverse();
    if (d.p1 * ts * d.p2 != g) throw std::logic_error("bruhat_factor: reassembly failed");
    return d;
}

Q x_value(const QMatrix& g) {
    const int n = half_dim(g);
    if (in_siegel(g)) return g.block(0, 0, n, n).det();
    const BruhatData d = bruhat_factor(g);
    return d.p1.block(0, 0, n, n).det() * d.p2.block(0, 0, n, n).det();
}

SquareClass x_invariant(const QMatrix& g, const Place& place) { return square_class(x_value(g), place); }

QMatrix p_of(const QMatrix& g) {
    const Q lambda = similitude(g);
    return i_lambda(half_dim(g), 1 / lambda) * g;
}

QMatrix conj_lambda(const QMatrix& g, const Q& lambda) {
    const int n = half_dim(g);
    return i_lambda(n, 1 / lambda) * g * i_lambda(n, lambda);
}

namespace {

Q random_param(std::mt19937_64& rng, long prime, bool nonzero) {
    static const long nums[] = {1, -1, 2, -2, 1, -1, 0};
    for (;;) {
        const int pick = static_cast<int>(rng() % 9);
        Q v;
        if (pick < 7) v = nums[pick];
        else if (pick == 7) v = Q(rng() % 2 ? 1 : -1, 2);
        else v = rng() % 2 ? prime : -prime;
        v.canonicalize();
        if (!nonzero || v != 0) return v;
    }
}

QMatrix random_gl(int n, std::mt19937_64& rng, long prime) {
    QMatrix g = QMatrix::identity(n);
    switch (rng() % 3) {
        case 0: {
            const int i = static_cast<int>(rng() % n);
            g(i, i) = random_param(rng, prime, true);
            break;
        }
        case 1: {
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            g = w_perm(perm);
            break;
        }
        default: {
            if (n < 2) {
                g(0, 0) = random_param(rng, prime, true);
                break;
            }
            const int i = static_cast<int>(rng() % n);
            int j = static_cast<int>(rng() % (n - 1));
            if (j >= i) ++j;
            g(i, j) = random_param(rng, prime, false);
        }
    }
    return g;
}

QMatrix random_sym(int n, std::mt19937_64& rng, long prime) {
    QMatrix k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i != j && rng() % 2) continue;
            k(i, j) = k(j, i) = random_param(rng, prime, false);
        }
    return k;
}

}  // namespace

QMatrix random_element(int n, int word_length, std::uint64_t seed, long prime) {
    if (n < 1) throw DomainError("random_element: n must be positive");
    if (word_length < 0 || word_length > 8) throw DomainError("random_element: word length must be in [0, 8]");
    std::mt19937_64 rng(seed);
    QMatrix g = QMatrix::identity(2 * n);
    for (int w = 0; w < word_length; ++w) {
        QMatrix h;
        switch (rng() % 4) {
            case 0: {
                IndexSet S;
                for (int i = 0; i < n; ++i)
                    if (rng() % 2) S.push_back(i);
                h = tau_S(n, S);
                break;
            }
            case 1: h = hat(random_gl(n, rng, prime)); break;
            default: h = n_k(random_sym(n, rng, prime)); break;
        }
        g = g * h;
    }
    if (!is_symplectic(g)) throw std::logic_error("random_element produced a non-symplectic matrix");
    return g;
}

QMatrix random_siegel(int n, std::uint64_t seed, long prime) {
    std::mt19937_64 rng(seed);
    QMatrix a = QMatrix::identity(n);
    for (int s = 0; s < 3; ++s) a = a * random_gl(n, rng, prime);
    const QMatrix k = random_sym(n, rng, prime);
    return hat(a) * n_k(k);
}

QMatrix random_symmetric(int n, std::uint64_t seed, long prime, bool invertible) {
    std::mt19937_64 rng(seed);
    for (;;) {
        QMatrix k = random_sym(n, rng, prime);
        if (!invertible || k.det() != 0) return k;
    }
}

}  // namespace mpls
