#include "mpls/symplectic.hpp"
#include "support.hpp"

using namespace mpls;

namespace {

IndexSet sym_diff(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    for (int i : a)
        if (std::find(b.begin(), b.end(), i) == b.end()) out.push_back(i);
    for (int i : b)
        if (std::find(a.begin(), a.end(), i) == a.end()) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    for (int i : a)
        if (std::find(b.begin(), b.end(), i) != b.end()) out.push_back(i);
    return out;
}

IndexSet subset(int n, unsigned mask) {
    IndexSet s;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(i);
    return s;
}

}  // namespace

TEST_CASE("Weyl generators") {
    for (int n = 1; n <= 3; ++n) {
        IndexSet all = subset(n, (1u << n) - 1);
        CHECK(tau_S(n, all) * tau_S(n, all) == a_S(n, all));
        CHECK(a_S(n, all) == QMatrix::identity(2 * n).scaled(-1));
        for (unsigned m1 = 0; m1 < (1u << n); ++m1)
            for (unsigned m2 = 0; m2 < (1u << n); ++m2) {
                IndexSet s1 = subset(n, m1), s2 = subset(n, m2);
                CHECK(tau_S(n, s1) * tau_S(n, s2) == tau_S(n, sym_diff(s1, s2)) * a_S(n, intersect(s1, s2)));
            }
    }
}

TEST_CASE("generators are symplectic") {
    auto r = test::rng(4);
    for (int n = 1; n <= 3; ++n) {
        QMatrix g(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g(i, j) = test::random_q(r, 6);
        } while (g.det() == 0);
        CHECK(is_symplectic(hat(g)));
        CHECK(is_symplectic(n_k(random_symmetric(n, 17, 3, false))));
        CHECK(is_symplectic(J(n)));
        CHECK(is_symplectic(hat(omega_n(n))));
        CHECK(is_symplectic(hat(epsilon_n(n))));
        CHECK(similitude(sigma_0(n)) == -1);
        CHECK(similitude(i_lambda(n, Q(5))) == 5);
    }
}

TEST_CASE("Bruhat cells") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(cell_index(random_siegel(n, 8)) == 0);
        CHECK(cell_index(J(n)) == n);
        for (unsigned m = 0; m < (1u << n); ++m) {
            IndexSet s = subset(n, m);
            CHECK(cell_index(tau_S(n, s)) == int(s.size()));
            BruhatData b = bruhat_factor(tau_S(n, s));
            CHECK(b.S.size() == s.size());
            CHECK(b.p1 * tau_S(n, b.S) * b.p2 == tau_S(n, s));
        }
        QMatrix p = random_siegel(n, 21);
        BruhatData bp = bruhat_factor(p);
        CHECK(bp.S.empty());
        CHECK(bp.p1 * bp.p2 == p);
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            QMatrix g = random_element(n, 6, seed);
            BruhatData b = bruhat_factor(g);
            CHECK(in_siegel(b.p1));
            CHECK(in_siegel(b.p2));
            CHECK(b.p1 * tau_S(n, b.S) * b.p2 == g);
        }
    }
}

TEST_CASE("x-invariant") {
    for (const Place& pl : {Place::finite(2), Place::finite(3), Place::real()})
        for (int n = 1; n <= 3; ++n)
            for (unsigned m = 0; m < (1u << n); ++m) {
                IndexSet s = subset(n, m);
                CHECK(x_invariant(tau_S(n, s), pl).rep == 1);
                CHECK(x_invariant(a_S(n, s), pl) == square_class(Q(s.size() % 2 ? -1 : 1), pl));
                QMatrix p = random_siegel(n, 100 + m);
                CHECK(x_invariant(p, pl) == square_class(p.block(0, 0, n, n).det(), pl));
            }
}

TEST_CASE("similitude conjugation") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(p_of(i_lambda(n, Q(7))) == QMatrix::identity(2 * n));
        for (const Q& lam : {Q(2), Q(-3), make_q(5, 7)}) {
            for (unsigned m = 0; m < (1u << n); ++m) {
                IndexSet s = subset(n, m);
                // With tau_S and i(lambda) as defined, tau_S^lambda = a_S(1/lambda) tau_S = tau_S a_S(lambda).
                CHECK(conj_lambda(tau_S(n, s), lam) == a_S(n, s, 1 / lam) * tau_S(n, s));
                CHECK(conj_lambda(tau_S(n, s), lam) == tau_S(n, s) * a_S(n, s, lam));
            }
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                QMatrix g = random_element(n, 5, seed);
                int j = cell_index(g);
                for (const Place& pl : {Place::finite(2), Place::finite(3), Place::real()})
                    CHECK(x_invariant(conj_lambda(g, lam), pl) == square_class(q_pow(lam, j) * x_value(g), pl));
            }
        }
    }
}

TEST_CASE("random elements") {
    CHECK(random_element(2, 0, 5) == QMatrix::identity(4));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        QMatrix g = random_element(3, 6, seed);
        CHECK(g * J(3) * g.transpose() == J(3));
        CHECK(random_element(3, 6, seed) == g);
    }
}
