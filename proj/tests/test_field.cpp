#include "mpls/field.hpp"
#include "mpls/matrix.hpp"
#include "support.hpp"

using namespace mpls;
using mpls::test::close;

namespace {

long pmod(long a, long m) { return ((a % m) + m) % m; }

// Unit u (as a residue) is a p-adic square iff it is a square mod p (odd p) or mod 8 (p = 2).
bool unit_is_square_bruteforce(long u, long p) {
    long m = p == 2 ? 8 : p;
    for (long t = 0; t < m; ++t)
        if (pmod(t * t - u, m) == 0) return true;
    return false;
}

long residue(const Q& u, long p, long m) {
    long num = mod_long(u.get_num(), m), den = mod_long(u.get_den(), m);
    for (long inv = 1; inv < m; ++inv)
        if (pmod(den * inv, m) == 1) return pmod(num * inv, m);
    throw DomainError("non-unit denominator");
}

// x is a square iff its valuation is even and its unit part is a square.
bool is_square_bruteforce(const Q& x, long p) {
    if (valuation(x, p) % 2) return false;
    return unit_is_square_bruteforce(residue(unit_part(x, p), p, p == 2 ? 8 : p), p);
}

// (a, b) = 1 iff z^2 = a x^2 + b y^2 has a primitive solution mod p^k; a, b of valuation 0 or 1.
int hilbert_bruteforce(long a, long b, long p) {
    const long m = p == 2 ? 64 : p * p * p;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            if (x % p == 0 && y % p == 0) continue;  // z must then be divisible too; reject non-primitive
            long rhs = pmod(a * x % m * x + b * y % m * y, m);
            for (long z = 0; z < m; ++z)
                if (pmod(z * z - rhs, m) == 0) return 1;
        }
    return -1;
}

}  // namespace

TEST_CASE("rationals parse and print as num/den") {
    CHECK(to_string(parse_q("6/4")) == "3/2");
    CHECK(to_string(parse_q("-7")) == "-7/1");
    CHECK_THROWS_AS(parse_q("1/0"), DomainError);
    CHECK_THROWS_AS(parse_q("abc"), DomainError);
    CHECK(q_pow(Q(2), -3) == make_q(1, 8));
}

TEST_CASE("exact matrix algebra") {
    auto r = test::rng(3);
    for (int t = 0; t < 20; ++t) {
        QMatrix m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = test::random_q(r, 9);
        if (m.det() == 0) continue;
        CHECK(m * m.inverse() == QMatrix::identity(4));
        CHECK((m * m).det() == m.det() * m.det());
        CHECK(m.rank() == 4);
    }
    QMatrix sing = QMatrix::from_rows({{Q(1), Q(2)}, {Q(2), Q(4)}});
    CHECK(sing.rank() == 1);
    CHECK_THROWS_AS(sing.inverse(), DomainError);
    QMatrix k = sing.left_kernel();
    CHECK((k * sing).is_zero());
}

TEST_CASE("valuation") {
    CHECK(valuation(Q(12), Place::finite(2)) == 2);
    CHECK(valuation(make_q(1, 5), Place::finite(5)) == -1);
    CHECK(valuation(Q(7), Place::finite(3)) == 0);
    CHECK_THROWS_AS(valuation(Q(0), 3), DomainError);
    CHECK_THROWS_AS(valuation(Q(2), Place::real()), DomainError);
}

TEST_CASE("square classes") {
    CHECK(square_class(Q(17), Place::finite(2)).rep == 1);
    CHECK(square_class(Q(-4), Place::real()).rep == -1);
    for (long p : {2L, 3L, 5L, 7L}) {
        const long e = p == 2 ? 1 : 0;
        for (long u : {1L, 2L, 3L, 4L, 6L, 11L})
            if (u % p) CHECK(square_class(1 + Q(ipow(p, 2 * e + 1) * u), Place::finite(p)).rep == 1);
    }
    CHECK(square_class_reps(Place::finite(2)).size() == 8);
    CHECK(square_class_reps(Place::finite(13)).size() == 4);
    CHECK(square_class_reps(Place::real()).size() == 2);

    // x / class(x) is a square, checked by residue search.
    auto r = test::rng(11);
    for (long p : {2L, 3L, 5L, 13L}) {
        Place pl = Place::finite(p);
        for (int t = 0; t < 200; ++t) {
            Q x = test::random_q(r);
            Q rep = square_class(x, pl).rep;
            CHECK(is_square_bruteforce(x / rep, p));
        }
    }
}

TEST_CASE("Hilbert symbol") {
    CHECK(hilbert_symbol(Q(2), Q(5), Place::finite(2)) == -1);
    for (const Place& pl : {Place::finite(2), Place::finite(3), Place::finite(5), Place::real()}) {
        for (const Q& a : square_class_reps(pl)) CHECK(hilbert_symbol(a, -a, pl) == 1);
        CHECK(hilbert_symbol(Q(2), Q(2), pl) == hilbert_symbol(Q(2), Q(-1), pl));
    }
    CHECK(hilbert_symbol(Q(-1), Q(-1), Place::real()) == -1);
    CHECK(hilbert_symbol(Q(-1), Q(-1), Place::finite(3)) == 1);

    // Against primitive solutions of z^2 = a x^2 + b y^2.
    for (long p : {2L, 3L, 5L}) {
        Place pl = Place::finite(p);
        for (const Q& a : square_class_reps(pl))
            for (const Q& b : square_class_reps(pl)) {
                long ai = a.get_num().get_si(), bi = b.get_num().get_si();
                CAPTURE(p);
                CAPTURE(ai);
                CAPTURE(bi);
                CHECK(hilbert_symbol(a, b, pl) == hilbert_bruteforce(ai, bi, p));
            }
    }
}

TEST_CASE("diagonalization, Hasse invariant, discriminant") {
    auto d = diagonalize_symmetric(QMatrix::identity(2));
    CHECK(d.rank == 2);
    CHECK(d.diag == std::vector<Q>{1, 1});

    auto h = diagonalize_symmetric(QMatrix::from_rows({{Q(0), Q(1)}, {Q(1), Q(0)}}));
    REQUIRE(h.rank == 2);
    for (const Place& pl : {Place::finite(2), Place::finite(3), Place::real()}) {
        // The hyperbolic plane is <1, -1> up to isometry.
        CHECK(hasse_invariant(h.diag, pl) == hasse_invariant({Q(1), Q(-1)}, pl));
        CHECK(discriminant_class(h.diag, pl) == square_class(Q(-1), pl));
    }
    CHECK(diagonalize_symmetric(QMatrix(3, 3)).rank == 0);

    for (const Place& pl : {Place::finite(2), Place::finite(5), Place::real()}) {
        CHECK(hasse_invariant({Q(1), Q(1), Q(1)}, pl) == 1);
        CHECK(discriminant_class({Q(1), Q(1), Q(1)}, pl).rep == 1);
        CHECK(hasse_invariant({Q(3), Q(-3)}, pl) == 1);
    }
    CHECK(hasse_invariant({Q(-1), Q(-1)}, Place::real()) == -1);

    // Congruent forms share both invariants.
    auto r = test::rng(5);
    for (int t = 0; t < 30; ++t) {
        QMatrix m(3, 3), g(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = test::random_q(r, 7);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g(i, j) = test::random_q(r, 5);
        if (m.det() == 0 || g.det() == 0) continue;
        auto a = diagonalize_symmetric(m), b = diagonalize_symmetric(g.transpose() * m * g);
        for (const Place& pl : {Place::finite(2), Place::finite(3), Place::real()}) {
            CHECK(hasse_invariant(a.diag, pl) == hasse_invariant(b.diag, pl));
            CHECK(discriminant_class(a.diag, pl) == discriminant_class(b.diag, pl));
        }
    }
}

TEST_CASE("additive characters") {
    AdditiveCharacter std_psi{1};
    for (long p : {3L, 5L, 7L}) CHECK(psi_value(std_psi, make_q(1, p), Place::finite(p)).t == make_q(1, p));
    CHECK(psi_value(std_psi, Q(12), Place::finite(3)).t == 0);
    RationalAngle q = psi_value(std_psi, make_q(-1, 4), Place::finite(2));
    CHECK(q.t == make_q(3, 4));
    CHECK(close(q.value(), cd(0, -1)));
    CHECK(AdditiveCharacter{make_q(1, 9)}.conductor(3) == 2);
}

TEST_CASE("multiplicative characters") {
    auto chi = MultiplicativeCharacter::unramified(5, cd(0.6, 0.8));
    CHECK(close(chi(Q(5 * 3)), cd(0.6, 0.8)));
    CHECK(close(chi(Q(1)), 1.0));
    auto leg = MultiplicativeCharacter::legendre(7);
    for (long u = 1; u < 7; ++u) {
        int want = unit_is_square_bruteforce(u, 7) ? 1 : -1;
        CHECK(close(leg(Q(u)), double(want)));
    }
    CHECK(leg.conductor() == 1);
    CHECK((leg * leg).conductor() == 0);
    auto quartic = MultiplicativeCharacter::from_generator(5, 1, cd(0, 1), 1.0);
    CHECK(quartic.pow(4).conductor() == 0);
    CHECK(quartic.pow(2).approx_equal(MultiplicativeCharacter::legendre(5)));
    // (a, .) for a = 3 at Q_5 is the unramified character with value -1 at 5.
    auto tw = MultiplicativeCharacter::unramified(5, 1.0).twisted_by_hilbert(Q(2));
    for (long x : {1L, 2L, 5L, 10L, 3L}) CHECK(close(tw(Q(x)), double(hilbert_symbol(Q(2), Q(x), Place::finite(5)))));
}

TEST_CASE("Gauss sums") {
    AdditiveCharacter std_psi{1};
    CHECK(close(gauss_sum(MultiplicativeCharacter::unramified(3, cd(0, 1)), std_psi), 1.0));
    CHECK(close(gauss_sum(MultiplicativeCharacter::legendre(5), std_psi), 1.0 / std::sqrt(5.0)));
    for (long p : {3L, 5L, 7L})
        for (int m : {1, 2}) {
            long phi = ipow(p, m - 1) * (p - 1);
            auto chi = MultiplicativeCharacter::from_generator(p, m, std::polar(1.0, 2 * M_PI / double(phi)), 1.0);
            CHECK(std::abs(gauss_sum(chi, std_psi)) == doctest::Approx(std::pow(double(p), -0.5 * m)));
        }
}

TEST_CASE("unit sums") {
    for (long p : {2L, 3L, 5L}) {
        Place pl = Place::finite(p);
        double q = double(p);
        AdditiveCharacter std_psi{1};
        for (int N : {1, 2, 3}) CHECK(close(unit_sum([](long) { return cd(1.0); }, N, pl), 1 - 1 / q));
        CHECK(close(unit_sum([&](long r) { return psi_value(std_psi, make_q(r, p), pl).value(); }, 1, pl), -1 / q));
        CHECK(close(unit_sum([&](long r) { return psi_value(std_psi, make_q(r, p * p), pl).value(); }, 2, pl), 0.0));
        auto f = [&](long r) { return std::polar(1.0, 0.37 * double(r * r % 101)); };
        CHECK(close(unit_sum(f, 3, pl), unit_sum_serial(f, 3, pl), 1e-12));
    }
}
