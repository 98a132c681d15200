#include "common.hpp"

#include "mpls/cocycle.hpp"
#include "mpls/realarch.hpp"
#include "mpls/symplectic.hpp"
#include "mpls/weil.hpp"

#include <algorithm>
#include <set>

namespace mpls::verify::detail {

namespace {

const std::vector<Place>& hilbert_places() {
    static const std::vector<Place> v = {Place::finite(2), Place::finite(3), Place::finite(5),
                                         Place::finite(7), Place::finite(13), Place::real()};
    return v;
}

const std::vector<Place>& cocycle_places() {
    static const std::vector<Place> v = {Place::finite(2), Place::finite(3), Place::finite(5), Place::real()};
    return v;
}

long fuzz_prime(const Place& pl) { return pl.is_finite() ? pl.p : 3; }

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    n = std::labs(n);
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

Q random_rational(std::mt19937_64& rng, long p) {
    long num = 0;
    while (num == 0) num = uniform_int(rng, -60, 60);
    Q x = make_q(num, uniform_int(rng, 1, 40));
    return x * q_pow(Q(p), uniform_int(rng, -2, 2));
}

int hs(const Q& a, const Q& b, const Place& pl) { return hilbert_symbol(a, b, pl); }
int minus_one_power(int k, const Place& pl) { return (k % 2) ? hs(-1, -1, pl) : 1; }

IndexSet random_subset(std::mt19937_64& rng, int n) {
    IndexSet s;
    for (int i = 0; i < n; ++i)
        if (uniform_int(rng, 0, 1)) s.push_back(i);
    return s;
}

Q random_lambda(std::mt19937_64& rng, long p) {
    static const long base[] = {1, -1, 2, -2};
    long k = uniform_int(rng, 0, 4);
    return k == 4 ? Q(p) : Q(base[k]);
}

int hasse_of(const QMatrix& k, const Place& pl) { return hasse_invariant(diagonalize_symmetric(k).diag, pl); }

// Place/rank pair for trial t, cycling through every combination.
struct Cell {
    Place place;
    int n;
};
Cell cell_for(long t, const std::vector<Place>& places, const std::vector<int>& ranks) {
    return {places[static_cast<std::size_t>(t) % places.size()],
            ranks[(static_cast<std::size_t>(t) / places.size()) % ranks.size()]};
}

std::uint64_t draw_seed(std::mt19937_64& rng) { return rng(); }

QMatrix sp2_block_diag(const QMatrix& s1, const QMatrix& s2) {
    QMatrix m(4, 4);
    m(0, 0) = s1(0, 0);
    m(0, 2) = s1(0, 1);
    m(2, 0) = s1(1, 0);
    m(2, 2) = s1(1, 1);
    m(1, 1) = s2(0, 0);
    m(1, 3) = s2(0, 1);
    m(3, 1) = s2(1, 0);
    m(3, 3) = s2(1, 1);
    return m;
}

QMatrix sl2(const Q& a, const Q& b, const Q& c, const Q& d) { return QMatrix::from_rows({{a, b}, {c, d}}); }

// Word in (1 t; 0 1), (1 0; t 1), diag(u, 1/u) with integer t and units u.
QMatrix random_integral_sl2(std::mt19937_64& rng, long p) {
    QMatrix g = QMatrix::identity(2);
    const int len = static_cast<int>(uniform_int(rng, 1, 5));
    for (int i = 0; i < len; ++i) {
        long t = uniform_int(rng, -2, 2) * (uniform_int(rng, 0, 1) ? p : 1) + uniform_int(rng, -1, 1);
        switch (uniform_int(rng, 0, 2)) {
            case 0: g = g * sl2(1, t, 0, 1); break;
            case 1: g = g * sl2(1, 0, t, 1); break;
            default: {
                long u = 0;
                while (u == 0 || u % p == 0) u = uniform_int(rng, -7, 7);
                g = g * sl2(u, 0, 0, Q(1, 1) / u);
            }
        }
    }
    return g;
}

QMatrix random_k(std::mt19937_64& rng, long p, int level) {
    auto small = [&]() -> Q {
        long den = 0;
        while (den == 0 || den % p == 0) den = uniform_int(rng, 1, 9);
        return make_q(uniform_int(rng, -4, 4), den) * q_pow(Q(p), level + uniform_int(rng, 0, 1));
    };
    Q a = small(), b = small(), c = small();
    Q d = (b * c - a) / (1 + a);
    return sl2(1 + a, b, c, 1 + d);
}

// Elements of W' (products of tau_S, a_S, hat(w_pi)) for n = 2.
QMatrix random_weyl(std::mt19937_64& rng, int n) {
    QMatrix g = QMatrix::identity(2 * n);
    const int len = static_cast<int>(uniform_int(rng, 1, 4));
    for (int i = 0; i < len; ++i) {
        switch (uniform_int(rng, 0, 2)) {
            case 0: g = g * tau_S(n, random_subset(rng, n)); break;
            case 1: g = g * a_S(n, random_subset(rng, n)); break;
            default: {
                std::vector<int> perm(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
                std::shuffle(perm.begin(), perm.end(), rng);
                g = g * hat(w_perm(perm));
            }
        }
    }
    return g;
}

// Elements of P(F) with p-integral entries and unit determinant.
QMatrix random_integral_parabolic(std::mt19937_64& rng, int n, long p) {
    QMatrix g = QMatrix::identity(2 * n);
    const int len = static_cast<int>(uniform_int(rng, 1, 4));
    for (int i = 0; i < len; ++i) {
        if (uniform_int(rng, 0, 1)) {
            QMatrix k(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = r; c < n; ++c) k(r, c) = k(c, r) = Q(uniform_int(rng, -3, 3));
            g = g * n_k(k);
        } else {
            QMatrix a = QMatrix::identity(n);
            int r = static_cast<int>(uniform_int(rng, 0, n - 1)), c = static_cast<int>(uniform_int(rng, 0, n - 1));
            if (r != c) {
                a(r, c) = Q(uniform_int(rng, -3, 3));
            } else {
                long u = 0;
                while (u == 0 || u % p == 0) u = uniform_int(rng, -7, 7);
                a(r, r) = Q(u);
            }
            g = g * hat(a);
        }
    }
    return g;
}

}  // namespace

std::vector<Check> suite_hilbert(const Options& o) {
    std::vector<Check> out;
    const auto places = places_or(o, hilbert_places());

    Accumulator classes("square-class count");
    Accumulator bilin("bilinearity on square classes");
    Accumulator sym("(a,-a) = 1, (a,b) = (a,-ab), symmetry");
    Accumulator nondeg("non-degeneracy");
    for (const auto& pl : places) {
        const auto reps = square_class_reps(pl);
        std::size_t want = !pl.is_finite() ? (pl.kind == Place::Kind::Real ? 2 : 1) : (pl.p == 2 ? 8 : 4);
        classes.expect(reps.size() == want, pl.name() + ": " + std::to_string(reps.size()) + " classes");
        for (const Q& a : reps) {
            bool witness = false;
            for (const Q& b : reps) {
                int ab = hs(a, b, pl);
                if (ab == -1) witness = true;
                sym.expect(hs(a, -a, pl) == 1, pl.name() + " (a,-a) a=" + to_string(a));
                sym.expect(ab == hs(a, -a * b, pl), pl.name() + " (a,b)=(a,-ab) a=" + to_string(a) + " b=" + to_string(b));
                sym.expect(ab == hs(b, a, pl), pl.name() + " symmetry a=" + to_string(a) + " b=" + to_string(b));
                for (const Q& c : reps)
                    bilin.expect(hs(a * c, b, pl) == ab * hs(c, b, pl),
                                 pl.name() + " a=" + to_string(a) + " a'=" + to_string(c) + " b=" + to_string(b));
            }
            bool trivial = square_class(a, pl).rep == 1;
            nondeg.expect(trivial != witness, pl.name() + " class " + to_string(a));
        }
    }
    out.push_back(classes.done());
    out.push_back(bilin.done());
    out.push_back(sym.done());
    out.push_back(nondeg.done());

    out.push_back(run_trials("bilinearity on random rationals", trials_or(o, 600), o.seed, 0.0,
                             [&](long t, std::mt19937_64& rng) {
                                 const Place& pl = places[static_cast<std::size_t>(t) % places.size()];
                                 long p = fuzz_prime(pl);
                                 Q a = random_rational(rng, p), c = random_rational(rng, p), b = random_rational(rng, p);
                                 return expect_eq(hs(a * c, b, pl), hs(a, b, pl) * hs(c, b, pl),
                                                  pl.name() + " a=" + to_string(a) + " a'=" + to_string(c) +
                                                      " b=" + to_string(b));
                             }));

    Accumulator table("(2, a) table at Q_2");
    for (long a = -63; a <= 63; a += 2) {
        long r = ((a % 8) + 8) % 8;
        int want = (r == 1 || r == 7) ? 1 : -1;
        table.expect(hs(2, a, Place::finite(2)) == want, "a=" + std::to_string(a));
    }
    out.push_back(table.done());

    Accumulator recip("reciprocity |a|,|b| <= 50");
    for (long a = -50; a <= 50; ++a) {
        if (a == 0) continue;
        for (long b = -50; b <= 50; ++b) {
            if (b == 0) continue;
            std::set<long> primes = {2};
            for (long q : prime_factors(a)) primes.insert(q);
            for (long q : prime_factors(b)) primes.insert(q);
            int prod = hs(a, b, Place::real());
            for (long q : primes) prod *= hs(a, b, Place::finite(q));
            recip.expect(prod == 1, "a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }
    out.push_back(recip.done());
    return out;
}

std::vector<Check> suite_weil(const Options& o) {
    std::vector<Check> out;
    std::vector<Place> finite = {Place::finite(2), Place::finite(3), Place::finite(5), Place::finite(7),
                                 Place::finite(13)};
    if (o.place) finite = o.place->is_finite() ? std::vector<Place>{*o.place} : std::vector<Place>{};
    const AdditiveCharacter std_psi{1};

    Accumulator brute("closed form vs principal-value sum", 1e-9);
    for (const auto& pl : finite)
        for (const Q& a : square_class_reps(pl))
            brute.guard(pl.name() + " a=" + to_string(a), [&] {
                cd bf = gamma_psi_bruteforce(a, std_psi, pl);
                FourthRoot closed = gamma_psi(a, std_psi, pl);
                Outcome r = expect_close(bf, closed.value(), 1e-9, pl.name() + " a=" + to_string(a));
                if (r.ok && FourthRoot::snap(bf) != closed) r = fail(pl.name() + " snap mismatch a=" + to_string(a));
                return r;
            });
    out.push_back(brute.done());

    Accumulator shift("twist and conductor shift vs principal-value sums", 1e-9);
    for (const auto& pl : finite) {
        long p = pl.p;
        for (const Q& a : square_class_reps(pl))
            for (long u : {1L, -1L, 3L, 5L}) {
                if (u % p == 0) continue;
                for (int n : {-1, 0, 1}) {
                    Q b = Q(u) * q_pow(Q(p), n);
                    shift.guard(pl.name() + " a=" + to_string(a) + " b=" + to_string(b), [&] {
                        FourthRoot want = FourthRoot::snap(gamma_psi_bruteforce(a * b, std_psi, pl)) *
                                          FourthRoot::snap(gamma_psi_bruteforce(b, std_psi, pl)).inverse();
                        FourthRoot got = gamma_psi(a, AdditiveCharacter{b}, pl);
                        return got == want ? pass()
                                           : fail(pl.name() + " a=" + to_string(a) + " b=" + to_string(b) + " got " +
                                                  got.str() + " want " + want.str());
                    });
                }
            }
    }
    out.push_back(shift.done());

    std::vector<Place> all = finite;
    if (!o.place || o.place->kind == Place::Kind::Real) all.push_back(Place::real());
    Accumulator mult("multiplicativity and square-class invariance");
    for (const auto& pl : all) {
        const auto reps = square_class_reps(pl);
        for (const Q& a : reps) {
            for (const Q& b : reps) {
                FourthRoot lhs = gamma_psi(a * b, std_psi, pl);
                FourthRoot rhs = gamma_psi(a, std_psi, pl) * gamma_psi(b, std_psi, pl) *
                                 FourthRoot::from_sign(hs(a, b, pl));
                mult.expect(lhs == rhs, pl.name() + " a=" + to_string(a) + " b=" + to_string(b));
            }
            for (long c : {2L, 3L, 7L})
                mult.expect(gamma_psi(a * Q(c * c), std_psi, pl) == gamma_psi(a, std_psi, pl),
                            pl.name() + " square scaling a=" + to_string(a));
        }
    }
    out.push_back(mult.done());

    Accumulator image("image cardinality");
    for (const auto& pl : finite) {
        std::set<int> ks;
        for (const Q& a : square_class_reps(pl)) ks.insert(gamma_psi(a, std_psi, pl).k);
        std::size_t want = pl.p == 2 ? 4 : (pl.p % 4 == 1 ? 2 : 3);
        image.expect(ks.size() == want, pl.name() + ": " + std::to_string(ks.size()) + " values");
    }
    if (!o.place || o.place->kind == Place::Kind::Real) {
        std::set<int> ks;
        for (const Q& a : square_class_reps(Place::real())) ks.insert(gamma_psi(a, std_psi, Place::real()).k);
        image.expect(ks.size() == 2, "real image");
        image.expect(gamma_psi_real(1, -1) == FourthRoot(3) && gamma_psi_real(-1, -1) == FourthRoot(1) &&
                         gamma_psi_real(1, 2) == FourthRoot(0),
                     "real closed form");
    }
    out.push_back(image.done());

    Accumulator xis("xi functions and agreement with gamma at p = 1 mod 4");
    for (const auto& pl : finite) {
        long p = pl.p;
        if (p == 2) continue;
        std::vector<Q> xs;
        for (long u : {1L, smallest_nonresidue(p)})
            for (int v = -2; v <= 2; ++v) xs.push_back(Q(u) * q_pow(Q(p), v));
        bool some_match = false;
        for (int alpha : {1, -1})
            for (bool leg : {false, true}) {
                bool match = true;
                for (const Q& x : xs) {
                    for (const Q& y : xs)
                        xis.expect(xi(alpha, leg, x * y, p) == xi(alpha, leg, x, p) * xi(alpha, leg, y, p) * hs(x, y, pl),
                                   pl.name() + " x=" + to_string(x) + " y=" + to_string(y));
                    if (FourthRoot::from_sign(xi(alpha, leg, x, p)) != gamma_psi(x, std_psi, pl)) match = false;
                }
                some_match = some_match || match;
            }
        if (p % 4 == 1) xis.expect(some_match, pl.name() + " gamma is not a xi");
    }
    out.push_back(xis.done());
    return out;
}

std::vector<Check> suite_cocycle(const Options& o) {
    std::vector<Check> out;
    const auto places = places_or(o, cocycle_places());
    const auto ranks = ranks_or(o, {1, 2, 3});
    const long trials = trials_or(o, 500);
    for (const auto& pl : places) {
        for (int n : ranks) {
            std::string name = "2-cocycle identity n=" + std::to_string(n) + " " + pl.name();
            out.push_back(run_trials(name, trials, o.seed, 0.0, [&](long, std::mt19937_64& rng) {
                long p = fuzz_prime(pl);
                QMatrix a = random_element(n, 4, draw_seed(rng), p);
                QMatrix b = random_element(n, 4, draw_seed(rng), p);
                QMatrix c = random_element(n, 4, draw_seed(rng), p);
                int lhs = rao_cocycle(a, b, pl) * rao_cocycle(a * b, c, pl);
                int rhs = rao_cocycle(b, c, pl) * rao_cocycle(a, b * c, pl);
                return expect_eq(lhs, rhs, "c(a,b)c(ab,c) vs c(b,c)c(a,bc)");
            }));
        }
        if (o.n <= 1) {
            out.push_back(run_trials("Rao = Kubota n=1 " + pl.name(), trials, o.seed, 0.0,
                                     [&](long, std::mt19937_64& rng) {
                                         long p = fuzz_prime(pl);
                                         QMatrix a = random_element(1, 5, draw_seed(rng), p);
                                         QMatrix b = random_element(1, 5, draw_seed(rng), p);
                                         return expect_eq(rao_cocycle(a, b, pl), kubota_cocycle(a, b, pl), "rao vs kubota");
                                     }));
        }
    }
    return out;
}

std::vector<Check> suite_calibration(const Options& o) {
    std::vector<Check> out;
    const auto places = places_or(o, cocycle_places());
    const auto ranks = ranks_or(o, {1, 2, 3});
    const long trials = trials_or(o, 120);
    auto fuzz = [&](const std::string& name, auto&& body) {
        out.push_back(run_trials(name, trials, o.seed, 0.0, [&](long t, std::mt19937_64& rng) {
            Cell cell = cell_for(t, places, ranks);
            return body(cell.place, cell.n, fuzz_prime(cell.place), rng);
        }));
    };

    fuzz("c(s, s^-1) on Weyl elements", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        QMatrix g = random_element(n, 4, draw_seed(rng), p);
        int j = cell_index(g);
        Q x = x_value(g);
        int want = hs(x, (j % 2) ? -x : x, pl) * minus_one_power(j * (j - 1) / 2, pl);
        return expect_eq(rao_cocycle(g, g.inverse(), pl), want, "c(g,g^-1)");
    });
    fuzz("parabolic sandwich", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        QMatrix s1 = random_element(n, 3, draw_seed(rng), p), s2 = random_element(n, 3, draw_seed(rng), p);
        QMatrix p1 = random_siegel(n, draw_seed(rng), p), p2 = random_siegel(n, draw_seed(rng), p);
        int want = rao_cocycle(s1, s2, pl) * hs(x_value(p1), x_value(s1), pl) * hs(x_value(p2), x_value(s2), pl) *
                   hs(x_value(p1), x_value(p2), pl) * hs(x_value(p1 * p2), x_value(s1 * s2), pl);
        return expect_eq(rao_cocycle(p1 * s1, s2 * p2, pl), want, "c(p s, s' p')");
    });
    fuzz("c(p, s) = c(s, p)", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        QMatrix s = random_element(n, 4, draw_seed(rng), p), q = random_siegel(n, draw_seed(rng), p);
        int want = hs(x_value(q), x_value(s), pl);
        OutcomeSet r;
        r.add(expect_eq(rao_cocycle(q, s, pl), want, "c(p,s)"));
        r.add(expect_eq(rao_cocycle(s, q, pl), want, "c(s,p)"));
        return r.out;
    });
    fuzz("c(tau_S1, tau_S2)", [](const Place& pl, int n, long, std::mt19937_64& rng) {
        IndexSet s1 = random_subset(rng, n), s2 = random_subset(rng, n);
        int j = 0;
        for (int a : s1)
            for (int b : s2) j += (a == b);
        return expect_eq(rao_cocycle(tau_S(n, s1), tau_S(n, s2), pl), minus_one_power(j * (j + 1) / 2, pl),
                         "c(tau_S1,tau_S2)");
    });
    fuzz("disjoint tau_S sandwich", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        IndexSet s1, s2;
        for (int i = 0; i < n; ++i) {
            long k = uniform_int(rng, 0, 2);
            if (k == 1) s1.push_back(i);
            if (k == 2) s2.push_back(i);
        }
        QMatrix p1 = random_siegel(n, draw_seed(rng), p), p2 = random_siegel(n, draw_seed(rng), p);
        return expect_eq(rao_cocycle(p1 * tau_S(n, s1), tau_S(n, s2) * p2, pl), hs(x_value(p1), x_value(p2), pl),
                         "c(p tau_S, tau_S' p')");
    });
    fuzz("parabolic conjugation", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        MetaplecticElement q{random_siegel(n, draw_seed(rng), p), 1};
        MetaplecticElement s{random_element(n, 4, draw_seed(rng), p), uniform_int(rng, 0, 1) ? 1 : -1};
        MetaplecticElement lhs = mp_mul(mp_mul(q, s, pl), mp_inv(q, pl), pl);
        MetaplecticElement rhs{q.g * s.g * q.g.inverse(), s.eps};
        return lhs == rhs ? pass() : fail("sign " + std::to_string(lhs.eps) + " vs " + std::to_string(rhs.eps));
    });
    {
        auto places2 = places;
        out.push_back(run_trials("block multiplicativity n=1+1", trials, o.seed, 0.0,
                                 [&](long t, std::mt19937_64& rng) {
                                     const Place& pl = places2[static_cast<std::size_t>(t) % places2.size()];
                                     long p = fuzz_prime(pl);
                                     QMatrix a1 = random_element(1, 4, draw_seed(rng), p);
                                     QMatrix a2 = random_element(1, 4, draw_seed(rng), p);
                                     QMatrix b1 = random_element(1, 4, draw_seed(rng), p);
                                     QMatrix b2 = random_element(1, 4, draw_seed(rng), p);
                                     int want = rao_cocycle(a1, b1, pl) * rao_cocycle(a2, b2, pl) *
                                                hs(x_value(a1), x_value(a2), pl) * hs(x_value(b1), x_value(b2), pl) *
                                                hs(x_value(a1 * b1), x_value(a2 * b2), pl);
                                     return expect_eq(rao_cocycle(sp2_block_diag(a1, a2), sp2_block_diag(b1, b2), pl),
                                                      want, "c(diag, diag)");
                                 }));
    }
    fuzz("c(tau, n_k tau)", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        QMatrix k = random_symmetric(n, draw_seed(rng), p, true);
        QMatrix T = tau(n);
        return expect_eq(rao_cocycle(T, n_k(k) * T, pl), hs(-1, k.det(), pl) * hasse_of(k, pl), "c(tau, n_k tau)");
    });
    fuzz("c(tau^l, (n_k tau)^l)", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        QMatrix k = random_symmetric(n, draw_seed(rng), p, true);
        Q lam = random_lambda(rng, p);
        QMatrix T = tau(n);
        return expect_eq(rao_cocycle(conj_lambda(T, lam), conj_lambda(n_k(k) * T, lam), pl),
                         hs(-1, k.det(), pl) * hasse_of(k.scaled(lam), pl), "lambda=" + to_string(lam));
    });
    fuzz("v_lambda coboundary", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        QMatrix g = random_element(n, 4, draw_seed(rng), p), h = random_element(n, 4, draw_seed(rng), p);
        Q lam = random_lambda(rng, p);
        int lhs = v_lambda(g, lam, pl) * v_lambda(h, lam, pl) * v_lambda(g * h, lam, pl);
        int rhs = rao_cocycle(conj_lambda(g, lam), conj_lambda(h, lam), pl) * rao_cocycle(g, h, pl);
        return expect_eq(lhs, rhs, "lambda=" + to_string(lam));
    });
    fuzz("v_lambda v_eta = v_lambda_eta", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        QMatrix g = random_element(n, 4, draw_seed(rng), p);
        Q lam = random_lambda(rng, p), eta = random_lambda(rng, p);
        return expect_eq(v_lambda(g, lam, pl) * v_lambda(conj_lambda(g, lam), eta, pl), v_lambda(g, lam * eta, pl),
                         "lambda=" + to_string(lam) + " eta=" + to_string(eta));
    });
    fuzz("v_-1(g) = v_-1(g^-1) = c(g, g^-1)", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        QMatrix g = random_element(n, 4, draw_seed(rng), p);
        int c = rao_cocycle(g, g.inverse(), pl);
        OutcomeSet r;
        r.add(expect_eq(v_lambda(g, -1, pl), c, "v_-1(g)"));
        r.add(expect_eq(v_lambda(g.inverse(), -1, pl), c, "v_-1(g^-1)"));
        return r.out;
    });
    fuzz("GSp cocycle identity and restriction", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        auto gsp = [&]() { return i_lambda(n, random_lambda(rng, p)) * random_element(n, 3, draw_seed(rng), p); };
        QMatrix a = gsp(), b = gsp(), c = gsp();
        OutcomeSet r;
        r.add(expect_eq(gsp_cocycle(a, b, pl) * gsp_cocycle(a * b, c, pl),
                        gsp_cocycle(b, c, pl) * gsp_cocycle(a, b * c, pl), "2-cocycle"));
        QMatrix s = random_element(n, 4, draw_seed(rng), p), u = random_element(n, 4, draw_seed(rng), p);
        r.add(expect_eq(gsp_cocycle(s, u, pl), rao_cocycle(s, u, pl), "restriction to Sp"));
        return r.out;
    });
    fuzz("tau-bar anti-involution", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        MetaplecticElement x{random_element(n, 4, draw_seed(rng), p), uniform_int(rng, 0, 1) ? 1 : -1};
        MetaplecticElement y{random_element(n, 4, draw_seed(rng), p), uniform_int(rng, 0, 1) ? 1 : -1};
        OutcomeSet r;
        r.add(tau_bar(tau_bar(x)) == x ? pass() : fail("order 2"));
        r.add(tau_bar(mp_mul(x, y, pl)) == mp_mul(tau_bar(y), tau_bar(x), pl) ? pass() : fail("anti-homomorphism"));
        return r.out;
    });
    fuzz("unipotent triviality", [](const Place& pl, int n, long p, std::mt19937_64& rng) {
        auto unip = [&]() {
            QMatrix u = QMatrix::identity(n);
            for (int r = 0; r < n; ++r)
                for (int c = r + 1; c < n; ++c) u(r, c) = Q(uniform_int(rng, -3, 3));
            return hat(u) * n_k(random_symmetric(n, draw_seed(rng), p, false));
        };
        return expect_eq(rao_cocycle(unip(), unip(), pl), 1, "c(z, z')");
    });
    return out;
}

std::vector<Check> suite_splitting(const Options& o) {
    std::vector<Check> out;
    std::vector<long> odd = {3, 5};
    if (o.place) odd = (o.place->is_finite() && o.place->p != 2) ? std::vector<long>{o.place->p} : std::vector<long>{};
    const long trials = trials_or(o, 200);

    for (long p : odd) {
        Place pl = Place::finite(p);
        out.push_back(run_trials("iota_2 homomorphism " + pl.name(), trials, o.seed, 0.0,
                                 [&](long, std::mt19937_64& rng) {
                                     QMatrix a = random_integral_sl2(rng, p), b = random_integral_sl2(rng, p);
                                     OutcomeSet r;
                                     r.add(expect_eq(iota2(a, p) * iota2(b, p) * rao_cocycle(a, b, pl), iota2(a * b, p),
                                                     "rao"));
                                     r.add(expect_eq(iota2(a, p) * iota2(b, p) * kubota_cocycle(a, b, pl),
                                                     iota2(a * b, p), "kubota"));
                                     return r.out;
                                 }));
    }

    std::vector<Place> kplaces = {Place::finite(2), Place::finite(3), Place::finite(5)};
    if (o.place) kplaces = o.place->is_finite() ? std::vector<Place>{*o.place} : std::vector<Place>{};
    for (const auto& pl : kplaces) {
        int level = pl.p == 2 ? 3 : 1;
        out.push_back(run_trials("c(K_" + std::to_string(level) + ", K_" + std::to_string(level) + ") = 1 " + pl.name(),
                                 trials, o.seed, 0.0, [&](long, std::mt19937_64& rng) {
                                     QMatrix a = random_k(rng, pl.p, level), b = random_k(rng, pl.p, level);
                                     OutcomeSet r;
                                     r.add(expect_eq(rao_cocycle(a, b, pl), 1, "rao"));
                                     r.add(expect_eq(kubota_cocycle(a, b, pl), 1, "kubota"));
                                     return r.out;
                                 }));
    }

    for (long p : odd) {
        Place pl = Place::finite(p);
        out.push_back(run_trials("trivial splitting on W' and P(O), n=2 " + pl.name(), trials, o.seed, 0.0,
                                 [&](long t, std::mt19937_64& rng) {
                                     QMatrix a, b;
                                     if (t % 2) {
                                         a = random_weyl(rng, 2);
                                         b = random_weyl(rng, 2);
                                     } else {
                                         a = random_integral_parabolic(rng, 2, p);
                                         b = random_integral_parabolic(rng, 2, p);
                                     }
                                     return expect_eq(rao_cocycle(a, b, pl), 1, t % 2 ? "Weyl pair" : "P(O) pair");
                                 }));
    }

    const auto places = places_or(o, cocycle_places());
    const auto ranks = ranks_or(o, {1, 2, 3});
    out.push_back(run_trials("gamma_psi determinant identity on P", trials, o.seed, 0.0,
                             [&](long t, std::mt19937_64& rng) {
                                 Cell cell = cell_for(t, places, ranks);
                                 long p = fuzz_prime(cell.place);
                                 QMatrix a = random_siegel(cell.n, draw_seed(rng), p);
                                 QMatrix b = random_siegel(cell.n, draw_seed(rng), p);
                                 auto g_inv = [&](const QMatrix& m) {
                                     return gamma_psi(m.block(0, 0, cell.n, cell.n).det(), AdditiveCharacter{1},
                                                      cell.place)
                                         .inverse();
                                 };
                                 FourthRoot lhs = g_inv(a) * g_inv(b) *
                                                  FourthRoot::from_sign(rao_cocycle(a, b, cell.place));
                                 return lhs == g_inv(a * b) ? pass() : fail(cell.place.name() + " mismatch");
                             }));
    return out;
}

std::vector<Check> suite_so2(const Options&) {
    std::vector<Check> out;
    Accumulator theta("theta lifts SO_2 on 576 pairs");
    Accumulator table("cocycle case table on 576 pairs");
    Accumulator floats("float-angle cocycle agrees with exact");
    auto sin_sign = [](long k) {  // sin(k pi / 12)
        long r = ((k % 24) + 24) % 24;
        return (r == 0 || r == 12) ? 0 : (r < 12 ? 1 : -1);
    };
    for (long k1 = 0; k1 < 24; ++k1) {
        for (long k2 = 0; k2 < 24; ++k2) {
            Q r1 = make_q(k1, 12), r2 = make_q(k2, 12);
            int c = so2_cocycle(r1, r2);
            std::string ctx = "t1=" + std::to_string(k1) + "pi/12 t2=" + std::to_string(k2) + "pi/12";
            theta.expect(so2_theta(r1 + r2) == so2_theta(r1) * so2_theta(r2) * c, ctx);
            floats.expect(so2_cocycle(k1 * M_PI / 12, k2 * M_PI / 12) == c, ctx);
            bool pm1 = k1 % 12 == 0, pm2 = k2 % 12 == 0, pm12 = (k1 + k2) % 12 == 0;
            int want = 0;
            if ((k1 + k2) % 24 == 0) {
                want = (k1 == 12) ? -1 : 1;  // k(t) k(t)^{-1}
            } else if (!pm1 && !pm2 && !pm12) {
                int s1 = sin_sign(k1), s2 = sin_sign(k2), s12 = sin_sign(k1 + k2);
                want = (s1 == s2 && s1 != s12) ? -1 : 1;
            } else if (!pm1 && !pm2 && (k1 + k2) % 24 == 12) {
                want = sin_sign(k1) > 0 ? 1 : -1;  // c(k(t), -k(t)^{-1})
            } else if (!pm1 && k2 == 12) {
                want = sin_sign(k1) > 0 ? -1 : 1;  // c(k(t), -I), forced by theta(t + pi) = -theta(t) on (0, pi)
            } else {
                continue;
            }
            table.expect(c == want, ctx);
        }
    }
    theta.expect(so2_theta(0) == 1, "theta(0)");
    out.push_back(theta.done());
    out.push_back(table.done());
    out.push_back(floats.done());
    return out;
}

}  // namespace mpls::verify::detail
