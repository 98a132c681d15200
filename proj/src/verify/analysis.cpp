#include "common.hpp"

#include "mpls/integral.hpp"
#include "mpls/lfunc.hpp"
#include "mpls/realarch.hpp"
#include "mpls/weil.hpp"

namespace mpls::verify::detail {

namespace {

using MC = MultiplicativeCharacter;

std::mt19937_64 config_rng(const Options& o, const std::string& salt) {
    return std::mt19937_64(mix_seed(o.seed ^ name_salt(salt), 0));
}

bool near_factor(const GammaRat& g, cd y, double tol) {
    for (const auto& z : g.zeros)
        if (std::abs(1.0 - z * y) < tol) return true;
    for (const auto& z : g.poles)
        if (std::abs(1.0 - z * y) < tol) return true;
    return false;
}

// s with Re(s) in [lo, hi], |Im(s)| <= 4, at least 1e-3 away (in Y) from the factors of `avoid`.
cd draw_s(std::mt19937_64& rng, double lo, double hi, double q, const GammaRat* avoid = nullptr) {
    for (;;) {
        cd s(uniform(rng, lo, hi), uniform(rng, -4.0, 4.0));
        if (avoid && near_factor(*avoid, std::pow(q, -s), 1e-3)) continue;
        return s;
    }
}

cd inv(cd z) { return 1.0 / z; }

struct LocalCase {
    std::string label;
    MC chi;
    AdditiveCharacter psi;
    LocalCoefDecomposition d;
    SL2Closed closed;
};

std::vector<long> odd_primes_or(const Options& o) {
    if (!o.place) return {3, 5};
    if (o.place->is_finite() && o.place->p != 2) return {o.place->p};
    return {};
}

bool include_q2(const Options& o) { return !o.place || (o.place->is_finite() && o.place->p == 2); }

cd dense_eval(const GammaRat& g, cd y) {
    auto expand = [](const std::vector<cd>& roots) {
        std::vector<cd> c{1.0};
        for (const cd& r : roots) {
            std::vector<cd> next(c.size() + 1, 0.0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i] += c[i];
                next[i + 1] -= r * c[i];
            }
            c = std::move(next);
        }
        return c;
    };
    auto horner = [&](const std::vector<cd>& c) {
        cd v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * y + *it;
        return v;
    };
    return g.scalar * std::pow(y, g.degree) * horner(expand(g.zeros)) / horner(expand(g.poles));
}

SatakeParams random_params(std::mt19937_64& rng, int m, bool unitary) {
    SatakeParams s;
    for (int i = 0; i < m; ++i) s.values.push_back(unit_circle(rng) * (unitary ? 1.0 : uniform(rng, 0.5, 2.0)));
    return s;
}

}  // namespace

std::vector<Check> suite_localcoef(const Options& o) {
    std::vector<Check> out;
    auto rng = config_rng(o, "localcoef-cases");
    std::vector<LocalCase> cases;
    auto add_case = [&](std::string label, const MC& chi, const AdditiveCharacter& psi) {
        cases.push_back({std::move(label), chi, psi, localcoef_decompose(chi, psi), sl2_localcoef_closed(chi, psi)});
    };
    for (long p : odd_primes_or(o)) {
        std::vector<std::pair<std::string, MC>> chis;
        for (int i = 0; i < 3; ++i) chis.emplace_back("unramified#" + std::to_string(i), MC::unramified(p, unit_circle(rng)));
        chis.emplace_back("quadratic", MC::legendre(p, unit_circle(rng)));
        for (const auto& [name, chi] : chis)
            for (int n : {0, 1})
                add_case("p=" + std::to_string(p) + " " + name + " cond(psi)=" + std::to_string(n), chi,
                         AdditiveCharacter{q_pow(Q(p), -n)});
    }
    if (include_q2(o)) add_case("p=2 trivial", MC::unramified(2, 1.0), AdditiveCharacter{1});

    const long points = trials_or(o, 20);
    const long total = static_cast<long>(cases.size()) * points;
    out.push_back(run_trials("integral vs closed form, relative", total, o.seed, 1e-8, [&](long t, std::mt19937_64& r) {
        const LocalCase& c = cases[static_cast<std::size_t>(t / points)];
        if (!c.closed.known) return fail(c.label + ": closed form unavailable");
        double q = static_cast<double>(c.chi.p());
        cd s = draw_s(r, 0.2, 2.0, q, &c.closed.value);
        return expect_close(localcoef_eval(c.d, s) * c.closed.value.eval_s(s, q), 1.0, 1e-8, c.label);
    }));

    std::vector<long> primes = odd_primes_or(o);
    out.push_back(run_trials("conductor shift of psi", static_cast<long>(primes.size()) * 4 * 5, o.seed, 1e-8,
                             [&](long t, std::mt19937_64& r) {
                                 long p = primes[static_cast<std::size_t>(t / 20)];
                                 int n = 1 + static_cast<int>((t / 5) % 2);
                                 MC chi = ((t / 10) % 2) ? MC::legendre(p, unit_circle(r)) : MC::unramified(p, unit_circle(r));
                                 Q a = Q(smallest_nonresidue(p)) * q_pow(Q(p), -n);
                                 AdditiveCharacter psi{a}, psi0 = psi.normalization(p);
                                 Place pl = Place::finite(p);
                                 double q = static_cast<double>(p);
                                 cd s = draw_s(r, 0.2, 2.0, q);
                                 cd lhs = inv(localcoef_eval(localcoef_decompose(chi, psi), s));
                                 cd rhs = gamma_psi(q_pow(Q(p), n), psi0, pl).inverse().value() *
                                          std::pow(chi.value_at_pi(), -n) * std::pow(q, static_cast<double>(n) * s) *
                                          inv(localcoef_eval(localcoef_decompose(chi, psi0), s));
                                 return expect_close(lhs, rhs, 1e-8, "p=" + std::to_string(p) + " n=" + std::to_string(n));
                             }));

    out.push_back(run_trials("Whittaker twist psi -> psi_a", static_cast<long>(primes.size()) * 6 * 5, o.seed, 1e-8,
                             [&](long t, std::mt19937_64& r) {
                                 long p = primes[static_cast<std::size_t>(t / 30)];
                                 Place pl = Place::finite(p);
                                 double q = static_cast<double>(p);
                                 long u = smallest_nonresidue(p);
                                 const Q as[] = {Q(u), Q(p), Q(u * p)};
                                 Q a = as[(t / 5) % 3];
                                 MC chi = ((t / 15) % 2) ? MC::legendre(p, unit_circle(r)) : MC::unramified(p, unit_circle(r));
                                 AdditiveCharacter psi{1};
                                 cd s = draw_s(r, 0.2, 2.0, q);
                                 // C_{psi_a}(chi) = gamma_psi(a) chi_(s)(a) C_psi(chi (a, .))
                                 cd lhs = inv(localcoef_eval(localcoef_decompose(chi, psi, AdditiveCharacter{a}), s));
                                 cd rhs = gamma_psi(a, psi, pl).value() * chi(a) *
                                          std::pow(q, -static_cast<double>(valuation(a, p)) * s) *
                                          inv(localcoef_eval(localcoef_decompose(chi.twisted_by_hilbert(a), psi), s));
                                 return expect_close(lhs, rhs, 1e-8, "p=" + std::to_string(p) + " a=" + to_string(a));
                             }));

    if (primes.empty() || primes.front() == 5 || !o.place) {
        Accumulator mono("monomial property for the order-4 character mod 5", 1e-8);
        auto r = config_rng(o, "localcoef-monomial");
        MC chi = MC::from_generator(5, 1, cd(0.0, 1.0), unit_circle(r));
        auto d = localcoef_decompose(chi, AdditiveCharacter{1});
        std::optional<long> common;
        for (int k = 0; k < 3; ++k) {
            mono.guard("pair " + std::to_string(k), [&] {
                cd s1 = draw_s(r, 0.2, 2.0, 5.0), s2 = draw_s(r, 0.2, 2.0, 5.0);
                while (std::abs((s1 - s2).real()) < 0.2) s2 = draw_s(r, 0.2, 2.0, 5.0);
                cd ratio = localcoef_eval(d, s1) / localcoef_eval(d, s2);
                double dreal = std::log(std::abs(ratio)) / ((s1 - s2).real() * std::log(5.0));
                long di = std::lround(dreal);
                if (common && *common != di) return fail("degree changes between pairs");
                common = di;
                return expect_close(ratio, std::pow(5.0, static_cast<double>(di) * (s1 - s2)), 1e-8,
                                    "degree " + std::to_string(di));
            });
        }
        out.push_back(mono.done());
    }
    return out;
}

std::vector<Check> suite_mellin(const Options& o) {
    std::vector<Check> out;
    std::vector<long> primes = {2, 3, 5};
    if (o.place) primes = o.place->is_finite() ? std::vector<long>{o.place->p} : std::vector<long>{};
    const AdditiveCharacter std_psi{1};
    auto e21 = [](long p) { return p == 2 ? 3 : 1; };

    const long pts = trials_or(o, 5);
    const long np = static_cast<long>(primes.size());

    out.push_back(run_trials("Tate integral vs L-ratio", np * 4 * pts, o.seed, 1e-8, [&](long t, std::mt19937_64& r) {
        long p = primes[static_cast<std::size_t>(t / (4 * pts))];
        double q = static_cast<double>(p);
        MC chi = MC::unramified(p, unit_circle(r));
        cd s = draw_s(r, 0.2, 2.0, q);
        cd want = tate_gamma_sym(chi.inverse(), AdditiveCharacter{-1}).substitute(-1, 1.0, q).eval_s(s, q);
        return expect_close(tate_gamma_integral(chi, std_psi, s, 1), want, 1e-8, "p=" + std::to_string(p));
    }));

    out.push_back(run_trials("Tate integral, quadratic ramified", (np - (primes.front() == 2 ? 1 : 0)) * pts, o.seed, 1e-8,
                             [&](long t, std::mt19937_64& r) {
                                 std::vector<long> odd;
                                 for (long p : primes)
                                     if (p != 2) odd.push_back(p);
                                 long p = odd[static_cast<std::size_t>(t / pts)];
                                 double q = static_cast<double>(p);
                                 MC chi = MC::legendre(p, unit_circle(r));
                                 cd s = draw_s(r, 0.2, 2.0, q);
                                 cd want = tate_gamma_sym(chi.inverse(), AdditiveCharacter{-1}).substitute(-1, 1.0, q).eval_s(s, q);
                                 return expect_close(tate_gamma_integral(chi, std_psi, s, 1), want, 1e-8,
                                                     "p=" + std::to_string(p));
                             }));

    out.push_back(run_trials("gamma-tilde = C^-1", np * 2 * pts, o.seed, 1e-10, [&](long t, std::mt19937_64& r) {
        long p = primes[static_cast<std::size_t>(t / (2 * pts))];
        double q = static_cast<double>(p);
        bool ram = (t / pts) % 2 && p != 2;
        MC chi = ram ? MC::legendre(p, unit_circle(r)) : MC::unramified(p, unit_circle(r));
        cd s = draw_s(r, 0.2, 2.0, q);
        return expect_close(gamma_tilde_integral(chi, std_psi, s), localcoef_eval(localcoef_decompose(chi, std_psi), s),
                            1e-10, "p=" + std::to_string(p));
    }));

    out.push_back(run_trials("functional equation of the gamma-twisted zeta integral", np * 2 * 2 * pts, o.seed, 1e-8, [&](long t, std::mt19937_64& r) {
        long p = primes[static_cast<std::size_t>(t / (4 * pts))];
        double q = static_cast<double>(p);
        bool ram = (t / pts) % 2 && p != 2;
        bool ball = (t / (2 * pts)) % 2;
        MC chi = ram ? MC::legendre(p, unit_circle(r)) : MC::unramified(p, unit_circle(r));
        int k = std::max(chi.conductor(), e21(p));
        IndicatorFunction phi = ball ? IndicatorFunction::ball(0) : IndicatorFunction::coset(Q(1), k);
        cd s(uniform(r, 0.05, 0.95), uniform(r, -4.0, 4.0));
        // gamma-tilde(chi, psi^{-1}, s) = C_psi(chi^{-1}, 1 - s)^{-1}
        cd lhs = localcoef_eval(localcoef_decompose(chi.inverse(), std_psi), 1.0 - s) * zeta(phi, chi, s);
        cd rhs = zeta_tilde(phi, chi.inverse(), std_psi, 1.0 - s);
        OutcomeSet set;
        set.add(expect_close(lhs, rhs, 1e-8, std::string(ball ? "ball" : "coset") + " p=" + std::to_string(p)));
        if (!ball)
            set.add(expect_close(zeta(phi, chi.inverse(), 1.0 - s), std::pow(q, -k), 1e-12, "zeta(1+P^k) = q^-k"));
        return set.out;
    }));

    Accumulator phi("phi-tilde closed forms vs direct transform", 1e-9);
    for (long p : primes) {
        if (p != 2 && p != 3) continue;
        Place pl = Place::finite(p);
        for (int n = -1; n <= 2; ++n)
            for (int M = -2; M <= 4; ++M)
                for (long u : {1L, -1L, 5L, 7L}) {
                    if (u % p == 0) continue;
                    Q y = q_pow(Q(p), -M) * Q(u);
                    std::string ctx = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " y=" + to_string(y);
                    auto b = IndicatorFunction::ball(n);
                    phi.guard(ctx, [&] {
                        return expect_close(phi_tilde(b, y, std_psi, pl), phi_tilde_direct(b, y, std_psi, pl), 1e-9,
                                            "ball " + ctx);
                    });
                    for (long a : {1L, 3L, -1L}) {
                        if (a % p == 0) continue;
                        auto c = IndicatorFunction::coset(q_pow(Q(p), n - e21(p)) * Q(a), n);
                        phi.guard(ctx, [&] {
                            return expect_close(phi_tilde(c, y, std_psi, pl), phi_tilde_direct(c, y, std_psi, pl), 1e-9,
                                                "coset " + ctx);
                        });
                    }
                }
    }
    out.push_back(phi.done());

    Accumulator meas("measures of H(n), D(n)");
    for (long p : primes) {
        Place pl = Place::finite(p);
        Q q(p);
        for (int n = 1; n <= 6; ++n) {
            Q h, d;
            if (p != 2) {
                h = 2 / q_pow(q, n);
                d = n == 1 ? Q(1 - 3 / q) : Q(2 * (q - 1) / q_pow(q, n));
            } else if (n <= 3) {
                h = Q(1, 2);  // H(1) = O^*, H(2) = H(1), H(2e+1) = 2 / q^{e+1}
                d = 0;
            } else {
                h = 2 / q_pow(q, n - 1);  // +-(1 + P^{n-1})
                d = 2 * (q - 1) / q_pow(q, n - 1);
            }
            std::string ctx = "p=" + std::to_string(p) + " n=" + std::to_string(n);
            meas.expect(measure_H(n, pl) == h, "H " + ctx + " got " + to_string(measure_H(n, pl)));
            meas.expect(measure_D(n, pl) == d, "D " + ctx + " got " + to_string(measure_D(n, pl)));
        }
    }
    out.push_back(meas.done());

    out.push_back(run_trials("stabilization under deeper truncation", np * pts, o.seed, 1e-12, [&](long t, std::mt19937_64& r) {
        long p = primes[static_cast<std::size_t>(t / pts)];
        double q = static_cast<double>(p);
        MC chi = p == 2 ? MC::unramified(p, unit_circle(r)) : MC::legendre(p, unit_circle(r));
        cd s = draw_s(r, 0.2, 2.0, q);
        OutcomeSet set;
        set.add(expect_close(tate_gamma_integral(chi, std_psi, s, 2), tate_gamma_integral(chi, std_psi, s, 1), 1e-12,
                             "tate m+1"));
        set.add(expect_close(localcoef_eval(localcoef_decompose(chi, std_psi, 1), s),
                             localcoef_eval(localcoef_decompose(chi, std_psi, 0), s), 1e-12, "local coefficient +1 shell"));
        return set.out;
    }));
    return out;
}

std::vector<Check> suite_symbolic(const Options& o) {
    std::vector<Check> out;
    const long draws = trials_or(o, 50);
    const long primes[] = {3, 5, 7};
    for (int m : {2, 3, 4}) {
        out.push_back(run_trials("Sp_2m rank-one product = closed form, m=" + std::to_string(m), draws, o.seed, 1e-9,
                                 [&](long t, std::mt19937_64& r) {
                                     long p = primes[t % 3];
                                     SatakeParams mu = random_params(r, m, true);
                                     std::string why;
                                     if (!equals(sp_localcoef_product(mu, p), sp_localcoef_closed(mu, p), 1e-9, &why))
                                         return fail(why);
                                     return pass();
                                 }));
    }
    out.push_back(run_trials("metaplectic gamma double product = L_psi ratio, k,m <= 3", trials_or(o, 100), o.seed, 1e-9,
                             [&](long t, std::mt19937_64& r) {
                                 int k = 1 + static_cast<int>(t % 3), m = 1 + static_cast<int>((t / 3) % 3);
                                 double q = static_cast<double>(primes[(t / 9) % 3]);
                                 SatakeParams eta = random_params(r, k, false), alpha = random_params(r, m, false);
                                 std::string why;
                                 if (!equals(metaplectic_gamma_ps(eta, alpha, q), metaplectic_gamma_ratio(eta, alpha, q),
                                             1e-9, &why))
                                     return fail("k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " + why);
                                 return pass();
                             }));
    out.push_back(run_trials("gamma(tau^, 1-s) gamma(tau, s) constant", trials_or(o, 100), o.seed, 1e-9,
                             [&](long t, std::mt19937_64& r) {
                                 int m = 1 + static_cast<int>(t % 3);
                                 double q = static_cast<double>(primes[(t / 3) % 3]);
                                 GammaRat prod = GammaRat::constant(1.0);
                                 for (int i = 0; i < m; ++i) {
                                     cd a = unit_circle(r);
                                     prod = prod * tate_gamma_sym(a, q) * tate_gamma_sym(1.0 / a, q).substitute(-1, 1.0, q);
                                 }
                                 prod.reduce();
                                 if (!prod.zeros.empty() || !prod.poles.empty() || prod.degree != 0)
                                     return fail("not constant");
                                 double e = std::min(std::abs(prod.scalar - 1.0), std::abs(prod.scalar + 1.0));
                                 return e < 1e-9 ? pass(e) : fail("constant " + fmt(prod.scalar), e);
                             }));
    out.push_back(run_trials("factored vs dense evaluation", trials_or(o, 200), o.seed, 1e-12,
                             [&](long, std::mt19937_64& r) {
                                 GammaRat g = GammaRat::monomial(unit_circle(r) * uniform(r, 0.5, 2.0),
                                                                 static_cast<int>(uniform_int(r, -3, 3)));
                                 for (long i = uniform_int(r, 0, 6); i > 0; --i)
                                     g.zeros.push_back(unit_circle(r) * uniform(r, 0.2, 1.5));
                                 for (long i = uniform_int(r, 0, 6); i > 0; --i)
                                     g.poles.push_back(unit_circle(r) * uniform(r, 0.2, 1.5));
                                 cd y = unit_circle(r) * uniform(r, 0.1, 0.6);
                                 return expect_close(g.eval(y), dense_eval(g, y), 1e-12, "eval");
                             }));
    return out;
}

std::vector<Check> suite_reducibility(const Options& o) {
    std::vector<Check> out;
    auto oracle_member = [](const std::vector<cd>& a, const ReflectionReport& rr) {
        auto eq = [](cd x, cd y) { return std::abs(x - y) < 1e-9; };
        const cd ai = a[static_cast<std::size_t>(rr.i - 1)];
        if (rr.kind == "tau") return eq(ai * ai, 1.0);
        const cd aj = a[static_cast<std::size_t>(rr.j - 1)];
        if (rr.kind == "w") return eq(ai, aj);
        return eq(ai * aj, 1.0);
    };
    auto assess = [&](const std::vector<MC>& chars, const std::vector<cd>& alphas, const std::string& ctx) {
        ReducibilityVerdict v = reducibility_ps(chars, AdditiveCharacter{1});
        OutcomeSet set;
        if (!v.irreducible) set.add(fail(ctx + ": verdict reducible"));
        for (const auto& rr : v.reflections) {
            std::string tag = ctx + " " + rr.kind + "(" + std::to_string(rr.i) + "," + std::to_string(rr.j) + ")";
            if (rr.in_stabilizer != oracle_member(alphas, rr)) set.add(fail(tag + ": stabilizer membership"));
            if (rr.in_stabilizer && rr.order <= 0) set.add(fail(tag + ": beta-product does not vanish"));
        }
        if (set.out.ok) set.add(pass());
        return set.out;
    };

    out.push_back(run_trials("random unitary tuples with degeneracies", trials_or(o, 200), o.seed, 0.0,
                             [&](long t, std::mt19937_64& r) {
                                 long p = (t % 2) ? 3 : 5;
                                 int n = 1 + static_cast<int>(uniform_int(r, 0, 3));
                                 std::vector<cd> a;
                                 for (int i = 0; i < n; ++i) a.push_back(unit_circle(r));
                                 for (int i = 1; i < n; ++i) {
                                     long kind = uniform_int(r, 0, 4);
                                     std::size_t j = static_cast<std::size_t>(uniform_int(r, 0, i - 1));
                                     if (kind == 1) a[static_cast<std::size_t>(i)] = a[j];
                                     if (kind == 2) a[static_cast<std::size_t>(i)] = 1.0 / a[j];
                                 }
                                 if (uniform_int(r, 0, 2) == 0) a[static_cast<std::size_t>(uniform_int(r, 0, n - 1))] = uniform_int(r, 0, 1) ? 1.0 : -1.0;
                                 std::vector<MC> chars;
                                 for (cd x : a) chars.push_back(MC::unramified(p, x));
                                 return assess(chars, a, "n=" + std::to_string(n));
                             }));

    Accumulator dedicated("dedicated vanishing mechanisms");
    auto run_case = [&](const std::string& label, const std::vector<MC>& chars, const std::string& kind) {
        dedicated.guard(label, [&] {
            std::vector<cd> a;
            for (const auto& c : chars) a.push_back(c.ramified() ? cd(c.unit_value(smallest_nonresidue(c.p()))) : c.value_at_pi());
            ReducibilityVerdict v = reducibility_ps(chars, AdditiveCharacter{1});
            bool hit = false;
            for (const auto& rr : v.reflections)
                if (rr.kind == kind && rr.in_stabilizer && rr.order > 0) hit = true;
            if (!v.irreducible) return fail(label + ": reducible");
            if (kind.empty()) {
                for (const auto& rr : v.reflections)
                    if (rr.in_stabilizer) return fail(label + ": regular tuple has a stabilizer");
                return pass();
            }
            return hit ? pass() : fail(label + ": mechanism " + kind + " not exercised");
        });
    };
    const cd z = std::polar(1.0, 0.9);
    run_case("GL pair", {MC::unramified(3, z), MC::unramified(3, z)}, "w");
    run_case("inverse pair", {MC::unramified(3, z), MC::unramified(3, 1.0 / z)}, "w'");
    run_case("quadratic unramified entry", {MC::unramified(5, -1.0)}, "tau");
    run_case("quadratic ramified entry", {MC::legendre(5, 1.0)}, "tau");
    run_case("regular tuple", {MC::unramified(3, z), MC::unramified(3, std::polar(1.0, 2.1))}, "");
    out.push_back(dedicated.done());
    return out;
}

std::vector<Check> suite_archimedean(const Options& o) {
    std::vector<Check> out;
    auto real_s = [](std::mt19937_64& r, int parity, double a, double b) {
        const double t = (a > 0 ? 1 : -1) * (b > 0 ? 1 : -1) * parity / 4.0;
        const int n = parity == 1 ? 0 : 1;
        for (;;) {
            cd s(uniform(r, -3.0, 3.0), uniform(r, -3.0, 3.0));
            const cd args[] = {(1.0 - s) / 2.0 + t,     (1.0 + s) / 2.0 - t, s,           (1.0 - s) / 2.0 - t,
                               (1.0 + s) / 2.0 + t,     (s + 0.5 + static_cast<double>(n)) / 2.0,
                               1.0 - 2.0 * s,           (0.5 - s + static_cast<double>(n)) / 2.0};
            bool ok = true;
            for (cd z : args)
                if (z.real() < 0.5 && std::abs(z - std::round(z.real())) < 1e-2) ok = false;
            if (ok) return s;
        }
    };
    const long pts = trials_or(o, 50);
    const int parities[] = {1, 1, -1, -1};
    const double signs[] = {1.0, -1.0, 1.0, -1.0};
    out.push_back(run_trials("real Gamma-quotient form = L-function form", 4 * pts, o.seed, 1e-10, [&](long t, std::mt19937_64& r) {
        int parity = parities[t / pts];
        double a = signs[t / pts] * uniform(r, 0.5, 3.0);
        cd s = real_s(r, parity, a, a);
        return expect_close(sl2_localcoef_real(parity, a, a, s), sl2_localcoef_real_L(parity, a, s), 1e-10,
                            "parity=" + std::to_string(parity) + " sign(a)=" + std::to_string(a > 0 ? 1 : -1));
    }));
    out.push_back(run_trials("both signs of b vs the K-type formulas", 8 * pts, o.seed, 1e-10,
                             [&](long t, std::mt19937_64& r) {
                                 int combo = static_cast<int>(t / (2 * pts));
                                 int parity = parities[combo];
                                 double a = signs[combo] * uniform(r, 0.5, 3.0);
                                 double b = ((t / pts) % 2 ? -1.0 : 1.0) * uniform(r, 0.5, 3.0);
                                 cd s = real_s(r, parity, a, b);
                                 OutcomeSet set;
                                 set.add(expect_close(sl2_localcoef_real(parity, a, b, s),
                                                      sl2_localcoef_real_ktype(parity, a, b, s), 1e-10, "b-sign branch"));
                                 int twice_n = parity * (a > 0 ? 1 : -1);
                                 if (!admissible_fourier_type(parity, a, twice_n) ||
                                     admissible_fourier_type(parity, a, twice_n + 2))
                                     set.add(fail("Fourier type admissibility"));
                                 return set.out;
                             }));
    out.push_back(run_trials("complex duplication identity, |n| <= 4", 9 * trials_or(o, 20), o.seed, 1e-10,
                             [&](long t, std::mt19937_64& r) {
                                 int n = static_cast<int>(t % 9) - 4;
                                 cd s;
                                 for (;;) {
                                     s = cd(uniform(r, -3.0, 3.0), uniform(r, -3.0, 3.0));
                                     double m = std::abs(n);
                                     const cd args[] = {1.0 + m / 2.0 - s, m / 2.0 + s, 1.0 + m - 2.0 * s,
                                                        0.5 + m / 2.0 + s, m + 2.0 * s, 0.5 + m / 2.0 - s};
                                     bool ok = true;
                                     for (cd z : args)
                                         if (z.real() < 0.5 && std::abs(z - std::round(z.real())) < 1e-2) ok = false;
                                     if (ok) break;
                                 }
                                 OutcomeSet set;
                                 DuplicationSides d = complex_duplication_sides(n, s);
                                 set.add(expect_close(d.rhs, std::pow(2.0, 2.0 - 4.0 * s) * d.lhs, 1e-10,
                                                      "n=" + std::to_string(n) + " sides"));
                                 ComplexLocalCoef c = sl2_localcoef_complex(n, s);
                                 set.add(expect_close(c.doubled, std::pow(2.0, 1.0 - 4.0 * s) * c.tate, 1e-10,
                                                      "n=" + std::to_string(n) + " forms"));
                                 return set.out;
                             }));
    Accumulator weil("real Weil factor multiplicativity");
    for (double a : {1.0, -1.0})
        for (double x : {1.0, -1.0})
            for (double y : {1.0, -1.0}) {
                int h = (x < 0 && y < 0) ? -1 : 1;
                weil.expect(gamma_psi_real(a, x * y) ==
                                gamma_psi_real(a, x) * gamma_psi_real(a, y) * FourthRoot::from_sign(h),
                            "a=" + std::to_string(a) + " x=" + std::to_string(x) + " y=" + std::to_string(y));
            }
    out.push_back(weil.done());
    return out;
}

}  // namespace mpls::verify::detail
