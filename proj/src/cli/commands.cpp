#include "mpls/cli.hpp"

#include "codec.hpp"
#include "mpls/cocycle.hpp"
#include "mpls/realarch.hpp"
#include "mpls/symplectic.hpp"
#include "mpls/weil.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>

namespace mpls::cli {

namespace {

struct Global {
    std::string format = "json";
    double tol = 1e-8;
};

struct Result {
    json body;
    int code = kOk;
};

json header(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

double rel_error(cd got, cd want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

std::vector<cd> s_points(const std::vector<std::string>& specs) {
    if (specs.empty()) throw DomainError("at least one --s value is required");
    std::vector<cd> out;
    for (const auto& s : specs) out.push_back(parse_complex(s));
    return out;
}

Place finite_place(const std::optional<std::string>& place, std::optional<long> prime) {
    if (prime) {
        if (!is_prime(*prime)) throw DomainError("--prime must be prime, got " + std::to_string(*prime));
        return Place::finite(*prime);
    }
    if (!place) throw DomainError("a finite place is required (--place qP or --prime P)");
    Place pl = Place::parse(*place);
    if (!pl.is_finite()) throw DomainError("this command needs a finite place, got " + pl.name());
    return pl;
}

QMatrix load_symplectic(const std::string& arg, const std::string& what) {
    QMatrix g = matrix_from_json(load_json(arg));
    if (g.rows() != g.cols() || g.rows() % 2) throw DomainError(what + " must be a square matrix of even size");
    if (!is_symplectic(g)) throw DomainError(what + " is not symplectic (g^T J g != J)");
    return g;
}

json weil_rows(const Place& place, const AdditiveCharacter& psi) {
    json rows = json::array();
    for (const Q& a : square_class_reps(place)) {
        FourthRoot g = gamma_psi(a, psi, place);
        json row = {{"class", to_string(a)}};
        if (place.is_finite()) {
            row["valuation_parity"] = valuation(a, place.p) % 2 == 0 ? 0 : 1;
            if (place.p == 2) row["unit_mod_8"] = unit_mod8(unit_part(a, 2));
            else row["unit_is_square"] = unit_legendre(unit_part(a, place.p), place.p) == 1;
        }
        row["gamma"] = g.str();
        rows.push_back(row);
    }
    return rows;
}

struct HilbertArgs {
    std::string place, a, b;
};
Result cmd_hilbert(const HilbertArgs& a) {
    Place pl = Place::parse(a.place);
    Q x = parse_q(a.a), y = parse_q(a.b);
    json out = header("hilbert");
    out["place"] = pl.name();
    out["a"] = to_string(x);
    out["b"] = to_string(y);
    out["value"] = hilbert_symbol(x, y, pl);
    return {out};
}

struct WeilArgs {
    std::string place = "q2", a, psi = "1";
    bool bruteforce = false;
};
Result cmd_weil(const WeilArgs& a) {
    Place pl = Place::parse(a.place);
    Q x = parse_q(a.a);
    AdditiveCharacter psi{parse_q(a.psi)};
    FourthRoot g = gamma_psi(x, psi, pl);
    json out = header("weil");
    out["place"] = pl.name();
    out["a"] = to_string(x);
    out["psi_twist"] = to_string(psi.a);
    out["square_class"] = to_string(square_class(x, pl).rep);
    out["gamma"] = g.str();
    out["value"] = to_json(g.value());
    if (a.bruteforce) {
        const AdditiveCharacter std_psi{1};
        cd bf = psi.a == 1 ? gamma_psi_bruteforce(x, std_psi, pl)
                           : gamma_psi_bruteforce(x * psi.a, std_psi, pl) / gamma_psi_bruteforce(psi.a, std_psi, pl);
        out["bruteforce"] = to_json(bf);
        out["bruteforce_error"] = std::abs(bf - g.value());
        out["agrees"] = FourthRoot::snap(bf) == g;
        return {out, FourthRoot::snap(bf) == g ? kOk : kVerificationFailure};
    }
    return {out};
}

Result cmd_weil_table(const std::string& place, const std::string& psi_twist) {
    Place pl = Place::parse(place);
    AdditiveCharacter psi{parse_q(psi_twist)};
    json out = header("weil-table");
    out["place"] = pl.name();
    out["psi_twist"] = to_string(psi.a);
    out["rows"] = weil_rows(pl, psi);
    return {out};
}

struct TableArgs {
    std::string kind;
    std::optional<std::string> place;
    std::string psi = "1";
    int max_n = 6;
};
Result cmd_table(const TableArgs& a) {
    json out = header("table");
    out["kind"] = a.kind;
    if (a.kind == "q2-weil") {
        Place pl = Place::finite(2);
        out["place"] = pl.name();
        out["psi_twist"] = to_string(parse_q(a.psi));
        out["rows"] = weil_rows(pl, AdditiveCharacter{parse_q(a.psi)});
        return {out};
    }
    if (!a.place) throw DomainError("table --kind " + a.kind + " requires --place");
    Place pl = Place::parse(*a.place);
    out["place"] = pl.name();
    if (a.kind == "weil") {
        out["psi_twist"] = to_string(parse_q(a.psi));
        out["rows"] = weil_rows(pl, AdditiveCharacter{parse_q(a.psi)});
    } else if (a.kind == "hilbert") {
        json rows = json::array();
        auto reps = square_class_reps(pl);
        for (const Q& x : reps) {
            json row = {{"a", to_string(x)}};
            for (const Q& y : reps) row["b=" + to_string(y)] = hilbert_symbol(x, y, pl);
            rows.push_back(row);
        }
        out["rows"] = rows;
    } else if (a.kind == "measures") {
        if (!pl.is_finite()) throw DomainError("measures are defined at finite places");
        json rows = json::array();
        for (int n = 1; n <= a.max_n; ++n)
            rows.push_back({{"n", n}, {"H", to_string(measure_H(n, pl))}, {"D", to_string(measure_D(n, pl))}});
        out["rows"] = rows;
    } else {
        throw DomainError("unknown table kind '" + a.kind + "' (q2-weil, weil, hilbert, measures)");
    }
    return {out};
}

struct CocycleArgs {
    std::string place, g, h;
    bool kubota = false;
};
Result cmd_cocycle(const CocycleArgs& a) {
    Place pl = Place::parse(a.place);
    QMatrix g = load_symplectic(a.g, "--g"), h = load_symplectic(a.h, "--h");
    if (g.rows() != h.rows()) throw DomainError("--g and --h have different sizes");
    json out = header("cocycle");
    out["place"] = pl.name();
    out["n"] = half_dim(g);
    if (a.kubota) {
        if (g.rows() != 2) throw DomainError("--kubota needs 2 x 2 matrices");
        out["formula"] = "kubota";
        out["value"] = kubota_cocycle(g, h, pl);
        out["trace"] = {{"x_g", to_string(kubota_x(g))}, {"x_h", to_string(kubota_x(h))},
                        {"x_gh", to_string(kubota_x(g * h))}};
        return {out};
    }
    LerayForm lf = leray_form(g, h);
    json diag = json::array();
    for (const Q& d : lf.diag) diag.push_back(to_string(d));
    out["formula"] = "rao";
    out["value"] = rao_cocycle(g, h, pl);
    out["trace"] = {{"j1", lf.j1},
                    {"j2", lf.j2},
                    {"j", lf.j},
                    {"x_g", to_string(x_invariant(g, pl).rep)},
                    {"x_h", to_string(x_invariant(h, pl).rep)},
                    {"x_gh", to_string(x_invariant(g * h, pl).rep)},
                    {"leray_rank", lf.rank},
                    {"leray_l", lf.l},
                    {"leray_diag", diag},
                    {"leray_hasse", hasse_with(lf.diag, pl, kRaoConvention)}};
    return {out};
}

struct MpMulArgs {
    std::string place, elements;
};
Result cmd_mp_mul(const MpMulArgs& a) {
    Place pl = Place::parse(a.place);
    json list = load_json(a.elements);
    if (!list.is_array() || list.empty()) throw DomainError("--elements must be a non-empty array of [matrix, eps] pairs");
    std::optional<MetaplecticElement> acc;
    json steps = json::array();
    for (const auto& item : list) {
        json m, e;
        if (item.is_object()) {
            m = item.at("g");
            e = item.value("eps", json(1));
        } else if (item.is_array() && item.size() == 2 && item[1].is_number_integer()) {
            m = item[0];
            e = item[1];
        } else {
            throw DomainError("each element must be {\"g\": matrix, \"eps\": +-1} or [matrix, +-1]");
        }
        int eps = e.get<int>();
        if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
        QMatrix g = matrix_from_json(m);
        if (!is_symplectic(g)) throw DomainError("element " + std::to_string(steps.size()) + " is not symplectic");
        MetaplecticElement x{g, eps};
        acc = acc ? mp_mul(*acc, x, pl) : x;
        steps.push_back(acc->eps);
    }
    json out = header("mp-mul");
    out["place"] = pl.name();
    out["g"] = to_json(acc->g);
    out["eps"] = acc->eps;
    out["running_eps"] = steps;
    return {out};
}

struct BruhatArgs {
    std::string g;
    std::optional<std::string> place;
};
Result cmd_bruhat(const BruhatArgs& a) {
    QMatrix g = load_symplectic(a.g, "--g");
    BruhatData b = bruhat_factor(g);
    json out = header("bruhat");
    out["p1"] = to_json(b.p1);
    out["S"] = b.S;
    out["p2"] = to_json(b.p2);
    out["cell"] = cell_index(g);
    out["x_value"] = to_string(x_value(g));
    if (a.place) {
        Place pl = Place::parse(*a.place);
        out["place"] = pl.name();
        out["x_class"] = to_string(x_invariant(g, pl).rep);
    } else {
        out["x_class"] = nullptr;
    }
    return {out};
}

struct LocalCoefArgs {
    std::optional<std::string> place;
    std::optional<long> prime;
    std::string chi = "trivial", psi = "1", mode = "both", emit = "value", group = "sl2", satake;
    std::optional<std::string> psi_w;
    std::vector<std::string> s;
    int extra = 0, parity = 1, n = 0;
    double a = 1.0;
    std::optional<double> b;
};

Result localcoef_real(const LocalCoefArgs& a, const Global& g) {
    const double b = a.b.value_or(a.a);
    json out = header("local-coef");
    out["place"] = "r";
    out["parity"] = a.parity;
    out["a"] = a.a;
    out["b"] = b;
    json rows = json::array();
    int code = kOk;
    for (cd s : s_points(a.s)) {
        cd gq = sl2_localcoef_real(a.parity, a.a, b, s);
        cd kt = sl2_localcoef_real_ktype(a.parity, a.a, b, s);
        json row = {{"s", to_json(s)}, {"gamma_form", to_json(gq)}, {"ktype_form", to_json(kt)}};
        double err = rel_error(gq, kt);
        if (a.a == b) {
            cd lf = sl2_localcoef_real_L(a.parity, a.a, s);
            row["L_form"] = to_json(lf);
            err = std::max(err, rel_error(gq, lf));
        }
        row["difference"] = std::abs(gq - kt);
        row["rel_error"] = err;
        if (err > g.tol) code = kVerificationFailure;
        rows.push_back(row);
    }
    out["values"] = rows;
    return {out, code};
}

Result localcoef_complex(const LocalCoefArgs& a, const Global& g) {
    json out = header("local-coef");
    out["place"] = "c";
    out["n"] = a.n;
    json rows = json::array();
    int code = kOk;
    for (cd s : s_points(a.s)) {
        ComplexLocalCoef c = sl2_localcoef_complex(a.n, s);
        cd want = std::pow(2.0, 1.0 - 4.0 * s);
        double err = rel_error(c.doubled / c.tate, want);
        if (err > g.tol) code = kVerificationFailure;
        rows.push_back({{"s", to_json(s)}, {"tate_form", to_json(c.tate)}, {"doubled_form", to_json(c.doubled)},
                        {"ratio", to_json(c.doubled / c.tate)}, {"expected_ratio", to_json(want)}, {"rel_error", err}});
    }
    out["values"] = rows;
    return {out, code};
}

Result localcoef_sp(const LocalCoefArgs& a, const Global& g) {
    Place pl = finite_place(a.place, a.prime);
    if (pl.p == 2) throw DomainError("the Sp_2m closed form needs an odd prime");
    SatakeParams mu{parse_complex_list(a.satake)};
    if (mu.values.empty()) throw DomainError("--satake needs at least one parameter");
    GammaRat closed = sp_localcoef_closed(mu, pl.p);
    json out = header("local-coef");
    out["group"] = "sp2m";
    out["place"] = pl.name();
    out["m"] = mu.values.size();
    out["closed"] = to_json(closed);
    int code = kOk;
    GammaRat product;
    if (a.mode == "both") {
        product = sp_localcoef_product(mu, pl.p);
        std::string why;
        bool eq = equals(product, closed, g.tol, &why);
        out["product"] = to_json(product);
        out["equal"] = eq;
        if (!eq) {
            out["mismatch"] = why;
            code = kVerificationFailure;
        }
    }
    if (!a.s.empty()) {
        json rows = json::array();
        for (cd s : s_points(a.s)) {
            json row = {{"s", to_json(s)}, {"closed", to_json(closed.eval_s(s, double(pl.p)))}};
            if (a.mode == "both") row["product"] = to_json(product.eval_s(s, double(pl.p)));
            rows.push_back(row);
        }
        out["values"] = rows;
    }
    return {out, code};
}

Result cmd_local_coef(const LocalCoefArgs& a, const Global& g) {
    if (a.mode != "integral" && a.mode != "closed" && a.mode != "both")
        throw DomainError("--mode must be integral, closed or both");
    if (a.group == "sp2m") return localcoef_sp(a, g);
    if (a.group != "sl2") throw DomainError("--group must be sl2 or sp2m");
    if (a.place && !a.prime) {
        Place pl = Place::parse(*a.place);
        if (pl.kind == Place::Kind::Real) return localcoef_real(a, g);
        if (pl.kind == Place::Kind::Complex) return localcoef_complex(a, g);
    }
    Place pl = finite_place(a.place, a.prime);
    const long p = pl.p;
    MultiplicativeCharacter chi = parse_character(p, a.chi);
    AdditiveCharacter psi{parse_q(a.psi)};
    AdditiveCharacter psi_w = a.psi_w ? AdditiveCharacter{parse_q(*a.psi_w)} : psi;
    LocalCoefDecomposition d = localcoef_decompose(chi, psi, psi_w, a.extra);

    json out = header("local-coef");
    out["place"] = pl.name();
    out["character"] = a.chi;
    out["conductor"] = chi.conductor();
    out["psi"] = to_string(psi.a);
    out["psi_w"] = to_string(psi_w.a);
    if (a.emit == "decomposition") {
        out["decomposition"] = to_json(d);
        return {out};
    }
    if (a.emit != "value") throw DomainError("--emit must be value or decomposition");

    std::optional<SL2Closed> closed;
    if (a.mode != "integral") {
        if (psi_w.a != psi.a) throw DomainError("the closed form uses the same character for gamma_psi and the Whittaker functional");
        closed = sl2_localcoef_closed(chi, psi);
        if (closed->known) {
            out["closed"] = to_json(closed->value);
        } else {
            out["closed"] = nullptr;
            out["note"] = "chi^2 is ramified: the closed form is an undetermined monomial";
        }
    }
    const double q = double(p);
    int code = kOk;
    json rows = json::array();
    for (cd s : s_points(a.s)) {
        json row = {{"s", to_json(s)}};
        cd integral = 0.0;
        if (a.mode != "closed") {
            integral = 1.0 / localcoef_eval(d, s);
            row["integral"] = to_json(integral);
        }
        if (closed && closed->known) {
            cd c = closed->value.eval_s(s, q);
            row["closed"] = to_json(c);
            if (a.mode == "both") {
                double err = rel_error(integral, c);
                row["rel_error"] = err;
                if (err > g.tol) code = kVerificationFailure;
            }
        }
        rows.push_back(row);
    }
    out["values"] = rows;
    return {out, code};
}

struct GammaArgs {
    std::string kind, params;
    std::optional<long> prime;
    std::optional<double> q;
    std::optional<std::string> chi;
    std::string psi = "1";
    double shift = 0.0;
    std::vector<std::string> s;
};
Result cmd_gamma(const GammaArgs& a) {
    double q = 0;
    if (a.q) q = *a.q;
    else if (a.prime) q = double(*a.prime);
    else throw DomainError("gamma needs --prime or --q");
    if (q <= 1) throw DomainError("--q must exceed 1");
    auto halves = [&]() {
        auto bar = a.params.find('|');
        if (bar == std::string::npos) throw DomainError("--params for " + a.kind + " takes two lists separated by '|'");
        return std::pair{SatakeParams{parse_complex_list(a.params.substr(0, bar))},
                         SatakeParams{parse_complex_list(a.params.substr(bar + 1))}};
    };
    GammaRat r;
    json out = header("gamma");
    out["kind"] = a.kind;
    out["q"] = q;
    if (a.kind == "tate") {
        if (a.chi) {
            if (!a.prime) throw DomainError("--char needs --prime");
            r = tate_gamma_sym(parse_character(*a.prime, *a.chi), AdditiveCharacter{parse_q(a.psi)}, a.shift);
        } else {
            auto alphas = parse_complex_list(a.params);
            if (alphas.size() != 1) throw DomainError("tate takes one Satake parameter in --params (or --char)");
            r = tate_gamma_sym(alphas[0], q, a.shift);
        }
    } else if (a.kind == "sym2") {
        r = sym2_gamma(SatakeParams{parse_complex_list(a.params)}, q);
    } else if (a.kind == "rankin") {
        auto [x, y] = halves();
        r = rankin_gamma(x, y, q, a.shift);
    } else if (a.kind == "metaplectic") {
        auto [eta, alpha] = halves();
        r = metaplectic_gamma_ps(eta, alpha, q);
        out["matches_L_ratio"] = equals(r, metaplectic_gamma_ratio(eta, alpha, q));
    } else {
        throw DomainError("unknown gamma kind '" + a.kind + "' (tate, sym2, rankin, metaplectic)");
    }
    r.reduce();
    json body = to_json(r);
    for (auto& [k, v] : body.items()) out[k] = v;
    if (!a.s.empty()) {
        json rows = json::array();
        for (cd s : s_points(a.s)) rows.push_back({{"s", to_json(s)}, {"value", to_json(r.eval_s(s, q))}});
        out["values"] = rows;
    }
    return {out};
}

IndicatorFunction parse_indicator(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "ball" && !rest.empty()) return IndicatorFunction::ball(std::stoi(rest));
    if (kind == "coset") {
        auto c2 = rest.find(':');
        if (c2 != std::string::npos) return IndicatorFunction::coset(parse_q(rest.substr(0, c2)), std::stoi(rest.substr(c2 + 1)));
    }
    throw DomainError("--phi must be ball:<n> or coset:<a>:<n>");
}

struct MellinArgs {
    std::string kind;
    std::optional<std::string> place;
    std::optional<long> prime;
    std::string chi = "trivial", psi = "1", phi = "ball:0", y = "1";
    std::vector<std::string> s;
    int m = 1, n = 1;
};
Result cmd_mellin(const MellinArgs& a, const Global& g) {
    Place pl = finite_place(a.place, a.prime);
    const double q = double(pl.p);
    json out = header("mellin");
    out["kind"] = a.kind;
    out["place"] = pl.name();
    if (a.kind == "measure") {
        if (a.n < 1) throw DomainError("--n must be at least 1");
        out["n"] = a.n;
        out["H"] = to_string(measure_H(a.n, pl));
        out["D"] = to_string(measure_D(a.n, pl));
        return {out};
    }
    AdditiveCharacter psi{parse_q(a.psi)};
    out["psi"] = to_string(psi.a);
    if (a.kind == "phi-tilde") {
        IndicatorFunction phi = parse_indicator(a.phi);
        Q y = parse_q(a.y);
        cd closed = phi_tilde(phi, y, psi, pl), direct = phi_tilde_direct(phi, y, psi, pl);
        double err = rel_error(closed, direct);
        out["phi"] = a.phi;
        out["y"] = to_string(y);
        out["closed"] = to_json(closed);
        out["direct"] = to_json(direct);
        out["rel_error"] = err;
        return {out, err > g.tol ? kVerificationFailure : kOk};
    }
    MultiplicativeCharacter chi = parse_character(pl.p, a.chi);
    out["character"] = a.chi;
    int code = kOk;
    json rows = json::array();
    for (cd s : s_points(a.s)) {
        json row = {{"s", to_json(s)}};
        std::optional<std::pair<cd, cd>> pair;
        if (a.kind == "tate") {
            cd integral = tate_gamma_integral(chi, psi, s, a.m);
            row["integral"] = to_json(integral);
            if (psi.normalized(pl.p))
                pair = {integral, tate_gamma_sym(chi.inverse(), AdditiveCharacter{-psi.a}).substitute(-1, 1.0, q).eval_s(s, q)};
        } else if (a.kind == "gamma-tilde") {
            pair = {gamma_tilde_integral(chi, psi, s), localcoef_eval(localcoef_decompose(chi, psi), s)};
        } else if (a.kind == "zeta") {
            row["value"] = to_json(zeta(parse_indicator(a.phi), chi, s));
        } else if (a.kind == "functional-equation") {
            IndicatorFunction phi = parse_indicator(a.phi);
            pair = {localcoef_eval(localcoef_decompose(chi.inverse(), psi), 1.0 - s) * zeta(phi, chi, s),
                    zeta_tilde(phi, chi.inverse(), psi, 1.0 - s)};
        } else {
            throw DomainError("unknown mellin kind '" + a.kind +
                              "' (tate, gamma-tilde, zeta, functional-equation, phi-tilde, measure)");
        }
        if (pair) {
            double err = rel_error(pair->first, pair->second);
            if (a.kind != "tate") row["lhs"] = to_json(pair->first);
            row[a.kind == "tate" ? "closed" : "rhs"] = to_json(pair->second);
            row["rel_error"] = err;
            if (err > g.tol) code = kVerificationFailure;
        }
        rows.push_back(row);
    }
    out["values"] = rows;
    return {out, code};
}

struct ReducibilityArgs {
    std::optional<std::string> place;
    std::optional<long> prime;
    std::string alphas, psi = "1";
};
Result cmd_reducibility(const ReducibilityArgs& a) {
    Place pl = finite_place(a.place, a.prime);
    std::vector<MultiplicativeCharacter> chars;
    std::string cur;
    std::istringstream in(a.alphas);
    while (std::getline(in, cur, ';')) {
        bool named = !cur.empty() && std::isalpha(static_cast<unsigned char>(cur[0])) && cur.rfind("e:", 0) != 0;
        chars.push_back(named ? parse_character(pl.p, cur) : MultiplicativeCharacter::unramified(pl.p, parse_complex(cur)));
    }
    if (chars.empty()) throw DomainError("--alphas needs at least one entry");
    ReducibilityVerdict v = reducibility_ps(chars, AdditiveCharacter{parse_q(a.psi)});
    json rows = json::array();
    for (const auto& r : v.reflections)
        rows.push_back({{"kind", r.kind}, {"i", r.i}, {"j", r.j}, {"in_stabilizer", r.in_stabilizer}, {"order", r.order}});
    json out = header("reducibility");
    out["place"] = pl.name();
    out["n"] = chars.size();
    out["reflections"] = rows;
    out["verdict"] = v.irreducible ? "irreducible" : "reducible";
    return {out};
}

struct VerifyArgs {
    std::string suite = "all";
    std::optional<std::string> place;
    int n = 0;
    long trials = 0;
    std::optional<std::uint64_t> seed;
    bool list = false;
};
Result cmd_verify(const VerifyArgs& a, const Global& g) {
    json out = header("verify");
    if (a.list) {
        json rows = json::array();
        for (const auto& s : verify::suites())
            rows.push_back({{"suite", s.name}, {"criterion", s.criterion}, {"title", s.title}});
        out["suites"] = rows;
        return {out};
    }
    if (!a.seed) throw DomainError("verify requires --seed");
    verify::Options o;
    o.n = a.n;
    o.trials = a.trials;
    o.seed = *a.seed;
    if (a.place) o.place = Place::parse(*a.place);
    std::vector<std::string> names;
    if (a.suite == "all")
        for (const auto& s : verify::suites()) names.push_back(s.name);
    else
        names.push_back(a.suite);
    json reports = json::array(), flat = json::array();
    bool ok = true;
    for (const auto& name : names) {
        verify::Report r = verify::run(name, o);
        ok = ok && r.passed();
        reports.push_back(to_json(r));
        for (const auto& c : r.checks)
            flat.push_back({{"suite", name}, {"check", c.name}, {"cases", c.cases}, {"failures", c.failures},
                            {"status", c.passed() ? "pass" : "FAIL"}});
    }
    out["seed"] = o.seed;
    if (g.format == "table") out["checks"] = flat;
    else out["reports"] = reports;
    out["passed"] = ok;
    return {out, ok ? kOk : kVerificationFailure};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact metaplectic Sp_2n computations: Hilbert symbols, Weil factors, Rao's cocycle, local coefficients.",
                 "mpls"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--tol", g.tol, "Relative tolerance for numeric agreement");

    HilbertArgs ha;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_F");
    hilbert->add_option("--place", ha.place, "q<p>, r or c")->required();
    hilbert->add_option("--a", ha.a)->required();
    hilbert->add_option("--b", ha.b)->required();

    WeilArgs wa;
    std::string wt_place = "q2", wt_psi = "1";
    auto* weil = app.add_subcommand("weil", "Weil factor gamma_psi(a)");
    weil->add_option("--place", wa.place);
    weil->add_option("--a", wa.a);
    weil->add_option("--psi-twist", wa.psi, "psi_b(x) = psi(b x)");
    weil->add_flag("--bruteforce", wa.bruteforce, "Also evaluate the principal-value sum");
    auto* weil_table = weil->add_subcommand("table", "gamma_psi on every square class");
    weil_table->add_option("--place", wt_place);
    weil_table->add_option("--psi-twist", wt_psi);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Tables: q2-weil, weil, hilbert, measures");
    table->add_option("--kind", ta.kind)->required();
    table->add_option("--place", ta.place);
    table->add_option("--psi-twist", ta.psi);
    table->add_option("--max-n", ta.max_n);

    CocycleArgs ca;
    auto* cocycle = app.add_subcommand("cocycle", "Rao cocycle c(g, h) with a trace");
    cocycle->set_help_flag("--help", "Print this help message and exit");
    cocycle->add_option("--place", ca.place)->required();
    cocycle->add_option("--g", ca.g, "Matrix as JSON (file or inline)")->required();
    cocycle->add_option("--h", ca.h)->required();
    cocycle->add_flag("--kubota", ca.kubota, "Use Kubota's SL_2 formula");

    MpMulArgs ma;
    auto* mpmul = app.add_subcommand("mp-mul", "Product of metaplectic elements (g, eps)");
    mpmul->add_option("--place", ma.place)->required();
    mpmul->add_option("--elements", ma.elements, "JSON list of [matrix, eps] pairs (file or inline)")->required();

    BruhatArgs ba;
    auto* bruhat = app.add_subcommand("bruhat", "Bruhat factorization g = p1 tau_S p2");
    bruhat->add_option("--g", ba.g)->required();
    bruhat->add_option("--place", ba.place);

    LocalCoefArgs la;
    auto* lc = app.add_subcommand("local-coef", "Local coefficient of the metaplectic SL_2 (or Sp_2m) principal series");
    lc->add_option("--place", la.place);
    lc->add_option("--prime", la.prime);
    lc->add_option("--char", la.chi, "trivial | unramified:<z> | legendre[:<z>] | generator:<m>:<z>[:<z>] | two-adic:...");
    lc->add_option("--psi", la.psi, "psi_a for gamma_psi (and the Whittaker character by default)");
    lc->add_option("--psi-w", la.psi_w, "Separate Whittaker character");
    lc->add_option("--s", la.s, "re,im (repeatable)");
    lc->add_option("--mode", la.mode);
    lc->add_option("--emit", la.emit);
    lc->add_option("--extra", la.extra, "Additional shells past the truncation point");
    lc->add_option("--group", la.group);
    lc->add_option("--satake", la.satake, "Semicolon-separated Satake parameters (sp2m)");
    lc->add_option("--parity", la.parity, "chi(-1) at the real place");
    lc->add_option("--a", la.a);
    lc->add_option("--b", la.b);
    lc->add_option("--n", la.n, "Character index at the complex place");

    GammaArgs ga;
    auto* gamma = app.add_subcommand("gamma", "Factored gamma factors");
    gamma->add_option("--kind", ga.kind)->required();
    gamma->add_option("--params", ga.params, "Semicolon-separated lists; two lists are separated by '|'");
    gamma->add_option("--prime", ga.prime);
    gamma->add_option("--q", ga.q);
    gamma->add_option("--char", ga.chi);
    gamma->add_option("--psi", ga.psi);
    gamma->add_option("--shift", ga.shift);
    gamma->add_option("--s", ga.s);

    MellinArgs mla;
    auto* mellin = app.add_subcommand("mellin", "Tate integrals, zeta integrals, phi-tilde, measures");
    mellin->add_option("--kind", mla.kind)->required();
    mellin->add_option("--place", mla.place);
    mellin->add_option("--prime", mla.prime);
    mellin->add_option("--char", mla.chi);
    mellin->add_option("--psi", mla.psi);
    mellin->add_option("--phi", mla.phi, "ball:<n> or coset:<a>:<n>");
    mellin->add_option("--y", mla.y);
    mellin->add_option("--s", mla.s);
    mellin->add_option("--m", mla.m, "Truncation exponent of the Tate integral");
    mellin->add_option("--n", mla.n);

    ReducibilityArgs ra;
    auto* red = app.add_subcommand("reducibility", "Irreducibility of unitary principal series");
    red->add_option("--place", ra.place);
    red->add_option("--prime", ra.prime);
    red->add_option("--alphas", ra.alphas, "Semicolon-separated values at pi or character specs")->required();
    red->add_option("--psi", ra.psi);

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", va.suite);
    ver->add_option("--place", va.place);
    ver->add_option("--n", va.n);
    ver->add_option("--trials", va.trials);
    ver->add_option("--seed", va.seed);
    ver->add_flag("--list", va.list);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }

    try {
        Result r;
        if (hilbert->parsed()) r = cmd_hilbert(ha);
        else if (weil_table->parsed()) r = cmd_weil_table(wt_place, wt_psi);
        else if (weil->parsed()) {
            if (wa.a.empty()) throw DomainError("weil requires --a (or the table subcommand)");
            r = cmd_weil(wa);
        } else if (table->parsed()) r = cmd_table(ta);
        else if (cocycle->parsed()) r = cmd_cocycle(ca);
        else if (mpmul->parsed()) r = cmd_mp_mul(ma);
        else if (bruhat->parsed()) r = cmd_bruhat(ba);
        else if (lc->parsed()) r = cmd_local_coef(la, g);
        else if (gamma->parsed()) r = cmd_gamma(ga);
        else if (mellin->parsed()) r = cmd_mellin(mla, g);
        else if (red->parsed()) r = cmd_reducibility(ra);
        else if (ver->parsed()) r = cmd_verify(va, g);
        if (g.format == "table") out << render_table(r.body);
        else out << r.body.dump(2) << "\n";
        return r.code;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace mpls::cli
