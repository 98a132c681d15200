#include "mpls/field.hpp"

#include "mpls/parallel.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mpls {

Place Place::finite(long p) {
    if (!is_prime(p)) throw DomainError("place: " + std::to_string(p) + " is not prime");
    return Place{Kind::Finite, p};
}

Place Place::parse(const std::string& s) {
    if (s == "r" || s == "real" || s == "R") return real();
    if (s == "c" || s == "complex" || s == "C") return complex();
    std::string digits = s;
    if (!digits.empty() && (digits[0] == 'q' || digits[0] == 'Q')) digits = digits.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("malformed place: " + s);
    return finite(std::stol(digits));
}

std::string Place::name() const {
    switch (kind) {
        case Kind::Finite: return "q" + std::to_string(p);
        case Kind::Real: return "r";
        case Kind::Complex: return "c";
    }
    return "?";
}

LocalFieldContext LocalFieldContext::of(const Place& place) {
    LocalFieldContext c;
    c.place = place;
    if (place.is_finite()) {
        c.q = place.p;
        c.e = place.p == 2 ? 1 : 0;
        c.uniformizer = place.p;
        c.omega = place.p == 2 ? Q(1) : Q(2);
    }
    return c;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

long powmod(long b, long e, long m) {
    __int128 r = 1, x = ((b % m) + m) % m;
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<long>(r);
}

// Residue of a p-adic integer n/d (d prime to p) modulo m = p^k.
Z residue_mod(const Q& x, const Z& m) {
    Z num = x.get_num(), den = x.get_den();
    Z inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("residue of a non-integral rational");
    Z r = num * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

Z zpow(long p, long k) {
    Z r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

long smallest_nonresidue(long p) {
    if (p == 2) throw DomainError("no quadratic non-residue modulo 2");
    for (long n = 2;; ++n)
        if (powmod(n, (p - 1) / 2, p) == p - 1) return n;
}

long primitive_root(long p) {
    if (p == 2) return 1;
    std::vector<long> primes;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) primes.push_back(m);
    for (long g = 2;; ++g) {
        bool ok = true;
        for (long q : primes)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
}

long valuation(const Q& x, long p) {
    if (x == 0) throw DomainError("valuation of zero");
    Z t, pz(p);
    long v = 0;
    t = x.get_num();
    v += static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t()));
    t = x.get_den();
    v -= static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t()));
    return v;
}

long valuation(const Q& x, const Place& place) {
    if (!place.is_finite()) throw DomainError("valuation at an archimedean place");
    return valuation(x, place.p);
}

Q unit_part(const Q& x, long p) {
    return x / q_pow(Q(p), valuation(x, p));
}

int unit_legendre(const Q& u, long p) {
    Z r = residue_mod(u, Z(p));
    if (r == 0) throw DomainError("Legendre symbol of a non-unit");
    return powmod(r.get_si(), (p - 1) / 2, p) == 1 ? 1 : -1;
}

int unit_mod8(const Q& u) {
    return static_cast<int>(residue_mod(u, Z(8)).get_si());
}

SquareClass square_class(const Q& x, const Place& place) {
    if (x == 0) throw DomainError("square class of zero");
    switch (place.kind) {
        case Place::Kind::Real: return {Q(sgn(x)), place};
        case Place::Kind::Complex: return {Q(1), place};
        case Place::Kind::Finite: break;
    }
    const long p = place.p;
    const long v = valuation(x, p);
    const bool odd_v = (v % 2) != 0;
    const Q u = unit_part(x, p);
    Q rep;
    if (p == 2) {
        switch (unit_mod8(u)) {
            case 1: rep = 1; break;
            case 7: rep = -1; break;
            case 5: rep = 5; break;
            default: rep = -5; break;
        }
    } else {
        rep = unit_legendre(u, p) == 1 ? 1 : smallest_nonresidue(p);
    }
    if (odd_v) rep *= p;
    return {rep, place};
}

std::vector<Q> square_class_reps(const Place& place) {
    switch (place.kind) {
        case Place::Kind::Real: return {Q(1), Q(-1)};
        case Place::Kind::Complex: return {Q(1)};
        case Place::Kind::Finite: break;
    }
    const long p = place.p;
    if (p == 2) return {Q(1), Q(-1), Q(5), Q(-5), Q(2), Q(-2), Q(10), Q(-10)};
    const long n0 = smallest_nonresidue(p);
    return {Q(1), Q(n0), Q(p), Q(p * n0)};
}

int hilbert_symbol(const Q& a, const Q& b, const Place& place) {
    if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
    switch (place.kind) {
        case Place::Kind::Real: return (a < 0 && b < 0) ? -1 : 1;
        case Place::Kind::Complex: return 1;
        case Place::Kind::Finite: break;
    }
    const long p = place.p;
    const long al = valuation(a, p), be = valuation(b, p);
    const Q u = unit_part(a, p), v = unit_part(b, p);
    if (p == 2) {
        const int u8 = unit_mod8(u), v8 = unit_mod8(v);
        const int eps_u = ((u8 - 1) / 2) & 1, eps_v = ((v8 - 1) / 2) & 1;
        const int om_u = ((u8 * u8 - 1) / 8) & 1, om_v = ((v8 * v8 - 1) / 8) & 1;
        const long e = eps_u * eps_v + (al & 1) * om_v + (be & 1) * om_u;
        return (e & 1) ? -1 : 1;
    }
    int s = 1;
    if ((al & 1) && (be & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (be & 1) s *= unit_legendre(u, p);
    if (al & 1) s *= unit_legendre(v, p);
    return s;
}

Diagonalization diagonalize_symmetric(const QMatrix& m, PivotOrder order) {
    if (!m.is_symmetric()) throw DomainError("diagonalize_symmetric: matrix is not symmetric");
    const int n = m.rows();
    QMatrix a(m);
    QMatrix t = QMatrix::identity(n);  // t * m * t^T == a throughout

    auto add_row_col = [&](int dst, int src, const Q& f) {
        for (int j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
        for (int i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
        for (int j = 0; j < n; ++j) t(dst, j) += f * t(src, j);
    };
    auto swap_row_col = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
        for (int k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
        for (int k = 0; k < n; ++k) std::swap(t(i, k), t(j, k));
    };

    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int s = 0; s < n - k; ++s) {
            const int i = order == PivotOrder::First ? k + s : n - 1 - s;
            if (a(i, i) != 0) { piv = i; break; }
        }
        if (piv < 0) {
            int pi = -1, pj = -1;
            for (int i = k; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) { pi = i; pj = j; break; }
            if (pi < 0) break;
            add_row_col(pi, pj, Q(1));
            piv = pi;
        }
        swap_row_col(k, piv);
        for (int r = k + 1; r < n; ++r) {
            if (a(r, k) == 0) continue;
            add_row_col(r, k, -a(r, k) / a(k, k));
        }
    }

    Diagonalization d;
    d.full_diag = QMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        d.full_diag(i, i) = a(i, i);
        if (a(i, i) != 0) d.diag.push_back(a(i, i));
    }
    d.rank = static_cast<int>(d.diag.size());
    d.witness = t.inverse();
    return d;
}

int hasse_invariant(const std::vector<Q>& diag, const Place& place) {
    int h = 1;
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) h *= hilbert_symbol(diag[i], diag[j], place);
    return h;
}

SquareClass discriminant_class(const std::vector<Q>& diag, const Place& place) {
    Q d = 1;
    for (const auto& x : diag) {
        if (x == 0) throw DomainError("discriminant of a degenerate diagonal");
        d *= x;
    }
    return square_class(d, place);
}

RationalAngle::RationalAngle(const Q& x) {
    Z fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    t = x - Q(fl);
}

cd RationalAngle::value() const {
    if (t == 0) return {1.0, 0.0};
    if (t == Q(1, 4)) return {0.0, 1.0};
    if (t == Q(1, 2)) return {-1.0, 0.0};
    if (t == Q(3, 4)) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * t.get_d());
}

AdditiveCharacter AdditiveCharacter::normalization(long p) const {
    return AdditiveCharacter{a * q_pow(Q(p), conductor(p))};
}

Q frac_p(const Q& x, long p) {
    if (x == 0) return 0;
    const long v = valuation(x, p);
    if (v >= 0) return 0;
    const Z mod = zpow(p, -v);
    Q y = x * Q(mod);  // p-adic unit times p^0
    y.canonicalize();
    Z r = residue_mod(y, mod);
    Q f(r, mod);
    f.canonicalize();
    return f;
}

RationalAngle psi_value(const AdditiveCharacter& psi, const Q& x, const Place& place) {
    if (!place.is_finite()) throw DomainError("psi_value: archimedean characters live in realarch");
    return RationalAngle(frac_p(psi.a * x, place.p));
}

long MultiplicativeCharacter::table_generator(long p, int m) {
    long g = primitive_root(p);
    if (m >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
    return g;
}

MultiplicativeCharacter MultiplicativeCharacter::unramified(long p, cd value_at_pi) {
    if (!is_prime(p)) throw DomainError("character: modulus is not prime");
    MultiplicativeCharacter c;
    c.p_ = p;
    c.pi_ = value_at_pi;
    return c;
}

MultiplicativeCharacter MultiplicativeCharacter::from_generator(long p, int m, cd generator_value,
                                                                cd value_at_pi) {
    if (p == 2) throw DomainError("from_generator: use two_adic at p = 2");
    if (m <= 0) return unramified(p, value_at_pi);
    if (!is_prime(p)) throw DomainError("character: modulus is not prime");
    const long mod = ipow(p, m);
    const long phi = mod / p * (p - 1);
    const double theta = std::arg(generator_value);
    if (std::abs(std::abs(generator_value) - 1.0) > 1e-9 ||
        std::abs(std::polar(1.0, theta * static_cast<double>(phi)) - 1.0) > 1e-6)
        throw DomainError("from_generator: value is not a root of unity of order dividing phi(p^m)");
    std::vector<cd> table(mod, cd(0.0));
    const long g = table_generator(p, m);
    long x = 1;
    for (long k = 0; k < phi; ++k) {
        table[x] = std::polar(1.0, theta * static_cast<double>(k));
        x = static_cast<long>(static_cast<__int128>(x) * g % mod);
    }
    return from_table(p, m, std::move(table), value_at_pi);
}

MultiplicativeCharacter MultiplicativeCharacter::two_adic(int m, int at_minus_one, cd at_five,
                                                          cd value_at_pi) {
    if (m <= 1) return unramified(2, value_at_pi);
    if (at_minus_one != 1 && at_minus_one != -1) throw DomainError("two_adic: chi(-1) must be +-1");
    const long mod = ipow(2, m);
    const long ord5 = m >= 2 ? mod / 4 : 1;
    const double theta = std::arg(at_five);
    if (std::abs(std::abs(at_five) - 1.0) > 1e-9 ||
        std::abs(std::polar(1.0, theta * static_cast<double>(ord5)) - 1.0) > 1e-6)
        throw DomainError("two_adic: chi(5) must have order dividing 2^(m-2)");
    std::vector<cd> table(mod, cd(0.0));
    long x = 1;
    for (long b = 0; b < ord5; ++b) {
        const cd v = std::polar(1.0, theta * static_cast<double>(b));
        table[x] = v;
        table[mod - x] = v * static_cast<double>(at_minus_one);
        x = x * 5 % mod;
    }
    return from_table(2, m, std::move(table), value_at_pi);
}

MultiplicativeCharacter MultiplicativeCharacter::legendre(long p, cd value_at_pi) {
    return from_generator(p, 1, cd(-1.0), value_at_pi);
}

MultiplicativeCharacter MultiplicativeCharacter::from_table(long p, int m, std::vector<cd> table,
                                                            cd value_at_pi) {
    if (!is_prime(p)) throw DomainError("character: modulus is not prime");
    MultiplicativeCharacter c;
    c.p_ = p;
    c.m_ = m;
    c.modulus_ = ipow(p, m);
    if (static_cast<long>(table.size()) != c.modulus_) throw DomainError("character table has the wrong size");
    c.table_ = std::move(table);
    c.table_[0] = c.modulus_ == 1 ? cd(1.0) : cd(0.0);
    c.pi_ = value_at_pi;
    c.minimize();
    return c;
}

void MultiplicativeCharacter::minimize() {
    while (m_ > 0) {
        const long smaller = modulus_ / p_;
        bool trivial = true;
        for (long r = 1; r < modulus_ && trivial; ++r) {
            if (r % p_ == 0) continue;
            const cd ref = smaller == 1 ? cd(1.0) : table_[r % smaller];
            if (std::abs(table_[r] - ref) > 1e-9) trivial = false;
        }
        if (!trivial) break;
        std::vector<cd> t(smaller, cd(0.0));
        for (long r = 0; r < smaller; ++r) t[r] = table_[r];
        if (smaller == 1) t[0] = 1.0;
        table_ = std::move(t);
        modulus_ = smaller;
        --m_;
    }
}

cd MultiplicativeCharacter::unit_value(long r) const {
    if (m_ == 0) return 1.0;
    long x = r % modulus_;
    if (x < 0) x += modulus_;
    if (x % p_ == 0) throw DomainError("character evaluated on a non-unit");
    return table_[x];
}

cd MultiplicativeCharacter::unit_value(const Q& u) const {
    if (m_ == 0) return 1.0;
    return unit_value(residue_mod(u, Z(modulus_)).get_si());
}

cd MultiplicativeCharacter::operator()(const Q& x) const {
    if (x == 0) throw DomainError("character evaluated at zero");
    const long v = valuation(x, p_);
    return std::pow(pi_, static_cast<int>(v)) * unit_value(unit_part(x, p_));
}

MultiplicativeCharacter MultiplicativeCharacter::operator*(const MultiplicativeCharacter& o) const {
    if (p_ != o.p_) throw DomainError("product of characters at different places");
    const int m = std::max(m_, o.m_);
    const long mod = ipow(p_, m);
    std::vector<cd> t(mod, cd(0.0));
    for (long r = 1; r < mod; ++r)
        if (r % p_ != 0) t[r] = unit_value(r) * o.unit_value(r);
    if (mod == 1) t[0] = 1.0;
    return from_table(p_, m, std::move(t), pi_ * o.pi_);
}

MultiplicativeCharacter MultiplicativeCharacter::pow(int k) const {
    std::vector<cd> t(modulus_, cd(0.0));
    for (long r = 1; r < modulus_; ++r)
        if (r % p_ != 0) t[r] = std::pow(table_[r], k);
    if (modulus_ == 1) t[0] = 1.0;
    return from_table(p_, m_, std::move(t), std::pow(pi_, k));
}

MultiplicativeCharacter MultiplicativeCharacter::twisted_by_hilbert(const Q& a) const {
    const Place place = Place::finite(p_);
    const int m = std::max(m_, p_ == 2 ? 3 : 1);
    const long mod = ipow(p_, m);
    std::vector<cd> t(mod, cd(0.0));
    for (long r = 1; r < mod; ++r)
        if (r % p_ != 0) t[r] = unit_value(r) * static_cast<double>(hilbert_symbol(a, Q(r), place));
    return from_table(p_, m, std::move(t), pi_ * static_cast<double>(hilbert_symbol(a, Q(p_), place)));
}

bool MultiplicativeCharacter::approx_equal(const MultiplicativeCharacter& o, double tol) const {
    if (p_ != o.p_ || m_ != o.m_ || std::abs(pi_ - o.pi_) > tol) return false;
    for (long r = 1; r < modulus_; ++r)
        if (r % p_ != 0 && std::abs(table_[r] - o.table_[r]) > tol) return false;
    return true;
}

cd char_value(const MultiplicativeCharacter& chi, const Q& x) { return chi(x); }

namespace {

constexpr long kBlock = 512;

struct UnitRange {
    long p, mod;
    double weight;
};

UnitRange unit_range(int N, const Place& place) {
    if (!place.is_finite()) throw DomainError("unit_sum needs a finite place");
    if (N < 1) throw DomainError("unit_sum: level N must be at least 1");
    const long mod = ipow(place.p, N);
    return {place.p, mod, 1.0 / static_cast<double>(mod)};
}

cd block_sum(const UnitIntegrand& f, const UnitRange& u, long lo, long hi) {
    cd s = 0.0;
    for (long r = lo; r < hi; ++r)
        if (r % u.p != 0) s += f(r);
    return s;
}

}  // namespace

cd unit_sum(const UnitIntegrand& f, int N, const Place& place) {
    const UnitRange u = unit_range(N, place);
    const long nblocks = (u.mod + kBlock - 1) / kBlock;
    std::vector<cd> partial(nblocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count()) if (nblocks > 1)
#endif
    for (long b = 0; b < nblocks; ++b)
        partial[b] = block_sum(f, u, std::max(1L, b * kBlock), std::min(u.mod, (b + 1) * kBlock));
    cd s = 0.0;
    for (const auto& x : partial) s += x;
    return s * u.weight;
}

cd unit_sum_serial(const UnitIntegrand& f, int N, const Place& place) {
    const UnitRange u = unit_range(N, place);
    return block_sum(f, u, 1, u.mod) * u.weight;
}

cd gauss_sum(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi) {
    if (!chi.ramified()) return 1.0;
    const long p = chi.p();
    const int m = chi.conductor();
    const Q a0 = psi.normalization(p).a / q_pow(Q(p), m);
    return unit_sum([&](long r) { return RationalAngle(frac_p(a0 * Q(r), p)).value() * chi.unit_value(r); },
                    m, Place::finite(p));
}

}  // namespace mpls
