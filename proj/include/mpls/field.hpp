#pragma once

#include "mpls/matrix.hpp"
#include "mpls/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mpls {

struct Place {
    enum class Kind { Finite, Real, Complex };
    Kind kind = Kind::Real;
    long p = 0;

    static Place finite(long p);
    static Place real() { return Place{Kind::Real, 0}; }
    static Place complex() { return Place{Kind::Complex, 0}; }
    // "q2", "q13", "r"/"real", "c"/"complex".
    static Place parse(const std::string& s);

    bool is_finite() const { return kind == Kind::Finite; }
    std::string name() const;
    bool operator==(const Place& o) const { return kind == o.kind && p == o.p; }
};

struct LocalFieldContext {
    Place place;
    long q = 0;
    int e = 0;
    Q uniformizer;
    Q omega;

    static LocalFieldContext of(const Place& place);
};

struct SquareClass {
    Q rep;
    Place place;
    bool operator==(const SquareClass& o) const { return place == o.place && rep == o.rep; }
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
};

bool is_prime(long n);
long smallest_nonresidue(long p);
long primitive_root(long p);

long valuation(const Q& x, const Place& place);
long valuation(const Q& x, long p);
// x / p^valuation(x).
Q unit_part(const Q& x, long p);
// Legendre symbol of a p-adic unit, odd p.
int unit_legendre(const Q& u, long p);
// Residue of a 2-adic unit modulo 8.
int unit_mod8(const Q& u);

SquareClass square_class(const Q& x, const Place& place);
std::vector<Q> square_class_reps(const Place& place);

int hilbert_symbol(const Q& a, const Q& b, const Place& place);

struct Diagonalization {
    std::vector<Q> diag;   // nonzero diagonal entries
    int rank = 0;
    QMatrix witness;       // C with C * full_diag * C^T == input
    QMatrix full_diag;
};

enum class PivotOrder { First, Last };

Diagonalization diagonalize_symmetric(const QMatrix& m, PivotOrder order = PivotOrder::First);

int hasse_invariant(const std::vector<Q>& diag, const Place& place);
SquareClass discriminant_class(const std::vector<Q>& diag, const Place& place);

// e^{2 pi i t} with t in [0, 1).
struct RationalAngle {
    Q t;
    RationalAngle() : t(0) {}
    explicit RationalAngle(const Q& x);
    RationalAngle operator+(const RationalAngle& o) const { return RationalAngle(t + o.t); }
    RationalAngle operator-() const { return RationalAngle(-t); }
    bool operator==(const RationalAngle& o) const { return t == o.t; }
    cd value() const;
};

// psi_a(x) = psi_std(a x).
struct AdditiveCharacter {
    Q a = 1;
    long conductor(long p) const { return -valuation(a, p); }
    bool normalized(long p) const { return conductor(p) == 0; }
    // psi_0(x) = psi(x p^n) for conductor n.
    AdditiveCharacter normalization(long p) const;
};

// p-adic fractional part of x, in [0, 1).
Q frac_p(const Q& x, long p);
RationalAngle psi_value(const AdditiveCharacter& psi, const Q& x, const Place& place);

class MultiplicativeCharacter {
public:
    MultiplicativeCharacter() = default;

    static MultiplicativeCharacter unramified(long p, cd value_at_pi);
    // Odd p: value on the fixed generator of (Z/p^m)^*, which must have order dividing phi(p^m).
    static MultiplicativeCharacter from_generator(long p, int m, cd generator_value, cd value_at_pi);
    // p = 2, m >= 2: values on -1 and on 5, the generators of (Z/2^m)^*.
    static MultiplicativeCharacter two_adic(int m, int at_minus_one, cd at_five, cd value_at_pi);
    static MultiplicativeCharacter legendre(long p, cd value_at_pi = 1.0);
    // table indexed by residues mod p^m (non-units ignored); conductor is minimized.
    static MultiplicativeCharacter from_table(long p, int m, std::vector<cd> table, cd value_at_pi);

    long p() const { return p_; }
    int conductor() const { return m_; }
    bool ramified() const { return m_ > 0; }
    cd value_at_pi() const { return pi_; }
    // Value on an integer coprime to p.
    cd unit_value(long r) const;
    cd unit_value(const Q& u) const;
    cd operator()(const Q& x) const;

    MultiplicativeCharacter operator*(const MultiplicativeCharacter& o) const;
    MultiplicativeCharacter pow(int k) const;
    MultiplicativeCharacter inverse() const { return pow(-1); }
    // chi * (a, .)_F
    MultiplicativeCharacter twisted_by_hilbert(const Q& a) const;

    bool approx_equal(const MultiplicativeCharacter& o, double tol = 1e-9) const;
    // Generator of (Z/p^m)^* used for tables (odd p).
    static long table_generator(long p, int m);

private:
    long p_ = 2;
    int m_ = 0;
    long modulus_ = 1;
    std::vector<cd> table_{cd(1.0)};
    cd pi_ = 1.0;
    void minimize();
};

cd char_value(const MultiplicativeCharacter& chi, const Q& x);

using UnitIntegrand = std::function<cd(long)>;

// (1 - 1/q) times the average of f over unit representatives of (Z/p^N)^*.
// Partial sums run over a fixed block partition so the result does not depend
// on the worker count.
cd unit_sum(const UnitIntegrand& f, int N, const Place& place);
cd unit_sum_serial(const UnitIntegrand& f, int N, const Place& place);

cd gauss_sum(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi);

}  // namespace mpls
