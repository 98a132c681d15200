#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace mpls {

using Z = mpz_class;
using Q = mpq_class;
using cd = std::complex<double>;

// Raised for inputs outside an operation's contract (CLI exit code 1).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Q make_q(long num, long den = 1) {
    Q r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n", "n/d", and "-n/d".
Q parse_q(const std::string& s);
std::string to_string(const Q& x);

Q q_pow(const Q& base, long e);
long ipow(long base, int e);

// Nonnegative residue of an integer modulo m.
long mod_long(const Z& x, long m);

}  // namespace mpls
