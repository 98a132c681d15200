#include "mpls/rational.hpp"

namespace mpls {

Q parse_q(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational");
    Q r;
    if (r.set_str(s, 10) != 0) throw DomainError("malformed rational: " + s);
    if (r.get_den() == 0) throw DomainError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Q& x) {
    Z n = x.get_num(), d = x.get_den();
    return n.get_str() + "/" + d.get_str();
}

Q q_pow(const Q& base, long e) {
    if (e < 0) {
        if (base == 0) throw DomainError("zero to a negative power");
        return q_pow(Q(1) / base, -e);
    }
    Q r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

long ipow(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

long mod_long(const Z& x, long m) {
    Z r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_si();
}

}  // namespace mpls
