#pragma once

#include "mpls/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

namespace mpls::test {

inline bool close(cd a, cd b, double tol = 1e-10) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Q random_q(std::mt19937_64& r, long span = 60) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    long n = 0;
    while (n == 0) n = num(r);
    return make_q(n, den(r));
}

}  // namespace mpls::test
