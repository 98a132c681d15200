#pragma once

#include "mpls/field.hpp"
#include "mpls/matrix.hpp"

#include <cstdint>
#include <vector>

namespace mpls {

// Sp_2n acts on row vectors from the right; g J g^T = J with J = [[0, I], [-I, 0]].
// Index sets S are 0-based subsets of {0, ..., n-1}.
using IndexSet = std::vector<int>;

int half_dim(const QMatrix& g);
QMatrix J(int n);
bool is_symplectic(const QMatrix& g);
// lambda with g J g^T = lambda J; throws if g is not a similitude.
Q similitude(const QMatrix& g);

QMatrix tau_S(int n, const IndexSet& S);
QMatrix tau(int n);
// e_i -> lambda^{-1} e_i, e_i^* -> lambda e_i^* for i in S; a_S = a_S(-1).
QMatrix a_S(int n, const IndexSet& S, const Q& lambda = -1);
QMatrix hat(const QMatrix& g);
QMatrix n_k(const QMatrix& k);
QMatrix p_k(const QMatrix& k);
QMatrix i_lambda(int n, const Q& lambda);
// (w_pi)_{ij} = delta_{pi(i), j}
QMatrix w_perm(const std::vector<int>& perm);
QMatrix omega_n(int n);
QMatrix omega_prime(int m);
QMatrix epsilon_n(int n);
QMatrix sigma_0(int n);
QMatrix embed_i(int r, int n, const QMatrix& g);
QMatrix embed_j(int r, int n, const QMatrix& g);
QMatrix siegel(const QMatrix& a, const QMatrix& b);

bool in_siegel(const QMatrix& g);
int cell_index(const QMatrix& g);

struct BruhatData {
    QMatrix p1, p2;
    IndexSet S;
};

BruhatData bruhat_factor(const QMatrix& g);

// det(a-block of p1) det(a-block of p2), an unreduced representative of x(g).
Q x_value(const QMatrix& g);
SquareClass x_invariant(const QMatrix& g, const Place& place);

// i(lambda_g)^{-1} g
QMatrix p_of(const QMatrix& g);
// g^lambda = i(lambda^{-1}) g i(lambda)
QMatrix conj_lambda(const QMatrix& g, const Q& lambda);

// Word of random generators with parameters in {0, +-1, +-2, +-1/2, +-prime}.
QMatrix random_element(int n, int word_length, std::uint64_t seed, long prime = 3);
QMatrix random_siegel(int n, std::uint64_t seed, long prime = 3);
QMatrix random_symmetric(int n, std::uint64_t seed, long prime = 3, bool invertible = true);

}  // namespace mpls
