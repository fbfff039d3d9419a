#pragma once

#include <vector>

#include "hodge/rational.hpp"
#include "hodge/weyl.hpp"

namespace hodge {

// Discrete invariants of a semistable module: block lengths l_1..l_s,
// Frobenius eigenvalue labels alpha_1..alpha_s (one per block; the block
// then carries the chain alpha, p*alpha, ..., p^{l-1}*alpha), and strictly
// decreasing Hodge-Tate weights h_1 > ... > h_n.
class SemistableShape {
public:
    // Validates everything: p prime, lengths positive, alphas nonzero,
    // weights strictly decreasing, derived eigenvalue list distinct, and
    // the ordering constraint "alpha_j = alpha_i * p^{l_i} forces j=i+1".
    // Throws InvalidShape.
    static SemistableShape make(long prime, std::vector<int> lengths,
                                std::vector<Q> alphas,
                                std::vector<long> weights);

    long prime() const { return prime_; }
    int s() const { return static_cast<int>(lengths_.size()); }
    int n() const { return n_; }
    const std::vector<int>& lengths() const { return lengths_; }
    const std::vector<Q>& alphas() const { return alphas_; }
    const std::vector<long>& weights() const { return weights_; }

    // t_r = l_1 + ... + l_r; t(0) = 0.
    int t(int r) const;
    // Block containing row i (1-based both ways).
    int block_of(int i) const;

    // Full eigenvalue list phi_1..phi_n.
    std::vector<Q> phi() const;

    // S0 = block interior positions = Delta \ {t_1..t_{s-1}}.
    Roots S0() const;
    // I0 = {i : phi_{i+1} = p * phi_i}; always contains S0.
    Roots I0() const;
    bool is_generic() const;     // S0 == I0
    bool is_steinberg() const;   // s == 1
    bool is_crystalline() const; // all blocks have length 1

    // Sub-shape made of blocks r..q with the matching weight slice.
    SemistableShape window(int r, int q) const;

    // Block order reversed; weights h_i -> -h_{n+1-i}; each dual label is
    // the inverse of the top eigenvalue of the mirrored block, which keeps
    // the ordering constraint intact.  Involution.
    SemistableShape dual() const;

    bool operator==(const SemistableShape& o) const;

private:
    SemistableShape() = default;
    long prime_ = 0;
    int n_ = 0;
    std::vector<int> lengths_;
    std::vector<Q> alphas_;
    std::vector<long> weights_;
};

// Test and sweep fodder: for every composition of n and every subset of
// block boundaries, a valid shape whose I0 exceeds S0 exactly at the
// chosen boundaries (weights default to n-i).
std::vector<SemistableShape> all_shapes(int n, long prime = 2);

// Single shape with the given lengths and linked boundary set (indices
// r in 1..s-1 meaning t_r lands in I0).
SemistableShape shape_with_links(int n, long prime, std::vector<int> lengths,
                                 const std::vector<int>& linked);

}  // namespace hodge
