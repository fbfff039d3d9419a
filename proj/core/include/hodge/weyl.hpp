#pragma once

#include <set>
#include <utility>
#include <vector>

#include "hodge/perm.hpp"

namespace hodge {

// Subset of the simple roots {1..n-1}.
using Roots = std::set<int>;

// Maximal runs of {1..n} linked by S0: i and i+1 share a block iff i in S0.
// Returned as inclusive ranges [a,b].
std::vector<std::pair<int, int>> blocks_of(int n, const Roots& S0);
std::vector<int> block_lengths(int n, const Roots& S0);

// u is the minimal-length representative of its coset iff u^{-1} is
// strictly increasing on every S0-block.
bool is_min_coset_rep(const Perm& u, const Roots& S0);

// All minimal coset representatives, in lexicographic one-line order.
std::vector<Perm> enumerate_min_coset_reps(int n, const Roots& S0);

// Simple roots carried along by u: positions i where u maps {i, i+1} onto
// a linked pair {u(i), u(i)+1} with u(i) in S0.
Roots S0_of(const Perm& u, const Roots& S0);

// Pairs (i,j), i<j, with u^{-1}(j) = u^{-1}(i)+1 and u^{-1}(i) in I0.
std::vector<std::pair<int, int>> r_plus(const Perm& u, const Roots& I0);

// Block permutation w of the s blocks of S0, inflated to S_n: element l of
// block r is sent to element l of the slot holding block r after
// reordering the blocks by w.
Perm j_S0(const Perm& w, int n, const Roots& S0);

// Longest element of the standard Levi: reverses each S0-block.
Perm longest_levi(int n, const Roots& S0);

// Block-reversing representative j_S0(longest element of S_s).
Perm w0_S0(int n, const Roots& S0);

// {i : u(i) > u(i+1)}.
Roots right_descents(const Perm& u);

// The representative u0 with u0(n-s+i) = t_i, so conjugating by u0 moves
// the block-end rows to the tail; the remaining values appear in
// increasing order, making u0 a minimal coset representative.
Perm block_tail_rep(int n, const Roots& S0);

// Elements of the Levi subgroup W_{S0} (permutations preserving each
// block).  Intended for small n in tests.
std::vector<Perm> levi_subgroup(int n, const Roots& S0);

}  // namespace hodge
