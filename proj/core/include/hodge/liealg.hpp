#pragma once

#include <vector>

#include "hodge/matrix.hpp"
#include "hodge/parameter.hpp"
#include "hodge/weyl.hpp"

namespace hodge {

// Linear subspace of the n x n matrix space over Q.  The basis is stored
// in reduced echelon form on row-major length-n^2 coordinate vectors, so
// equal subspaces have literally equal bases and operator== is exact.
class MatSubspace {
public:
    MatSubspace() = default;     // zero subspace of the 0 x 0 space
    explicit MatSubspace(int n)  // zero subspace of M_n
        : n_(n), basis_(0, n * n) {}

    static MatSubspace from_generators(int n, const std::vector<MatQ>& gens);

    int n() const { return n_; }
    int dim() const { return basis_.rows(); }

    // dim x n^2 coordinate rows, reduced echelon, no zero rows.
    const MatQ& coords() const { return basis_; }
    // The same rows reshaped to n x n matrices.
    std::vector<MatQ> basis() const;

    bool contains(const MatQ& m) const;
    bool contains(const MatSubspace& w) const;

    bool operator==(const MatSubspace& o) const {
        return n_ == o.n_ && basis_ == o.basis_;
    }
    bool operator!=(const MatSubspace& o) const { return !(*this == o); }

private:
    int n_ = 0;
    MatQ basis_;
};

// Intersection and span, both canonical.
MatSubspace meet(const MatSubspace& v, const MatSubspace& w);
MatSubspace join(const MatSubspace& v, const MatSubspace& w);

// {g X g^{-1} : X in V}.  Throws SingularMatrix when g is not invertible.
MatSubspace ad(const MatQ& g, const MatSubspace& v);

// Coordinate subalgebras attached to the block decomposition of I (roots
// i in I link rows i and i+1 into one block).
struct StdSubalgebras {
    MatSubspace borel;        // upper triangular
    MatSubspace parabolic;    // block upper
    MatSubspace levi;         // block diagonal
    MatSubspace nilradical;   // strictly block upper
    MatSubspace center_levi;  // one scalar per diagonal block
    MatSubspace tau;          // center_levi + nilradical: radical of parabolic
};
StdSubalgebras std_subalgebras(int n, const Roots& I);

// Upper triangular plus the subdiagonal entries (i+1, i) for i in roots;
// equals borel + sum of the single-root Levi blocks.
MatSubspace borel_plus_roots(int n, const Roots& roots);

// Summand dimensions of the conjugated-subalgebra sums attached to P at
// g = L * w0, where u runs over the minimal coset representatives of the
// shape's linked roots and every summand is cut down to Ad_g(borel).
struct FernReport {
    int n = 0;
    int fil_dim = 0;            // dim Ad_g(borel) = n(n+1)/2
    int parabolic_sum_dim = 0;  // sum of Ad_u(parabolic of S0(u)) pieces
    int borel_sum_dim = 0;      // sum of Ad_u(borel) pieces
    std::vector<int> parabolic_piece_dims;  // rep order
    std::vector<int> borel_piece_dims;      // rep order; n each
};

// Checks at g = L * w0 that the parabolic pieces span all of Ad_g(borel)
// as a subspace, and that the borel pieces reach their full dimension
// n(n+1)/2 - (number of pairs inside a linked block): each borel piece is
// a conjugated diagonal torus, and the in-block pairs are exactly the
// directions the partial rep set cannot produce.  Throws IdentityViolated
// carrying the achieved dimension otherwise.
FernReport fern_check(const HodgeParameter& P);

// Dimensions of the nested sums built from the tau, borel, and
// borel_plus_roots summand families at g = L * w0; fil is the ambient
// dim Ad_g(borel).  Throws IdentityViolated if the nesting fails.
struct HomFilDims {
    int flat = 0;     // tau pieces
    int sharp = 0;    // borel pieces
    int diamond = 0;  // borel_plus_roots pieces
    int fil = 0;      // n(n+1)/2
};
HomFilDims hom_fil_chain(const HodgeParameter& P);

// The borel_plus_roots sum itself, and the variant that joins the
// single-root Levi pieces Ad_u(levi of {i}), i a linked root of u,
// without first adding them to borel.  Whether the two coincide for
// every P is an open comparison; callers log it rather than assert it.
MatSubspace diamond_sum(const HodgeParameter& P);
MatSubspace diamond_sum_alt(const HodgeParameter& P);

// Dimension of the kernel of the addition map from the direct sum of the
// tau pieces onto their span: sum of piece dims minus dim of the span.
int kernel_g_circ(const HodgeParameter& P);

// For each minimal coset representative u, in enumeration order, the
// block-diagonal subalgebra of S0(u) intersected with Ad_{u^{-1} g}(borel).
std::vector<MatSubspace> levi_data(const HodgeParameter& P);

}  // namespace hodge
