#pragma once

#include <string>
#include <vector>

#include "hodge/parameter.hpp"
#include "hodge/perm.hpp"
#include "hodge/rng.hpp"
#include "hodge/shape.hpp"

namespace hodge {

// One named dimension with the closed form that produced it, instantiated
// with the shape's numbers so reports are self-documenting.
struct DimEntry {
    std::string name;
    int value = 0;
    std::string formula;
};

struct DimReport {
    std::vector<DimEntry> entries;  // fixed insertion order

    // Value lookup by name; throws Error on an unknown name.
    int at(const std::string& name) const;
};

// Closed-form dimensions of the deformation spaces attached to the shape
// and a minimal coset representative u:
//   ext1_u      = 1 + n(n+1)/2
//   hom_u       = 2n - |R+_u|        (R+_u from r_plus(u, I0))
//   ext1_g      = 1 + n(n-1)/2 + |I0 \ S0|
//   ext1_0      = ext1_g - s
//   im_nu       = n(n+1)/2 - |I0 \ S0|
//   hom_g_prime = s + 1
//   hom_sm_1    = s
DimReport deformation_dims(const SemistableShape& shape, const Perm& u);

// Representation-side extension counts; requires n >= 2 (the degenerate
// n = 1 collapses all three).  Throws InvalidShape.
//   lalg_ext    = n + 1
//   sharp_u_ext = 2n
//   sharp_ext   = n + 1 + 2^n - 2
DimReport rep_side_dims(const SemistableShape& shape);

// Combinatorial and subspace cross-checks tying the closed forms to the
// Weyl and subalgebra computations:
//   |R+_id| = |I0|;  |R+_{block reversal}| = |S0|;
//   rep count = n! / prod(l_i!);
//   per random non-critical P:  borel piece sum dim + in-block pairs
//                               = im_nu + |I0 \ S0|  (= n(n+1)/2).
// Throws IdentityViolated with the achieved value on any mismatch.
struct CrossCheckReport {
    int r_plus_id = 0;
    int r_plus_block_rev = 0;
    int rep_count = 0;
    long multinomial = 0;
    std::vector<int> borel_sum_dims;  // one per trial
};
CrossCheckReport cross_check(const SemistableShape& shape, int trials,
                             Rng& rng);

}  // namespace hodge
