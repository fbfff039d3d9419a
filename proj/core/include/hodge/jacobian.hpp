#pragma once

#include "hodge/matrix.hpp"
#include "hodge/parameter.hpp"

namespace hodge {

// Exact differential of the refinement-and-crystalline data map at P: one
// column per strictly-upper coordinate direction of L in row-major order
// ((0,1), (0,2), ..., (n-2,n-1)), one row per varying output entry (the
// in-block entries of every refinement datum and the entries of the
// crystalline class).
MatQ forward_differential(const HodgeParameter& P);

// Kernel dimension of forward_differential(P).  The block-scalar orbit
// directions are always in the kernel, so the expected value is s - 1.
int jacobian_kernel_dim(const HodgeParameter& P);

}  // namespace hodge
