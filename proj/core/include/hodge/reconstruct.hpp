#pragma once

#include <map>
#include <utility>

#include "hodge/forward.hpp"
#include "hodge/parameter.hpp"

namespace hodge {

// Inverse of forward_extended: rebuilds the normalized parameter from the
// bundles of all principal windows.  Recursion over windows [r,q-1] and
// [r+1,q] leaves the top-right cross block of each window unknown; that
// block satisfies one exact linear system collected from the sub-side
// frames, the quotient-side frames (read through the dual window, whose
// entries are affine in the unknowns), and the induced-parameter columns
// of the (1,s) injection datum.  The result is re-verified by a full
// forward pass.
//
// Throws DataInconsistent when the bundle is contradictory, and
// UnsupportedShape when s >= 3, both end blocks have length 1 and the
// shape is not crystalline (no covered branch pins the corner).
HodgeParameter reconstruct(const ExtendedBundle& bundles,
                           const SemistableShape& shape);

using IotaData = std::map<std::pair<int, int>, IotaPair>;

// Crystalline special case: the normalized class matrix from the
// injection data of the pairs q > r + 1 alone.  Each corner entry is
// affine-linear in the corresponding induced datum; it is solved by
// evaluating the forward datum at two trial values and interpolating,
// then re-verified against every supplied datum.
CrystClass reconstruct_crystalline(const IotaData& data,
                                   const SemistableShape& shape);

}  // namespace hodge
