#pragma once

#include <hodge/matrix.hpp>
#include <hodge/rng.hpp>

namespace testutil {

// Integer matrix with entries in [-bound, bound].
inline hodge::MatQ random_int_matrix(hodge::Rng& rng, int r, int c,
                                     long bound = 5) {
    hodge::MatQ m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = hodge::Q(rng.below(-bound, bound));
    return m;
}

}  // namespace testutil
