#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (rational literals, JSON payloads, ...).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A matrix that was required to be invertible is not.
class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what = "matrix is singular")
        : Error(what) {}
};

// The k-th corner minor needed by a triangular factorization vanishes.
class SingularWindow : public Error {
public:
    explicit SingularWindow(int k)
        : Error("corner minor " + std::to_string(k) + " vanishes"), k(k) {}
    int k;
};

// The bottom-left k-th corner minor vanishes, so the matrix has no
// big-cell factorization.
class NotInBigCell : public Error {
public:
    explicit NotInBigCell(int k)
        : Error("bottom-left corner minor " + std::to_string(k) + " vanishes"),
          k(k) {}
    int k;
};

// Shape data violating a structural invariant.
class InvalidShape : public Error {
public:
    explicit InvalidShape(const std::string& what) : Error(what) {}
};

// Normalization requires the entry just right of diagonal block l to be
// nonzero; it is not.
class BoundaryEntryZero : public Error {
public:
    explicit BoundaryEntryZero(int l)
        : Error("boundary entry at block " + std::to_string(l) + " is zero"),
          l(l) {}
    int l;
};

// Forward data does not come from any parameter (or is mutually
// inconsistent), so reconstruction has no solution.
class DataInconsistent : public Error {
public:
    explicit DataInconsistent(const std::string& what) : Error(what) {}
};

// Reconstruction is not implemented for this shape.
class UnsupportedShape : public Error {
public:
    explicit UnsupportedShape(const std::string& what) : Error(what) {}
};

// A subspace identity that must hold for every valid input failed.
class IdentityViolated : public Error {
public:
    IdentityViolated(const std::string& what, int achieved_dim)
        : Error(what), achieved_dim(achieved_dim) {}
    int achieved_dim;
};

// A transversality condition on hyperplane data failed at label alpha.
class TransversalityViolated : public Error {
public:
    explicit TransversalityViolated(const std::string& alpha)
        : Error("transversality fails at " + alpha), alpha(alpha) {}
    std::string alpha;
};

}  // namespace hodge
