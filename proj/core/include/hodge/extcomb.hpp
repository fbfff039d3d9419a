#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hodge/rational.hpp"
#include "hodge/weyl.hpp"

namespace hodge {

// Root subset J of an ambient GL_n torus, split into the simple-root
// components of its standard Levi, plus an integer weight per Levi block.
// The weights are carried for serialization and equality only; no
// combinatorial operation reads them.
class LeviStructure {
public:
    // Validates 1 <= j <= n-1 for j in J and weights size = number of
    // Levi blocks (empty means all zero).  Throws Error.
    static LeviStructure make(int n, Roots J, std::vector<long> weights = {});

    int n() const { return n_; }
    const Roots& J() const { return J_; }
    const std::vector<long>& weights() const { return weights_; }

    // Maximal runs of J, as inclusive simple-root intervals; one entry per
    // nontrivial Levi block.
    const std::vector<std::pair<int, int>>& components() const {
        return components_;
    }
    // All Levi block sizes in order, trivial blocks included.
    const std::vector<int>& block_sizes() const { return block_sizes_; }

    bool operator==(const LeviStructure& o) const;

private:
    int n_ = 0;
    Roots J_;
    std::vector<long> weights_;
    std::vector<std::pair<int, int>> components_;
    std::vector<int> block_sizes_;
};

enum class PartLabel { val, log, x };

// Inclusive interval of simple roots with its label.
struct ExtPart {
    int start = 0;
    int end = 0;
    PartLabel label = PartLabel::val;
    auto operator<=>(const ExtPart&) const = default;
};

// Basis element of a bottom extension group: a partition of an index set
// into interval parts, singletons labeled val or log, longer parts
// carrying the single canonical label x.
class ExtElement {
public:
    ExtElement() = default;  // empty support

    // Validates intervals, disjointness, and the label arity rule.
    // Throws Error.
    static ExtElement from_parts(std::vector<ExtPart> parts);

    const std::vector<ExtPart>& parts() const { return parts_; }
    Roots support() const;

    bool operator==(const ExtElement& o) const { return parts_ == o.parts_; }
    bool operator!=(const ExtElement& o) const { return parts_ != o.parts_; }
    bool operator<(const ExtElement& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "{[1,1]:val,[2,3]:x}"

private:
    std::vector<ExtPart> parts_;  // sorted by start
};

// Labeled interval partitions of I1 \ I2, in increasing element order.
// Requires I2 subset of I1 subset of J; throws Error.
std::vector<ExtElement> basis(const Roots& I1, const Roots& I2,
                              const LeviStructure& ls);

// Basis count: product over maximal runs of I1 \ I2 of the labeled
// partition count f(k), f(k) = 2 f(k-1) + sum_{m>=2} f(k-m), f(0) = 1.
long dim_ext(const Roots& I1, const Roots& I2, const LeviStructure& ls);

// Union of the two partitions; parts are kept separate, never merged.
// Requires disjoint supports; throws Error.
ExtElement cup(const ExtElement& x, const ExtElement& y);

// The all-val element on I1 \ I2: the same element no matter in which
// order the singleton lines are chained.  Requires I2 subset of I1.
ExtElement e_infty(const Roots& I1, const Roots& I2);

// One rational value per root interval [start, end] inside a component,
// sorted by (start, end).
struct LsEntry {
    int start = 0;
    int end = 0;
    Q value;
};
struct LsCoordinates {
    std::vector<LsEntry> entries;
    const Q& at(int start, int end) const;  // throws Error if absent
};

// Nonzero linear functional on the full group of the structure (upper set
// J, lower set empty), stored by its values on the canonical basis.
class Hyperplane {
public:
    // coeffs align with basis(J, {}, ls); at least one must be nonzero.
    // Throws Error.
    static Hyperplane from_coeffs(const LeviStructure& ls,
                                  std::vector<Q> coeffs);

    const LeviStructure& structure() const { return ls_; }
    const std::vector<Q>& coeffs() const { return coeffs_; }
    const std::vector<ExtElement>& basis_elements() const { return basis_; }

    // Value on a canonical basis element; throws Error for foreign
    // elements.
    const Q& eval(const ExtElement& e) const;

private:
    LeviStructure ls_;
    std::vector<ExtElement> basis_;  // sorted
    std::vector<Q> coeffs_;
};

// Root coordinates of the hyperplane: for each root interval, the ratio
// of the functional on the one-log (or one-x) chain to the functional on
// the all-val chain.  Throws TransversalityViolated when the functional
// kills the all-val line, Error when the structures disagree.
LsCoordinates ls_from_hyperplane(const Hyperplane& lam,
                                 const LeviStructure& ls);

// Multiplicative functional with the given root coordinates: a val
// singleton counts 1, a log singleton counts the coordinate of its root,
// an x part counts the coordinate of its interval.  The entries must
// cover exactly the root intervals of the structure; throws Error.
Hyperplane hyperplane_from_ls(const LsCoordinates& coords,
                              const LeviStructure& ls);

// Codimension of the span of all cup images over strict intermediate
// index sets inside the full group on I1 \ I2.  Requires |I1 \ I2| > 1;
// throws Error.
int codim_e_less(const Roots& I1, const Roots& I2, const LeviStructure& ls);

// Number of components whose trace on I1 \ I2 is a nonempty interval;
// callers compare this against codim_e_less and record the outcome.
int t_components(const Roots& I1, const Roots& I2, const LeviStructure& ls);

}  // namespace hodge
