#include "hodge/extcomb.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

// Maximal runs of consecutive elements, as inclusive intervals.
std::vector<std::pair<int, int>> runs_of(const Roots& I) {
    std::vector<std::pair<int, int>> runs;
    for (int i : I) {
        if (!runs.empty() && runs.back().second == i - 1) {
            runs.back().second = i;
        } else {
            runs.emplace_back(i, i);
        }
    }
    return runs;
}

bool subset(const Roots& a, const Roots& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Roots difference(const Roots& a, const Roots& b) {
    Roots out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

// Labeled partitions of the run [a,b], first part growing, val before log.
void run_partitions(int a, int b, std::vector<ExtPart>& acc,
                    std::vector<std::vector<ExtPart>>& out) {
    if (a > b) {
        out.push_back(acc);
        return;
    }
    for (PartLabel lab : {PartLabel::val, PartLabel::log}) {
        acc.push_back({a, a, lab});
        run_partitions(a + 1, b, acc, out);
        acc.pop_back();
    }
    for (int e = a + 1; e <= b; ++e) {
        acc.push_back({a, e, PartLabel::x});
        run_partitions(e + 1, b, acc, out);
        acc.pop_back();
    }
}

long f_count(int k) {
    std::vector<long> f(static_cast<std::size_t>(k) + 1);
    f[0] = 1;
    for (int i = 1; i <= k; ++i) {
        long v = 2 * f[i - 1];
        for (int m = 2; m <= i; ++m) v += f[i - m];
        f[i] = v;
    }
    return f[k];
}

Roots checked_difference(const Roots& I1, const Roots& I2,
                         const LeviStructure& ls) {
    if (!subset(I2, I1) || !subset(I1, ls.J())) {
        throw Error("index sets must nest inside the structure");
    }
    return difference(I1, I2);
}

// All root intervals [s,e] inside the components, sorted by (s,e).
std::vector<std::pair<int, int>> root_intervals(const LeviStructure& ls) {
    std::vector<std::pair<int, int>> roots;
    for (auto [a, b] : ls.components()) {
        for (int s = a; s <= b; ++s) {
            for (int e = s; e <= b; ++e) roots.emplace_back(s, e);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string root_str(int s, int e) {
    return "x" + std::to_string(s) + "-x" + std::to_string(e + 1);
}

}  // namespace

LeviStructure LeviStructure::make(int n, Roots J, std::vector<long> weights) {
    if (n < 1) throw Error("structure needs n >= 1");
    for (int j : J) {
        if (j < 1 || j >= n) throw Error("root index outside 1..n-1");
    }
    LeviStructure ls;
    ls.n_ = n;
    ls.components_ = runs_of(J);
    ls.block_sizes_ = block_lengths(n, J);
    if (weights.empty()) weights.assign(ls.block_sizes_.size(), 0);
    if (weights.size() != ls.block_sizes_.size()) {
        throw Error("one weight per Levi block required");
    }
    ls.J_ = std::move(J);
    ls.weights_ = std::move(weights);
    return ls;
}

bool LeviStructure::operator==(const LeviStructure& o) const {
    return n_ == o.n_ && J_ == o.J_ && weights_ == o.weights_;
}

ExtElement ExtElement::from_parts(std::vector<ExtPart> parts) {
    std::sort(parts.begin(), parts.end());
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const ExtPart& p = parts[k];
        if (p.start > p.end) throw Error("empty part interval");
        if (k > 0 && parts[k - 1].end >= p.start) throw Error("parts overlap");
        const bool single = p.start == p.end;
        if (single && p.label == PartLabel::x) {
            throw Error("singleton part needs a val or log label");
        }
        if (!single && p.label != PartLabel::x) {
            throw Error("parts of size two or more carry the x label");
        }
    }
    ExtElement e;
    e.parts_ = std::move(parts);
    return e;
}

Roots ExtElement::support() const {
    Roots out;
    for (const ExtPart& p : parts_) {
        for (int i = p.start; i <= p.end; ++i) out.insert(i);
    }
    return out;
}

std::string ExtElement::str() const {
    std::string out = "{";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ",";
        const ExtPart& p = parts_[k];
        out += "[" + std::to_string(p.start) + "," + std::to_string(p.end) +
               "]:";
        out += p.label == PartLabel::val ? "val"
               : p.label == PartLabel::log ? "log"
                                           : "x";
    }
    return out + "}";
}

std::vector<ExtElement> basis(const Roots& I1, const Roots& I2,
                              const LeviStructure& ls) {
    const Roots I = checked_difference(I1, I2, ls);
    std::vector<std::vector<ExtPart>> combos = {{}};
    for (auto [a, b] : runs_of(I)) {
        std::vector<std::vector<ExtPart>> local, next;
        std::vector<ExtPart> acc;
        run_partitions(a, b, acc, local);
        for (const auto& head : combos) {
            for (const auto& tail : local) {
                std::vector<ExtPart> parts = head;
                parts.insert(parts.end(), tail.begin(), tail.end());
                next.push_back(std::move(parts));
            }
        }
        combos = std::move(next);
    }
    std::vector<ExtElement> out;
    out.reserve(combos.size());
    for (auto& parts : combos) out.push_back(ExtElement::from_parts(parts));
    std::sort(out.begin(), out.end());
    return out;
}

long dim_ext(const Roots& I1, const Roots& I2, const LeviStructure& ls) {
    const Roots I = checked_difference(I1, I2, ls);
    long dim = 1;
    for (auto [a, b] : runs_of(I)) dim *= f_count(b - a + 1);
    return dim;
}

ExtElement cup(const ExtElement& x, const ExtElement& y) {
    const Roots sx = x.support();
    for (int i : y.support()) {
        if (sx.count(i)) throw Error("cup factors must have disjoint support");
    }
    std::vector<ExtPart> parts = x.parts();
    parts.insert(parts.end(), y.parts().begin(), y.parts().end());
    return ExtElement::from_parts(std::move(parts));
}

ExtElement e_infty(const Roots& I1, const Roots& I2) {
    if (!subset(I2, I1)) throw Error("index sets must nest");
    std::vector<ExtPart> parts;
    for (int i : difference(I1, I2)) parts.push_back({i, i, PartLabel::val});
    return ExtElement::from_parts(std::move(parts));
}

const Q& LsCoordinates::at(int start, int end) const {
    for (const LsEntry& e : entries) {
        if (e.start == start && e.end == end) return e.value;
    }
    throw Error("no coordinate for " + root_str(start, end));
}

Hyperplane Hyperplane::from_coeffs(const LeviStructure& ls,
                                   std::vector<Q> coeffs) {
    Hyperplane h;
    h.ls_ = ls;
    h.basis_ = basis(ls.J(), {}, ls);
    if (coeffs.size() != h.basis_.size()) {
        throw Error("coefficient count does not match the basis");
    }
    bool nonzero = false;
    for (const Q& c : coeffs) nonzero = nonzero || c != 0;
    if (!nonzero) throw Error("hyperplane functional is zero");
    h.coeffs_ = std::move(coeffs);
    return h;
}

const Q& Hyperplane::eval(const ExtElement& e) const {
    const auto it = std::lower_bound(basis_.begin(), basis_.end(), e);
    if (it == basis_.end() || !(*it == e)) {
        throw Error("element outside the canonical basis");
    }
    return coeffs_[static_cast<std::size_t>(it - basis_.begin())];
}

LsCoordinates ls_from_hyperplane(const Hyperplane& lam,
                                 const LeviStructure& ls) {
    if (!(lam.structure() == ls)) throw Error("structure mismatch");
    const auto roots = root_intervals(ls);
    LsCoordinates out;
    if (roots.empty()) return out;
    const Q denom = lam.eval(e_infty(ls.J(), {}));
    if (denom == 0) {
        throw TransversalityViolated(root_str(roots[0].first, roots[0].second));
    }
    for (auto [s, e] : roots) {
        std::vector<ExtPart> parts;
        for (int i : ls.J()) {
            if (i < s || i > e) parts.push_back({i, i, PartLabel::val});
        }
        parts.push_back({s, e, s == e ? PartLabel::log : PartLabel::x});
        const Q num = lam.eval(ExtElement::from_parts(std::move(parts)));
        out.entries.push_back({s, e, num / denom});
    }
    return out;
}

Hyperplane hyperplane_from_ls(const LsCoordinates& coords,
                              const LeviStructure& ls) {
    const auto roots = root_intervals(ls);
    if (coords.entries.size() != roots.size()) {
        throw Error("coordinates do not cover the root intervals");
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (coords.entries[k].start != roots[k].first ||
            coords.entries[k].end != roots[k].second) {
            throw Error("coordinates do not cover the root intervals");
        }
    }
    const auto elems = basis(ls.J(), {}, ls);
    std::vector<Q> coeffs;
    coeffs.reserve(elems.size());
    for (const ExtElement& e : elems) {
        Q v(1);
        for (const ExtPart& p : e.parts()) {
            if (p.label != PartLabel::val) v *= coords.at(p.start, p.end);
        }
        coeffs.push_back(v);
    }
    return Hyperplane::from_coeffs(ls, std::move(coeffs));
}

int codim_e_less(const Roots& I1, const Roots& I2, const LeviStructure& ls) {
    const Roots I = checked_difference(I1, I2, ls);
    if (I.size() < 2) throw Error("codim needs at least two indices");
    const auto full = basis(I1, I2, ls);
    std::set<ExtElement> covered;
    const std::vector<int> elems(I.begin(), I.end());
    const unsigned top = 1u << elems.size();
    for (unsigned mask = 1; mask + 1 < top; ++mask) {
        Roots K = I2;
        for (std::size_t k = 0; k < elems.size(); ++k) {
            if (mask & (1u << k)) K.insert(elems[k]);
        }
        for (const ExtElement& x : basis(I1, K, ls)) {
            for (const ExtElement& y : basis(K, I2, ls)) {
                covered.insert(cup(x, y));
            }
        }
    }
    return static_cast<int>(full.size() - covered.size());
}

int t_components(const Roots& I1, const Roots& I2, const LeviStructure& ls) {
    const Roots I = checked_difference(I1, I2, ls);
    int t = 0;
    for (auto [a, b] : ls.components()) {
        int lo = 0, hi = 0, cnt = 0;
        for (int i : I) {
            if (i < a || i > b) continue;
            if (cnt == 0) lo = hi = i;
            lo = std::min(lo, i);
            hi = std::max(hi, i);
            ++cnt;
        }
        if (cnt > 0 && hi - lo + 1 == cnt) ++t;
    }
    return t;
}

}  // namespace hodge
