#include "hodge/shape.hpp"

#include <algorithm>
#include <cassert>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Q pow_q(const Q& base, int e) {
    Q out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

SemistableShape SemistableShape::make(long prime, std::vector<int> lengths,
                                      std::vector<Q> alphas,
                                      std::vector<long> weights) {
    if (!is_prime(prime)) throw InvalidShape("p must be a rational prime");
    if (lengths.empty()) throw InvalidShape("at least one block required");
    int n = 0;
    for (int l : lengths) {
        if (l <= 0) throw InvalidShape("block lengths must be positive");
        n += l;
    }
    if (alphas.size() != lengths.size())
        throw InvalidShape("one eigenvalue label per block required");
    for (const Q& a : alphas)
        if (a.is_zero()) throw InvalidShape("eigenvalue labels must be nonzero");
    if (static_cast<int>(weights.size()) != n)
        throw InvalidShape("need exactly n weights");
    for (std::size_t i = 1; i < weights.size(); ++i)
        if (weights[i - 1] <= weights[i])
            throw InvalidShape("weights must be strictly decreasing");

    SemistableShape sh;
    sh.prime_ = prime;
    sh.n_ = n;
    sh.lengths_ = std::move(lengths);
    sh.alphas_ = std::move(alphas);
    sh.weights_ = std::move(weights);

    std::vector<Q> phi = sh.phi();
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (std::size_t j = i + 1; j < phi.size(); ++j)
            if (phi[i] == phi[j])
                throw InvalidShape("derived eigenvalue list has a repeat");

    const int s = sh.s();
    Q p(prime);
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j)
            if (sh.alphas_[j - 1] == sh.alphas_[i - 1] * pow_q(p, sh.lengths_[i - 1]) &&
                j != i + 1)
                throw InvalidShape("eigenvalue ordering constraint violated");
    return sh;
}

int SemistableShape::t(int r) const {
    assert(0 <= r && r <= s());
    int acc = 0;
    for (int i = 0; i < r; ++i) acc += lengths_[i];
    return acc;
}

int SemistableShape::block_of(int i) const {
    assert(1 <= i && i <= n_);
    int r = 1;
    while (t(r) < i) ++r;
    return r;
}

std::vector<Q> SemistableShape::phi() const {
    std::vector<Q> out;
    Q p(prime_);
    for (int r = 0; r < s(); ++r) {
        Q v = alphas_[r];
        for (int k = 0; k < lengths_[r]; ++k) {
            out.push_back(v);
            v *= p;
        }
    }
    return out;
}

Roots SemistableShape::S0() const {
    Roots out;
    for (int i = 1; i < n_; ++i) out.insert(i);
    for (int r = 1; r < s(); ++r) out.erase(t(r));
    return out;
}

Roots SemistableShape::I0() const {
    Roots out;
    std::vector<Q> f = phi();
    Q p(prime_);
    for (int i = 1; i < n_; ++i)
        if (f[i] == p * f[i - 1]) out.insert(i);
    return out;
}

bool SemistableShape::is_generic() const { return S0() == I0(); }

bool SemistableShape::is_steinberg() const { return s() == 1; }

bool SemistableShape::is_crystalline() const {
    return std::all_of(lengths_.begin(), lengths_.end(),
                       [](int l) { return l == 1; });
}

SemistableShape SemistableShape::window(int r, int q) const {
    assert(1 <= r && r <= q && q <= s());
    std::vector<int> lens(lengths_.begin() + (r - 1), lengths_.begin() + q);
    std::vector<Q> als(alphas_.begin() + (r - 1), alphas_.begin() + q);
    std::vector<long> wts(weights_.begin() + t(r - 1), weights_.begin() + t(q));
    return make(prime_, std::move(lens), std::move(als), std::move(wts));
}

SemistableShape SemistableShape::dual() const {
    const int s_ = s();
    std::vector<int> lens(lengths_.rbegin(), lengths_.rend());
    std::vector<Q> als(s_);
    Q p(prime_);
    for (int r = 0; r < s_; ++r) {
        int src = s_ - 1 - r;
        als[r] = (alphas_[src] * pow_q(p, lengths_[src] - 1)).inverse();
    }
    std::vector<long> wts(n_);
    for (int i = 0; i < n_; ++i) wts[i] = -weights_[n_ - 1 - i];
    return make(prime_, std::move(lens), std::move(als), std::move(wts));
}

bool SemistableShape::operator==(const SemistableShape& o) const {
    return prime_ == o.prime_ && lengths_ == o.lengths_ &&
           alphas_ == o.alphas_ && weights_ == o.weights_;
}

SemistableShape shape_with_links(int n, long prime, std::vector<int> lengths,
                                 const std::vector<int>& linked) {
    // Unlinked blocks get fresh odd primes as labels so no accidental
    // p-power relation can appear; a linked boundary r forces
    // alpha_{r+1} = alpha_r * p^{l_r}, putting t_r into I0.
    static const long pool[] = {3,  5,  7,  11, 13, 17, 19, 23,
                                29, 31, 37, 41, 43, 47, 53, 59};
    std::vector<Q> alphas(lengths.size());
    Q p(prime);
    std::size_t fresh = 0;
    for (std::size_t r = 0; r < lengths.size(); ++r) {
        bool is_linked =
            r > 0 && std::find(linked.begin(), linked.end(),
                               static_cast<int>(r)) != linked.end();
        if (is_linked) {
            Q f = alphas[r - 1];
            for (int k = 0; k < lengths[r - 1]; ++k) f *= p;
            alphas[r] = f;
        } else {
            assert(fresh < sizeof(pool) / sizeof(pool[0]));
            alphas[r] = Q(pool[fresh++]);
        }
    }
    std::vector<long> weights(n);
    for (int i = 0; i < n; ++i) weights[i] = n - 1 - i;
    return SemistableShape::make(prime, std::move(lengths), std::move(alphas),
                                 std::move(weights));
}

std::vector<SemistableShape> all_shapes(int n, long prime) {
    std::vector<SemistableShape> out;
    // Compositions of n via subsets of cut points.
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> lengths;
        int start = 0;
        for (int i = 1; i <= n; ++i) {
            if (i == n || (mask & (1u << (i - 1)))) {
                lengths.push_back(i - start);
                start = i;
            }
        }
        int s = static_cast<int>(lengths.size());
        for (unsigned links = 0; links < (1u << (s - 1)); ++links) {
            std::vector<int> linked;
            for (int r = 1; r < s; ++r)
                if (links & (1u << (r - 1))) linked.push_back(r);
            out.push_back(shape_with_links(n, prime, lengths, linked));
        }
    }
    return out;
}

}  // namespace hodge
