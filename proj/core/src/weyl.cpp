#include "hodge/weyl.hpp"

#include <algorithm>
#include <cassert>

namespace hodge {

std::vector<std::pair<int, int>> blocks_of(int n, const Roots& S0) {
    std::vector<std::pair<int, int>> blocks;
    int start = 1;
    for (int i = 1; i <= n; ++i) {
        if (i == n || !S0.count(i)) {
            blocks.emplace_back(start, i);
            start = i + 1;
        }
    }
    return blocks;
}

std::vector<int> block_lengths(int n, const Roots& S0) {
    std::vector<int> lengths;
    for (auto [a, b] : blocks_of(n, S0)) lengths.push_back(b - a + 1);
    return lengths;
}

bool is_min_coset_rep(const Perm& u, const Roots& S0) {
    Perm ui = u.inverse();
    for (int i : S0)
        if (ui(i) > ui(i + 1)) return false;
    return true;
}

std::vector<Perm> enumerate_min_coset_reps(int n, const Roots& S0) {
    std::vector<Perm> reps;
    for (const Perm& u : all_perms(n))
        if (is_min_coset_rep(u, S0)) reps.push_back(u);
    return reps;
}

Roots S0_of(const Perm& u, const Roots& S0) {
    Roots out;
    for (int i = 1; i < u.n(); ++i)
        if (S0.count(u(i)) && u(i + 1) == u(i) + 1) out.insert(i);
    return out;
}

std::vector<std::pair<int, int>> r_plus(const Perm& u, const Roots& I0) {
    std::vector<std::pair<int, int>> out;
    Perm ui = u.inverse();
    for (int i = 1; i <= u.n(); ++i)
        for (int j = i + 1; j <= u.n(); ++j)
            if (ui(j) == ui(i) + 1 && I0.count(ui(i))) out.emplace_back(i, j);
    return out;
}

Perm j_S0(const Perm& w, int n, const Roots& S0) {
    auto blocks = blocks_of(n, S0);
    const int s = static_cast<int>(blocks.size());
    assert(w.n() == s);
    Perm wi = w.inverse();
    // t[r] = end of block r before reordering; tw[m] = end of slot m after
    // placing block wi(m+1) at slot m+1.
    std::vector<int> t(s + 1, 0), tw(s + 1, 0);
    for (int r = 1; r <= s; ++r)
        t[r] = t[r - 1] + (blocks[r - 1].second - blocks[r - 1].first + 1);
    for (int m = 1; m <= s; ++m) {
        int r = wi(m);
        tw[m] = tw[m - 1] + (blocks[r - 1].second - blocks[r - 1].first + 1);
    }
    std::vector<int> img(n);
    for (int r = 1; r <= s; ++r) {
        int len = t[r] - t[r - 1];
        for (int l = 1; l <= len; ++l)
            img[t[r - 1] + l - 1] = tw[w(r) - 1] + l;
    }
    return Perm::from_images(img);
}

Perm longest_levi(int n, const Roots& S0) {
    std::vector<int> img(n);
    for (auto [a, b] : blocks_of(n, S0))
        for (int i = a; i <= b; ++i) img[i - 1] = a + b - i;
    return Perm::from_images(img);
}

Perm w0_S0(int n, const Roots& S0) {
    int s = static_cast<int>(blocks_of(n, S0).size());
    return j_S0(Perm::longest(s), n, S0);
}

Roots right_descents(const Perm& u) {
    Roots out;
    for (int i = 1; i < u.n(); ++i)
        if (u(i) > u(i + 1)) out.insert(i);
    return out;
}

Perm block_tail_rep(int n, const Roots& S0) {
    auto blocks = blocks_of(n, S0);
    const int s = static_cast<int>(blocks.size());
    std::vector<int> img(n, 0);
    std::vector<bool> used(n + 1, false);
    for (int i = 1; i <= s; ++i) {
        int ti = blocks[i - 1].second;
        img[n - s + i - 1] = ti;
        used[ti] = true;
    }
    int next = 1;
    for (int j = 1; j <= n - s; ++j) {
        while (used[next]) ++next;
        img[j - 1] = next;
        used[next] = true;
    }
    return Perm::from_images(img);
}

std::vector<Perm> levi_subgroup(int n, const Roots& S0) {
    auto blocks = blocks_of(n, S0);
    std::vector<Perm> out;
    for (const Perm& w : all_perms(n)) {
        bool ok = true;
        for (auto [a, b] : blocks)
            for (int i = a; i <= b && ok; ++i)
                if (w(i) < a || w(i) > b) ok = false;
        if (ok) out.push_back(w);
    }
    return out;
}

}  // namespace hodge
