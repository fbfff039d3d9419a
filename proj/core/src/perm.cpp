#include "hodge/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Perm Perm::from_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1])
            throw ParseError("not a permutation");
        seen[v - 1] = true;
    }
    Perm p;
    p.img_ = images;
    return p;
}

Perm Perm::transposition(int n, int i) {
    assert(1 <= i && i < n);
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Perm Perm::longest(int n) {
    Perm p(n);
    std::reverse(p.img_.begin(), p.img_.end());
    return p;
}

Perm Perm::inverse() const {
    Perm p(n());
    for (int i = 1; i <= n(); ++i) p.img_[img_[i - 1] - 1] = i;
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    assert(n() == o.n());
    Perm p(n());
    for (int i = 1; i <= n(); ++i) p.img_[i - 1] = img_[o.img_[i - 1] - 1];
    return p;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

int Perm::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << img_[i];
    os << "]";
    return os.str();
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace hodge
