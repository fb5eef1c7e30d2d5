#include "fgq/cayley.hpp"

#include <algorithm>
#include <string>

namespace fgq {

bool ElementMap::total_on(int n) const {
    for (int v : img)
        if (v < 0 || v >= n) return false;
    return true;
}

bool Permutation::is_bijection(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    if (!is_bijection(img)) throw structural_error("Permutation: images are not a bijection");
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i;
    return p;
}

Permutation Permutation::inverse() const {
    Permutation q;
    q.img.resize(img.size());
    for (int i = 0; i < size(); ++i) q.img[img[i]] = i;
    return q;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw structural_error("compose: size mismatch");
    Permutation h;
    h.img.resize(f.size());
    for (int x = 0; x < f.size(); ++x) h.img[x] = f(g(x));
    return h;
}

CayleyTable::CayleyTable(int order, std::vector<int> cells)
    : order_(order), cells_(std::move(cells)) {
    if (order_ <= 0) throw structural_error("CayleyTable: order must be positive");
    if (cells_.size() != static_cast<std::size_t>(order_) * order_)
        throw structural_error("CayleyTable: expected " + std::to_string(order_ * order_) +
                               " cells, got " + std::to_string(cells_.size()));
    for (int v : cells_)
        if (v < 0 || v >= order_)
            throw structural_error("CayleyTable: entry " + std::to_string(v) +
                                   " outside [0, " + std::to_string(order_) + ")");
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n)
            throw structural_error("CayleyTable: ragged rows");
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return CayleyTable(n, std::move(cells));
}

Permutation CayleyTable::left_translation(int a) const {
    return Permutation(std::vector<int>(row(a), row(a) + order_));
}

Permutation CayleyTable::right_translation(int a) const {
    std::vector<int> img(order_);
    for (int x = 0; x < order_; ++x) img[x] = at(x, a);
    return Permutation(std::move(img));
}

bool validate_table(const CayleyTable& t) {
    const int n = t.order();
    std::vector<char> seen(n);
    for (int x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int y = 0; y < n; ++y) {
            const int v = t.at(x, y);
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    for (int y = 0; y < n; ++y) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int x = 0; x < n; ++x) {
            const int v = t.at(x, y);
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

std::pair<ElementMap, ElementMap> alpha_beta(const CayleyTable& t) {
    const int n = t.order();
    ElementMap alpha, beta;
    alpha.img.assign(n, -1);
    beta.img.assign(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (t.at(x, y) == x) alpha.img[x] = y;  // x * alpha(x) = x
            if (t.at(x, y) == y) beta.img[y] = x;   // beta(y) * y = y
        }
    return {std::move(alpha), std::move(beta)};
}

bool is_homomorphism(const ElementMap& m, const CayleyTable& s, const CayleyTable& t) {
    const int n = s.order();
    if (m.size() != n) throw structural_error("is_homomorphism: map size does not match source");
    if (!m.total_on(t.order()))
        throw structural_error("is_homomorphism: image escapes target carrier");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (m(s.at(x, y)) != t.at(m(x), m(y))) return false;
    return true;
}

}  // namespace fgq
