#include "fgq/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace fgq {

Partition Partition::discrete(int n) {
    Partition p;
    p.rep_.resize(n);
    std::iota(p.rep_.begin(), p.rep_.end(), 0);
    return p;
}

Partition Partition::full(int n) {
    Partition p;
    p.rep_.assign(n, 0);
    return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    Partition p;
    p.rep_.assign(n, -1);
    for (const auto& blk : blocks) {
        if (blk.empty()) throw structural_error("Partition: empty block");
        int m = *std::min_element(blk.begin(), blk.end());
        for (int x : blk) {
            if (x < 0 || x >= n) throw structural_error("Partition: element out of range");
            if (p.rep_[x] != -1) throw structural_error("Partition: blocks overlap");
            p.rep_[x] = m;
        }
    }
    for (int x = 0; x < n; ++x)
        if (p.rep_[x] == -1) throw structural_error("Partition: blocks do not cover carrier");
    return p;
}

Partition Partition::from_representatives(std::vector<int> rep) {
    Partition p;
    p.rep_ = std::move(rep);
    return p;
}

int Partition::block_count() const {
    int k = 0;
    for (int x = 0; x < size(); ++x)
        if (rep_[x] == x) ++k;
    return k;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out;
    std::vector<int> index(rep_.size(), -1);
    for (int x = 0; x < size(); ++x) {
        if (rep_[x] == x) {
            index[x] = static_cast<int>(out.size());
            out.emplace_back();
        }
    }
    for (int x = 0; x < size(); ++x) out[index[rep_[x]]].push_back(x);
    return out;
}

bool Partition::refines(const Partition& other) const {
    if (other.size() != size()) return false;
    for (int x = 0; x < size(); ++x)
        if (other.rep(x) != other.rep(rep_[x])) return false;
    return true;
}

namespace {

// Union-find keyed so that find() yields the minimum element of the class.
struct MinUnionFind {
    std::vector<int> parent;

    explicit MinUnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns true if the classes were distinct.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (rx > ry) std::swap(rx, ry);
        parent[ry] = rx;
        return true;
    }
};

}  // namespace

Partition principal_congruence(const CayleyTable& t, int a, int b) {
    const int n = t.order();
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw precondition_error("principal_congruence: seed out of range");

    // Division tables: rdiv[c][x*c] = x, ldiv[c][c*y] = y.
    std::vector<std::vector<int>> rdiv(n, std::vector<int>(n));
    std::vector<std::vector<int>> ldiv(n, std::vector<int>(n));
    for (int c = 0; c < n; ++c)
        for (int x = 0; x < n; ++x) {
            rdiv[c][t.at(x, c)] = x;
            ldiv[x][t.at(x, c)] = c;
        }

    MinUnionFind uf(n);
    std::deque<std::pair<int, int>> work{{a, b}};
    while (!work.empty()) {
        auto [u, v] = work.front();
        work.pop_front();
        if (!uf.unite(u, v)) continue;
        for (int c = 0; c < n; ++c) {
            work.emplace_back(t.at(u, c), t.at(v, c));    // R_c
            work.emplace_back(t.at(c, u), t.at(c, v));    // L_c
            work.emplace_back(rdiv[c][u], rdiv[c][v]);    // R_c^{-1}
            work.emplace_back(ldiv[c][u], ldiv[c][v]);    // L_c^{-1}
        }
    }

    std::vector<int> rep(n);
    for (int x = 0; x < n; ++x) rep[x] = uf.find(x);
    return Partition::from_representatives(std::move(rep));
}

bool is_congruence(const CayleyTable& t, const Partition& p, std::pair<int, int>* witness) {
    const int n = t.order();
    if (p.size() != n) throw structural_error("is_congruence: partition size mismatch");
    // (x ~ x', y ~ y') => xy ~ x'y' follows from the two one-sided checks.
    for (int u = 0; u < n; ++u) {
        const int v = p.rep(u);
        if (v == u) continue;
        for (int c = 0; c < n; ++c) {
            if (!p.same(t.at(u, c), t.at(v, c)) || !p.same(t.at(c, u), t.at(c, v))) {
                if (witness) *witness = {u, v};
                return false;
            }
        }
    }
    return true;
}

CayleyTable quotient(const CayleyTable& t, const Partition& p) {
    std::pair<int, int> w;
    if (!is_congruence(t, p, &w))
        throw congruence_error("quotient: not a congruence; translates of related pair (" +
                               std::to_string(w.first) + ", " + std::to_string(w.second) +
                               ") split");
    const int n = t.order();
    std::vector<int> index(n, -1);
    int k = 0;
    for (int x = 0; x < n; ++x)
        if (p.rep(x) == x) index[x] = k++;

    std::vector<int> cells(static_cast<std::size_t>(k) * k);
    for (int x = 0; x < n; ++x) {
        if (p.rep(x) != x) continue;
        for (int y = 0; y < n; ++y) {
            if (p.rep(y) != y) continue;
            cells[static_cast<std::size_t>(index[x]) * k + index[y]] = index[p.rep(t.at(x, y))];
        }
    }
    return CayleyTable(k, std::move(cells));
}

bool is_simple(const CayleyTable& t) {
    const int n = t.order();
    if (n < 2) throw precondition_error("is_simple: order must be at least 2");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (principal_congruence(t, a, b).block_count() != 1) return false;
    return true;
}

}  // namespace fgq
