#include "fgq/linear.hpp"

#include <algorithm>
#include <string>

#include "fgq/identities.hpp"
#include "fgq/isotopes.hpp"

namespace fgq {

std::optional<GroupTable> GroupTable::try_from(const CayleyTable& t) {
    if (!validate_table(t)) return std::nullopt;
    auto neutral = loop_neutral(t);
    if (!neutral || assoc_failure(t)) return std::nullopt;
    GroupTable g;
    g.table_ = t;
    g.neutral_ = *neutral;
    g.inverse_.resize(t.order());
    for (int x = 0; x < t.order(); ++x)
        for (int y = 0; y < t.order(); ++y)
            if (t.at(x, y) == *neutral) g.inverse_[x] = y;
    return g;
}

GroupTable GroupTable::require(const CayleyTable& t) {
    if (!validate_table(t)) throw not_group_error("not a group: table is not Latin");
    if (!loop_neutral(t)) throw not_group_error("not a group: no two-sided neutral");
    if (auto w = assoc_failure(t))
        throw not_group_error("not a group: associativity fails at x=" +
                              std::to_string((*w)[0]) + " y=" + std::to_string((*w)[1]) +
                              " z=" + std::to_string((*w)[2]));
    return *try_from(t);
}

std::vector<int> center(const GroupTable& g) {
    const int n = g.order();
    std::vector<int> out;
    for (int z = 0; z < n; ++z) {
        bool central = true;
        for (int x = 0; x < n && central; ++x) central = g.op(z, x) == g.op(x, z);
        if (central) out.push_back(z);
    }
    return out;
}

namespace {

int element_order(const GroupTable& g, int x) {
    int k = 1, y = x;
    while (y != g.neutral()) {
        y = g.op(y, x);
        ++k;
    }
    return k;
}

// Greedy generating set: repeatedly adjoin the least element outside the
// current closure.
std::vector<int> generators(const GroupTable& g) {
    const int n = g.order();
    std::vector<int> gens;
    std::vector<char> closed(n, 0);
    closed[g.neutral()] = 1;
    int covered = 1;
    while (covered < n) {
        int cand = 0;
        while (closed[cand]) ++cand;
        gens.push_back(cand);
        // recompute closure
        std::fill(closed.begin(), closed.end(), 0);
        closed[g.neutral()] = 1;
        std::vector<int> frontier{g.neutral()};
        covered = 1;
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (int gen : gens) {
                int y = g.op(x, gen);
                if (!closed[y]) {
                    closed[y] = 1;
                    ++covered;
                    frontier.push_back(y);
                }
            }
        }
    }
    return gens;
}

}  // namespace

std::vector<Permutation> automorphisms(const GroupTable& g, int order_bound) {
    const int n = g.order();
    if (n > order_bound)
        throw capacity_error("automorphisms: order " + std::to_string(n) + " exceeds bound " +
                             std::to_string(order_bound));

    const std::vector<int> gens = generators(g);
    const int k = static_cast<int>(gens.size());

    // BFS spanning tree from the neutral: every element is parent + generator,
    // so a candidate map is determined by its generator images.
    std::vector<int> parent(n, -1), via(n, -1), order;
    order.reserve(n);
    order.push_back(g.neutral());
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        for (int gi = 0; gi < k; ++gi) {
            int y = g.op(x, gens[gi]);
            if (y != g.neutral() && parent[y] == -1) {
                parent[y] = x;
                via[y] = gi;
                order.push_back(y);
            }
        }
    }

    std::vector<int> ord(n);
    for (int x = 0; x < n; ++x) ord[x] = element_order(g, x);

    std::vector<Permutation> auts;
    std::vector<int> imgs(k, 0);
    std::vector<int> phi(n);
    std::vector<char> seen(n);

    const auto try_candidate = [&] {
        phi[g.neutral()] = g.neutral();
        for (std::size_t i = 1; i < order.size(); ++i) {
            int x = order[i];
            phi[x] = g.op(phi[parent[x]], imgs[via[x]]);
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int x = 0; x < n; ++x) {
            if (seen[phi[x]]) return;
            seen[phi[x]] = 1;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (phi[g.op(x, y)] != g.op(phi[x], phi[y])) return;
        auts.emplace_back(Permutation(phi));
    };

    // Odometer over generator images, filtered by element order.
    const auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            try_candidate();
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (ord[c] != ord[gens[depth]]) continue;
            imgs[depth] = c;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);

    std::sort(auts.begin(), auts.end(),
              [](const Permutation& a, const Permutation& b) { return a.img < b.img; });
    return auts;
}

namespace {

bool is_automorphism(const GroupTable& g, const Permutation& f) {
    const int n = g.order();
    if (f.size() != n) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f(g.op(x, y)) != g.op(f(x), f(y))) return false;
    return true;
}

}  // namespace

CayleyTable build_linear(const GroupTable& g, const Permutation& f, const Permutation& gg,
                         int e, Convention c) {
    const int n = g.order();
    if (e < 0 || e >= n) throw invalid_form_error("build_linear: e out of range");
    if (!is_automorphism(g, f)) throw invalid_form_error("build_linear: f is not an automorphism");
    if (!is_automorphism(g, gg))
        throw invalid_form_error("build_linear: g is not an automorphism");

    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int v = 0;
            switch (c) {
                case Convention::Std: v = g.op(g.op(f(x), e), gg(y)); break;
                case Convention::Dot1: v = g.op(g.op(f(x), gg(y)), e); break;
                case Convention::Dot2: v = g.op(e, g.op(f(x), gg(y))); break;
            }
            cells[static_cast<std::size_t>(x) * n + y] = v;
        }
    return CayleyTable(n, std::move(cells));
}

CayleyTable ArithmeticForm::induced() const {
    return build_linear(group, f, g, e, Convention::Std);
}

std::optional<std::string> form_defect(const ArithmeticForm& form, const CayleyTable& product) {
    const GroupTable& G = form.group;
    const int n = G.order();
    if (product.order() != n) return "carrier sizes differ";
    if (form.f.size() != n || form.g.size() != n) return "map sizes differ from carrier";
    if (form.e < 0 || form.e >= n) return "e outside carrier";
    if (!is_automorphism(G, form.f)) return "f is not an automorphism";
    if (!is_automorphism(G, form.g)) return "g is not an automorphism";
    for (int x = 0; x < n; ++x)
        if (form.f(form.g(x)) != form.g(form.f(x)))
            return "fg != gf at x=" + std::to_string(x);
    const std::vector<int> Z = center(G);
    std::vector<char> central(n, 0);
    for (int z : Z) central[z] = 1;
    for (int x = 0; x < n; ++x) {
        if (!central[G.op(G.neg(x), form.f(x))])
            return "-x + f(x) not central at x=" + std::to_string(x);
        if (!central[G.op(G.neg(x), form.g(x))])
            return "-x + g(x) not central at x=" + std::to_string(x);
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (product.at(x, y) != G.op(G.op(form.f(x), form.e), form.g(y)))
                return "recomposition fails at x=" + std::to_string(x) +
                       " y=" + std::to_string(y);
    return std::nullopt;
}

bool check_F_linear(const ArithmeticForm& form, FormSide side) {
    const GroupTable& G = form.group;
    const int n = G.order();
    for (int x = 0; x < n; ++x)
        if (form.f(form.g(x)) != form.g(form.f(x))) return false;
    const std::vector<int> Z = center(G);
    std::vector<char> central(n, 0);
    for (int z : Z) central[z] = 1;
    if (side != FormSide::Right)
        for (int x = 0; x < n; ++x)
            if (!central[G.op(G.neg(x), form.f(x))]) return false;
    if (side != FormSide::Left)
        for (int x = 0; x < n; ++x)
            if (!central[G.op(G.neg(x), form.g(x))]) return false;
    return true;
}

Permutation phi(const ArithmeticForm& form) {
    const GroupTable& G = form.group;
    std::vector<int> img(G.order());
    for (int x = 0; x < G.order(); ++x) img[x] = G.op(G.op(G.neg(form.e), x), form.e);
    return Permutation(std::move(img));
}

ArithmeticForm extract_form(const CayleyTable& t, int a, int b) {
    const int n = t.order();
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw precondition_error("extract_form: basepoint out of range");
    if (!validate_table(t)) throw precondition_error("extract_form: table is not a quasigroup");

    const CayleyTable iso = principal_isotope(t, a, b, IsotopeConvention::Sec4);
    if (auto w = assoc_failure(iso))
        throw not_fg_error("not FG: loop isotope at (" + std::to_string(a) + ", " +
                           std::to_string(b) + ") fails associativity at x=" +
                           std::to_string((*w)[0]) + " y=" + std::to_string((*w)[1]) +
                           " z=" + std::to_string((*w)[2]));
    const auto maybe_group = GroupTable::try_from(iso);
    if (!maybe_group) throw internal_error("extract_form: isotope is not a loop");
    const GroupTable& G = *maybe_group;
    const int zero = G.neutral();  // equals t[b][a]

    // h = R_a, k = L_b; f(x) = h(x) - h(0), g(x) = -k(0) + k(x), e = h(0) + k(0).
    std::vector<int> fimg(n), gimg(n);
    const int h0 = t.at(zero, a), k0 = t.at(b, zero);
    for (int x = 0; x < n; ++x) fimg[x] = G.sub(t.at(x, a), h0);
    for (int y = 0; y < n; ++y) gimg[y] = G.op(G.neg(k0), t.at(b, y));

    ArithmeticForm form{G, Permutation(std::move(fimg)), Permutation(std::move(gimg)),
                        G.op(h0, k0)};
    if (auto defect = form_defect(form, t))
        throw not_fg_error("not FG: " + *defect);
    return form;
}

std::vector<ArithmeticForm> enumerate_forms(const CayleyTable& t) {
    const int n = t.order();
    std::vector<int> r0inv(n);
    for (int x = 0; x < n; ++x) r0inv[t.at(x, 0)] = x;

    std::vector<ArithmeticForm> forms;
    forms.reserve(n);
    for (int q = 0; q < n; ++q) forms.push_back(extract_form(t, 0, r0inv[q]));
    return forms;
}

std::vector<ArithmeticForm> strong_forms(const CayleyTable& t) {
    std::vector<ArithmeticForm> out;
    for (auto& form : enumerate_forms(t)) {
        const std::vector<int> Z = center(form.group);
        if (std::find(Z.begin(), Z.end(), form.e) != Z.end()) out.push_back(std::move(form));
    }
    return out;
}

ArithmeticForm canonical_strong_form(const CayleyTable& t) {
    auto [alpha, beta] = alpha_beta(t);
    const int c = alpha(beta(0));
    return extract_form(t, c, c);
}

bool is_form_homomorphism(const ElementMap& m, const ArithmeticForm& s,
                          const ArithmeticForm& t) {
    const int n = s.group.order();
    if (m.size() != n) throw structural_error("is_form_homomorphism: map size mismatch");
    if (!m.total_on(t.group.order()))
        throw structural_error("is_form_homomorphism: image escapes target carrier");
    if (m(s.group.neutral()) != t.group.neutral())
        throw precondition_error("is_form_homomorphism: map must send neutral to neutral");

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (m(s.group.op(x, y)) != t.group.op(m(x), m(y))) return false;
    for (int x = 0; x < n; ++x) {
        if (m(s.f(x)) != t.f(m(x))) return false;
        if (m(s.g(x)) != t.g(m(x))) return false;
    }
    return m(s.e) == t.e;
}

}  // namespace fgq
