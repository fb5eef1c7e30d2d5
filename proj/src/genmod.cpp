#include "fgq/genmod.hpp"

#include <algorithm>

namespace fgq {

RPoly RPoly::indeterminate(int which) {
    if (which < 0 || which > 3) throw precondition_error("RPoly: indeterminate index");
    MonomialExp e{0, 0, 0, 0};
    e[which] = 1;
    return monomial(e, 1);
}

RPoly RPoly::monomial(const MonomialExp& exp, long long coeff) {
    if (exp == MonomialExp{0, 0, 0, 0})
        throw invalid_module_error("RPoly: constant terms are not in the ideal");
    for (int d : exp)
        if (d < 0) throw precondition_error("RPoly: negative exponent");
    RPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

RPoly RPoly::operator+(const RPoly& o) const {
    RPoly out = *this;
    for (const auto& [exp, c] : o.terms_) {
        auto it = out.terms_.find(exp);
        if (it == out.terms_.end()) {
            out.terms_[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

RPoly RPoly::operator-() const {
    RPoly out = *this;
    for (auto& [exp, c] : out.terms_) c = -c;
    return out;
}

RPoly RPoly::operator*(const RPoly& o) const {
    RPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            MonomialExp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_[e] = ca * cb;
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

std::string RPoly::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names = "xyuv";
    std::string out;
    for (const auto& [exp, c] : terms_) {
        if (!out.empty()) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        long long a = c < 0 ? -c : c;
        bool unit = a == 1 && exp != MonomialExp{0, 0, 0, 0};
        if (!unit) out += std::to_string(a);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < exp[i]; ++k) out += names[i];
    }
    return out;
}

namespace {

bool is_endomorphism(const GroupTable& g, const ElementMap& m) {
    const int n = g.order();
    if (m.size() != n || !m.total_on(n)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (m(g.op(x, y)) != g.op(m(x), m(y))) return false;
    return true;
}

}  // namespace

std::optional<std::string> check_module(const GenModule& m) {
    const GroupTable& G = m.group;
    const int n = G.order();
    const ElementMap* maps[4] = {&m.phi, &m.psi, &m.mu, &m.nu};
    static const char* names[4] = {"phi", "psi", "mu", "nu"};

    const std::vector<int> Z = center(G);
    std::vector<char> central(n, 0);
    for (int z : Z) central[z] = 1;

    for (int i = 0; i < 4; ++i) {
        if (maps[i]->size() != n || !maps[i]->total_on(n))
            return std::string(names[i]) + " is not total on the carrier";
        if (!is_endomorphism(G, *maps[i]))
            return std::string(names[i]) + " is not an endomorphism";
        for (int x = 0; x < n; ++x)
            if (!central[(*maps[i])(x)])
                return std::string(names[i]) + " image not central at x=" + std::to_string(x);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int x = 0; x < n; ++x)
                if ((*maps[i])((*maps[j])(x)) != (*maps[j])((*maps[i])(x)))
                    return std::string(names[i]) + " and " + names[j] +
                           " do not commute at x=" + std::to_string(x);
    for (int x = 0; x < n; ++x) {
        if (G.op(G.op(m.phi(x), m.mu(x)), m.phi(m.mu(x))) != G.neutral())
            return "phi + mu + phi mu does not annihilate x=" + std::to_string(x);
        if (G.op(G.op(m.psi(x), m.nu(x)), m.psi(m.nu(x))) != G.neutral())
            return "psi + nu + psi nu does not annihilate x=" + std::to_string(x);
    }
    return std::nullopt;
}

int poly_act(const RPoly& p, const GenModule& m, int x) {
    const GroupTable& G = m.group;
    int acc = G.neutral();
    for (const auto& [exp, coeff] : p.terms()) {
        int y = x;
        for (int k = 0; k < exp[3]; ++k) y = m.nu(y);
        for (int k = 0; k < exp[2]; ++k) y = m.mu(y);
        for (int k = 0; k < exp[1]; ++k) y = m.psi(y);
        for (int k = 0; k < exp[0]; ++k) y = m.phi(y);
        // coeff * y via repeated addition; inverse first for negative coeff.
        int step = coeff >= 0 ? y : G.neg(y);
        long long reps = coeff >= 0 ? coeff : -coeff;
        for (long long k = 0; k < reps; ++k) acc = G.op(acc, step);
    }
    return acc;
}

bool annihilates(const RPoly& p, const GenModule& m) {
    for (int x = 0; x < m.group.order(); ++x)
        if (poly_act(p, m, x) != m.group.neutral()) return false;
    return true;
}

PointedModule rho(const PointedQuasigroup& pq) {
    const int n = pq.table.order();
    if (pq.point < 0 || pq.point >= n) throw precondition_error("rho: point out of range");

    // The form whose group neutral is the chosen point: basepoints
    // (a, b) = (0, R0^-1(point)).
    std::vector<int> r0inv(n);
    for (int x = 0; x < n; ++x) r0inv[pq.table.at(x, 0)] = x;
    const ArithmeticForm form = extract_form(pq.table, 0, r0inv[pq.point]);
    const GroupTable& G = form.group;

    const Permutation finv = form.f.inverse();
    const Permutation ginv = form.g.inverse();
    GenModule mod;
    mod.group = G;
    mod.phi.img.resize(n);
    mod.psi.img.resize(n);
    mod.mu.img.resize(n);
    mod.nu.img.resize(n);
    for (int x = 0; x < n; ++x) {
        mod.phi.img[x] = G.op(G.neg(x), form.f(x));
        mod.mu.img[x] = G.op(G.neg(x), finv(x));
        mod.psi.img[x] = G.op(G.neg(x), form.g(x));
        mod.nu.img[x] = G.op(G.neg(x), ginv(x));
    }
    if (auto defect = check_module(mod))
        throw internal_error("rho: derived maps violate a module invariant: " + *defect);
    return PointedModule{std::move(mod), form.e};
}

PointedQuasigroup sigma(const PointedModule& pm) {
    if (auto defect = check_module(pm.module))
        throw invalid_module_error("sigma: " + *defect);
    const GroupTable& G = pm.module.group;
    const int n = G.order();
    if (pm.e < 0 || pm.e >= n) throw invalid_module_error("sigma: e outside carrier");

    std::vector<int> fimg(n), gimg(n), kimg(n), limg(n);
    for (int x = 0; x < n; ++x) {
        fimg[x] = G.op(x, pm.module.phi(x));
        gimg[x] = G.op(x, pm.module.psi(x));
        kimg[x] = G.op(x, pm.module.mu(x));
        limg[x] = G.op(x, pm.module.nu(x));
    }
    if (!Permutation::is_bijection(fimg) || !Permutation::is_bijection(gimg))
        throw invalid_module_error("sigma: 1 + phi or 1 + psi is not bijective");
    Permutation f{std::move(fimg)}, g{std::move(gimg)};
    Permutation k{std::move(kimg)}, l{std::move(limg)};
    // The annihilator relations make k and l the inverses of f and g.
    for (int x = 0; x < n; ++x)
        if (f(k(x)) != x || k(f(x)) != x || g(l(x)) != x || l(g(x)) != x)
            throw internal_error("sigma: derived inverses do not invert");

    return PointedQuasigroup{build_linear(G, f, g, pm.e, Convention::Std), G.neutral()};
}

}  // namespace fgq
