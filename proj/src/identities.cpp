#include "fgq/identities.hpp"

#include <atomic>
#include <vector>

#include "fgq/threads.hpp"

namespace fgq {

int identity_arity(IdentityName id) {
    switch (id) {
        case IdentityName::Fl:
        case IdentityName::Fr:
            return 3;
        default:
            return 4;
    }
}

std::string identity_label(IdentityName id) {
    switch (id) {
        case IdentityName::Fl: return "fl";
        case IdentityName::Fr: return "fr";
        case IdentityName::A: return "a";
        case IdentityName::B: return "b";
        case IdentityName::Medial: return "medial";
        case IdentityName::FasFG: return "fasfg";
    }
    return "?";
}

std::optional<IdentityName> identity_from_label(const std::string& s) {
    if (s == "fl") return IdentityName::Fl;
    if (s == "fr") return IdentityName::Fr;
    if (s == "a" || s == "A") return IdentityName::A;
    if (s == "b" || s == "B") return IdentityName::B;
    if (s == "medial") return IdentityName::Medial;
    if (s == "fasfg") return IdentityName::FasFG;
    return std::nullopt;
}

const char* const* identity_var_names(IdentityName id) {
    static const char* const xyz[] = {"x", "y", "z", ""};
    static const char* const xyuv[] = {"x", "y", "u", "v"};
    static const char* const xyab[] = {"x", "y", "a", "b"};
    static const char* const xyzw[] = {"x", "y", "z", "w"};
    switch (id) {
        case IdentityName::Fl:
        case IdentityName::Fr:
            return xyz;
        case IdentityName::A:
        case IdentityName::B:
            return xyuv;
        case IdentityName::Medial:
            return xyab;
        case IdentityName::FasFG:
            return xyzw;
    }
    return xyz;
}

std::string IdentityWitness::to_string() const {
    const char* const* names = identity_var_names(id);
    std::string out;
    for (int i = 0; i < identity_arity(id); ++i) {
        if (i) out += ' ';
        out += names[i];
        out += '=';
        out += std::to_string(vars[i]);
    }
    return out;
}

namespace {

// Per-identity inner scans with the outer variable fixed. Each returns the
// first lexicographic failing tuple of the remaining variables.

struct TableView {
    const CayleyTable& t;
    int n;
    std::vector<int> alpha, beta, ab;

    explicit TableView(const CayleyTable& table) : t(table), n(table.order()) {
        auto [a, b] = alpha_beta(table);
        alpha = a.img;
        beta = b.img;
        ab.resize(n);
        for (int w = 0; w < n; ++w) ab[w] = alpha[beta[w]];
    }
};

std::optional<std::array<int, 3>> inner_scan(const TableView& v, IdentityName id, int x) {
    const auto& t = v.t;
    const int n = v.n;
    switch (id) {
        case IdentityName::Fl:
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (t.at(x, t.at(y, z)) != t.at(t.at(x, y), t.at(v.alpha[x], z)))
                        return std::array{y, z, 0};
            return std::nullopt;
        case IdentityName::Fr:
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (t.at(t.at(z, y), x) != t.at(t.at(z, v.beta[x]), t.at(y, x)))
                        return std::array{y, z, 0};
            return std::nullopt;
        case IdentityName::A:
            for (int y = 0; y < n; ++y)
                for (int u = 0; u < n; ++u) {
                    const int au = v.alpha[u];
                    for (int vv = 0; vv < n; ++vv)
                        if (t.at(t.at(x, y), t.at(au, vv)) != t.at(t.at(x, au), t.at(y, vv)))
                            return std::array{y, u, vv};
                }
            return std::nullopt;
        case IdentityName::B:
            for (int y = 0; y < n; ++y)
                for (int u = 0; u < n; ++u) {
                    const int bu = v.beta[u];
                    for (int vv = 0; vv < n; ++vv)
                        if (t.at(t.at(x, y), t.at(bu, vv)) != t.at(t.at(x, bu), t.at(y, vv)))
                            return std::array{y, u, vv};
                }
            return std::nullopt;
        case IdentityName::Medial:
            for (int y = 0; y < n; ++y)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (t.at(t.at(x, a), t.at(b, y)) != t.at(t.at(x, b), t.at(a, y)))
                            return std::array{y, a, b};
            return std::nullopt;
        case IdentityName::FasFG:
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int w = 0; w < n; ++w)
                        if (t.at(t.at(x, v.ab[w]), t.at(y, z)) !=
                            t.at(t.at(x, y), t.at(v.ab[w], z)))
                            return std::array{y, z, w};
            return std::nullopt;
    }
    return std::nullopt;
}

IdentityWitness make_witness(IdentityName id, int x, const std::array<int, 3>& rest) {
    return IdentityWitness{id, {x, rest[0], rest[1], rest[2]}};
}

}  // namespace

std::optional<IdentityWitness> identity_failure_serial(const CayleyTable& t, IdentityName id) {
    TableView v(t);
    for (int x = 0; x < v.n; ++x)
        if (auto rest = inner_scan(v, id, x)) return make_witness(id, x, *rest);
    return std::nullopt;
}

std::optional<IdentityWitness> identity_failure(const CayleyTable& t, IdentityName id) {
    TableView v(t);
    const int n = v.n;
    // Parallel pay-off needs enough tuples per outer slice.
    if (static_cast<long long>(n) * n * n < 1 << 14 || thread_count() == 1)
        return identity_failure_serial(t, id);

    std::vector<std::optional<std::array<int, 3>>> found(n);
    std::atomic<int> best{n};
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (int x = 0; x < n; ++x) {
        if (x > best.load(std::memory_order_relaxed)) continue;
        auto rest = inner_scan(v, id, x);
        if (rest) {
            found[x] = rest;
            int cur = best.load();
            while (x < cur && !best.compare_exchange_weak(cur, x)) {
            }
        }
    }
    const int b = best.load();
    if (b < n) return make_witness(id, b, *found[b]);
    return std::nullopt;
}

bool check_identity(const CayleyTable& t, IdentityName id) {
    return !identity_failure(t, id).has_value();
}

namespace {

std::optional<std::array<int, 2>> isotope_inner(const CayleyTable& t, const std::vector<int>& rai,
                                                const std::vector<int>& lbi, int x) {
    const int n = t.order();
    for (int y = 0; y < n; ++y) {
        const int ry = rai[y];
        const int xl = t.at(x, lbi[y]);
        for (int z = 0; z < n; ++z)
            if (t.at(x, lbi[t.at(ry, z)]) != t.at(rai[xl], z)) return std::array{y, z};
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::array<int, 3>> isotope_assoc_failure_serial(const CayleyTable& t, int a,
                                                               int b) {
    const int n = t.order();
    std::vector<int> rai(n), lbi(n);
    for (int x = 0; x < n; ++x) rai[t.at(x, a)] = x;
    for (int y = 0; y < n; ++y) lbi[t.at(b, y)] = y;
    for (int x = 0; x < n; ++x)
        if (auto yz = isotope_inner(t, rai, lbi, x)) return std::array{x, (*yz)[0], (*yz)[1]};
    return std::nullopt;
}

std::optional<std::array<int, 3>> isotope_assoc_failure(const CayleyTable& t, int a, int b) {
    const int n = t.order();
    if (static_cast<long long>(n) * n * n < 1 << 14 || thread_count() == 1)
        return isotope_assoc_failure_serial(t, a, b);

    std::vector<int> rai(n), lbi(n);
    for (int x = 0; x < n; ++x) rai[t.at(x, a)] = x;
    for (int y = 0; y < n; ++y) lbi[t.at(b, y)] = y;

    std::vector<std::optional<std::array<int, 2>>> found(n);
    std::atomic<int> best{n};
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (int x = 0; x < n; ++x) {
        if (x > best.load(std::memory_order_relaxed)) continue;
        auto yz = isotope_inner(t, rai, lbi, x);
        if (yz) {
            found[x] = yz;
            int cur = best.load();
            while (x < cur && !best.compare_exchange_weak(cur, x)) {
            }
        }
    }
    const int bx = best.load();
    if (bx < n) return std::array{bx, (*found[bx])[0], (*found[bx])[1]};
    return std::nullopt;
}

bool check_isotope_assoc(const CayleyTable& t, int a, int b) {
    return !isotope_assoc_failure(t, a, b).has_value();
}

bool is_F(const CayleyTable& t) {
    return check_identity(t, IdentityName::Fl) && check_identity(t, IdentityName::Fr);
}

bool is_FG(const CayleyTable& t) {
    return check_identity(t, IdentityName::A) && check_identity(t, IdentityName::B);
}

}  // namespace fgq
