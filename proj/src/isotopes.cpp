#include "fgq/isotopes.hpp"

#include <atomic>
#include <vector>

#include "fgq/threads.hpp"

namespace fgq {

CayleyTable principal_isotope(const CayleyTable& t, int a, int b, IsotopeConvention c) {
    const int n = t.order();
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw precondition_error("principal_isotope: basepoint out of range");

    // Row map applied to x, column map applied to y.
    std::vector<int> rinv(n), linv(n);
    if (c == IsotopeConvention::Intro) {
        for (int x = 0; x < n; ++x) rinv[t.at(x, b)] = x;  // Rb^-1
        for (int y = 0; y < n; ++y) linv[t.at(a, y)] = y;  // La^-1
    } else {
        for (int x = 0; x < n; ++x) rinv[t.at(x, a)] = x;  // Ra^-1
        for (int y = 0; y < n; ++y) linv[t.at(b, y)] = y;  // Lb^-1
    }

    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            cells[static_cast<std::size_t>(x) * n + y] = t.at(rinv[x], linv[y]);
    return CayleyTable(n, std::move(cells));
}

std::optional<int> loop_neutral(const CayleyTable& t) {
    const int n = t.order();
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = t.at(x, c) == x && t.at(c, x) == x;
        if (ok) return c;
    }
    return std::nullopt;
}

namespace {

std::optional<std::array<int, 2>> assoc_inner(const CayleyTable& t, int x) {
    const int n = t.order();
    for (int y = 0; y < n; ++y) {
        const int xy = t.at(x, y);
        for (int z = 0; z < n; ++z)
            if (t.at(xy, z) != t.at(x, t.at(y, z))) return std::array{y, z};
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::array<int, 3>> assoc_failure_serial(const CayleyTable& t) {
    for (int x = 0; x < t.order(); ++x)
        if (auto yz = assoc_inner(t, x)) return std::array{x, (*yz)[0], (*yz)[1]};
    return std::nullopt;
}

std::optional<std::array<int, 3>> assoc_failure(const CayleyTable& t) {
    const int n = t.order();
    if (static_cast<long long>(n) * n * n < 1 << 14 || thread_count() == 1)
        return assoc_failure_serial(t);

    std::vector<std::optional<std::array<int, 2>>> found(n);
    std::atomic<int> best{n};
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (int x = 0; x < n; ++x) {
        if (x > best.load(std::memory_order_relaxed)) continue;
        auto yz = assoc_inner(t, x);
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

bool is_group(const CayleyTable& t) {
    return loop_neutral(t).has_value() && !assoc_failure(t).has_value();
}

}  // namespace fgq
