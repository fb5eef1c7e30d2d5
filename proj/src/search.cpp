#include "fgq/search.hpp"

#include <algorithm>
#include <random>

#include "fgq/congruence.hpp"
#include "fgq/identities.hpp"
#include "fgq/isotopes.hpp"
#include "fgq/threads.hpp"

namespace fgq {

GroupTable make_cyclic(int n) {
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) cells[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
    return *GroupTable::try_from(CayleyTable(n, std::move(cells)));
}

GroupTable make_direct_product(const GroupTable& a, const GroupTable& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int x1 = 0; x1 < na; ++x1)
        for (int x2 = 0; x2 < nb; ++x2)
            for (int y1 = 0; y1 < na; ++y1)
                for (int y2 = 0; y2 < nb; ++y2)
                    cells[static_cast<std::size_t>(x1 * nb + x2) * n + (y1 * nb + y2)] =
                        a.op(x1, y1) * nb + b.op(x2, y2);
    return *GroupTable::try_from(CayleyTable(n, std::move(cells)));
}

GroupTable make_dihedral(int m) {
    const int n = 2 * m;
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int i1 = 0; i1 < m; ++i1)
        for (int f1 = 0; f1 < 2; ++f1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int f2 = 0; f2 < 2; ++f2) {
                    const int rot = (i1 + (f1 ? m - i2 : i2)) % m;
                    cells[static_cast<std::size_t>(i1 + m * f1) * n + (i2 + m * f2)] =
                        rot + m * ((f1 + f2) % 2);
                }
    return *GroupTable::try_from(CayleyTable(n, std::move(cells)));
}

GroupTable make_quaternion8() {
    // sign table and basis products for {1, i, j, k}
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    std::vector<int> cells(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int sa = a >= 4 ? -1 : 1, sb = b >= 4 ? -1 : 1;
            const int ba = a % 4, bb = b % 4;
            const int s = sa * sb * sign[ba][bb];
            cells[static_cast<std::size_t>(a) * 8 + b] = basis[ba][bb] + (s < 0 ? 4 : 0);
        }
    return *GroupTable::try_from(CayleyTable(8, std::move(cells)));
}

namespace {

constexpr int kMaxExhaustiveOrder = 5;

// All permutations of 0..n-1 in lexicographic order, each with a column
// occupancy mask: bit (c*n + p[c]).
struct RowPool {
    int n;
    std::vector<std::vector<int>> perms;
    std::vector<std::uint64_t> occ;

    explicit RowPool(int order) : n(order) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        do {
            std::uint64_t m = 0;
            for (int c = 0; c < n; ++c) m |= 1ULL << (c * n + p[c]);
            perms.push_back(p);
            occ.push_back(m);
        } while (std::next_permutation(p.begin(), p.end()));
    }
};

void check_enumerable(const SearchSpec& spec) {
    if (spec.order < 1) throw precondition_error("search: order must be positive");
    if (spec.mode != SearchSpec::Mode::Random && spec.order > kMaxExhaustiveOrder)
        throw capacity_error("search: exhaustive enumeration is bounded by order " +
                             std::to_string(kMaxExhaustiveOrder));
}

// Depth-first completion from `depth` filled rows; calls sink for each square.
void complete(const RowPool& pool, std::vector<int>& rowIdx, std::uint64_t used, int depth,
              bool reduced, const std::function<void(const CayleyTable&)>& sink) {
    const int n = pool.n;
    if (depth == n) {
        std::vector<int> cells;
        cells.reserve(static_cast<std::size_t>(n) * n);
        for (int r : rowIdx) {
            const auto& p = pool.perms[r];
            cells.insert(cells.end(), p.begin(), p.end());
        }
        sink(CayleyTable(n, std::move(cells)));
        return;
    }
    for (std::size_t i = 0; i < pool.perms.size(); ++i) {
        if (reduced && pool.perms[i][0] != depth) continue;
        if (used & pool.occ[i]) continue;
        rowIdx[depth] = static_cast<int>(i);
        complete(pool, rowIdx, used | pool.occ[i], depth + 1, reduced, sink);
    }
    rowIdx[depth] = -1;
}

CayleyTable random_latin(int n, std::mt19937_64& rng) {
    std::vector<std::vector<int>> rows;
    std::vector<std::uint64_t> colused(n, 0);  // per-column value bitmask (n <= 63)
    std::vector<int> row(n), cand;
    for (int r = 0; r < n; ++r) {
        std::uint64_t rowused = 0;
        // In-row DFS with shuffled candidate order. A Latin rectangle always
        // extends, so this cannot fail across rows.
        std::vector<std::vector<int>> choices(n);
        int c = 0;
        while (c < n) {
            if (choices[c].empty()) {
                cand.clear();
                for (int v = 0; v < n; ++v)
                    if (!(rowused >> v & 1) && !(colused[c] >> v & 1)) cand.push_back(v);
                std::shuffle(cand.begin(), cand.end(), rng);
                choices[c] = cand;
            }
            if (choices[c].empty()) {
                // dead end: undo previous cell
                --c;
                rowused &= ~(1ULL << row[c]);
                continue;
            }
            row[c] = choices[c].back();
            choices[c].pop_back();
            rowused |= 1ULL << row[c];
            ++c;
            if (c < n) choices[c].clear();
        }
        for (int cc = 0; cc < n; ++cc) colused[cc] |= 1ULL << row[cc];
        rows.push_back(row);
    }
    return CayleyTable::from_rows(rows);
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
    // Distinct, deterministic stream per sample so samples can be produced
    // independently.
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    rng.discard(8);
    return rng;
}

}  // namespace

void for_each_latin(const SearchSpec& spec,
                    const std::function<void(const CayleyTable&)>& sink) {
    check_enumerable(spec);
    const int n = spec.order;
    if (spec.mode == SearchSpec::Mode::Random) {
        if (n > 63) throw capacity_error("search: random sampling is bounded by order 63");
        for (std::uint64_t i = 0; i < spec.sample_count; ++i) {
            auto rng = sample_rng(spec.seed, i);
            sink(random_latin(n, rng));
        }
        return;
    }
    const RowPool pool(n);
    std::vector<int> rowIdx(n, -1);
    const bool reduced = spec.mode == SearchSpec::Mode::Reduced;
    if (reduced) {
        // first row fixed to the identity permutation
        rowIdx[0] = 0;
        complete(pool, rowIdx, pool.occ[0], 1, true, sink);
    } else {
        complete(pool, rowIdx, 0, 0, false, sink);
    }
}

std::vector<CayleyTable> collect_latin(const SearchSpec& spec) {
    std::vector<CayleyTable> out;
    for_each_latin(spec, [&](const CayleyTable& t) { out.push_back(t); });
    return out;
}

std::uint64_t count_latin(const SearchSpec& spec) {
    std::uint64_t k = 0;
    for_each_latin(spec, [&](const CayleyTable&) { ++k; });
    return k;
}

std::optional<Predicate> predicate_from_name(const std::string& name) {
    if (name == "latin") return Predicate::Latin;
    if (name == "fl") return Predicate::Fl;
    if (name == "fr") return Predicate::Fr;
    if (name == "f") return Predicate::F;
    if (name == "a") return Predicate::A;
    if (name == "b") return Predicate::B;
    if (name == "fg") return Predicate::FG;
    if (name == "fasfg") return Predicate::FasFG;
    if (name == "medial") return Predicate::Medial;
    if (name == "group") return Predicate::Group;
    if (name == "simple") return Predicate::Simple;
    if (name == "isotope-group") return Predicate::IsotopeGroup;
    return std::nullopt;
}

std::string predicate_name(Predicate p) {
    switch (p) {
        case Predicate::Latin: return "latin";
        case Predicate::Fl: return "fl";
        case Predicate::Fr: return "fr";
        case Predicate::F: return "f";
        case Predicate::A: return "a";
        case Predicate::B: return "b";
        case Predicate::FG: return "fg";
        case Predicate::FasFG: return "fasfg";
        case Predicate::Medial: return "medial";
        case Predicate::Group: return "group";
        case Predicate::Simple: return "simple";
        case Predicate::IsotopeGroup: return "isotope-group";
    }
    return "?";
}

bool eval_predicate(const CayleyTable& t, Predicate p) {
    switch (p) {
        case Predicate::Latin: return validate_table(t);
        case Predicate::Fl: return check_identity(t, IdentityName::Fl);
        case Predicate::Fr: return check_identity(t, IdentityName::Fr);
        case Predicate::F: return is_F(t);
        case Predicate::A: return check_identity(t, IdentityName::A);
        case Predicate::B: return check_identity(t, IdentityName::B);
        case Predicate::FG: return is_FG(t);
        case Predicate::FasFG: return check_identity(t, IdentityName::FasFG);
        case Predicate::Medial: return check_identity(t, IdentityName::Medial);
        case Predicate::Group: return is_group(t);
        case Predicate::Simple: return t.order() >= 2 && is_simple(t);
        case Predicate::IsotopeGroup: return check_isotope_assoc(t, 0, 0);
    }
    return false;
}

std::string predicate_set_key(const PredicateSet& ps) {
    std::string key;
    for (const Predicate p : ps) {
        if (!key.empty()) key += '+';
        key += predicate_name(p);
    }
    return key.empty() ? "all" : key;
}

namespace {

std::vector<CensusRow> make_rows(const std::vector<PredicateSet>& combos) {
    std::vector<CensusRow> rows;
    rows.reserve(combos.size());
    for (const auto& c : combos) rows.push_back({predicate_set_key(c), 0});
    return rows;
}

void tally(const CayleyTable& t, const std::vector<PredicateSet>& combos,
           std::vector<std::uint64_t>& counts) {
    for (std::size_t i = 0; i < combos.size(); ++i) {
        bool all = true;
        for (const Predicate p : combos[i])
            if (!eval_predicate(t, p)) {
                all = false;
                break;
            }
        if (all) ++counts[i];
    }
}

}  // namespace

std::vector<CensusRow> census_serial(const SearchSpec& spec,
                                     const std::vector<PredicateSet>& combos) {
    std::vector<CensusRow> rows = make_rows(combos);
    std::vector<std::uint64_t> counts(combos.size(), 0);
    for_each_latin(spec, [&](const CayleyTable& t) { tally(t, combos, counts); });
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].count = counts[i];
    return rows;
}

std::vector<CensusRow> census(const SearchSpec& spec, const std::vector<PredicateSet>& combos) {
    check_enumerable(spec);
    const int n = spec.order;
    if (thread_count() == 1) return census_serial(spec, combos);

    std::vector<std::uint64_t> total(combos.size(), 0);

    if (spec.mode == SearchSpec::Mode::Random) {
        if (n > 63) throw capacity_error("search: random sampling is bounded by order 63");
        const long long count = static_cast<long long>(spec.sample_count);
#pragma omp parallel num_threads(thread_count())
        {
            std::vector<std::uint64_t> local(combos.size(), 0);
#pragma omp for schedule(dynamic, 16)
            for (long long i = 0; i < count; ++i) {
                auto rng = sample_rng(spec.seed, static_cast<std::uint64_t>(i));
                tally(random_latin(n, rng), combos, local);
            }
#pragma omp critical
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += local[i];
        }
    } else {
        const RowPool pool(n);
        const bool reduced = spec.mode == SearchSpec::Mode::Reduced;

        // Jobs: the valid (row 0, row 1) prefixes, in lexicographic order.
        struct Job {
            int r0, r1;
        };
        std::vector<Job> jobs;
        const int nperm = static_cast<int>(pool.perms.size());
        for (int i = 0; i < nperm; ++i) {
            if (reduced && i != 0) break;  // reduced fixes row 0 = identity
            if (n == 1) {
                jobs.push_back({i, -1});
                continue;
            }
            for (int j = 0; j < nperm; ++j) {
                if (reduced && pool.perms[j][0] != 1) continue;
                if (pool.occ[i] & pool.occ[j]) continue;
                jobs.push_back({i, j});
            }
        }

        const long long njobs = static_cast<long long>(jobs.size());
#pragma omp parallel num_threads(thread_count())
        {
            std::vector<std::uint64_t> local(combos.size(), 0);
            std::vector<int> rowIdx(n, -1);
#pragma omp for schedule(dynamic, 1)
            for (long long ji = 0; ji < njobs; ++ji) {
                const Job job = jobs[static_cast<std::size_t>(ji)];
                rowIdx.assign(n, -1);
                rowIdx[0] = job.r0;
                std::uint64_t used = pool.occ[job.r0];
                int depth = 1;
                if (job.r1 >= 0) {
                    rowIdx[1] = job.r1;
                    used |= pool.occ[job.r1];
                    depth = 2;
                }
                complete(pool, rowIdx, used, depth, reduced,
                         [&](const CayleyTable& t) { tally(t, combos, local); });
            }
#pragma omp critical
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += local[i];
        }
    }

    std::vector<CensusRow> rows = make_rows(combos);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].count = total[i];
    return rows;
}

const GroupCatalog& GroupCatalog::standard() {
    static const GroupCatalog instance = [] {
        GroupCatalog cat;
        auto add = [&cat](const std::string& name, const GroupTable& g) {
            CatalogEntry entry;
            entry.name = name;
            entry.group = g;
            entry.auts = automorphisms(g);
            const int n = g.order();
            const std::vector<int> Z = center(g);
            std::vector<char> central(n, 0);
            for (int z : Z) central[z] = 1;
            const auto central_diff = [&](const Permutation& f) {
                for (int x = 0; x < n; ++x)
                    if (!central[g.op(g.neg(x), f(x))]) return false;
                return true;
            };
            std::vector<char> cdiff(entry.auts.size());
            for (std::size_t i = 0; i < entry.auts.size(); ++i)
                cdiff[i] = central_diff(entry.auts[i]) ? 1 : 0;
            for (std::size_t i = 0; i < entry.auts.size(); ++i)
                for (std::size_t j = 0; j < entry.auts.size(); ++j) {
                    bool comm = true;
                    for (int x = 0; x < n && comm; ++x)
                        comm = entry.auts[i](entry.auts[j](x)) == entry.auts[j](entry.auts[i](x));
                    if (!comm) continue;
                    entry.commuting.emplace_back(static_cast<int>(i), static_cast<int>(j));
                    if (cdiff[i] && cdiff[j])
                        entry.constrained.emplace_back(static_cast<int>(i), static_cast<int>(j));
                }
            cat.entries_.push_back(std::move(entry));
        };
        for (int n = 1; n <= 16; ++n) add("Z" + std::to_string(n), make_cyclic(n));
        const GroupTable z2 = make_cyclic(2), z4 = make_cyclic(4);
        const GroupTable z2z2 = make_direct_product(z2, z2);
        add("Z2xZ2", z2z2);
        add("Z2xZ4", make_direct_product(z2, z4));
        add("Z2xZ2xZ2", make_direct_product(z2z2, z2));
        add("D3", make_dihedral(3));
        add("D4", make_dihedral(4));
        add("Q8", make_quaternion8());
        return cat;
    }();
    return instance;
}

const CatalogEntry* GroupCatalog::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<LinearDraw> random_linear(const GroupCatalog& catalog, std::uint64_t seed,
                                      int count, bool constrained) {
    const auto& entries = catalog.entries();
    if (entries.empty()) throw precondition_error("random_linear: empty catalog");
    std::mt19937_64 rng(seed);
    std::vector<LinearDraw> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const auto& entry =
            entries[std::uniform_int_distribution<std::size_t>(0, entries.size() - 1)(rng)];
        const auto& pairs = constrained ? entry.constrained : entry.commuting;
        const auto [fi, gi] =
            pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
        const int e =
            std::uniform_int_distribution<int>(0, entry.group.order() - 1)(rng);
        out.push_back({&entry, entry.auts[fi], entry.auts[gi], e});
    }
    return out;
}

}  // namespace fgq
