#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fgq/linear.hpp"

namespace fgq {

// Group constructors used by the catalog and the test substrate.
GroupTable make_cyclic(int n);
GroupTable make_direct_product(const GroupTable& a, const GroupTable& b);
GroupTable make_dihedral(int m);   // order 2m; rotations 0..m-1, flips m..2m-1
GroupTable make_quaternion8();     // 0..7 = 1, i, j, k, -1, -i, -j, -k

struct SearchSpec {
    enum class Mode { Exhaustive, Reduced, Random };

    int order = 0;
    Mode mode = Mode::Exhaustive;
    std::uint64_t sample_count = 0;  // Random only
    std::uint64_t seed = 0;          // Random only
};

/// Serial lexicographic stream of Latin squares: all of them (Exhaustive),
/// those with first row and first column in natural order (Reduced), or a
/// seeded sample from row-by-row randomized backtracking (Random).
/// Exhaustive and Reduced throw capacity_error above order 5.
void for_each_latin(const SearchSpec& spec, const std::function<void(const CayleyTable&)>& sink);

std::vector<CayleyTable> collect_latin(const SearchSpec& spec);
std::uint64_t count_latin(const SearchSpec& spec);

enum class Predicate { Latin, Fl, Fr, F, A, B, FG, FasFG, Medial, Group, Simple, IsotopeGroup };

std::optional<Predicate> predicate_from_name(const std::string& name);
std::string predicate_name(Predicate p);
bool eval_predicate(const CayleyTable& t, Predicate p);

/// A conjunction of predicates.
using PredicateSet = std::vector<Predicate>;
std::string predicate_set_key(const PredicateSet& ps);  // names joined by '+'

struct CensusRow {
    std::string key;
    std::uint64_t count = 0;
};

/// Counts, per requested conjunction, of the enumerated tables satisfying it.
/// The parallel kernel splits the search tree on the completed second row;
/// serial and parallel results are identical.
std::vector<CensusRow> census(const SearchSpec& spec, const std::vector<PredicateSet>& combos);
std::vector<CensusRow> census_serial(const SearchSpec& spec,
                                     const std::vector<PredicateSet>& combos);

/// A named group with its automorphism caches: all automorphisms, the
/// commuting pairs (f, g), and the commuting pairs additionally satisfying
/// the centrality axiom (-x + f(x) and -x + g(x) central), indexed into auts.
struct CatalogEntry {
    std::string name;
    GroupTable group;
    std::vector<Permutation> auts;
    std::vector<std::pair<int, int>> commuting;
    std::vector<std::pair<int, int>> constrained;
};

/// The built-in groups of order <= 16: cyclic Z1..Z16, Z2xZ2, Z2xZ4,
/// Z2xZ2xZ2, D3, D4, Q8.
class GroupCatalog {
public:
    static const GroupCatalog& standard();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* find(const std::string& name) const;

private:
    std::vector<CatalogEntry> entries_;
};

struct LinearDraw {
    const CatalogEntry* entry = nullptr;
    Permutation f, g;
    int e = 0;
};

/// Seeded reproducible draws of (group, f, g, e) with fg = gf; when
/// constrained, (f, g) also satisfies the centrality axiom, so the linear
/// table built from the draw is an FG-quasigroup. Sampling uses mt19937_64.
std::vector<LinearDraw> random_linear(const GroupCatalog& catalog, std::uint64_t seed,
                                      int count, bool constrained = true);

}  // namespace fgq
