#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fgq/cayley.hpp"

namespace fgq {

/// An equivalence relation on {0, ..., n-1}. Canonical block representative
/// is the minimum element of the block.
class Partition {
public:
    Partition() = default;

    static Partition discrete(int n);
    static Partition full(int n);

    /// Validates that blocks are disjoint, nonempty and cover [0, n).
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    /// rep[x] must already be the minimum of x's block for every x.
    static Partition from_representatives(std::vector<int> rep);

    int size() const { return static_cast<int>(rep_.size()); }
    int rep(int x) const { return rep_[x]; }
    bool same(int x, int y) const { return rep_[x] == rep_[y]; }
    int block_count() const;

    /// Blocks sorted by representative, elements ascending within a block.
    std::vector<std::vector<int>> blocks() const;

    /// True iff every block of *this is contained in a block of other.
    bool refines(const Partition& other) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> rep_;
};

/// Smallest congruence of t identifying a and b: the worklist closure of
/// {a, b} under left/right multiplication and left/right division by every
/// element, processed in lexicographic pair order.
Partition principal_congruence(const CayleyTable& t, int a, int b);

/// True iff block products are well defined. On failure and when witness is
/// non-null, stores a pair (u, v) of related elements whose translates split.
bool is_congruence(const CayleyTable& t, const Partition& p,
                   std::pair<int, int>* witness = nullptr);

/// Table on the blocks of p, renumbered 0..k-1 by ascending canonical
/// representative. Throws congruence_error naming a witness pair when p is
/// not a congruence of t.
CayleyTable quotient(const CayleyTable& t, const Partition& p);

/// True iff every principal congruence over a != b is the full partition.
/// Throws precondition_error for order < 2.
bool is_simple(const CayleyTable& t);

}  // namespace fgq
