#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fgq/errors.hpp"

namespace fgq {

/// A total map on {0, ..., n-1}, not necessarily bijective.
struct ElementMap {
    std::vector<int> img;

    ElementMap() = default;
    explicit ElementMap(std::vector<int> images) : img(std::move(images)) {}

    int operator()(int x) const { return img[x]; }
    int size() const { return static_cast<int>(img.size()); }

    /// True iff every image lies in [0, n).
    bool total_on(int n) const;

    bool operator==(const ElementMap&) const = default;
};

/// A bijection on {0, ..., n-1}.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // throws structural_error if not bijective

    static Permutation identity(int n);
    static bool is_bijection(const std::vector<int>& images);

    int operator()(int x) const { return img[x]; }
    int size() const { return static_cast<int>(img.size()); }

    Permutation inverse() const;
    ElementMap as_map() const { return ElementMap(img); }

    bool operator==(const Permutation&) const = default;
};

/// f after g: x -> f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);

/// An order-n binary operation as a row-major n x n array over 0..n-1.
/// The row index is the left factor: at(x, y) = x * y.
class CayleyTable {
public:
    CayleyTable() = default;

    /// Throws structural_error on bad dimensions or out-of-range entries.
    /// Does not require the Latin property; see validate_table.
    CayleyTable(int order, std::vector<int> cells);

    static CayleyTable from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return order_; }
    int at(int x, int y) const { return cells_[static_cast<std::size_t>(x) * order_ + y]; }
    const int* row(int x) const { return cells_.data() + static_cast<std::size_t>(x) * order_; }
    const std::vector<int>& cells() const { return cells_; }

    /// L_a: y -> a*y. Only a permutation when the table is Latin.
    Permutation left_translation(int a) const;
    /// R_a: x -> x*a.
    Permutation right_translation(int a) const;

    bool operator==(const CayleyTable&) const = default;

private:
    int order_ = 0;
    std::vector<int> cells_;
};

/// True iff the table is a Latin square: every row and column is a permutation.
bool validate_table(const CayleyTable& t);

/// The maps with x * alpha(x) = x and beta(x) * x = x, defined for every
/// valid table. Neither map need be bijective.
std::pair<ElementMap, ElementMap> alpha_beta(const CayleyTable& t);

/// True iff m(x*y) = m(x)*m(y) for all x, y. Throws structural_error when
/// m's domain does not match s or an image escapes t's carrier.
bool is_homomorphism(const ElementMap& m, const CayleyTable& s, const CayleyTable& t);

}  // namespace fgq
