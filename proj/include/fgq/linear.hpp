#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgq/cayley.hpp"

namespace fgq {

/// A Cayley table certified associative with a two-sided neutral.
/// Additive notation in comments even when noncommutative: op is +, sub(a, b)
/// is a + (-b) with the inverse on the right, neg is the two-sided inverse.
class GroupTable {
public:
    GroupTable() = default;

    static std::optional<GroupTable> try_from(const CayleyTable& t);
    /// Throws not_group_error with an associativity or neutral witness.
    static GroupTable require(const CayleyTable& t);

    const CayleyTable& table() const { return table_; }
    int order() const { return table_.order(); }
    int neutral() const { return neutral_; }

    int op(int a, int b) const { return table_.at(a, b); }
    int neg(int a) const { return inverse_[a]; }
    int sub(int a, int b) const { return op(a, neg(b)); }

    bool operator==(const GroupTable&) const = default;

private:
    CayleyTable table_;
    int neutral_ = 0;
    std::vector<int> inverse_;
};

/// {z : z + x = x + z for all x}, ascending.
std::vector<int> center(const GroupTable& g);

/// All automorphisms, sorted lexicographically by image vector. Enumerated
/// over generator images with element-order filtering, then verified in full.
/// Throws capacity_error when the order exceeds the bound.
std::vector<Permutation> automorphisms(const GroupTable& g, int order_bound = 16);

/// Placement of e in the linear product:
///   Std:  xy = f(x) + e + g(y)
///   Dot1: xy = f(x) + g(y) + e
///   Dot2: xy = e + f(x) + g(y)
enum class Convention { Std, Dot1, Dot2 };

/// Builds the linear table; f and gg must be automorphisms of g
/// (invalid_form_error otherwise).
CayleyTable build_linear(const GroupTable& g, const Permutation& f, const Permutation& gg,
                         int e, Convention c);

/// The data (group, f, g, e) with product xy = f(x) + e + g(y). A *valid*
/// form further satisfies: f, g automorphisms, fg = gf, and
/// -x + f(x), -x + g(x) central for all x. Strong when e is central.
struct ArithmeticForm {
    GroupTable group;
    Permutation f;
    Permutation g;
    int e = 0;

    CayleyTable induced() const;  // the Std product
    bool operator==(const ArithmeticForm&) const = default;
};

/// First violated form axiom, as a diagnostic string; nullopt when the record
/// is a valid arithmetic form whose product reproduces `product`.
std::optional<std::string> form_defect(const ArithmeticForm& form, const CayleyTable& product);

enum class FormSide { Left, Right, Both };

/// The linearity criterion for the F laws evaluated directly on (f, g, e):
/// fg = gf plus centrality of -x + f(x) (left), -x + g(x) (right), or both.
bool check_F_linear(const ArithmeticForm& form, FormSide side);

/// The inner automorphism x -> -e + x + e.
Permutation phi(const ArithmeticForm& form);

/// Linearization at basepoints (a, b): group = the Sec4 loop isotope
/// (neutral b*a), f(x) = h(x) - h(0), g(x) = -k(0) + k(x), e = h(0) + k(0)
/// with h = R_a, k = L_b. Every form axiom and the full recomposition
/// t[x][y] = f(x) + e + g(y) are re-verified; throws not_fg_error with the
/// failed check otherwise.
ArithmeticForm extract_form(const CayleyTable& t, int a, int b);

/// All n forms, one per choice of group neutral q = 0..n-1, realized at the
/// witness (a, b) = (0, R0^-1(q)). Throws not_fg_error when t is not FG.
std::vector<ArithmeticForm> enumerate_forms(const CayleyTable& t);

/// The forms whose e is central; in order of their neutral element.
std::vector<ArithmeticForm> strong_forms(const CayleyTable& t);

/// The strong form at a = b = alpha(beta(0)).
ArithmeticForm canonical_strong_form(const CayleyTable& t);

/// m is a homomorphism of forms: group homomorphism, m f_s = f_t m,
/// m g_s = g_t m, and m(e_s) = e_t. Requires m(0_s) = 0_t
/// (precondition_error otherwise).
bool is_form_homomorphism(const ElementMap& m, const ArithmeticForm& s, const ArithmeticForm& t);

}  // namespace fgq
