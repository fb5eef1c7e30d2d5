#pragma once

#include <array>
#include <optional>
#include <string>

#include "fgq/cayley.hpp"

namespace fgq {

/// The fixed identity set. Fl/Fr quantify three variables, the rest four.
///
///   Fl:     x(yz)            = (xy)(alpha(x) z)
///   Fr:     (zy)x            = (z beta(x))(yx)
///   A:      (xy)(alpha(u) v) = (x alpha(u))(yv)
///   B:      (xy)(beta(u) v)  = (x beta(u))(yv)
///   Medial: (xa)(by)         = (xb)(ay)
///   FasFG:  (x ab(w))(yz)    = (xy)(ab(w) z)      with ab = alpha o beta
enum class IdentityName { Fl, Fr, A, B, Medial, FasFG };

int identity_arity(IdentityName id);
std::string identity_label(IdentityName id);                    // "fl", "fr", "a", ...
std::optional<IdentityName> identity_from_label(const std::string& s);
const char* const* identity_var_names(IdentityName id);         // per-identity tuple names

/// First lexicographic tuple falsifying the identity, in the loop order of
/// the variable list above; nullopt when the identity holds.
struct IdentityWitness {
    IdentityName id;
    std::array<int, 4> vars;  // only the first identity_arity(id) entries are meaningful

    std::string to_string() const;  // "x=2 y=0 z=0"
};

std::optional<IdentityWitness> identity_failure(const CayleyTable& t, IdentityName id);
std::optional<IdentityWitness> identity_failure_serial(const CayleyTable& t, IdentityName id);

bool check_identity(const CayleyTable& t, IdentityName id);

/// Group-isotopy test at basepoints (a, b): the associativity equation of the
/// loop isotope, x * Lb^-1(Ra^-1(y) * z) = Ra^-1(x * Lb^-1(y)) * z for all
/// x, y, z. Witness is the first lexicographic failing (x, y, z).
std::optional<std::array<int, 3>> isotope_assoc_failure(const CayleyTable& t, int a, int b);
std::optional<std::array<int, 3>> isotope_assoc_failure_serial(const CayleyTable& t, int a,
                                                               int b);
bool check_isotope_assoc(const CayleyTable& t, int a, int b);

/// Two-sided F law: Fl and Fr.
bool is_F(const CayleyTable& t);

/// The two-identity characterization: A and B.
bool is_FG(const CayleyTable& t);

}  // namespace fgq
