#pragma once

#include <array>
#include <optional>

#include "fgq/cayley.hpp"

namespace fgq {

/// Two principal-isotope conventions. They differ in which translations are
/// inverted and therefore in the neutral element of the resulting loop:
///   Intro: x + y = Rb^-1(x) * La^-1(y), neutral a*b
///   Sec4:  x + y = Ra^-1(x) * Lb^-1(y), neutral b*a
/// Sec4 is the convention the form-extraction algorithm uses.
enum class IsotopeConvention { Intro, Sec4 };

/// The loop isotope at basepoints (a, b); always a valid table with a
/// two-sided neutral at the stated element.
CayleyTable principal_isotope(const CayleyTable& t, int a, int b, IsotopeConvention c);

/// The unique two-sided neutral if one exists.
std::optional<int> loop_neutral(const CayleyTable& t);

/// First lexicographic (x, y, z) with (xy)z != x(yz).
std::optional<std::array<int, 3>> assoc_failure(const CayleyTable& t);
std::optional<std::array<int, 3>> assoc_failure_serial(const CayleyTable& t);

/// Associative with a neutral element.
bool is_group(const CayleyTable& t);

}  // namespace fgq
