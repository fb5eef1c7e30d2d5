#pragma once

#include <optional>
#include <vector>

#include "fgq/congruence.hpp"
#include "fgq/linear.hpp"

namespace fgq {

/// M(Q) = {a : (xa)(yx) = (xy)(ax) for all x, y}, by brute-force scan.
std::vector<int> mq(const CayleyTable& t);
std::vector<int> mq_serial(const CayleyTable& t);

/// The same set computed from a form: {z - e : z central}.
std::vector<int> mq_via_form(const ArithmeticForm& form);

/// The partition of the carrier into cosets of the center of a strong form's
/// group, re-verified to be a congruence of t. Throws not_fg_error when t is
/// not FG and internal_error should the verification ever fail.
Partition mq_congruence(const CayleyTable& t);

struct StructureReport {
    std::vector<int> mq_set;
    bool mq_is_medial_sub = false;   // closed, Latin on the subset, medial within
    CayleyTable quot;                // t / mq_congruence
    bool quotient_is_group = false;
    bool alpha_beta_in_mq = false;   // range(alpha) U range(beta) inside mq_set
};

StructureReport structure_report(const CayleyTable& t);

/// Simple FG-quasigroups are medial or groups; Violation is the contradiction
/// sentinel and is expected unreachable.
enum class SimpleClass { NotSimple, Medial, Group, Violation };

SimpleClass classify_simple(const CayleyTable& t);

const char* simple_class_name(SimpleClass c);

}  // namespace fgq
