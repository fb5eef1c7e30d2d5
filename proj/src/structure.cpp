#include "fgq/structure.hpp"

#include <algorithm>

#include "fgq/identities.hpp"
#include "fgq/isotopes.hpp"
#include "fgq/threads.hpp"

namespace fgq {

namespace {

bool mq_member(const CayleyTable& t, int a) {
    const int n = t.order();
    for (int x = 0; x < n; ++x) {
        const int xa = t.at(x, a), ax = t.at(a, x);
        for (int y = 0; y < n; ++y)
            if (t.at(xa, t.at(y, x)) != t.at(t.at(x, y), ax)) return false;
    }
    return true;
}

}  // namespace

std::vector<int> mq_serial(const CayleyTable& t) {
    std::vector<int> out;
    for (int a = 0; a < t.order(); ++a)
        if (mq_member(t, a)) out.push_back(a);
    return out;
}

std::vector<int> mq(const CayleyTable& t) {
    const int n = t.order();
    if (static_cast<long long>(n) * n * n < 1 << 14 || thread_count() == 1)
        return mq_serial(t);
    std::vector<char> in(n, 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (int a = 0; a < n; ++a) in[a] = mq_member(t, a) ? 1 : 0;
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (in[a]) out.push_back(a);
    return out;
}

std::vector<int> mq_via_form(const ArithmeticForm& form) {
    std::vector<int> out;
    for (int z : center(form.group)) out.push_back(form.group.sub(z, form.e));
    std::sort(out.begin(), out.end());
    return out;
}

Partition mq_congruence(const CayleyTable& t) {
    const auto strong = strong_forms(t);  // throws not_fg_error when not FG
    if (strong.empty()) throw internal_error("mq_congruence: FG table with no strong form");
    const ArithmeticForm& form = strong.front();
    const GroupTable& G = form.group;
    const int n = G.order();

    const std::vector<int> Z = center(G);
    std::vector<char> central(n, 0);
    for (int z : Z) central[z] = 1;

    // Coset of x = {x + z : z central}; representative = minimum member.
    std::vector<int> rep(n);
    for (int x = 0; x < n; ++x) {
        int m = n;
        for (int z : Z) m = std::min(m, G.op(x, z));
        rep[x] = m;
    }
    Partition p = Partition::from_representatives(std::move(rep));
    if (!is_congruence(t, p))
        throw internal_error("mq_congruence: center cosets are not a congruence");
    return p;
}

namespace {

// The subset is a medial subquasigroup: closed under the product, Latin on
// the subset, and medial within it.
bool medial_subquasigroup(const CayleyTable& t, const std::vector<int>& subset) {
    const int k = static_cast<int>(subset.size());
    if (k == 0) return false;
    std::vector<int> index(t.order(), -1);
    for (int i = 0; i < k; ++i) index[subset[i]] = i;

    std::vector<int> cells(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const int v = t.at(subset[i], subset[j]);
            if (index[v] < 0) return false;  // not closed
            cells[static_cast<std::size_t>(i) * k + j] = index[v];
        }
    CayleyTable sub(k, std::move(cells));
    return validate_table(sub) && check_identity(sub, IdentityName::Medial);
}

}  // namespace

StructureReport structure_report(const CayleyTable& t) {
    StructureReport r;
    r.mq_set = mq(t);
    const Partition p = mq_congruence(t);  // not_fg_error for non-FG input
    r.quot = quotient(t, p);
    r.quotient_is_group = is_group(r.quot);
    r.mq_is_medial_sub = medial_subquasigroup(t, r.mq_set);

    auto [alpha, beta] = alpha_beta(t);
    std::vector<char> in(t.order(), 0);
    for (int a : r.mq_set) in[a] = 1;
    r.alpha_beta_in_mq = true;
    for (int x = 0; x < t.order(); ++x)
        if (!in[alpha(x)] || !in[beta(x)]) {
            r.alpha_beta_in_mq = false;
            break;
        }
    return r;
}

SimpleClass classify_simple(const CayleyTable& t) {
    if (!check_identity(t, IdentityName::A) || !check_identity(t, IdentityName::B))
        throw not_fg_error("classify_simple: table is not FG");
    if (!is_simple(t)) return SimpleClass::NotSimple;
    if (check_identity(t, IdentityName::Medial)) return SimpleClass::Medial;
    if (is_group(t)) return SimpleClass::Group;
    return SimpleClass::Violation;
}

const char* simple_class_name(SimpleClass c) {
    switch (c) {
        case SimpleClass::NotSimple: return "not_simple";
        case SimpleClass::Medial: return "medial";
        case SimpleClass::Group: return "group";
        case SimpleClass::Violation: return "violation_witness";
    }
    return "?";
}

}  // namespace fgq
