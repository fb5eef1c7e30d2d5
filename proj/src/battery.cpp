#include "fgq/battery.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>

#include "fgq/congruence.hpp"
#include "fgq/genmod.hpp"
#include "fgq/identities.hpp"
#include "fgq/io.hpp"
#include "fgq/isotopes.hpp"
#include "fgq/linear.hpp"
#include "fgq/search.hpp"
#include "fgq/structure.hpp"
#include "fgq/threads.hpp"

namespace fgq {

namespace {

struct Failure {
    std::mutex m;
    bool failed = false;
    std::string detail;

    void report(const std::string& d) {
        std::lock_guard<std::mutex> lock(m);
        if (!failed) {
            failed = true;
            detail = d;
        }
    }
};

// Parallel sweep over [0, count) with per-item instance weights.
template <class Body>
BatteryLine sweep(const std::string& name, long long count, Body&& body) {
    Failure fail;
    std::atomic<std::uint64_t> instances{0};
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (long long i = 0; i < count; ++i) {
        std::uint64_t local = 0;
        std::string err = body(static_cast<std::size_t>(i), local);
        instances.fetch_add(local, std::memory_order_relaxed);
        if (!err.empty()) fail.report(err);
    }
    return BatteryLine{name, !fail.failed, instances.load(), fail.detail};
}

struct DivTables {
    std::vector<std::vector<int>> rdiv, ldiv;  // rdiv[c][x*c] = x, ldiv[c][c*y] = y

    explicit DivTables(const CayleyTable& t) {
        const int n = t.order();
        rdiv.assign(n, std::vector<int>(n));
        ldiv.assign(n, std::vector<int>(n));
        for (int c = 0; c < n; ++c)
            for (int x = 0; x < n; ++x) {
                rdiv[c][t.at(x, c)] = x;
                ldiv[x][t.at(x, c)] = c;
            }
    }
};

struct Corpus {
    std::vector<CayleyTable> tables;
    std::vector<char> fg, leftf, rightf;  // per-table flags
    std::vector<std::size_t> fg_idx, f_idx, leftf_idx;
    std::vector<LinearDraw> draws;           // constrained catalog draws
    std::vector<CayleyTable> draw_tables;    // their Std linear tables
};

Corpus build_corpus(const BatteryOptions& opt) {
    Corpus c;
    const int hi = std::min(opt.max_order, 5);
    for (int n = 1; n <= std::min(hi, 4); ++n) {
        SearchSpec spec{n, SearchSpec::Mode::Exhaustive, 0, 0};
        for_each_latin(spec, [&](const CayleyTable& t) { c.tables.push_back(t); });
    }
    if (hi >= 5) {
        SearchSpec spec{5,
                        opt.sample ? SearchSpec::Mode::Random : SearchSpec::Mode::Exhaustive,
                        opt.sample, opt.seed};
        for_each_latin(spec, [&](const CayleyTable& t) { c.tables.push_back(t); });
    }

    const std::size_t m = c.tables.size();
    c.fg.assign(m, 0);
    c.leftf.assign(m, 0);
    c.rightf.assign(m, 0);
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count())
    for (long long i = 0; i < static_cast<long long>(m); ++i) {
        const CayleyTable& t = c.tables[static_cast<std::size_t>(i)];
        c.fg[i] = is_FG(t) ? 1 : 0;
        c.leftf[i] = check_identity(t, IdentityName::Fl) ? 1 : 0;
        c.rightf[i] = check_identity(t, IdentityName::Fr) ? 1 : 0;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (c.fg[i]) c.fg_idx.push_back(i);
        if (c.leftf[i]) c.leftf_idx.push_back(i);
        if (c.leftf[i] && c.rightf[i]) c.f_idx.push_back(i);
    }

    c.draws = random_linear(GroupCatalog::standard(), opt.seed, opt.draws, true);
    c.draw_tables.reserve(c.draws.size());
    for (const auto& d : c.draws)
        c.draw_tables.push_back(build_linear(d.entry->group, d.f, d.g, d.e, Convention::Std));
    return c;
}

std::string describe(const CayleyTable& t, const std::string& what) {
    return what + " (order " + std::to_string(t.order()) + ")";
}

// ---- identity helpers on raw tables ----

bool fg_char0_at(const CayleyTable& t, const DivTables& d, const std::vector<int>& alpha,
                 const std::vector<int>& beta, int a, int b) {
    const int n = t.order();
    const int ba = beta[a], ab = alpha[b];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int l = d.ldiv[b][d.rdiv[a][y]];
            const int r = d.rdiv[a][d.ldiv[b][y]];
            for (int z = 0; z < n; ++z)
                if (t.at(t.at(x, ba), t.at(l, z)) != t.at(t.at(x, r), t.at(ab, z)))
                    return false;
        }
    return true;
}

bool fg_char_at(const CayleyTable& t, const std::vector<int>& alpha,
                const std::vector<int>& beta, int a, int b) {
    const int n = t.order();
    const int ba = beta[a], ab = alpha[b];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(t.at(x, ba), t.at(y, z)) != t.at(t.at(x, y), t.at(ab, z)))
                    return false;
    return true;
}

bool fasfg_at(const CayleyTable& t, int c) {
    // (x c)(yz) = (xy)(c z) for all x, y, z; c = alpha(beta(w)) for some w
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(t.at(x, c), t.at(y, z)) != t.at(t.at(x, y), t.at(c, z))) return false;
    return true;
}

bool translations_commute(const CayleyTable& t, int a, int b) {
    // R_a L_b = L_b R_a pointwise
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        if (t.at(t.at(b, x), a) != t.at(b, t.at(x, a))) return false;
    return true;
}

}  // namespace

std::vector<BatteryLine> run_battery(const BatteryOptions& opt) {
    if (opt.max_order > 5) throw capacity_error("battery: max order is 5");
    const Corpus corpus = build_corpus(opt);
    const long long nt = static_cast<long long>(corpus.tables.size());
    std::vector<BatteryLine> lines;

    // FG <=> F and one group isotope (checked at basepoint (0,0)).
    lines.push_back(sweep("main-theorem-equivalence", nt, [&](std::size_t i, std::uint64_t& k) {
        const CayleyTable& t = corpus.tables[i];
        k = 1;
        const bool lhs = corpus.fg[i] != 0;
        const bool rhs =
            corpus.leftf[i] && corpus.rightf[i] && check_isotope_assoc(t, 0, 0);
        if (lhs != rhs) return describe(t, "FG and F+isotope verdicts differ");
        return std::string();
    }));

    lines.push_back(sweep("a-implies-left-f", nt, [&](std::size_t i, std::uint64_t& k) {
        k = 1;
        if (check_identity(corpus.tables[i], IdentityName::A) && !corpus.leftf[i])
            return describe(corpus.tables[i], "A holds but left F law fails");
        return std::string();
    }));

    lines.push_back(sweep("b-implies-right-f", nt, [&](std::size_t i, std::uint64_t& k) {
        k = 1;
        if (check_identity(corpus.tables[i], IdentityName::B) && !corpus.rightf[i])
            return describe(corpus.tables[i], "B holds but right F law fails");
        return std::string();
    }));

    // Left F tables: alpha is an endomorphism and alpha beta = beta alpha.
    lines.push_back(sweep("alpha-endomorphism",
                          static_cast<long long>(corpus.leftf_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const CayleyTable& t = corpus.tables[corpus.leftf_idx[j]];
                              k = 1;
                              auto [alpha, beta] = alpha_beta(t);
                              if (!is_homomorphism(alpha, t, t))
                                  return describe(t, "alpha is not an endomorphism");
                              for (int x = 0; x < t.order(); ++x)
                                  if (alpha(beta(x)) != beta(alpha(x)))
                                      return describe(t, "alpha beta != beta alpha");
                              return std::string();
                          }));

    // Left F tables: R_a L_b = L_b R_a  <=>  alpha(b) = beta(a), all pairs.
    lines.push_back(sweep("translation-commute-criterion",
                          static_cast<long long>(corpus.leftf_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const CayleyTable& t = corpus.tables[corpus.leftf_idx[j]];
                              const int n = t.order();
                              auto [alpha, beta] = alpha_beta(t);
                              k = static_cast<std::uint64_t>(n) * n;
                              for (int a = 0; a < n; ++a)
                                  for (int b = 0; b < n; ++b)
                                      if (translations_commute(t, a, b) !=
                                          (alpha(b) == beta(a)))
                                          return describe(t, "commute criterion fails");
                              return std::string();
                          }));

    lines.push_back(sweep("matched-translations-commute",
                          static_cast<long long>(corpus.leftf_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const CayleyTable& t = corpus.tables[corpus.leftf_idx[j]];
                              auto [alpha, beta] = alpha_beta(t);
                              k = static_cast<std::uint64_t>(t.order());
                              for (int a = 0; a < t.order(); ++a)
                                  if (!translations_commute(t, alpha(a), beta(a)))
                                      return describe(t,
                                                      "R_alpha(a) L_beta(a) do not commute");
                              return std::string();
                          }));

    // F tables: both alpha and beta are endomorphisms and commute.
    lines.push_back(sweep("f-endomorphisms-commute",
                          static_cast<long long>(corpus.f_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const CayleyTable& t = corpus.tables[corpus.f_idx[j]];
                              k = 1;
                              auto [alpha, beta] = alpha_beta(t);
                              if (!is_homomorphism(alpha, t, t) || !is_homomorphism(beta, t, t))
                                  return describe(t, "alpha or beta not an endomorphism");
                              for (int x = 0; x < t.order(); ++x)
                                  if (alpha(beta(x)) != beta(alpha(x)))
                                      return describe(t, "alpha beta != beta alpha");
                              return std::string();
                          }));

    // Group-isotopy is basepoint independent, and the associativity equation
    // at (a, b) matches is_group of the isotope there.
    lines.push_back(sweep("group-isotope-invariance", nt, [&](std::size_t i, std::uint64_t& k) {
        const CayleyTable& t = corpus.tables[i];
        const int n = t.order();
        const bool expect = check_isotope_assoc(t, 0, 0);
        k = static_cast<std::uint64_t>(n) * n;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (check_isotope_assoc(t, a, b) != expect)
                    return describe(t, "isotope associativity depends on basepoint");
                if (is_group(principal_isotope(t, a, b, IsotopeConvention::Sec4)) != expect)
                    return describe(t, "isotope group check disagrees with the equation");
            }
        return std::string();
    }));

    // F tables: FG <=> divided-basepoint identity, at (0,0) and at all (a,b).
    lines.push_back(sweep("fg-criterion-divided-basepoints",
                          static_cast<long long>(corpus.f_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const std::size_t i = corpus.f_idx[j];
                              const CayleyTable& t = corpus.tables[i];
                              const int n = t.order();
                              const DivTables d(t);
                              auto [am, bm] = alpha_beta(t);
                              const bool fg = corpus.fg[i] != 0;
                              k = static_cast<std::uint64_t>(n) * n;
                              for (int a = 0; a < n; ++a)
                                  for (int b = 0; b < n; ++b)
                                      if (fg_char0_at(t, d, am.img, bm.img, a, b) != fg)
                                          return describe(
                                              t, "divided-basepoint criterion disagrees");
                              return std::string();
                          }));

    // F tables with alpha(b) = beta(a): FG <=> x beta(a) . yz = xy . alpha(b) z.
    lines.push_back(sweep("fg-criterion-matched-basepoints",
                          static_cast<long long>(corpus.f_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const std::size_t i = corpus.f_idx[j];
                              const CayleyTable& t = corpus.tables[i];
                              const int n = t.order();
                              auto [am, bm] = alpha_beta(t);
                              const bool fg = corpus.fg[i] != 0;
                              for (int a = 0; a < n; ++a)
                                  for (int b = 0; b < n; ++b) {
                                      if (am(b) != bm(a)) continue;
                                      ++k;
                                      if (fg_char_at(t, am.img, bm.img, a, b) != fg)
                                          return describe(
                                              t, "matched-basepoint criterion disagrees");
                                  }
                              return std::string();
                          }));

    // F tables: FG <=> the pointed identity for all w <=> for some w.
    lines.push_back(sweep("f-as-fg-pointed-identity",
                          static_cast<long long>(corpus.f_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const std::size_t i = corpus.f_idx[j];
                              const CayleyTable& t = corpus.tables[i];
                              k = 1;
                              const bool fg = corpus.fg[i] != 0;
                              if (check_identity(t, IdentityName::FasFG) != fg)
                                  return describe(t, "pointed identity (all w) disagrees");
                              auto [am, bm] = alpha_beta(t);
                              bool some = false;
                              for (int w = 0; w < t.order() && !some; ++w)
                                  some = fasfg_at(t, am(bm(w)));
                              if (some != fg)
                                  return describe(t, "pointed identity (some w) disagrees");
                              return std::string();
                          }));

    // FG tables: L_x L_y^-1 R_v^-1 R_u commutes with R_v^-1 R_u L_x L_y^-1.
    lines.push_back(sweep("translation-rearrangement",
                          static_cast<long long>(corpus.fg_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const CayleyTable& t = corpus.tables[corpus.fg_idx[j]];
                              const int n = t.order();
                              const DivTables d(t);
                              k = static_cast<std::uint64_t>(n) * n * n * n;
                              for (int x = 0; x < n; ++x)
                                  for (int y = 0; y < n; ++y)
                                      for (int u = 0; u < n; ++u)
                                          for (int v = 0; v < n; ++v)
                                              for (int w = 0; w < n; ++w) {
                                                  const int lhs = t.at(
                                                      x, d.ldiv[y][d.rdiv[v][t.at(w, u)]]);
                                                  const int rhs = d.rdiv[v][t.at(
                                                      t.at(x, d.ldiv[y][w]), u)];
                                                  if (lhs != rhs)
                                                      return describe(
                                                          t, "rearrangement identity fails");
                                              }
                              return std::string();
                          }));

    // Linear tables over catalog groups: the F laws against the (f, g, e)
    // criterion, for all three placements of e.
    {
        std::mt19937_64 rng(opt.seed + 0x5eed);
        const auto& entries = GroupCatalog::standard().entries();
        struct Draw {
            const CatalogEntry* entry;
            int fi, gi, e;
        };
        std::vector<Draw> draws;
        for (int i = 0; i < opt.draws; ++i) {
            const auto& entry =
                entries[std::uniform_int_distribution<std::size_t>(0, entries.size() - 1)(rng)];
            draws.push_back(
                {&entry,
                 static_cast<int>(std::uniform_int_distribution<std::size_t>(
                     0, entry.auts.size() - 1)(rng)),
                 static_cast<int>(std::uniform_int_distribution<std::size_t>(
                     0, entry.auts.size() - 1)(rng)),
                 std::uniform_int_distribution<int>(0, entry.group.order() - 1)(rng)});
        }

        lines.push_back(sweep(
            "linear-f-characterization", static_cast<long long>(draws.size()),
            [&](std::size_t i, std::uint64_t& k) {
                const auto& d = draws[i];
                const GroupTable& G = d.entry->group;
                const ArithmeticForm form{G, d.entry->auts[d.fi], d.entry->auts[d.gi], d.e};
                k = 1;
                const CayleyTable t = build_linear(G, form.f, form.g, d.e, Convention::Std);
                if (check_identity(t, IdentityName::Fl) != check_F_linear(form, FormSide::Left))
                    return "left F criterion disagrees on " + d.entry->name;
                if (check_identity(t, IdentityName::Fr) != check_F_linear(form, FormSide::Right))
                    return "right F criterion disagrees on " + d.entry->name;
                if (is_F(t) != check_F_linear(form, FormSide::Both))
                    return "two-sided F criterion disagrees on " + d.entry->name;
                return std::string();
            }));

        lines.push_back(sweep(
            "linear-f-characterization-alt-conventions", static_cast<long long>(draws.size()),
            [&](std::size_t i, std::uint64_t& k) {
                const auto& d = draws[i];
                const GroupTable& G = d.entry->group;
                const int n = G.order();
                const ArithmeticForm form{G, d.entry->auts[d.fi], d.entry->auts[d.gi], d.e};
                k = 1;
                const Permutation conj = phi(form);
                const std::vector<int> Z = center(G);
                std::vector<char> central(n, 0);
                for (int z : Z) central[z] = 1;
                bool comm = true;
                for (int x = 0; x < n && comm; ++x)
                    comm = form.f(form.g(x)) == form.g(form.f(x));

                bool cf = true, cg = true, cpg = true, cpif = true;
                const Permutation conj_inv = conj.inverse();
                for (int x = 0; x < n; ++x) {
                    if (!central[G.op(G.neg(x), form.f(x))]) cf = false;
                    if (!central[G.op(G.neg(x), form.g(x))]) cg = false;
                    if (!central[G.op(G.neg(x), conj(form.g(x)))]) cpg = false;
                    if (!central[G.op(G.neg(x), conj_inv(form.f(x)))]) cpif = false;
                }
                const CayleyTable t1 = build_linear(G, form.f, form.g, d.e, Convention::Dot1);
                if (is_F(t1) != (comm && cf && cpg))
                    return "dot1 F criterion disagrees on " + d.entry->name;
                const CayleyTable t2 = build_linear(G, form.f, form.g, d.e, Convention::Dot2);
                if (is_F(t2) != (comm && cpif && cg))
                    return "dot2 F criterion disagrees on " + d.entry->name;
                return std::string();
            }));
    }

    // FG corpus tables at every basepoint presentation xy = h(x) + k(y):
    // h(x+y) = h(x) - h(0) + h(y) and k(x+y) = k(x) - k(0) + k(y).
    lines.push_back(sweep(
        "translation-linearity-laws", static_cast<long long>(corpus.fg_idx.size()),
        [&](std::size_t j, std::uint64_t& k) {
            const CayleyTable& t = corpus.tables[corpus.fg_idx[j]];
            const int n = t.order();
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    ++k;
                    const auto G = GroupTable::try_from(
                        principal_isotope(t, a, b, IsotopeConvention::Sec4));
                    if (!G) return describe(t, "FG table with non-group isotope");
                    const int zero = G->neutral();
                    const int h0 = t.at(zero, a), k0 = t.at(b, zero);
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y) {
                            const int s = G->op(x, y);
                            if (t.at(s, a) != G->op(G->sub(t.at(x, a), h0), t.at(y, a)))
                                return describe(t, "right translation law fails");
                            if (t.at(b, s) != G->op(G->sub(t.at(b, x), k0), t.at(b, y)))
                                return describe(t, "left translation law fails");
                        }
                }
            return std::string();
        }));

    // FG <=> extraction succeeds <=> a strong form exists, on all corpus tables.
    lines.push_back(sweep("form-existence-iff-fg", nt, [&](std::size_t i, std::uint64_t& k) {
        const CayleyTable& t = corpus.tables[i];
        k = 1;
        bool extracted = false;
        try {
            (void)extract_form(t, 0, 0);
            extracted = true;
        } catch (const not_fg_error&) {
        }
        if (extracted != (corpus.fg[i] != 0))
            return describe(t, "extraction success disagrees with FG");
        if (!corpus.fg[i]) return std::string();
        if (strong_forms(t).empty()) return describe(t, "FG table without a strong form");
        return std::string();
    }));

    // Forms at basepoints with equal b*a agree exactly.
    lines.push_back(sweep(
        "form-rigidity", static_cast<long long>(corpus.fg_idx.size()),
        [&](std::size_t j, std::uint64_t& k) {
            const CayleyTable& t = corpus.tables[corpus.fg_idx[j]];
            const int n = t.order();
            std::vector<std::optional<ArithmeticForm>> by_neutral(n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    ++k;
                    const ArithmeticForm form = extract_form(t, a, b);
                    const int q = t.at(b, a);
                    if (form.group.neutral() != q)
                        return describe(t, "form neutral differs from b*a");
                    if (!by_neutral[q]) {
                        by_neutral[q] = form;
                    } else if (!(*by_neutral[q] == form)) {
                        return describe(t, "colliding basepoints yield distinct forms");
                    }
                }
            return std::string();
        }));

    // Exactly n forms; strong forms in bijection with M(Q).
    lines.push_back(sweep("form-count-correspondence",
                          static_cast<long long>(corpus.fg_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const CayleyTable& t = corpus.tables[corpus.fg_idx[j]];
                              k = 1;
                              if (static_cast<int>(enumerate_forms(t).size()) != t.order())
                                  return describe(t, "form count differs from order");
                              if (strong_forms(t).size() != mq(t).size())
                                  return describe(t, "strong form count differs from |M|");
                              return std::string();
                          }));

    // M(Q) from the definition, from any form, and from the three-variable
    // characterization all agree.
    lines.push_back(sweep(
        "m-equals-center-shift", static_cast<long long>(corpus.fg_idx.size()),
        [&](std::size_t j, std::uint64_t& k) {
            const CayleyTable& t = corpus.tables[corpus.fg_idx[j]];
            const int n = t.order();
            const std::vector<int> M = mq(t);
            for (const auto& form : enumerate_forms(t)) {
                ++k;
                if (mq_via_form(form) != M) return describe(t, "M != Z - e for some form");
            }
            std::vector<int> M3;
            for (int a = 0; a < n; ++a) {
                bool ok = true;
                for (int x = 0; x < n && ok; ++x)
                    for (int y = 0; y < n && ok; ++y)
                        for (int z = 0; z < n && ok; ++z)
                            ok = t.at(t.at(x, a), t.at(y, z)) == t.at(t.at(x, y), t.at(a, z));
                if (ok) M3.push_back(a);
            }
            if (M3 != M) return describe(t, "three-variable characterization of M disagrees");
            return std::string();
        }));

    // At every form: M = Z  <=>  e central  <=>  0 in M.
    lines.push_back(sweep(
        "m-set-three-way-equivalence", static_cast<long long>(corpus.fg_idx.size()),
        [&](std::size_t j, std::uint64_t& k) {
            const CayleyTable& t = corpus.tables[corpus.fg_idx[j]];
            const std::vector<int> M = mq(t);
            for (const auto& form : enumerate_forms(t)) {
                ++k;
                const std::vector<int> Z = center(form.group);
                const bool meq = M == Z;
                const bool ecen = std::find(Z.begin(), Z.end(), form.e) != Z.end();
                const bool zin = std::binary_search(M.begin(), M.end(), form.group.neutral());
                if (meq != ecen || ecen != zin)
                    return describe(t, "three-way equivalence fails at a form");
            }
            return std::string();
        }));

    // alpha/beta ranges inside M; M is a medial subquasigroup; the quotient
    // is a group.
    lines.push_back(sweep("structure-certificates",
                          static_cast<long long>(corpus.fg_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const CayleyTable& t = corpus.tables[corpus.fg_idx[j]];
                              k = 1;
                              const StructureReport r = structure_report(t);
                              if (!r.alpha_beta_in_mq)
                                  return describe(t, "alpha/beta range escapes M");
                              if (!r.mq_is_medial_sub)
                                  return describe(t, "M is not a medial subquasigroup");
                              if (!r.quotient_is_group)
                                  return describe(t, "quotient by M is not a group");
                              return std::string();
                          }));

    // Simple FG tables classify as medial or group, never the violation case.
    lines.push_back(sweep("simple-classification",
                          static_cast<long long>(corpus.fg_idx.size()),
                          [&](std::size_t j, std::uint64_t& k) {
                              const CayleyTable& t = corpus.tables[corpus.fg_idx[j]];
                              if (t.order() < 2) return std::string();
                              k = 1;
                              if (classify_simple(t) == SimpleClass::Violation)
                                  return describe(t, "simple FG table neither medial nor group");
                              return std::string();
                          }));

    // Basepoint-preserving maps: quasigroup homomorphism <=> form homomorphism.
    {
        std::vector<std::size_t> pool = corpus.fg_idx;
        if (pool.size() > 64) pool.resize(64);
        const int maps_per_pair = 8;
        std::mt19937_64 rng(opt.seed + 0xf00d);
        struct Case {
            const CayleyTable* s;
            const CayleyTable* t;
            ElementMap m;
            int ps, pt;
        };
        std::vector<Case> cases;
        for (std::size_t round = 0; round < pool.size(); ++round) {
            const CayleyTable& s = corpus.tables[pool[round]];
            const CayleyTable& t =
                corpus.tables[pool[std::uniform_int_distribution<std::size_t>(
                    0, pool.size() - 1)(rng)]];
            const int ns = s.order(), ntt = t.order();
            const int ps = std::uniform_int_distribution<int>(0, ns - 1)(rng);
            const int pt = std::uniform_int_distribution<int>(0, ntt - 1)(rng);
            for (int z = 0; z < maps_per_pair; ++z) {
                ElementMap m;
                m.img.resize(ns);
                for (int x = 0; x < ns; ++x)
                    m.img[x] = std::uniform_int_distribution<int>(0, ntt - 1)(rng);
                m.img[ps] = pt;
                cases.push_back({&s, &t, std::move(m), ps, pt});
            }
            // identity map: a guaranteed positive case
            cases.push_back({&s, &s, ElementMap(Permutation::identity(ns).img), ps, ps});
        }
        lines.push_back(sweep(
            "form-homomorphism-criterion", static_cast<long long>(cases.size()),
            [&](std::size_t i, std::uint64_t& k) {
                const Case& c = cases[i];
                k = 1;
                const ArithmeticForm fs = enumerate_forms(*c.s)[static_cast<std::size_t>(c.ps)];
                const ArithmeticForm ft = enumerate_forms(*c.t)[static_cast<std::size_t>(c.pt)];
                if (fs.group.neutral() != c.ps || ft.group.neutral() != c.pt)
                    return std::string("enumerate_forms order broken");
                if (is_homomorphism(c.m, *c.s, *c.t) != is_form_homomorphism(c.m, fs, ft))
                    return describe(*c.s, "homomorphism verdicts disagree");
                return std::string();
            }));
    }

    // Module round trips on pointed draws, the pointing restriction, and the
    // defining annihilator relations.
    {
        const long long nd = static_cast<long long>(corpus.draws.size());
        lines.push_back(sweep("module-roundtrip", nd, [&](std::size_t i, std::uint64_t& k) {
            const CayleyTable& t = corpus.draw_tables[i];
            const int n = t.order();
            for (int point = 0; point < n; ++point) {
                ++k;
                const PointedQuasigroup pq{t, point};
                const PointedModule pm = rho(pq);
                const PointedQuasigroup back = sigma(pm);
                if (!(back.table == t) || back.point != point)
                    return "sigma(rho(.)) differs on " + corpus.draws[i].entry->name;
                const PointedModule pm2 = rho(back);
                if (!(pm2.module.group == pm.module.group) || pm2.e != pm.e ||
                    !(pm2.module.phi == pm.module.phi) || !(pm2.module.psi == pm.module.psi) ||
                    !(pm2.module.mu == pm.module.mu) || !(pm2.module.nu == pm.module.nu))
                    return "rho(sigma(.)) differs on " + corpus.draws[i].entry->name;
            }
            return std::string();
        }));

        lines.push_back(sweep("module-pointing-restriction", nd,
                              [&](std::size_t i, std::uint64_t& k) {
                                  const CayleyTable& t = corpus.draw_tables[i];
                                  const std::vector<int> M = mq(t);
                                  for (int point = 0; point < t.order(); ++point) {
                                      ++k;
                                      const PointedModule pm = rho({t, point});
                                      const std::vector<int> Z = center(pm.module.group);
                                      const bool ecen =
                                          std::find(Z.begin(), Z.end(), pm.e) != Z.end();
                                      const bool min =
                                          std::binary_search(M.begin(), M.end(), point);
                                      if (ecen != min)
                                          return "pointing restriction fails on " +
                                                 corpus.draws[i].entry->name;
                                  }
                                  return std::string();
                              }));

        lines.push_back(sweep(
            "module-annihilator-relations", nd, [&](std::size_t i, std::uint64_t& k) {
                k = 1;
                const PointedModule pm = rho({corpus.draw_tables[i], 0});
                const RPoly X = RPoly::indeterminate(0), Y = RPoly::indeterminate(1),
                            U = RPoly::indeterminate(2), V = RPoly::indeterminate(3);
                if (!annihilates(X + U + X * U, pm.module) ||
                    !annihilates(Y + V + Y * V, pm.module))
                    return "defining relations do not annihilate on " +
                           corpus.draws[i].entry->name;
                return std::string();
            }));
    }

    return lines;
}

}  // namespace fgq
