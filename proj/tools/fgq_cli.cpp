// Command-line surface for the finite-quasigroup toolkit.
//
// Exit codes: 0 success, 1 property/precondition failure, 2 parse/IO/usage
// failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgq/battery.hpp"
#include "fgq/congruence.hpp"
#include "fgq/genmod.hpp"
#include "fgq/identities.hpp"
#include "fgq/io.hpp"
#include "fgq/isotopes.hpp"
#include "fgq/linear.hpp"
#include "fgq/search.hpp"
#include "fgq/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitParse = 2;

struct PropertyVerdict {
    bool value = false;
    std::string witness;  // empty when none applies
};

PropertyVerdict eval_property(const fgq::CayleyTable& t, const std::string& name) {
    using fgq::IdentityName;
    if (auto id = fgq::identity_from_label(name)) {
        auto w = fgq::identity_failure(t, *id);
        return {!w, w ? w->to_string() : ""};
    }
    if (name == "latin") return {fgq::validate_table(t), ""};
    if (name == "f") {
        for (IdentityName id : {IdentityName::Fl, IdentityName::Fr})
            if (auto w = fgq::identity_failure(t, id))
                return {false, fgq::identity_label(id) + " " + w->to_string()};
        return {true, ""};
    }
    if (name == "fg") {
        for (IdentityName id : {IdentityName::A, IdentityName::B})
            if (auto w = fgq::identity_failure(t, id))
                return {false, fgq::identity_label(id) + " " + w->to_string()};
        return {true, ""};
    }
    if (name == "isotope-group") {
        auto w = fgq::isotope_assoc_failure(t, 0, 0);
        if (w)
            return {false, "x=" + std::to_string((*w)[0]) + " y=" + std::to_string((*w)[1]) +
                               " z=" + std::to_string((*w)[2])};
        return {true, ""};
    }
    if (name == "group") {
        if (!fgq::loop_neutral(t)) return {false, "no neutral element"};
        auto w = fgq::assoc_failure(t);
        if (w)
            return {false, "x=" + std::to_string((*w)[0]) + " y=" + std::to_string((*w)[1]) +
                               " z=" + std::to_string((*w)[2])};
        return {true, ""};
    }
    if (name == "simple") {
        const int n = t.order();
        if (n < 2) throw fgq::precondition_error("simple: order must be at least 2");
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (fgq::principal_congruence(t, a, b).block_count() != 1)
                    return {false, "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                       " generates a proper congruence"};
        return {true, ""};
    }
    throw fgq::config_error("unknown property '" + name + "'");
}

int cmd_check(const std::string& path, const std::vector<std::string>& props) {
    const fgq::TableDoc doc = fgq::load_table(path);
    bool all = true;
    for (const std::string& name : props) {
        const PropertyVerdict v = eval_property(doc.table, name);
        all = all && v.value;
        std::cout << "PROP " << name << " = " << (v.value ? "true" : "false");
        if (!v.witness.empty()) std::cout << " [witness " << v.witness << "]";
        std::cout << "\n";
    }
    return all ? kExitOk : kExitProperty;
}

int cmd_derive_form(const std::string& path, int a, int b, int neutral, bool strong) {
    const fgq::TableDoc doc = fgq::load_table(path);
    fgq::ArithmeticForm form;
    if (strong) {
        form = fgq::canonical_strong_form(doc.table);
    } else if (neutral >= 0) {
        const int n = doc.table.order();
        if (neutral >= n) throw fgq::precondition_error("--neutral out of range");
        std::vector<int> r0inv(n);
        for (int x = 0; x < n; ++x) r0inv[doc.table.at(x, 0)] = x;
        form = fgq::extract_form(doc.table, 0, r0inv[neutral]);
    } else {
        form = fgq::extract_form(doc.table, a, b);
    }
    std::cout << fgq::print_form(form);
    return kExitOk;
}

int cmd_forms(const std::string& path, bool strong_only) {
    const fgq::TableDoc doc = fgq::load_table(path);
    const auto forms = fgq::enumerate_forms(doc.table);
    std::size_t strong = 0;
    bool first = true;
    for (const auto& form : forms) {
        const auto Z = fgq::center(form.group);
        const bool is_strong = std::find(Z.begin(), Z.end(), form.e) != Z.end();
        if (is_strong) ++strong;
        if (strong_only && !is_strong) continue;
        if (!first) std::cout << "\n";
        first = false;
        std::cout << "# neutral " << form.group.neutral() << (is_strong ? " (strong)" : "")
                  << "\n"
                  << fgq::print_form(form);
    }
    std::cout << "count=" << forms.size() << " strong=" << strong << "\n";
    return kExitOk;
}

int cmd_mq(const std::string& path) {
    const fgq::TableDoc doc = fgq::load_table(path);
    const std::vector<int> m = fgq::mq(doc.table);
    std::cout << "mq:";
    for (int a : m) std::cout << ' ' << a;
    std::cout << "\nsize=" << m.size() << "\n";
    return kExitOk;
}

int cmd_quotient(const std::string& path) {
    const fgq::TableDoc doc = fgq::load_table(path);
    const fgq::Partition p = fgq::mq_congruence(doc.table);
    std::cout << "# blocks:";
    for (const auto& blk : p.blocks()) {
        std::cout << " {";
        for (std::size_t i = 0; i < blk.size(); ++i) std::cout << (i ? " " : "") << blk[i];
        std::cout << "}";
    }
    std::cout << "\n" << fgq::print_table({fgq::quotient(doc.table, p), std::nullopt});
    return kExitOk;
}

int cmd_classify_simple(const std::string& path) {
    const fgq::TableDoc doc = fgq::load_table(path);
    std::cout << "classification: " << fgq::simple_class_name(fgq::classify_simple(doc.table))
              << "\n";
    return kExitOk;
}

int cmd_modulize(const std::string& path, int point_flag) {
    const fgq::TableDoc doc = fgq::load_table(path);
    int point;
    if (point_flag >= 0)
        point = point_flag;
    else if (doc.point)
        point = *doc.point;
    else
        throw fgq::precondition_error("modulize: no basepoint; pass --point or add a point line");
    const fgq::PointedModule pm = fgq::rho({doc.table, point});
    std::cout << fgq::print_module(pm);
    return kExitOk;
}

int cmd_demodulize(const std::string& path) {
    const fgq::PointedModule pm = fgq::load_module(path);
    const fgq::PointedQuasigroup pq = fgq::sigma(pm);
    std::cout << fgq::print_table({pq.table, pq.point});
    return kExitOk;
}

int cmd_search(int order, const std::string& mode, const std::vector<std::string>& filters,
               const std::string& out_path, std::uint64_t count, std::uint64_t seed,
               bool seed_given) {
    fgq::SearchSpec spec;
    spec.order = order;
    if (mode == "exhaustive") {
        spec.mode = fgq::SearchSpec::Mode::Exhaustive;
    } else if (mode == "reduced") {
        spec.mode = fgq::SearchSpec::Mode::Reduced;
    } else if (mode == "random") {
        spec.mode = fgq::SearchSpec::Mode::Random;
        if (!seed_given) throw fgq::config_error("random mode requires an explicit --seed");
        if (count == 0) throw fgq::config_error("random mode requires --count");
        spec.sample_count = count;
        spec.seed = seed;
    } else {
        throw fgq::config_error("unknown mode '" + mode + "'");
    }

    fgq::PredicateSet preds;
    for (const std::string& name : filters) {
        auto p = fgq::predicate_from_name(name);
        if (!p) throw fgq::config_error("unknown predicate '" + name + "'");
        preds.push_back(*p);
    }

    std::uint64_t hits = 0;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw fgq::structural_error("cannot open '" + out_path + "' for writing");
        fgq::for_each_latin(spec, [&](const fgq::CayleyTable& t) {
            for (fgq::Predicate p : preds)
                if (!fgq::eval_predicate(t, p)) return;
            if (hits) out << "\n";
            out << fgq::print_table({t, std::nullopt});
            ++hits;
        });
    } else {
        hits = fgq::census(spec, {preds}).front().count;
    }
    std::cout << "count=" << hits << "\n";
    return kExitOk;
}

int cmd_replay_paper(int max_order, std::uint64_t sample, std::uint64_t seed, int draws) {
    fgq::BatteryOptions opt;
    opt.max_order = max_order;
    opt.sample = sample;
    opt.seed = seed;
    opt.draws = draws;
    const auto lines = fgq::run_battery(opt);
    bool all = true;
    for (const auto& line : lines) {
        all = all && line.pass;
        std::printf("%s %-42s instances=%llu%s%s\n", line.pass ? "PASS" : "FAIL",
                    line.name.c_str(), static_cast<unsigned long long>(line.instances),
                    line.detail.empty() ? "" : "  ", line.detail.c_str());
    }
    return all ? kExitOk : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quasigroup toolkit"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "evaluate properties of a table file");
    std::string check_path;
    std::vector<std::string> check_props;
    check->add_option("path", check_path)->required();
    check->add_option("properties", check_props, "latin fl fr a b f fg fasfg medial group simple isotope-group")
        ->required();

    // derive-form
    auto* derive = app.add_subcommand("derive-form", "linearize an FG table over a group");
    std::string derive_path;
    int opt_a = 0, opt_b = 0, opt_neutral = -1;
    bool opt_strong = false;
    derive->add_option("path", derive_path)->required();
    derive->add_option("--a", opt_a, "left basepoint");
    derive->add_option("--b", opt_b, "right basepoint");
    derive->add_option("--neutral", opt_neutral, "choose the form with this group neutral");
    derive->add_flag("--strong", opt_strong, "use the canonical strong basepoint");

    // forms
    auto* forms = app.add_subcommand("forms", "list every arithmetic form of an FG table");
    std::string forms_path;
    bool forms_strong = false;
    forms->add_option("path", forms_path)->required();
    forms->add_flag("--strong", forms_strong, "list only strong forms");

    // mq
    auto* mqc = app.add_subcommand("mq", "print the subset M(Q)");
    std::string mq_path;
    mqc->add_option("path", mq_path)->required();

    // quotient
    auto* quot = app.add_subcommand("quotient", "print Q modulo the M(Q) congruence");
    std::string quot_path;
    quot->add_option("path", quot_path)->required();

    // classify-simple
    auto* cls = app.add_subcommand("classify-simple", "classify a simple FG table");
    std::string cls_path;
    cls->add_option("path", cls_path)->required();

    // modulize / demodulize
    auto* modz = app.add_subcommand("modulize", "pointed FG table -> module file");
    std::string modz_path;
    int modz_point = -1;
    modz->add_option("path", modz_path)->required();
    modz->add_option("--point", modz_point, "basepoint (defaults to the file's point line)");

    auto* demod = app.add_subcommand("demodulize", "module file -> pointed table file");
    std::string demod_path;
    demod->add_option("path", demod_path)->required();

    // search
    auto* search = app.add_subcommand("search", "enumerate or sample Latin squares");
    int search_order = 0;
    std::string search_mode = "exhaustive", search_out;
    std::vector<std::string> search_filters;
    std::uint64_t search_count = 0, search_seed = 0;
    search->add_option("--order", search_order)->required();
    search->add_option("--mode", search_mode, "exhaustive | reduced | random");
    search->add_option("--filter", search_filters, "predicates, conjunction");
    search->add_option("--out", search_out, "write matching tables to this file");
    search->add_option("--count", search_count, "sample size (random mode)");
    auto* seed_opt = search->add_option("--seed", search_seed, "sample seed (random mode)");

    // replay-paper
    auto* replay = app.add_subcommand("replay-paper", "run the verification battery");
    int replay_max = 4, replay_draws = 120;
    std::uint64_t replay_sample = 0, replay_seed = 1;
    replay->add_option("--max-order", replay_max, "largest order (at most 5)");
    replay->add_option("--sample", replay_sample, "order-5 sample size (0 = exhaustive)");
    replay->add_option("--seed", replay_seed);
    replay->add_option("--draws", replay_draws, "catalog draws for the linear checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (check->parsed()) return cmd_check(check_path, check_props);
        if (derive->parsed()) return cmd_derive_form(derive_path, opt_a, opt_b, opt_neutral, opt_strong);
        if (forms->parsed()) return cmd_forms(forms_path, forms_strong);
        if (mqc->parsed()) return cmd_mq(mq_path);
        if (quot->parsed()) return cmd_quotient(quot_path);
        if (cls->parsed()) return cmd_classify_simple(cls_path);
        if (modz->parsed()) return cmd_modulize(modz_path, modz_point);
        if (demod->parsed()) return cmd_demodulize(demod_path);
        if (search->parsed())
            return cmd_search(search_order, search_mode, search_filters, search_out,
                              search_count, search_seed, seed_opt->count() > 0);
        if (replay->parsed())
            return cmd_replay_paper(replay_max, replay_sample, replay_seed, replay_draws);
    } catch (const fgq::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fgq::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fgq::structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fgq::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitProperty;
    }
    return kExitParse;
}
