#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skolem/builders.hpp"
#include "skolem/core.hpp"
#include "skolem/designs.hpp"
#include "skolem/families.hpp"
#include "skolem/notation.hpp"
#include "skolem/search.hpp"
#include "skolem/spectrum.hpp"

using nlohmann::json;
using namespace skolem;

namespace {

json system_json(const BaseSystem& sys) {
    json blocks = json::array();
    for (const Triple& b : sys.blocks) blocks.push_back(json::array({b[0], b[1], b[2]}));
    return json{{"v", sys.v},
                {"lambda", sys.lambda},
                {"kind", triple_kind_name(sys.kind)},
                {"blocks", blocks},
                {"fine_structure", fine_structure(sys)}};
}

void print_system(const BaseSystem& sys) {
    for (const Triple& b : sys.blocks)
        std::cout << b[0] << "," << b[1] << "," << b[2] << "\n";
    std::cout << "fine=";
    std::vector<int> fs = fine_structure(sys);
    for (size_t i = 0; i < fs.size(); ++i) std::cout << (i ? "," : "") << fs[i];
    std::cout << "\n";
}

std::string join(const std::set<int>& xs) {
    std::string out;
    for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

SlotSequence generic_build(const SequenceSpec& spec, uint64_t seed) {
    if (spec.family == Family::Langford) return build_langford_any(spec.d, spec.n, seed).first;
    if (spec.family == Family::HookedLangford)
        return build_hooked_langford_any(spec.d, spec.n, seed);
    std::optional<SlotSequence> found;
    if (spec.length() <= 30) {
        BacktrackResult res = backtrack_first(spec);
        if (res.seq) found = *res.seq;
    } else {
        ClimbBudget budget;
        budget.seed = seed;
        found = hillclimb(spec, {}, budget);
    }
    if (!found) fail(Errc::Unresolved, "no arrangement found for " + spec.str());
    ValidationReport rep = validate(*found, spec);
    if (!rep.valid) fail(Errc::ConstructionBug, "built sequence failed validation");
    return *found;
}

std::set<int> parse_int_list(const std::string& text) {
    std::set<int> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.insert(std::stoi(item));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Skolem and Langford sequence toolkit"};
    app.require_subcommand(1);
    bool as_json = false;

    // build
    auto* cmd_build = app.add_subcommand("build", "construct one sequence for a family spec");
    std::string build_spec;
    std::string build_source = "auto";
    uint64_t build_seed = 1;
    cmd_build->add_option("--spec", build_spec, "family spec, e.g. skolem:8 or langford:3:5")
        ->required();
    cmd_build->add_option("--source", build_source,
                          "langford construction: auto, interval, interval-variant, "
                          "table-even, table-odd, table-dense");
    cmd_build->add_option("--seed", build_seed, "search seed");
    cmd_build->add_flag("--json", as_json, "emit JSON instead of text");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "validate a sequence against a family spec");
    std::string verify_spec, verify_seq;
    cmd_verify->add_option("--spec", verify_spec, "family spec")->required();
    cmd_verify->add_option("sequence", verify_seq, "comma form, holes as 0")->required();
    cmd_verify->add_flag("--json", as_json, "emit JSON instead of text");

    // intersect
    auto* cmd_intersect = app.add_subcommand("intersect", "count pairs two sequences share");
    std::string int_a, int_b;
    cmd_intersect->add_option("first", int_a, "comma form")->required();
    cmd_intersect->add_option("second", int_b, "comma form")->required();
    cmd_intersect->add_flag("--json", as_json, "emit JSON instead of text");

    // realize
    auto* cmd_realize = app.add_subcommand(
        "realize", "two order-n arrangements sharing exactly p pairs, machine-verified");
    int realize_n = 0, realize_p = 0;
    uint64_t realize_seed = 1;
    cmd_realize->add_option("-n,--order", realize_n, "order")->required();
    cmd_realize->add_option("-p,--common", realize_p, "target number of shared pairs")
        ->required();
    cmd_realize->add_option("--seed", realize_seed, "search seed");
    cmd_realize->add_flag("--json", as_json, "emit JSON instead of text");

    // spectrum
    auto* cmd_spectrum = app.add_subcommand(
        "spectrum", "admissible intersection counts, exhaustive or by the counting bound");
    std::string spectrum_spec;
    int spectrum_n = 0, spectrum_cap = 26;
    cmd_spectrum->add_option("--spec", spectrum_spec, "exhaustive over this family");
    cmd_spectrum->add_option("-n,--order", spectrum_n, "counting bound for this order");
    cmd_spectrum->add_option("--cap", spectrum_cap, "slot cap for exhaustive enumeration");
    cmd_spectrum->add_flag("--json", as_json, "emit JSON instead of text");

    // enumerate
    auto* cmd_enumerate = app.add_subcommand("enumerate", "all sequences of a family, in order");
    std::string enum_spec;
    size_t enum_limit = 0;
    int enum_cap = 26;
    cmd_enumerate->add_option("--spec", enum_spec, "family spec")->required();
    cmd_enumerate->add_option("--limit", enum_limit, "stop after this many (0 = all)");
    cmd_enumerate->add_option("--cap", enum_cap, "slot cap");
    cmd_enumerate->add_flag("--json", as_json, "emit JSON instead of text");

    // decode
    auto* cmd_decode = app.add_subcommand("decode", "expand compressed notation to comma form");
    std::string decode_tokens, decode_holes;
    int decode_len = 0;
    cmd_decode->add_option("tokens", decode_tokens, "compressed token list")->required();
    cmd_decode->add_option("--len", decode_len, "target length")->required();
    cmd_decode->add_option("--holes", decode_holes, "slots allowed to stay empty, comma list");
    cmd_decode->add_flag("--json", as_json, "emit JSON instead of text");

    // design
    auto* cmd_design = app.add_subcommand(
        "design", "cyclic triple system base blocks with a prescribed fine structure");
    int design_v = 0, design_lambda = 1;
    int design_t = -1, design_s = -1, design_u = -1, design_c2 = -1, design_shared = -1;
    std::string design_kind = "cts";
    cmd_design->add_option("--v", design_v, "number of points (6n+1, or 6n+3 for pairs)")
        ->required();
    cmd_design->add_option("--lambda", design_lambda, "index, 1..4");
    cmd_design->add_option("--t", design_t, "base blocks of multiplicity 2");
    cmd_design->add_option("--s", design_s, "base blocks of multiplicity 3");
    cmd_design->add_option("--u", design_u, "base blocks of multiplicity 4");
    cmd_design->add_option("--c2", design_c2, "repeated base blocks for lambda=2");
    cmd_design->add_option("--shared", design_shared,
                           "emit two lambda=1 systems sharing this many base blocks");
    cmd_design->add_option("--kind", design_kind, "cts, dts or mts");
    cmd_design->add_flag("--json", as_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*cmd_build) {
        SequenceSpec spec = SequenceSpec::parse(build_spec);
        SlotSequence s = [&] {
            if (build_source == "auto") return generic_build(spec, build_seed);
            if (spec.family != Family::Langford)
                fail(Errc::BadArgument, "--source applies to langford specs only");
            LangfordRecipe recipe;
            recipe.d = spec.d;
            recipe.n = spec.n;
            recipe.seed = build_seed;
            if (build_source == "interval") recipe.source = LangfordSource::Interval;
            else if (build_source == "interval-variant") recipe.source = LangfordSource::IntervalVariant;
            else if (build_source == "table-even") recipe.source = LangfordSource::TableEvenD;
            else if (build_source == "table-odd") recipe.source = LangfordSource::TableOddD;
            else if (build_source == "table-dense") recipe.source = LangfordSource::TableDense;
            else fail(Errc::BadArgument, "unknown source " + build_source);
            return build_langford(recipe);
        }();
        if (as_json)
            std::cout << json{{"spec", spec.str()}, {"sequence", s.str()}}.dump() << "\n";
        else
            std::cout << s.str() << "\n";
        return 0;
    }

    if (*cmd_verify) {
        SequenceSpec spec = SequenceSpec::parse(verify_spec);
        SlotSequence s = SlotSequence::parse(verify_seq);
        ValidationReport rep = validate(s, spec);
        if (as_json) {
            std::cout << json{{"valid", rep.valid}, {"violations", rep.violations}}.dump()
                      << "\n";
        } else if (rep.valid) {
            std::cout << "valid\n";
        } else {
            for (const std::string& v : rep.violations) std::cerr << v << "\n";
        }
        return rep.valid ? 0 : 1;
    }

    if (*cmd_intersect) {
        SlotSequence a = SlotSequence::parse(int_a);
        SlotSequence b = SlotSequence::parse(int_b);
        CommonPairs cp = common_pairs(a, b);
        if (as_json) {
            json shared = json::array();
            for (const PlacedPair& p : cp.shared)
                shared.push_back(
                    json{{"value", p.value}, {"first", p.first}, {"second", p.second}});
            std::cout << json{{"common", cp.count}, {"shared", shared}}.dump() << "\n";
        } else {
            std::cout << "common=" << cp.count << "\n";
            std::string vals;
            for (const PlacedPair& p : cp.shared)
                vals += (vals.empty() ? "" : ",") + std::to_string(p.value);
            if (!vals.empty()) std::cout << "shared=" << vals << "\n";
        }
        return 0;
    }

    if (*cmd_realize) {
        Realization r = realize(realize_n, realize_p, realize_seed);
        if (as_json) {
            json common = json::array();
            for (const PlacedPair& p : common_pairs(r.first, r.second).shared)
                common.push_back(p.value);
            std::cout << json{{"n", r.n},
                              {"p", r.p},
                              {"seq1", r.first.str()},
                              {"seq2", r.second.str()},
                              {"common", common},
                              {"strategy", strategy_name(r.strategy)},
                              {"trace", r.trace}}
                             .dump()
                      << "\n";
        } else {
            std::cout << r.first.str() << "\n" << r.second.str() << "\n"
                      << "common=" << r.p << "\n";
        }
        return 0;
    }

    if (*cmd_spectrum) {
        std::set<int> values;
        std::string label;
        if (!spectrum_spec.empty()) {
            SequenceSpec spec = SequenceSpec::parse(spectrum_spec);
            values = exhaustive_spectrum(spec, spectrum_cap);
            label = spec.str();
        } else if (spectrum_n > 0) {
            values = necessary_spectrum(spectrum_n);
            label = "order " + std::to_string(spectrum_n) + " bound";
        } else {
            fail(Errc::BadArgument, "spectrum needs --spec or -n");
        }
        if (as_json)
            std::cout << json{{"spec", label}, {"values", values}}.dump() << "\n";
        else
            std::cout << join(values) << "\n";
        return 0;
    }

    if (*cmd_enumerate) {
        SequenceSpec spec = SequenceSpec::parse(enum_spec);
        EnumerateOptions opt;
        opt.cap_slots = enum_cap;
        if (enum_limit > 0) opt.limit = enum_limit;
        std::vector<SlotSequence> all = enumerate_all(spec, opt);
        if (as_json) {
            json seqs = json::array();
            for (const SlotSequence& s : all) seqs.push_back(s.str());
            std::cout << json{{"count", all.size()}, {"sequences", seqs}}.dump() << "\n";
        } else {
            for (const SlotSequence& s : all) std::cout << s.str() << "\n";
        }
        return 0;
    }

    if (*cmd_decode) {
        TokenStream ts = TokenStream::parse(decode_tokens);
        SlotSequence s = decode(ts, decode_len, parse_int_list(decode_holes));
        if (as_json) {
            std::cout << json{{"sequence", s.str()}, {"marked", ts.marked_values()}}.dump()
                      << "\n";
        } else {
            std::cout << s.str() << "\n";
        }
        return 0;
    }

    if (*cmd_design) {
        int v = design_v;
        bool mod3 = v % 6 == 3;
        if (v < 7 || (v % 6 != 1 && !mod3))
            fail(Errc::BadArgument, "point count must be 1 or 3 mod 6 and at least 7");
        int n = mod3 ? (v - 3) / 6 : (v - 1) / 6;

        if (design_shared >= 0) {
            if (design_lambda != 1)
                fail(Errc::BadArgument, "--shared builds a pair of lambda=1 systems");
            SystemPair pr = mod3 ? cts_pair_mod3(n, design_shared) : cts_pair(n, design_shared);
            if (as_json) {
                std::cout << json{{"a", system_json(pr.a)},
                                  {"b", system_json(pr.b)},
                                  {"shared", pr.shared}}
                                 .dump()
                          << "\n";
            } else {
                print_system(pr.a);
                std::cout << "\n";
                print_system(pr.b);
                std::cout << "shared=" << pr.shared << "\n";
            }
            return 0;
        }

        BaseSystem sys;
        switch (design_lambda) {
            case 1:
                sys = mod3 ? cts_pair_mod3(n, n + 1).a : cts_pair(n, n).a;
                break;
            case 2:
                if (design_c2 < 0) fail(Errc::BadArgument, "lambda=2 needs --c2");
                if (mod3) fail(Errc::BadArgument, "fine structures are built on 6n+1 points");
                sys = fine_cts2(n, design_c2);
                break;
            case 3:
                if (design_t < 0 || design_s < 0)
                    fail(Errc::BadArgument, "lambda=3 needs --t and --s");
                if (mod3) fail(Errc::BadArgument, "fine structures are built on 6n+1 points");
                sys = fine_cts3(n, design_t, design_s);
                break;
            case 4:
                if (design_t < 0 || design_s < 0 || design_u < 0)
                    fail(Errc::BadArgument, "lambda=4 needs --t, --s and --u");
                if (mod3) fail(Errc::BadArgument, "fine structures are built on 6n+1 points");
                sys = fine_cts4(n, design_t, design_s, design_u);
                break;
            default:
                fail(Errc::BadArgument, "lambda must be 1..4");
        }
        if (design_kind == "dts") sys = expand_directed(sys);
        else if (design_kind == "mts") sys = expand_mendelsohn(sys);
        else if (design_kind != "cts") fail(Errc::BadArgument, "kind must be cts, dts or mts");

        ValidationReport rep = validate_coverage(sys);
        if (!rep.valid)
            fail(Errc::ConstructionBug, "built system failed coverage: " + rep.violations[0]);
        if (as_json)
            std::cout << system_json(sys).dump() << "\n";
        else
            print_system(sys);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << errc_name(e.kind()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
