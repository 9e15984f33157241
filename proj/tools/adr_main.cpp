// adr: command-line front end.
//
// Exit codes: 0 ok, 1 input error, 2 post-condition outside the transformable
// fragment, 3 check failed, 4 no recovery plan.

#include "adr/contracts.hpp"
#include "adr/dsl.hpp"
#include "adr/error.hpp"
#include "adr/json_export.hpp"
#include "adr/logic.hpp"
#include "adr/recovery.hpp"
#include "adr/wp.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit { kOk = 0, kInput = 1, kFragment = 2, kCheckFailed = 3, kNoPlan = 4 };

adr::dsl::Document load(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw adr::InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    auto r = adr::dsl::parse(ss.str());
    if (!r.ok()) {
        std::string msg;
        for (const auto &d : r.diagnostics)
            msg += (msg.empty() ? "" : "\n") + path + ":" + adr::dsl::to_string(d);
        throw adr::InputError(msg);
    }
    return std::move(*r.document);
}

std::uint64_t default_seed()
{
    if (const char *s = std::getenv("ADR_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception &) {
            throw adr::InputError(std::string("ADR_SEED is not a number: '") + s + "'");
        }
    }
    return adr::kDefaultSeed;
}

adr::Alphabet parse_types(const std::string &spec)
{
    adr::Alphabet a;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto slash = item.find('/');
        if (slash == std::string::npos)
            throw adr::InputError("type '" + item + "' must be written NAME/ARITY");
        try {
            a.add({item.substr(0, slash), std::stoi(item.substr(slash + 1)), adr::EdgeKind::concrete});
        } catch (const std::logic_error &) {
            throw adr::InputError("bad arity in '" + item + "'");
        }
    }
    return a;
}

void print_counterexample(const adr::Counterexample &c)
{
    std::cout << adr::dsl::serialize(c.before, "counterexample");
    if (c.match)
        std::cout << "# applied at edge " << c.match->edge_id << "\n";
    if (c.after)
        std::cout << adr::dsl::serialize(*c.after, "result");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Design-by-contract toolkit for typed hypergraph rewriting"};
    app.require_subcommand(1);

    std::string file;
    bool as_json = false;

    // wp
    auto *wp = app.add_subcommand("wp", "weakest pre-condition of a production for a post-condition");
    std::string wp_prod, wp_formula, wp_mode = "literal";
    bool wp_parts = false;
    wp->add_option("file", file, ".adr document")->required();
    wp->add_option("production", wp_prod, "production name")->required();
    wp->add_option("formula", wp_formula, "post-condition formula name")->required();
    wp->add_option("--mode", wp_mode, "quantifier enumeration")
        ->check(CLI::IsMember({"literal", "feasible"}));
    wp->add_flag("--parts", wp_parts, "also print the two transformer results");
    wp->add_flag("--json", as_json, "JSON output");

    // check
    auto *check = app.add_subcommand("check", "bounded check of an asserted production");
    std::string check_name, theorem = "soundness";
    int max_nodes = 3, max_edges = 3;
    check->add_option("file", file)->required();
    check->add_option("asserted", check_name, "asserted production name")->required();
    check->add_option("--max-nodes", max_nodes)->check(CLI::NonNegativeNumber);
    check->add_option("--max-edges", max_edges)->check(CLI::NonNegativeNumber);
    check->add_option("--theorem", theorem)->check(CLI::IsMember({"soundness", "weakest", "validity"}));
    check->add_flag("--json", as_json);

    // apply
    auto *apply = app.add_subcommand("apply", "apply a production at an edge");
    std::string apply_graph, apply_prod, apply_at;
    std::optional<std::uint64_t> seed;
    apply->add_option("file", file)->required();
    apply->add_option("graph", apply_graph)->required();
    apply->add_option("production", apply_prod)->required();
    apply->add_option("--at", apply_at, "edge id of the match")->required();
    apply->add_option("--seed", seed, "fresh-name seed (default: $ADR_SEED or 1)");
    apply->add_flag("--json", as_json);

    // recover
    auto *rec = app.add_subcommand("recover", "search for productions re-establishing a style");
    std::string rec_graph, rec_style;
    int max_depth = 3;
    rec->add_option("file", file)->required();
    rec->add_option("graph", rec_graph)->required();
    rec->add_option("style", rec_style)->required();
    rec->add_option("--max-depth", max_depth)->check(CLI::NonNegativeNumber);
    rec->add_option("--seed", seed);
    rec->add_flag("--json", as_json);

    // equiv
    auto *equiv = app.add_subcommand("equiv", "bounded equivalence of two closed formulas");
    std::string f1, f2;
    equiv->add_option("file", file)->required();
    equiv->add_option("first", f1)->required();
    equiv->add_option("second", f2)->required();
    equiv->add_option("--max-nodes", max_nodes)->check(CLI::NonNegativeNumber);
    equiv->add_option("--max-edges", max_edges)->check(CLI::NonNegativeNumber);

    // enumerate
    auto *en = app.add_subcommand("enumerate", "list every graph within the bounds");
    std::string types;
    bool count_only = false;
    en->add_option("file", file, ".adr document supplying the types");
    en->add_option("--types", types, "comma-separated NAME/ARITY list");
    en->add_option("--max-nodes", max_nodes)->check(CLI::NonNegativeNumber);
    en->add_option("--max-edges", max_edges)->check(CLI::NonNegativeNumber);
    en->add_flag("--count-only", count_only);

    // fmt
    auto *fmt = app.add_subcommand("fmt", "print a document in canonical form");
    fmt->add_option("file", file)->required();
    fmt->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*wp) {
            const auto doc = load(file);
            const auto &p = doc.production(wp_prod);
            const auto &phi = doc.formula(wp_formula);
            adr::WpOptions opts;
            opts.enumeration = wp_mode == "feasible" ? adr::Enumeration::feasible : adr::Enumeration::literal;
            const auto r = adr::wpre_parts(p, phi, {}, adr::InterfaceVars::canonical(p.lhs_type.arity), opts);
            if (as_json) {
                nlohmann::json out = {{"production", wp_prod},
                                      {"formula", wp_formula},
                                      {"mode", wp_mode},
                                      {"wpre", adr::json::formula(r.pre)},
                                      {"text", adr::dsl::serialize(r.pre)},
                                      {"definite", adr::json::formula(r.definite)},
                                      {"pulled", adr::json::formula(r.pulled)}};
                std::cout << out.dump(2) << "\n";
            } else {
                if (wp_parts) {
                    std::cout << "# definite: " << adr::dsl::serialize(r.definite) << "\n";
                    std::cout << "# pulled:   " << adr::dsl::serialize(r.pulled) << "\n";
                }
                std::cout << adr::dsl::serialize(r.pre) << "\n";
            }
            return kOk;
        }

        if (*check) {
            const auto doc = load(file);
            const auto &a = doc.asserted_production(check_name);
            adr::validate_asserted(a.value, doc.types);
            const adr::Bounds bounds{max_nodes, max_edges};
            adr::Verdict v;
            if (theorem == "soundness")
                v = adr::check_soundness(a.value.production, a.value.post, a.value.h, a.value.zs,
                                         doc.types, bounds);
            else if (theorem == "weakest")
                v = adr::check_weakest(a.value.pre, a.value.production, a.value.post, a.value.h,
                                       a.value.zs, doc.types, bounds);
            else
                v = adr::check_validity(a.value, doc.types, bounds);
            if (as_json) {
                auto out = adr::json::verdict(v);
                out["theorem"] = theorem;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << theorem << ": " << adr::to_string(v.status) << "\n";
                std::cout << "graphs_checked: " << v.graphs_checked << "\n";
                if (v.counterexample)
                    print_counterexample(*v.counterexample);
            }
            return v.holds() ? kOk : kCheckFailed;
        }

        if (*apply) {
            const auto doc = load(file);
            const auto &g = doc.graph(apply_graph);
            const auto &p = doc.production(apply_prod);
            const adr::Edge *e = g.find_edge(apply_at);
            if (!e || e->type.name != p.lhs_type.name)
                throw adr::InputError("edge '" + apply_at + "' is not a match of '" + apply_prod + "'");
            const auto out = adr::apply_production(g, {e->id, e->attachment}, p, seed.value_or(default_seed()));
            if (as_json)
                std::cout << adr::json::graph(out).dump(2) << "\n";
            else
                std::cout << adr::dsl::serialize(out, apply_graph);
            return kOk;
        }

        if (*rec) {
            const auto doc = load(file);
            const auto &g = doc.graph(rec_graph);
            const auto style = doc.style(rec_style);
            const auto plan = adr::recover(g, style, max_depth, seed.value_or(default_seed()));
            const auto &rules = doc.styles.at(rec_style).rules;
            if (!plan) {
                if (as_json)
                    std::cout << nlohmann::json{{"status", "not-found"}}.dump(2) << "\n";
                else
                    std::cout << "no plan within depth " << max_depth << "\n";
                return kNoPlan;
            }
            if (as_json) {
                auto out = adr::json::plan(*plan);
                out["status"] = "found";
                for (auto &s : out["steps"])
                    s["rule"] = rules.at(s["production"].get<std::size_t>());
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "plan: " << plan->steps.size() << " step(s)\n";
                for (const auto &s : plan->steps)
                    std::cout << "  " << rules.at(s.production) << " at " << s.match.edge_id << "\n";
                std::cout << adr::dsl::serialize(plan->final, rec_graph);
            }
            return kOk;
        }

        if (*equiv) {
            const auto doc = load(file);
            const auto &a = doc.formula(f1);
            const auto &b = doc.formula(f2);
            if (!adr::is_closed(a) || !adr::is_closed(b))
                throw adr::InputError("equivalence needs closed formulas");
            auto witness = adr::distinguishing_graph(a, b, doc.types, {max_nodes, max_edges});
            if (!witness) {
                std::cout << "true\n";
                return kOk;
            }
            std::cout << "false\n" << adr::dsl::serialize(*witness, "witness");
            return kCheckFailed;
        }

        if (*fmt) {
            const auto doc = load(file);
            if (as_json)
                std::cout << adr::json::document(doc).dump(2) << "\n";
            else
                std::cout << adr::dsl::serialize(doc);
            return kOk;
        }

        if (*en) {
            adr::Alphabet alphabet;
            if (!types.empty())
                alphabet = parse_types(types);
            else if (!file.empty())
                alphabet = load(file).types;
            else
                throw adr::InputError("enumerate needs a file or --types");
            adr::GraphEnumerator gen(alphabet, {max_nodes, max_edges});
            std::uint64_t n = 0;
            while (auto g = gen.next()) {
                if (!count_only)
                    std::cout << adr::dsl::serialize(*g, "g" + std::to_string(n)) << "\n";
                ++n;
            }
            std::cout << "count: " << n << "\n";
            return kOk;
        }
    } catch (const adr::FragmentError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFragment;
    } catch (const adr::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kOk;
}
