// Command-line front end: homomorphism testing, criticality certification,
// constructions, colorings, and the small-order census.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgc4/census.hpp"
#include "sgc4/coloring.hpp"
#include "sgc4/constructions.hpp"
#include "sgc4/criticality.hpp"
#include "sgc4/homomorphism.hpp"
#include "sgc4/io.hpp"
#include "sgc4/iso.hpp"
#include "sgc4/json_out.hpp"
#include "sgc4/mad.hpp"
#include "sgc4/signed_graph.hpp"

namespace {

using namespace sgc4;
using nlohmann::json;

// 0 = the asked-for property holds, 1 = it does not, 2 = error; a truncated
// search is never reported as 0 or 1
constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_error = 2;

bool use_color() {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    if (!isatty(fileno(stdout))) return false;
    const char* term = std::getenv("TERM");
    return term != nullptr && std::string(term) != "dumb";
}

std::string verdict_word(const std::string& word, bool good) {
    if (!use_color()) return word;
    return (good ? "\x1b[32m" : "\x1b[31m") + word + "\x1b[0m";
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

SignedGraph load_graph(const std::string& path) {
    return parse_signed_graph(read_text_file(path));
}

AnyGraph load_any(const std::string& path) { return parse_any_graph(read_text_file(path)); }

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw GraphError(Err::parse_error, "cannot open " + out_path + " for writing");
    f << text;
}

std::string girth_name(int i, int j) { return "g" + std::to_string(i) + std::to_string(j); }

int report_hom(const HomVerdict& v, bool as_json) {
    if (as_json) {
        emit(hom_verdict_json(v));
        return v.mapped() ? exit_holds : exit_fails;
    }
    switch (v.kind) {
        case HomVerdict::Kind::mapped:
            std::cout << verdict_word("mapped", true) << "\n";
            std::cout << "switch: " << join_ints(v.hom->switch_set) << "\n";
            std::cout << "map: " << join_ints(v.hom->map) << "\n";
            return exit_holds;
        case HomVerdict::Kind::nohom_witness: {
            const auto& p = v.witness->path;
            std::cout << verdict_word("nohom", false) << " (witness path " << p[0] << " "
                      << p[1] << " " << p[2] << " " << p[3] << ")\n";
            return exit_fails;
        }
        case HomVerdict::Kind::nohom_girth:
            std::cout << verdict_word("nohom", false) << " (girth class "
                      << girth_name(v.girth_i, v.girth_j) << " too small)\n";
            return exit_fails;
        case HomVerdict::Kind::nohom_exhausted:
            std::cout << verdict_word("nohom", false) << " (search exhausted)\n";
            return exit_fails;
    }
    return exit_error;
}

SignedGraph resolve_target(const std::string& spec) {
    if (spec.rfind("c-", 0) == 0) {
        const std::string rest = spec.substr(2);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw GraphError(Err::bad_parameter, "bad target '" + spec + "'");
        int l = std::stoi(rest);
        if (l < 4 || l % 2 != 0)
            throw GraphError(Err::bad_parameter, "target cycles are c-4, c-6, ...");
        return cycle_graph(l, true);
    }
    return load_graph(spec);
}

int cmd_hom(const std::string& file, const std::string& target_spec, long long budget,
            bool as_json) {
    SignedGraph g = load_graph(file);
    if (target_spec == "c-4") return report_hom(hom_C4(g), as_json);
    SignedGraph target = resolve_target(target_spec);
    return report_hom(hom_to_target(g, target, budget), as_json);
}

int cmd_sp_hom(const std::string& file, bool as_json) {
    return report_hom(sp_hom_C4(load_graph(file)), as_json);
}

int cmd_girth(const std::string& file, bool as_json) {
    GirthVector gv = girth_vector(load_graph(file));
    if (as_json)
        emit(girth_json(gv));
    else
        std::cout << girth_line(gv) << "\n";
    return exit_holds;
}

int cmd_critical(const std::string& file, bool as_json) {
    CriticalVerdict v = is_critical_C4(load_graph(file));
    if (as_json) {
        emit(critical_verdict_json(v));
        return v.critical() ? exit_holds : exit_fails;
    }
    switch (v.kind) {
        case CriticalVerdict::Kind::critical:
            std::cout << verdict_word("critical", true) << "\n";
            return exit_holds;
        case CriticalVerdict::Kind::maps_to_c4:
            std::cout << verdict_word("not critical", false) << " (maps to C-4)\n";
            return exit_fails;
        case CriticalVerdict::Kind::fails_girth:
            std::cout << verdict_word("not critical", false) << " (girth class "
                      << girth_name(v.girth_i, v.girth_j) << " too small)\n";
            return exit_fails;
        case CriticalVerdict::Kind::non_critical_edge:
            std::cout << verdict_word("not critical", false) << " (deleting edge " << v.edge->u
                      << " " << v.edge->v << " " << sign_char(v.edge->s)
                      << " leaves it unmappable)\n";
            return exit_fails;
    }
    return exit_error;
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw GraphError(Err::bad_parameter, std::string("expected an integer for ") + what +
                                                 ", got '" + s + "'");
    }
}

Sign parse_sign(const std::string& s) {
    if (s == "+") return Sign::pos;
    if (s == "-") return Sign::neg;
    throw GraphError(Err::bad_parameter, "expected + or -, got '" + s + "'");
}

int cmd_construct(const std::string& what, const std::vector<std::string>& args, bool no_check,
                  const std::string& out_path, bool as_json) {
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw GraphError(Err::bad_parameter,
                             "construct " + what + " takes " + std::to_string(k) + " argument" +
                                 (k == 1 ? "" : "s"));
    };
    std::string text;
    if (what.rfind("tl:", 0) == 0) {
        int l = parse_int(what.substr(3), "subdivision length");
        need(1);
        AnyGraph g = load_any(args[0]);
        SignedGraph r = std::holds_alternative<SignedGraph>(g)
                            ? t_subdivide(std::get<SignedGraph>(g), l)
                            : t_subdivide(std::get<SignedMultiGraph>(g), l);
        text = serialize(r);
    } else if (what == "tilde") {
        need(1);
        text = serialize(tilde(load_graph(args[0])));
    } else if (what == "p2") {
        need(5);
        text = serialize(p2_extend(load_graph(args[0]), parse_int(args[1], "a"),
                                   parse_int(args[2], "b"), parse_sign(args[3]),
                                   parse_sign(args[4])));
    } else if (what == "identify") {
        need(3);
        text = serialize(
            identify(load_graph(args[0]), parse_int(args[1], "a"), parse_int(args[2], "b")));
    } else if (what == "splice") {
        need(4);
        text = serialize(splice_F(load_graph(args[0]), parse_int(args[1], "u"),
                                  load_graph(args[2]), parse_int(args[3], "v"), !no_check));
    } else if (what == "hajos") {
        need(6);
        text = serialize(hajos_H(load_graph(args[0]),
                                 {parse_int(args[1], "a1"), parse_int(args[2], "b1")},
                                 load_graph(args[3]),
                                 {parse_int(args[4], "a2"), parse_int(args[5], "b2")},
                                 !no_check));
    } else if (what.rfind("build:", 0) == 0) {
        need(0);
        text = serialize(build_critical(parse_int(what.substr(6), "order")));
    } else {
        need(0);
        text = serialize(gallery(parse_gallery_id(what)));
    }
    if (as_json) {
        emit(graph_json(text));
        return exit_holds;
    }
    write_out(text, out_path);
    return exit_holds;
}

int report_coloring(const std::optional<std::vector<int>>& colors, bool as_json) {
    if (as_json) {
        emit(coloring_json(colors));
        return colors ? exit_holds : exit_fails;
    }
    if (!colors) {
        std::cout << verdict_word("not colorable", false) << "\n";
        return exit_fails;
    }
    std::cout << verdict_word("colorable", true) << ": " << join_ints(*colors) << "\n";
    return exit_holds;
}

int cmd_color4(const std::string& file, bool as_json) {
    return report_coloring(four_color_via_C4(load_graph(file)), as_json);
}

int cmd_x2k(const std::string& file, int k, bool as_json) {
    AnyGraph g = load_any(file);
    auto colors = std::holds_alternative<SignedGraph>(g)
                      ? x2k_coloring(std::get<SignedGraph>(g), k)
                      : x2k_coloring(std::get<SignedMultiGraph>(g), k);
    return report_coloring(colors, as_json);
}

int cmd_mad(const std::string& file, bool as_json) {
    Rational r = max_average_degree(load_graph(file));
    if (as_json)
        emit(mad_json(r));
    else
        std::cout << r.numerator() << "/" << r.denominator() << "\n";
    return exit_holds;
}

int cmd_switch_iso(const std::string& file1, const std::string& file2, bool as_json) {
    auto map = switching_isomorphic(load_graph(file1), load_graph(file2));
    if (as_json) {
        emit(switch_iso_json(map));
        return map ? exit_holds : exit_fails;
    }
    if (!map) {
        std::cout << verdict_word("not isomorphic", false) << "\n";
        return exit_fails;
    }
    std::cout << verdict_word("isomorphic", true) << ": " << join_ints(*map) << "\n";
    return exit_holds;
}

int cmd_census(int n, int jobs, bool no_filters, bool allow_big, const std::string& out_path,
               bool as_json) {
    CensusOptions opt;
    opt.apply_filters = !no_filters;
    opt.jobs = jobs;
    opt.allow_big = allow_big;
    CensusReport report = run_census(n, opt);
    json j = census_json(report);
    if (!out_path.empty()) write_out(j.dump(2) + "\n", out_path);
    if (as_json) {
        emit(j);
    } else {
        std::cout << "n=" << report.n << " classes_examined=" << report.classes_examined
                  << " critical=" << report.critical_found.size()
                  << " exceptions=" << report.exceptions.size() << "\n";
        for (const CensusEntry& e : report.critical_found)
            std::cout << "critical class: edges=" << e.edge_count
                      << " potential=" << e.potential_value << "\n"
                      << serialize(e.graph);
    }
    return exit_holds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph homomorphism and criticality toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json appear after the subcommand name
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, file2, target_spec = "c-4", out_path, construct_what;
    long long budget = default_node_budget;
    int k = 0, census_n = 0, jobs = 1;
    bool no_check = false, no_filters = false, allow_big = false;
    std::vector<std::string> construct_args;

    CLI::App* hom = app.add_subcommand("hom", "test for a homomorphism to a negative even cycle");
    hom->add_option("file", file, "input graph")->required();
    hom->add_option("--target", target_spec, "c-4, c-6, ... or a graph file");
    hom->add_option("--budget", budget, "search node budget");

    CLI::App* sp = app.add_subcommand("sp-hom", "sign-preserving test against C-4");
    sp->add_option("file", file, "input graph")->required();

    CLI::App* girth = app.add_subcommand("girth", "girth vector by sign and parity");
    girth->add_option("file", file, "input graph")->required();

    CLI::App* critical = app.add_subcommand("critical", "certify criticality with respect to C-4");
    critical->add_option("file", file, "input graph")->required();

    CLI::App* construct = app.add_subcommand("construct", "build gallery and derived graphs");
    construct->add_option("what", construct_what,
                          "gallery id, tl:<l>, tilde, p2, identify, splice, hajos, build:<n>")
        ->required();
    construct->add_option("args", construct_args, "arguments for the chosen form");
    construct->add_flag("--no-check", no_check, "skip criticality preconditions");
    construct->add_option("--out", out_path, "write the graph to a file");

    CLI::App* color4 = app.add_subcommand("color4", "4-color via double subdivision and C-4");
    color4->add_option("file", file, "input graph")->required();

    CLI::App* x2k = app.add_subcommand("x2k", "color by nonzero values in -k..k");
    x2k->add_option("file", file, "input graph")->required();
    x2k->add_option("--k", k, "number of positive values")->required();

    CLI::App* mad = app.add_subcommand("mad", "maximum average degree, exact");
    mad->add_option("file", file, "input graph")->required();

    CLI::App* swiso = app.add_subcommand("switch-iso", "switching isomorphism of two graphs");
    swiso->add_option("file1", file, "first graph")->required();
    swiso->add_option("file2", file2, "second graph")->required();

    CLI::App* census = app.add_subcommand("census", "criticality census over small orders");
    census->add_option("--n", census_n, "order to scan")->required();
    census->add_option("--jobs", jobs, "worker threads");
    census->add_option("--out", out_path, "write the JSON report to a file");
    census->add_flag("--no-filters", no_filters, "test every signature class");
    census->add_flag("--allow-big", allow_big, "lift the order cap to 9");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints the usage message
        return rc == 0 ? 0 : exit_error;  // --help exits 0, bad usage exits 2
    }

    try {
        if (hom->parsed()) return cmd_hom(file, target_spec, budget, as_json);
        if (sp->parsed()) return cmd_sp_hom(file, as_json);
        if (girth->parsed()) return cmd_girth(file, as_json);
        if (critical->parsed()) return cmd_critical(file, as_json);
        if (construct->parsed())
            return cmd_construct(construct_what, construct_args, no_check, out_path, as_json);
        if (color4->parsed()) return cmd_color4(file, as_json);
        if (x2k->parsed()) return cmd_x2k(file, k, as_json);
        if (mad->parsed()) return cmd_mad(file, as_json);
        if (swiso->parsed()) return cmd_switch_iso(file, file2, as_json);
        if (census->parsed())
            return cmd_census(census_n, jobs, no_filters, allow_big, out_path, as_json);
    } catch (const GraphError& e) {
        std::cerr << "error (" << err_name(e.code) << "): " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    std::cerr << "error: no subcommand\n";
    return exit_error;
}
