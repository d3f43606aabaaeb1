#include "sgc4/io.hpp"

#include <fstream>
#include <sstream>

namespace sgc4 {

namespace {

std::string serialize_impl(const char* magic, int n, const std::vector<Edge>& edges) {
    std::ostringstream out;
    out << magic << " 1\n";
    out << "n " << n << "\n";
    for (const Edge& e : edges) out << "e " << e.u << " " << e.v << " " << sign_char(e.s) << "\n";
    return out.str();
}

[[noreturn]] void bad_line(int lineno, const std::string& msg) {
    throw GraphError(Err::parse_error, "line " + std::to_string(lineno) + ": " + msg);
}

struct Parsed {
    bool multi = false;
    int n = 0;
    std::vector<Edge> edges;
};

Parsed parse_impl(const std::string& text) {
    Parsed out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_magic = false, saw_n = false;
    while (std::getline(in, line)) {
        lineno++;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!saw_magic) {
            if (tok != "sg" && tok != "sgm") bad_line(lineno, "expected 'sg 1' or 'sgm 1' header");
            out.multi = tok == "sgm";
            int version = 0;
            if (!(ls >> version) || version != 1) bad_line(lineno, "unsupported format version");
            saw_magic = true;
        } else if (tok == "n") {
            if (saw_n) bad_line(lineno, "repeated vertex count");
            if (!(ls >> out.n) || out.n < 0) bad_line(lineno, "bad vertex count");
            saw_n = true;
        } else if (tok == "e") {
            if (!saw_n) bad_line(lineno, "edge before vertex count");
            Edge e;
            std::string s;
            if (!(ls >> e.u >> e.v >> s)) bad_line(lineno, "edge needs: e <u> <v> <+|->");
            if (s == "+")
                e.s = Sign::pos;
            else if (s == "-")
                e.s = Sign::neg;
            else
                bad_line(lineno, "edge sign must be + or -");
            out.edges.push_back(e);
        } else {
            bad_line(lineno, "unknown directive '" + tok + "'");
        }
        std::string rest;
        if (ls >> rest) bad_line(lineno, "trailing tokens");
    }
    if (!saw_magic) throw GraphError(Err::parse_error, "empty input, expected sg/sgm header");
    if (!saw_n) throw GraphError(Err::parse_error, "missing vertex count line");
    return out;
}

}  // namespace

std::string serialize(const SignedGraph& g) { return serialize_impl("sg", g.n, g.edges); }
std::string serialize(const SignedMultiGraph& g) { return serialize_impl("sgm", g.n, g.edges); }

SignedGraph parse_signed_graph(const std::string& text) {
    Parsed p = parse_impl(text);
    if (p.multi) throw GraphError(Err::parse_error, "expected a simple sg graph, found sgm");
    return make_signed_graph(p.n, std::move(p.edges));
}

SignedMultiGraph parse_signed_multigraph(const std::string& text) {
    Parsed p = parse_impl(text);
    return make_signed_multigraph(p.n, std::move(p.edges));
}

AnyGraph parse_any_graph(const std::string& text) {
    Parsed p = parse_impl(text);
    if (p.multi) return make_signed_multigraph(p.n, std::move(p.edges));
    return make_signed_graph(p.n, std::move(p.edges));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError(Err::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace sgc4
