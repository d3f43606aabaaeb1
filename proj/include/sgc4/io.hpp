// sg / sgm text format.
//
//   # optional comments
//   sg 1            (or: sgm 1)
//   n <vertices>
//   e <u> <v> <+|->
//
// Whitespace-tolerant on input; serialization is canonical (sorted edges,
// single spaces, LF) so serialize(parse(serialize(g))) is byte-identical.

#pragma once

#include <string>
#include <variant>

#include "sgc4/signed_graph.hpp"

namespace sgc4 {

std::string serialize(const SignedGraph& g);
std::string serialize(const SignedMultiGraph& g);

SignedGraph parse_signed_graph(const std::string& text);
SignedMultiGraph parse_signed_multigraph(const std::string& text);

using AnyGraph = std::variant<SignedGraph, SignedMultiGraph>;
AnyGraph parse_any_graph(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace sgc4
