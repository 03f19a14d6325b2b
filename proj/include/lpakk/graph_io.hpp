#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lpakk/graph.hpp"

namespace lpakk {

/// {"vertices":[...],"edges":[{"src":..,"dst":..,"mult":..,"names":[..]}],
///  "infinite_emitters":[...]}. "mult" defaults to 1, "names" and
/// "infinite_emitters" are optional.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Reads a digraph in DOT syntax. Repeated edges add multiplicity; an edge
/// `label` attribute names the edge; a node attribute `infinite=true` flags an
/// infinite emitter. Vertices appear in order of first mention.
Graph graph_from_dot(std::string_view text);

/// Loads a graph file, choosing DOT for .dot/.gv extensions and JSON otherwise.
Graph load_graph(const std::string& path);

}  // namespace lpakk
