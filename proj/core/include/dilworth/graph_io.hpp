#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "dilworth/digraph.hpp"

namespace dilworth {

/// Text format: `n <count>` then one `u v` line per edge; `#` starts a
/// comment. Writing emits edges in lexicographic order, which makes the
/// output canonical.
Digraph parse_graph_text(std::istream& in);
Digraph parse_graph_text(const std::string& text);
std::string to_graph_text(const Digraph& g);

/// JSON format: {"edges": [[u,v],...], "n": count}.
Digraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Digraph& g);

/// Reads either format, sniffing for a leading '{'.
Digraph read_graph(std::istream& in);
Digraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Digraph& g, bool as_json = false);

/// SHA-256 hex digest of the canonical text serialization.
std::string graph_hash(const Digraph& g);

}  // namespace dilworth
