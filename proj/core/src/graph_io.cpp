#include "dilworth/graph_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

#include "dilworth/errors.hpp"

namespace dilworth {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

Digraph parse_graph_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) {
            continue;
        }
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            long long count = -1;
            if (!(ls >> tag >> count) || tag != "n" || count < 0 || count > (1LL << 24)) {
                throw InvalidInput("line " + std::to_string(lineno) + ": expected 'n <count>'");
            }
            n = static_cast<int>(count);
        } else {
            long long u = -1;
            long long v = -1;
            if (!(ls >> u >> v)) {
                throw InvalidInput("line " + std::to_string(lineno) + ": expected 'u v'");
            }
            std::string rest;
            if (ls >> rest) {
                throw InvalidInput("line " + std::to_string(lineno) + ": trailing token '" + rest + "'");
            }
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw InvalidInput("line " + std::to_string(lineno) + ": edge (" + std::to_string(u) +
                                   "," + std::to_string(v) + ") out of range");
            }
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    if (n < 0) {
        throw InvalidInput("missing 'n <count>' header");
    }
    return build_digraph(n, edges);
}

Digraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_text(in);
}

std::string to_graph_text(const Digraph& g) {
    std::string out = "n " + std::to_string(g.n()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Digraph graph_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw InvalidInput("each edge must be a [u, v] pair");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return build_digraph(n, edges);
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput(std::string("graph JSON: ") + ex.what());
    }
}

nlohmann::json graph_to_json(const Digraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"n", g.n()}, {"edges", std::move(edges)}};
}

Digraph read_graph(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& ex) {
            throw InvalidInput(std::string("graph JSON: ") + ex.what());
        }
        return graph_from_json(j);
    }
    return parse_graph_text(text);
}

Digraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open graph file '" + path + "'");
    }
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Digraph& g, bool as_json) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write graph file '" + path + "'");
    }
    if (as_json) {
        out << graph_to_json(g).dump() << '\n';
    } else {
        out << to_graph_text(g);
    }
}

std::string graph_hash(const Digraph& g) {
    const std::string text = to_graph_text(g);
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw InternalError("SHA-256 digest failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return "sha256:" + hex.str();
}

}  // namespace dilworth
