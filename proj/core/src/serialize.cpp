#include "dilworth/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dilworth/errors.hpp"

namespace dilworth {

double display(double x) {
    if (!std::isfinite(x) || x == 0) {
        return x;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::stod(buf);
}

json to_json(const Coloring& c) { return {{"colors", c.colors}, {"k", c.k}}; }

json to_json(const AcyclicCover& c) { return {{"classes", c.classes}, {"orders", c.orders}}; }

json to_json(const SubsetCertificate& c) { return {{"vertices", c.vertices}, {"order", c.order}}; }

json to_json(const RootValue& v) {
    return {{"exact", v.str()}, {"radicand", v.radicand.str()}, {"root", v.root}, {"log2", display(v.log2())}};
}

json to_json(const Bound& b) {
    return {{"name", b.name}, {"value", to_json(b.value)}, {"justification", b.justification}, {"cited", b.cited}};
}

json to_json(const Cell& c) {
    json j = {{"status", c.status()}, {"note", c.note}};
    if (c.computed) {
        j["lower"] = c.lower;
        j["upper"] = c.upper;
    }
    return j;
}

json to_json(const BoundReport& r) {
    json j;
    j["graph_id"] = r.graph_id;
    j["graph_hash"] = r.graph_hash;
    j["n"] = r.n;
    j["lower_bounds"] = json::array();
    for (const auto& b : r.lower_bounds) {
        j["lower_bounds"].push_back(to_json(b));
    }
    j["upper_bounds"] = json::array();
    for (const auto& b : r.upper_bounds) {
        j["upper_bounds"].push_back(to_json(b));
    }
    j["best_lower"] = to_json(r.best_lower());
    j["best_upper"] = to_json(r.best_upper());
    j["per_t"] = json::array();
    for (const auto& row : r.per_t) {
        json jr = {{"t", row.t}, {"vertices", row.vertices}, {"chi", to_json(row.chi)}, {"chidir", to_json(row.chidir)}};
        jr["chidirf_exact"] = row.chidirf ? json(row.chidirf->str()) : json(nullptr);
        if (!row.chidirf_note.empty()) {
            jr["chidirf_note"] = row.chidirf_note;
        }
        j["per_t"].push_back(jr);
    }
    j["pinned"] = r.pinned ? json(display(r.pinned->log2())) : json(nullptr);
    j["pinned_exact"] = r.pinned ? json(r.pinned->str()) : json(nullptr);
    j["justification"] = r.justification;
    j["vertex_transitive"] = r.vertex_transitive ? json(*r.vertex_transitive) : json(nullptr);
    return j;
}

json to_json(const SetSystem& sys, const LPSolution& sol) {
    json j;
    j["value"] = sol.value.str();
    j["log2"] = {{"value", display(sol.value.log2())}, {"approx", true}};
    j["sets"] = sys.size();
    j["pivots"] = sol.pivots;
    j["weights"] = json::array();
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (sol.weights[i].sign() != 0) {
            j["weights"].push_back({{"set", sys.sets()[i].members()}, {"weight", sol.weights[i].str()}});
        }
    }
    j["dual"] = json::array();
    for (const auto& y : sol.dual) {
        j["dual"].push_back(y.str());
    }
    return j;
}

namespace {

std::string kind_of(const AnyCertificate& cert) {
    if (std::holds_alternative<Coloring>(cert)) {
        return "coloring";
    }
    if (std::holds_alternative<AcyclicCover>(cert)) {
        return "acyclic_cover";
    }
    return to_string(std::get<SubsetCertificate>(cert).kind);
}

template <typename T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) {
        throw MalformedCertificate(std::string("certificate is missing '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw MalformedCertificate(std::string("certificate field '") + key + "' has the wrong type");
    }
}

}  // namespace

json certificate_json(const AnyCertificate& cert, const std::string& graph_hash, int value, bool optimal) {
    json witness = std::visit([](const auto& c) { return to_json(c); }, cert);
    return {{"kind", kind_of(cert)},
            {"graph_hash", graph_hash},
            {"value", value},
            {"witness", witness},
            {"optimal", optimal}};
}

CertificateFile parse_certificate(const json& j) {
    if (!j.is_object()) {
        throw MalformedCertificate("certificate must be a JSON object");
    }
    CertificateFile f;
    f.kind = field<std::string>(j, "kind");
    f.graph_hash = j.contains("graph_hash") ? field<std::string>(j, "graph_hash") : "";
    if (j.contains("value") && !j.at("value").is_null()) {
        f.value = field<int>(j, "value");
    }
    f.optimal = j.contains("optimal") && field<bool>(j, "optimal");
    const json w = field<json>(j, "witness");
    if (f.kind == "coloring") {
        Coloring c;
        c.colors = field<std::vector<int>>(w, "colors");
        c.k = field<int>(w, "k");
        f.certificate = c;
    } else if (f.kind == "acyclic_cover") {
        AcyclicCover c;
        c.classes = field<std::vector<std::vector<int>>>(w, "classes");
        c.orders = field<std::vector<std::vector<int>>>(w, "orders");
        f.certificate = c;
    } else {
        SubsetCertificate c;
        c.kind = parse_subset_kind(f.kind);
        c.vertices = field<std::vector<int>>(w, "vertices");
        if (w.contains("order")) {
            c.order = field<std::vector<int>>(w, "order");
        }
        f.certificate = c;
    }
    return f;
}

std::string report_csv(const BoundReport& r) {
    std::ostringstream out;
    out << "t,chi,chi_status,chidir,chidir_status,chidirf_exact,root_chi,root_chidir,root_chidirf\n";
    auto cell_value = [](const Cell& c) -> std::string {
        if (!c.computed) {
            return "";
        }
        return c.optimal ? std::to_string(c.upper) : std::to_string(c.lower) + ".." + std::to_string(c.upper);
    };
    auto root = [](double log2_value, int t) {
        std::ostringstream s;
        s.precision(6);
        s << display(log2_value / t);
        return s.str();
    };
    for (const auto& row : r.per_t) {
        out << row.t << ',' << cell_value(row.chi) << ',' << row.chi.status() << ',' << cell_value(row.chidir) << ','
            << row.chidir.status() << ',' << (row.chidirf ? row.chidirf->str() : "") << ','
            << (row.chi.computed ? root(std::log2(row.chi.upper), row.t) : "") << ','
            << (row.chidir.computed ? root(std::log2(row.chidir.upper), row.t) : "") << ','
            << (row.chidirf ? root(row.chidirf->log2(), row.t) : "") << '\n';
    }
    return out.str();
}

}  // namespace dilworth
