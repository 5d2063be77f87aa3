#pragma once

#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "dilworth/bounds.hpp"
#include "dilworth/certificates.hpp"
#include "dilworth/exact_params.hpp"
#include "dilworth/fractional.hpp"

namespace dilworth {

using json = nlohmann::json;

/// Rounds to 6 significant digits so emitted floats are stable.
double display(double x);

json to_json(const Coloring& c);
json to_json(const AcyclicCover& c);
json to_json(const SubsetCertificate& c);
json to_json(const RootValue& v);
json to_json(const Bound& b);
json to_json(const Cell& c);
json to_json(const BoundReport& r);
json to_json(const SetSystem& sys, const LPSolution& sol);

using AnyCertificate = std::variant<Coloring, AcyclicCover, SubsetCertificate>;

struct CertificateFile {
    std::string kind;
    std::string graph_hash;
    std::optional<int> value;
    bool optimal = false;
    AnyCertificate certificate;
};

/// {"kind", "graph_hash", "value", "witness", "optimal"}.
json certificate_json(const AnyCertificate& cert, const std::string& graph_hash, int value, bool optimal);

/// Throws MalformedCertificate on missing or mistyped fields.
CertificateFile parse_certificate(const json& j);

/// Solver result with its certificate in the file format above.
template <typename Cert>
json result_json(const Solved<Cert>& r, const std::string& graph_hash) {
    json j = certificate_json(AnyCertificate(r.certificate), graph_hash, r.value, r.optimal);
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["nodes"] = r.nodes;
    j["proof"] = r.proof;
    return j;
}

/// CSV with columns t, chi, chi_status, chidir, chidir_status, chidirf_exact,
/// root_chi, root_chidir, root_chidirf.
std::string report_csv(const BoundReport& r);

}  // namespace dilworth
