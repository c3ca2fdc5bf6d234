#pragma once

#include "gwci/wci.hpp"

#include <optional>
#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace gwci {

using json = nlohmann::ordered_json;

json order_to_json(const MonomialOrder& ord, const std::vector<std::string>& vars);
MonomialOrder order_from_json(const json& j, const std::vector<std::string>& vars);

json expansion_to_json(const GExpansion& E, const GFrame& F);
json koszul_to_json(const KoszulElement& w, const GFrame& F);
KoszulElement koszul_from_json(const json& j, const GFrame& F);
json total_to_json(const TotalElement& w, const GFrame& F);
json generator_set_to_json(const GeneratorSet& S, const GFrame& F);
json resolution_to_json(const FreeResolution& R, const GFrame& F);
json massey_to_json(const MasseyTable& T, const GFrame& F);
MasseyTable massey_from_json(const json& j, const GFrame& F);

// One flat file per problem: ring, sequence, optional ideal, optional
// resolution, optional massey table, optional query polynomials.
struct ProblemFile {
    std::vector<std::string> vars;
    MonomialOrder order;
    std::vector<Poly> g;
    std::vector<Poly> ideal;
    std::optional<FreeResolution> resolution;
    std::optional<json> massey; // parsed against the frame on demand
    std::vector<std::string> queries;

    GFrame frame() const;
    bool has_ideal() const { return !ideal.empty(); }
};

ProblemFile load_problem(const std::string& path);
ProblemFile problem_from_json(const json& j);

} // namespace gwci
