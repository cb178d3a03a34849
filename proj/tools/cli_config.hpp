#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gt/fuchsian.hpp"

namespace gtcli {

struct CliConfig {
    std::optional<gt::TeichPoint> traces;
    std::optional<std::pair<gt::Mat2, gt::Mat2>> generators;
    gt::WeightedMulticurve lambda;
    gt::WeightedMulticurve mu;
    std::vector<double> grid;  // empty when absent
    std::optional<std::vector<std::string>> words;
    int samples = 9;
    gt::Geometry geometry = gt::Geometry::HP;
    double t = 1.0;

    // Throws BadTraces for traces or generators off the Teichmueller space.
    gt::FuchsianGroup group() const;
};

// Syntax errors report line and column, structural errors the field path;
// malformed trace triples raise BadTraces, bad words BadWord.
CliConfig parse_config(const std::string& text);
CliConfig load_config(const std::string& path);

nlohmann::json multicurve_json(const gt::WeightedMulticurve& mc);

}  // namespace gtcli
