#include "cli_config.hpp"

#include <fstream>
#include <sstream>

#include "gt/error.hpp"
#include "schema_check.hpp"

namespace gtcli {

namespace {

using nlohmann::json;
using gt::Error;
using gt::ErrorCode;

std::pair<int, int> line_column(const std::string& text, std::size_t byte)
{
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

gt::WeightedMulticurve read_multicurve(const json& arr, const std::string& field)
{
    gt::WeightedMulticurve mc;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string w = arr[i].at("word").get<std::string>();
        double weight = arr[i].at("weight").get<double>();
        std::string where = field + "/" + std::to_string(i);
        try {
            gt::validate_word(w);
        } catch (const Error& e) {
            throw Error(ErrorCode::BadWord, "field " + where + "/word: " + e.what());
        }
        if (gt::reduce_word(w).empty()) throw Error(ErrorCode::BadWord, "field " + where + "/word: trivial word");
        if (!(weight > 0.0)) throw Error(ErrorCode::ConfigError, "field " + where + "/weight: must be positive");
        mc.components.push_back({w, weight});
    }
    return mc;
}

}  // namespace

gt::FuchsianGroup CliConfig::group() const
{
    if (generators) return gt::punctured_torus_from_generators(generators->first, generators->second);
    return gt::build_punctured_torus(traces.value_or(gt::TeichPoint{}));
}

CliConfig parse_config(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte);
        throw Error(ErrorCode::ConfigError,
                    "config syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
    }

    // Trace triples get their own diagnostic before the generic schema pass.
    if (j.is_object() && j.contains("traces")) {
        const json& tr = j["traces"];
        if (!tr.is_array() || tr.size() != 3)
            throw Error(ErrorCode::BadTraces, "field /traces: expected an array of three numbers");
        for (std::size_t i = 0; i < 3; ++i)
            if (!tr[i].is_number())
                throw Error(ErrorCode::BadTraces, "field /traces/" + std::to_string(i) + ": expected a number");
    }
    require_valid(j, "config");
    if (j.contains("traces") && j.contains("generators"))
        throw Error(ErrorCode::ConfigError, "fields /traces and /generators are mutually exclusive");

    CliConfig c;
    if (j.contains("traces")) {
        auto v = j["traces"].get<std::vector<double>>();
        c.traces = gt::TeichPoint{v[0], v[1], v[2]};
    }
    if (j.contains("generators")) {
        gt::Mat2 m[2];
        for (int k = 0; k < 2; ++k)
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s) m[k](r, s) = j["generators"][k][r][s].get<double>();
        c.generators = std::make_pair(m[0], m[1]);
    }
    const json& mcs = j["multicurves"];
    c.lambda = read_multicurve(mcs["lambda"], "/multicurves/lambda");
    if (c.lambda.components.empty()) throw Error(ErrorCode::ConfigError, "field /multicurves/lambda: empty multicurve");
    if (mcs.contains("mu")) c.mu = read_multicurve(mcs["mu"], "/multicurves/mu");
    if (j.contains("grid")) {
        c.grid = j["grid"].get<std::vector<double>>();
        for (std::size_t i = 0; i < c.grid.size(); ++i)
            if (c.grid[i] == 0.0) throw Error(ErrorCode::ConfigError, "field /grid/" + std::to_string(i) + ": t must be nonzero");
    }
    if (j.contains("words")) {
        c.words = j["words"].get<std::vector<std::string>>();
        for (std::size_t i = 0; i < c.words->size(); ++i) {
            try {
                gt::validate_word((*c.words)[i]);
            } catch (const Error& e) {
                throw Error(ErrorCode::BadWord, "field /words/" + std::to_string(i) + ": " + e.what());
            }
        }
    }
    if (j.contains("samples")) c.samples = j["samples"].get<int>();
    if (j.contains("geometry")) {
        std::string g = j["geometry"].get<std::string>();
        c.geometry = g == "Hyp" ? gt::Geometry::Hyp : g == "AdS" ? gt::Geometry::AdS : gt::Geometry::HP;
    }
    if (j.contains("t")) c.t = j["t"].get<double>();
    return c;
}

CliConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

nlohmann::json multicurve_json(const gt::WeightedMulticurve& mc)
{
    json a = json::array();
    for (const auto& c : mc.components) a.push_back({{"word", c.word}, {"weight", c.weight}});
    return a;
}

}  // namespace gtcli
