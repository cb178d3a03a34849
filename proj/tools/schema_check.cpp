#include "schema_check.hpp"

#include <map>

#include "gt/error.hpp"
#include "schema_data.hpp"

namespace gtcli {

namespace {

using nlohmann::json;

bool has_type(const json& v, const std::string& t)
{
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer() || (v.is_number_float() && v.get<double>() == static_cast<long long>(v.get<double>()));
    return false;
}

const json& resolve(const json& root, const json& schema)
{
    if (!schema.is_object() || !schema.contains("$ref")) return schema;
    std::string ref = schema.at("$ref").get<std::string>();
    if (ref.rfind("#", 0) != 0) throw gt::Error(gt::ErrorCode::ConfigError, "only local schema references are supported");
    return root.at(json::json_pointer(ref.substr(1)));
}

void check(const json& v, const json& raw, const json& root, const std::string& path, std::vector<std::string>& errs)
{
    const json& s = resolve(root, raw);
    if (!s.is_object()) return;
    std::string where = path.empty() ? "/" : path;

    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
        } else {
            ok = has_type(v, s["type"].get<std::string>());
        }
        if (!ok) {
            errs.push_back(where + ": expected type " + s["type"].dump());
            return;
        }
    }
    if (s.contains("enum")) {
        bool found = false;
        for (const auto& e : s["enum"]) found = found || e == v;
        if (!found) errs.push_back(where + ": value not in " + s["enum"].dump());
    }
    if (v.is_number()) {
        double x = v.get<double>();
        if (s.contains("minimum") && x < s["minimum"].get<double>()) errs.push_back(where + ": below minimum");
        if (s.contains("maximum") && x > s["maximum"].get<double>()) errs.push_back(where + ": above maximum");
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& r : s["required"])
                if (!v.contains(r.get<std::string>())) errs.push_back(where + ": missing field '" + r.get<std::string>() + "'");
        const json props = s.value("properties", json::object());
        bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
        for (auto it = v.begin(); it != v.end(); ++it) {
            std::string sub = path + "/" + it.key();
            if (props.contains(it.key()))
                check(it.value(), props[it.key()], root, sub, errs);
            else if (closed)
                errs.push_back(sub + ": unknown field");
        }
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>())
            errs.push_back(where + ": needs at least " + s["minItems"].dump() + " items");
        if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>())
            errs.push_back(where + ": allows at most " + s["maxItems"].dump() + " items");
        if (s.contains("items"))
            for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], root, path + "/" + std::to_string(i), errs);
    }
}

}  // namespace

std::vector<std::string> schema_errors(const nlohmann::json& value, const nlohmann::json& schema)
{
    std::vector<std::string> errs;
    check(value, schema, schema, "", errs);
    return errs;
}

const nlohmann::json& builtin_schema(const std::string& name)
{
    static std::map<std::string, nlohmann::json> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    for (const auto& e : kSchemas)
        if (name == e.name) return cache.emplace(name, nlohmann::json::parse(e.text)).first->second;
    throw gt::Error(gt::ErrorCode::ConfigError, "no schema named " + name);
}

void require_valid(const nlohmann::json& value, const std::string& schema_name)
{
    auto errs = schema_errors(value, builtin_schema(schema_name));
    if (errs.empty()) return;
    std::string msg = schema_name + " schema violation";
    for (const auto& e : errs) msg += "\n  " + e;
    throw gt::Error(gt::ErrorCode::ConfigError, msg);
}

}  // namespace gtcli
