#include "speczeta/serialize.hpp"

#include <sstream>

#include "speczeta/errors.hpp"

namespace speczeta {

Json rational_to_json(const Rational& q)
{
    return format_rational(q);
}

Rational rational_from_json(const Json& j)
{
    if (!j.is_string())
        throw Error("rational_from_json: expected a \"p/q\" string");
    const std::string text = j.get<std::string>();
    const auto parsed      = parse_rational(text);
    if (!parsed)
        throw Error("rational_from_json: malformed rational \"" + text + "\"");
    return *parsed;
}

Json cycnum_to_json(const CycNum& z)
{
    if (z.is_rational())
        return rational_to_json(z.as_rational());
    Json coeffs = Json::array();
    for (const Rational& c : z.coeffs())
        coeffs.push_back(rational_to_json(c));
    Json out;
    out["conductor"] = z.conductor();
    out["coeffs"]    = std::move(coeffs);
    return out;
}

CycNum cycnum_from_json(const Json& j)
{
    if (j.is_string())
        return CycNum::from_powers(1, {rational_from_json(j)});
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw Error("cycnum_from_json: expected \"p/q\" or {conductor, coeffs}");
    const auto conductor = j.at("conductor").get<unsigned long>();
    std::vector<Rational> coeffs;
    for (const Json& c : j.at("coeffs"))
        coeffs.push_back(rational_from_json(c));
    return CycNum::from_powers(conductor, std::move(coeffs));
}

Json special_value_to_json(const SpecialValue& v)
{
    Json out;
    out["pi_power"] = v.pi_power;
    out["coeff"]    = cycnum_to_json(v.coeff);
    return out;
}

SpecialValue special_value_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("pi_power") || !j.contains("coeff"))
        throw Error("special_value_from_json: expected {pi_power, coeff}");
    return SpecialValue{j.at("pi_power").get<int>(), cycnum_from_json(j.at("coeff"))};
}

Json character_to_json(const DirichletCharacter& chi, unsigned long index)
{
    Json out;
    out["index"]     = index;
    out["exponents"] = chi.exponents;
    out["order"]     = chi.order;
    out["parity"]    = chi.even ? "even" : "odd";
    out["conductor"] = conductor(chi);
    out["primitive"] = is_primitive(chi);
    return out;
}

Json report_entry_to_json(const ReportEntry& entry)
{
    Json params = Json::object();
    for (const auto& [key, value] : entry.parameters)
        params[key] = value;
    Json out;
    out["check_name"] = entry.check_name;
    out["parameters"] = std::move(params);
    out["status"]     = entry.pass ? "pass" : "fail";
    out["lhs"]        = entry.lhs;
    out["rhs"]        = entry.rhs;
    out["elapsed_ms"] = entry.elapsed_ms;
    return out;
}

ReportEntry report_entry_from_json(const Json& j)
{
    ReportEntry entry;
    entry.check_name = j.at("check_name").get<std::string>();
    for (const auto& [key, value] : j.at("parameters").items())
        entry.parameters.emplace_back(key, value.get<std::string>());
    entry.pass       = j.at("status").get<std::string>() == "pass";
    entry.lhs        = j.at("lhs").get<std::string>();
    entry.rhs        = j.at("rhs").get<std::string>();
    entry.elapsed_ms = j.at("elapsed_ms").get<double>();
    return entry;
}

std::string csv_escape(const std::string& field)
{
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out += ',';
        out += csv_escape(fields[i]);
    }
    return out + "\n";
}

std::string report_entry_csv_header()
{
    return csv_row({"check_name", "parameters", "status", "lhs", "rhs", "elapsed_ms"});
}

std::string report_entry_to_csv(const ReportEntry& entry)
{
    std::string params;
    for (const auto& [key, value] : entry.parameters) {
        if (!params.empty())
            params += ';';
        params += key + "=" + value;
    }
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << entry.elapsed_ms;
    return csv_row({entry.check_name, params, entry.pass ? "pass" : "fail", entry.lhs,
                    entry.rhs, ms.str()});
}

}  // namespace speczeta
