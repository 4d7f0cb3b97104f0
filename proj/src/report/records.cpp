#include "hydromoments/records.hpp"

#include "hydromoments/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace hydro::report {

namespace {

std::string trim_zeros(std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

std::string json_number(std::optional<double> x) {
    if (!x || !std::isfinite(*x)) return "null";
    return format_number(*x);
}

std::string csv_optional(std::optional<double> x) { return x ? format_number(*x) : std::string(); }

std::optional<double> optional_number(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

CellRecord from_json_object(const nlohmann::json& j) {
    CellRecord r;
    r.n = j.at("n").get<int>();
    r.l = j.at("l").get<int>();
    r.D = j.at("D").get<int>();
    r.Z = j.at("Z").get<double>();
    r.alpha = optional_number(j, "alpha");
    r.space = parse_space(j.at("space").get<std::string>());
    r.method = parse_method(j.at("method").get<std::string>());
    const auto& v = j.at("value");
    if (v.is_string()) {
        r.exactValue = v.get<std::string>();
        r.value = specfun::toDouble(specfun::parseRational(*r.exactValue));
    } else {
        r.value = v.is_null() ? NAN : v.get<double>();
    }
    r.reference = optional_number(j, "reference");
    r.relDeviation = optional_number(j, "rel_deviation");
    return r;
}

}  // namespace

double relative_deviation(double value, double reference) {
    const double diff = std::fabs(value - reference);
    return reference == 0.0 ? diff : diff / std::fabs(reference);
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    std::string sci(buf);
    const auto e = sci.find('e');
    const int exponent = std::stoi(sci.substr(e + 1));
    if (std::abs(exponent) >= 6) return trim_zeros(sci.substr(0, e)) + "e" + std::to_string(exponent);
    std::snprintf(buf, sizeof buf, "%.*f", std::max(0, 11 - exponent), x);
    return trim_zeros(buf);
}

std::string csv_header() { return "n,l,D,Z,alpha,space,method,value,reference,rel_deviation"; }

std::string to_csv(const CellRecord& r) {
    std::ostringstream os;
    os << r.n << ',' << r.l << ',' << r.D << ',' << format_number(r.Z) << ',' << (r.alpha ? format_number(*r.alpha) : "log")
       << ',' << to_string(r.space) << ',' << to_string(r.method) << ','
       << (r.exactValue ? *r.exactValue : format_number(r.value)) << ',' << csv_optional(r.reference) << ','
       << csv_optional(r.relDeviation);
    return os.str();
}

std::string to_json(const CellRecord& r) {
    std::ostringstream os;
    os << "{\"n\":" << r.n << ",\"l\":" << r.l << ",\"D\":" << r.D << ",\"Z\":" << format_number(r.Z)
       << ",\"alpha\":" << json_number(r.alpha) << ",\"space\":\"" << to_string(r.space) << "\",\"method\":\""
       << to_string(r.method) << "\",\"value\":";
    if (r.exactValue)
        os << '"' << *r.exactValue << '"';
    else
        os << json_number(r.value);
    os << ",\"reference\":" << json_number(r.reference) << ",\"rel_deviation\":" << json_number(r.relDeviation) << '}';
    return os.str();
}

std::string to_json(const std::vector<CellRecord>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",\n ";
        out += to_json(rows[i]);
    }
    return out + "]";
}

CellRecord record_from_json(const std::string& text) {
    try {
        return from_json_object(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed record: ") + e.what());
    }
}

std::vector<CellRecord> records_from_json(const std::string& text) {
    try {
        std::vector<CellRecord> rows;
        for (const auto& j : nlohmann::json::parse(text)) rows.push_back(from_json_object(j));
        return rows;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed record array: ") + e.what());
    }
}

Space parse_space(const std::string& text) {
    if (text == "position") return Space::position;
    if (text == "momentum") return Space::momentum;
    throw ValidationError("space must be position or momentum, got '" + text + "'");
}

Method parse_method(const std::string& text) {
    for (Method m : {Method::exact, Method::closedForm, Method::largeD, Method::rydberg, Method::oracle})
        if (to_string(m) == text) return m;
    throw ValidationError("unknown method '" + text + "'");
}

bool record_less(const CellRecord& a, const CellRecord& b) {
    auto key = [](const CellRecord& r) {
        return std::make_tuple(r.n, r.l, r.D, r.Z, !r.alpha.has_value(), r.alpha.value_or(0.0), int(r.space),
                               int(r.method));
    };
    return key(a) < key(b);
}

}  // namespace hydro::report
