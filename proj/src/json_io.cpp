#include "captrans/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace captrans {

using nlohmann::json;

std::string format_number(double v) {
    if (v == 0.0) return "0";  // covers negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

double number_of(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError("expected a number at " + where);
    return j.get<double>();
}

Universe universe_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("universe block must be an object");
    int n = int_field(j, "n");
    if (n < 1) throw ParseError("universe size must be positive");
    auto it = j.find("labels");
    try {
        if (it == j.end() || it->is_null()) return Universe(n);
        if (!it->is_array()) throw ParseError("labels must be an array of strings");
        std::vector<std::string> labels;
        for (const auto& e : *it) {
            if (!e.is_string()) throw ParseError("labels must be an array of strings");
            labels.push_back(e.get<std::string>());
        }
        return Universe(n, std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string universe_to_json(const Universe& u) {
    std::string out = "{\"n\": " + std::to_string(u.size()) + ", \"labels\": [";
    for (int i = 0; i < u.size(); ++i) {
        if (i) out += ", ";
        out += quote(u.label(i));
    }
    return out + "]}";
}

}  // namespace

Subset parse_subset_key(const std::string& key, const Universe& u) {
    if (key.empty()) throw ParseError("empty subset key");
    if (std::all_of(key.begin(), key.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
        errno = 0;
        char* end = nullptr;
        unsigned long v = std::strtoul(key.c_str(), &end, 10);
        if (errno != 0 || *end != '\0' || v >= u.subset_count()) {
            throw ParseError("subset key '" + key + "' is out of range for n=" +
                             std::to_string(u.size()));
        }
        return static_cast<Subset>(v);
    }
    Subset s = 0;
    std::size_t start = 0;
    while (start <= key.size()) {
        std::size_t plus = key.find('+', start);
        std::string part = key.substr(start, plus == std::string::npos ? plus : plus - start);
        if (part.empty()) throw ParseError("subset key '" + key + "' has an empty component");
        int idx = -1;
        for (int i = 0; i < u.size(); ++i) {
            if (u.label(i) == part) {
                idx = i;
                break;
            }
        }
        if (idx < 0) throw ParseError("unknown element label '" + part + "' in key '" + key + "'");
        Subset bit = Subset{1} << idx;
        if (s & bit) throw ParseError("element '" + part + "' repeats in key '" + key + "'");
        s |= bit;
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return s;
}

std::string subset_key(Subset s, const Universe& u) {
    if (s == 0) return "0";
    std::string out;
    for (int i = 0; i < u.size(); ++i) {
        if (s & (Subset{1} << i)) {
            if (!out.empty()) out += "+";
            out += u.label(i);
        }
    }
    return out;
}

Capacity measure_from_json_text(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("measure file must be a JSON object");
    Universe u = universe_from_json(j);
    const json& values = field(j, "values");
    if (!values.is_object()) throw ParseError("'values' must be an object keyed by subset");

    std::vector<double> out(u.subset_count(), 0.0);
    std::vector<bool> seen(u.subset_count(), false);
    for (auto it = values.begin(); it != values.end(); ++it) {
        Subset s = parse_subset_key(it.key(), u);
        if (seen[s]) throw ParseError("subset '" + it.key() + "' listed twice");
        seen[s] = true;
        out[s] = number_of(it.value(), "subset '" + it.key() + "'");
    }
    for (Subset s = 1; s < u.subset_count(); ++s) {
        if (!seen[s]) {
            throw ParseError("no value for subset '" + subset_key(s, u) + "'");
        }
    }
    return validate_capacity(std::move(out), u);
}

Capacity measure_from_file(const std::string& path) {
    return measure_from_json_text(read_text_file(path));
}

std::string measure_to_json_text(const Capacity& mu) {
    const Universe& u = mu.universe();
    std::string out = "{\n  \"n\": " + std::to_string(u.size()) + ",\n  \"labels\": [";
    for (int i = 0; i < u.size(); ++i) {
        if (i) out += ", ";
        out += quote(u.label(i));
    }
    out += "],\n  \"values\": {\n";
    for (Subset s = 1; s < u.subset_count(); ++s) {
        out += "    " + quote(subset_key(s, u)) + ": " + format_number(mu.at(s));
        out += (s + 1 < u.subset_count()) ? ",\n" : "\n";
    }
    return out + "  }\n}\n";
}

namespace {

const char* kind_name(VectorKind k) {
    switch (k) {
        case VectorKind::Generic: return "generic";
        case VectorKind::Mobius: return "mobius";
        case VectorKind::MaxPlus: return "maxplus";
        case VectorKind::Bpa: return "bpa";
    }
    return "?";
}

}  // namespace

std::string setvector_to_json_text(const SetVector& v) {
    const Universe& u = v.universe();
    std::string out = "{\n  \"n\": " + std::to_string(u.size()) + ",\n  \"labels\": [";
    for (int i = 0; i < u.size(); ++i) {
        if (i) out += ", ";
        out += quote(u.label(i));
    }
    out += "],\n  \"kind\": " + quote(kind_name(v.kind())) + ",\n  \"values\": {\n";
    for (Subset s = 1; s < u.subset_count(); ++s) {
        out += "    " + quote(subset_key(s, u)) + ": " + format_number(v.at(s));
        out += (s + 1 < u.subset_count()) ? ",\n" : "\n";
    }
    return out + "  }\n}\n";
}

std::string plan_to_json_text(const TransportPlan& plan) {
    if (plan.method == Method::Classical) {
        throw std::invalid_argument("only subset-level plans serialize to plan files");
    }
    std::string out = "{\n";
    out += "  \"method\": " + quote(to_string(plan.method)) + ",\n";
    out += "  \"status\": " + quote(to_string(plan.status)) + ",\n";
    out += "  \"objective\": " + format_number(plan.objective) + ",\n";
    out += "  \"x\": " + universe_to_json(plan.x) + ",\n";
    out += "  \"y\": " + universe_to_json(plan.y) + ",\n";
    out += "  \"assg\": [";
    bool first = true;
    for (Subset a = 1; a < plan.x.subset_count(); ++a) {
        for (Subset b = 1; b < plan.y.subset_count(); ++b) {
            double m = plan.at(a, b);
            if (m == 0.0) continue;
            out += first ? "\n" : ",\n";
            first = false;
            out += "    {\"from\": " + quote(subset_key(a, plan.x)) +
                   ", \"to\": " + quote(subset_key(b, plan.y)) +
                   ", \"mass\": " + format_number(m) + "}";
        }
    }
    out += first ? "]" : "\n  ]";
    if (plan.method == Method::MaxPlus) {
        out += ",\n  \"lack_mu\": {";
        first = true;
        for (Subset a = 1; a < plan.x.subset_count(); ++a) {
            if (plan.lack_mu(a) == 0.0) continue;
            out += first ? "\n" : ",\n";
            first = false;
            out += "    " + quote(subset_key(a, plan.x)) + ": " + format_number(plan.lack_mu(a));
        }
        out += first ? "}" : "\n  }";
        out += ",\n  \"lack_nu\": {";
        first = true;
        for (Subset b = 1; b < plan.y.subset_count(); ++b) {
            if (plan.lack_nu(b) == 0.0) continue;
            out += first ? "\n" : ",\n";
            first = false;
            out += "    " + quote(subset_key(b, plan.y)) + ": " + format_number(plan.lack_nu(b));
        }
        out += first ? "}" : "\n  }";
    }
    return out + "\n}\n";
}

TransportPlan plan_from_json_text(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("plan file must be a JSON object");
    const json& method_field = field(j, "method");
    if (!method_field.is_string()) throw ParseError("'method' must be a string");
    Method method;
    try {
        method = method_from_string(method_field.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (method == Method::Classical) {
        throw ParseError("plan files hold subset-level methods only");
    }
    Universe x = universe_from_json(field(j, "x"));
    Universe y = universe_from_json(field(j, "y"));
    TransportPlan plan(x, y, method);
    plan.objective = number_of(field(j, "objective"), "'objective'");

    auto st = j.find("status");
    if (st != j.end()) {
        if (!st->is_string()) throw ParseError("'status' must be a string");
        std::string s = st->get<std::string>();
        if (s == "optimal") plan.status = LPStatus::Optimal;
        else if (s == "infeasible") plan.status = LPStatus::Infeasible;
        else if (s == "unbounded") plan.status = LPStatus::Unbounded;
        else if (s == "iteration_limit") plan.status = LPStatus::IterationLimit;
        else throw ParseError("unknown status '" + s + "'");
    }

    std::vector<bool> seen(x.subset_count() * y.subset_count(), false);
    auto put = [&](Subset a, Subset b, double m, const std::string& where) {
        std::size_t at = static_cast<std::size_t>(a) * y.subset_count() + b;
        if (seen[at]) throw ParseError("pair listed twice at " + where);
        seen[at] = true;
        plan.set(a, b, m);
    };

    const json& assg = field(j, "assg");
    if (!assg.is_array()) throw ParseError("'assg' must be an array");
    for (const auto& e : assg) {
        if (!e.is_object()) throw ParseError("'assg' entries must be objects");
        const json& from = field(e, "from");
        const json& to = field(e, "to");
        if (!from.is_string() || !to.is_string()) {
            throw ParseError("'from' and 'to' must be subset keys");
        }
        Subset a = parse_subset_key(from.get<std::string>(), x);
        Subset b = parse_subset_key(to.get<std::string>(), y);
        double m = number_of(field(e, "mass"), "assg entry");
        put(a, b, m, "(" + from.get<std::string>() + ", " + to.get<std::string>() + ")");
    }
    auto lack = [&](const char* name, bool row) {
        auto it = j.find(name);
        if (it == j.end()) return;
        if (!it->is_object()) throw ParseError(std::string("'") + name + "' must be an object");
        for (auto e = it->begin(); e != it->end(); ++e) {
            const Universe& u = row ? x : y;
            Subset s = parse_subset_key(e.key(), u);
            double m = number_of(e.value(), std::string(name) + " entry");
            if (row) {
                put(s, 0, m, std::string(name) + "[" + e.key() + "]");
            } else {
                put(0, s, m, std::string(name) + "[" + e.key() + "]");
            }
        }
    };
    lack("lack_mu", true);
    lack("lack_nu", false);
    return plan;
}

CostMatrix cost_from_json_text(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("cost file must be a JSON object");
    Universe x = universe_from_json(field(j, "x"));
    Universe y = universe_from_json(field(j, "y"));
    std::vector<double> v(static_cast<std::size_t>(x.subset_count()) * y.subset_count(), 0.0);
    const json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("'entries' must be an array");
    std::vector<bool> seen(v.size(), false);
    for (const auto& e : entries) {
        if (!e.is_object()) throw ParseError("'entries' items must be objects");
        const json& from = field(e, "from");
        const json& to = field(e, "to");
        if (!from.is_string() || !to.is_string()) {
            throw ParseError("'from' and 'to' must be subset keys");
        }
        Subset a = parse_subset_key(from.get<std::string>(), x);
        Subset b = parse_subset_key(to.get<std::string>(), y);
        std::size_t at = static_cast<std::size_t>(a) * y.subset_count() + b;
        if (seen[at]) {
            throw ParseError("cost pair (" + from.get<std::string>() + ", " +
                             to.get<std::string>() + ") listed twice");
        }
        seen[at] = true;
        v[at] = number_of(field(e, "cost"), "cost entry");
    }
    return CostMatrix(x, y, std::move(v));
}

CostMatrix cost_from_file(const std::string& path) {
    return cost_from_json_text(read_text_file(path));
}

std::string cost_to_json_text(const CostMatrix& c) {
    std::string out = "{\n  \"x\": " + universe_to_json(c.x()) + ",\n  \"y\": " +
                      universe_to_json(c.y()) + ",\n  \"entries\": [";
    bool first = true;
    for (Subset a = 0; a < c.x().subset_count(); ++a) {
        for (Subset b = 0; b < c.y().subset_count(); ++b) {
            if (c.at(a, b) == 0.0) continue;
            out += first ? "\n" : ",\n";
            first = false;
            out += "    {\"from\": " + quote(subset_key(a, c.x())) +
                   ", \"to\": " + quote(subset_key(b, c.y())) +
                   ", \"cost\": " + format_number(c.at(a, b)) + "}";
        }
    }
    out += first ? "]" : "\n  ]";
    return out + "\n}\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace captrans
