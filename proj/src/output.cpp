#include "gstir/output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gstir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_double(double d) {
    if (std::isnan(d)) {
        return "nan";
    }
    if (std::isinf(d)) {
        return d > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

}  // namespace

nlohmann::ordered_json to_json(const Value& v) {
    return std::visit(overloaded{
                          [](const Integer& i) { return nlohmann::ordered_json(i.get_str()); },
                          [](long l) { return nlohmann::ordered_json(l); },
                          [](double d) {
                              return std::isfinite(d) ? nlohmann::ordered_json(d)
                                                      : nlohmann::ordered_json(nullptr);
                          },
                          [](bool b) { return nlohmann::ordered_json(b); },
                          [](const std::string& s) { return nlohmann::ordered_json(s); },
                      },
                      v);
}

std::string to_text(const Value& v) {
    return std::visit(overloaded{
                          [](const Integer& i) { return i.get_str(); },
                          [](long l) { return std::to_string(l); },
                          [](double d) { return format_double(d); },
                          [](bool b) { return std::string(b ? "true" : "false"); },
                          [](const std::string& s) { return s; },
                      },
                      v);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

nlohmann::ordered_json OutputRecord::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) {
        j["parameters"][k] = gstir::to_json(v);
    }
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    for (const auto& [k, v] : summary) {
        payload[k] = gstir::to_json(v);
    }
    if (!columns.empty()) {
        auto table = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) {
                obj[columns[i]] = gstir::to_json(row[i]);
            }
            table.push_back(std::move(obj));
        }
        payload["rows"] = std::move(table);
    }
    j["payload"] = std::move(payload);
    return j;
}

std::string OutputRecord::to_csv() const {
    std::ostringstream os;
    const auto write_row = [&os](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) {
                os << ',';
            }
            os << csv_escape(fields[i]);
        }
        os << "\r\n";
    };
    if (columns.empty()) {
        write_row({"key", "value"});
        for (const auto& [k, v] : summary) {
            write_row({k, to_text(v)});
        }
        return os.str();
    }
    write_row(columns);
    for (const auto& row : rows) {
        std::vector<std::string> fields;
        fields.reserve(row.size());
        for (const auto& v : row) {
            fields.push_back(to_text(v));
        }
        write_row(fields);
    }
    return os.str();
}

}  // namespace gstir
