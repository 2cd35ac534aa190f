#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gstir/combinatorics.hpp"

namespace gstir {

// Exact integers stay Integer and are always rendered as decimal strings.
using Value = std::variant<Integer, long, double, bool, std::string>;

using Field = std::pair<std::string, Value>;

/// One command's machine-readable result.
struct OutputRecord {
    std::string command;
    std::vector<Field> parameters;
    std::vector<Field> summary;
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;

    // {"command", "parameters", "payload"}; payload holds the summary fields
    // and, when columns are set, "rows" as a list of objects.
    nlohmann::ordered_json to_json() const;
    // Header plus one record per row; a record without a table is written as
    // key,value pairs of its summary.
    std::string to_csv() const;
};

nlohmann::ordered_json to_json(const Value& v);
// CSV text for a value; doubles use 17 significant digits.
std::string to_text(const Value& v);
std::string csv_escape(const std::string& field);

}  // namespace gstir
