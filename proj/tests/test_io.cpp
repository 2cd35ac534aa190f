#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>

#include "gstir/bell_cache.hpp"
#include "gstir/combinatorics.hpp"
#include "gstir/output.hpp"

using gstir::BellSequence;
using gstir::CacheFormatError;
using gstir::Integer;

namespace {

std::size_t error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        gstir::read_bell_cache(in);
    } catch (const CacheFormatError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("bell cache round trip") {
    BellSequence seq;
    seq.extend_to(100);
    std::ostringstream out;
    gstir::write_bell_cache(out, seq);
    std::istringstream in(out.str());
    CHECK(gstir::read_bell_cache(in).values() == seq.values());

    const auto path = std::filesystem::temp_directory_path() / "gstir_test_bell.cache";
    gstir::save_bell_cache(path, seq);
    CHECK(gstir::load_bell_cache(path).values() == seq.values());
    std::filesystem::remove(path);
}

TEST_CASE("bell cache text is bit-exact") {
    BellSequence seq;
    seq.extend_to(4);
    std::ostringstream out;
    gstir::write_bell_cache(out, seq);
    CHECK(out.str() == "BELLCACHE v1\n1\n1\n2\n5\n15\n");
}

TEST_CASE("header-only cache holds B_0") {
    std::istringstream in("BELLCACHE v1\n");
    const auto seq = gstir::read_bell_cache(in);
    CHECK(seq.values() == std::vector<Integer>{1});
}

TEST_CASE("bell cache format errors name the line") {
    CHECK(error_line("BELLCACHE v1\n1\n1\n12x\n") == 4);
    CHECK(error_line("") == 1);
    CHECK(error_line("BELLCACHE v2\n1\n") == 1);
    CHECK(error_line("BELLCACHE v1\n1\n1") == 3);
    CHECK(error_line("BELLCACHE v1\n1 \n") == 2);
    CHECK(error_line("BELLCACHE v1\n2\n") == 2);
    CHECK(error_line("BELLCACHE v1\n1\n1\n2\n6\n") == 5);
    CHECK(error_line("BELLCACHE v1\n1\n\n") == 3);
    CHECK_THROWS_AS(gstir::load_bell_cache("/nonexistent/gstir.cache"), std::runtime_error);
}

TEST_CASE("JSON output keeps big integers as strings") {
    gstir::OutputRecord rec;
    rec.command = "table";
    rec.parameters = {{"graph", std::string("Cycle(4)")}, {"n", 4L}};
    rec.summary = {{"bell", gstir::bell(40)}, {"ok", true}, {"x", 0.5}};
    rec.columns = {"k", "value"};
    rec.rows = {{2L, Integer(1)}, {3L, Integer(2)}};
    const auto j = rec.to_json();
    CHECK(j.at("command") == "table");
    CHECK(j.at("parameters").at("n") == 4);
    CHECK(j.at("payload").at("bell").is_string());
    CHECK(j.at("payload").at("bell") == gstir::bell(40).get_str());
    CHECK(j.at("payload").at("rows").size() == 2);
    CHECK(j.at("payload").at("rows")[1].at("value") == "2");
    CHECK(nlohmann::ordered_json::parse(j.dump()) == j);
    CHECK(gstir::to_json(gstir::Value(std::numeric_limits<double>::quiet_NaN())).is_null());
}

TEST_CASE("CSV output") {
    gstir::OutputRecord rec;
    rec.command = "table";
    rec.columns = {"k", "note"};
    rec.rows = {{1L, std::string("a,b")}, {2L, 0.1}};
    CHECK(rec.to_csv() == "k,note\r\n1,\"a,b\"\r\n2,0.10000000000000001\r\n");
    CHECK(gstir::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(gstir::csv_escape("plain") == "plain");

    gstir::OutputRecord summary_only;
    summary_only.command = "bell";
    summary_only.summary = {{"bell", Integer(52)}};
    CHECK(summary_only.to_csv() == "key,value\r\nbell,52\r\n");
}
