#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gstir/combinatorics.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"gstir"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code = gstir::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json rows_of(const Run& r) { return json::parse(r.out).at("payload").at("rows"); }

std::filesystem::path temp_dir() {
    const char* env = std::getenv("GSTIR_TEST_TMP");
    return env ? std::filesystem::path(env) : std::filesystem::temp_directory_path();
}

}  // namespace

TEST_CASE("table") {
    const auto c4 = run({"table", "--cycle", "4", "--quiet"});
    REQUIRE(c4.code == 0);
    CHECK(c4.err.empty());
    const auto j = json::parse(c4.out);
    CHECK(j.contains("command"));
    CHECK(j.contains("parameters"));
    CHECK(j.contains("payload"));
    CHECK(rows_of(c4) == json::parse(R"([{"k":2,"S":"1"},{"k":3,"S":"2"},{"k":4,"S":"1"}])"));

    CHECK(rows_of(run({"table", "--empty", "4"})) ==
          json::parse(R"([{"k":1,"S":"1"},{"k":2,"S":"7"},{"k":3,"S":"6"},{"k":4,"S":"1"}])"));
    CHECK(rows_of(run({"table", "--forest", "3", "2"})) == json::parse(R"([{"k":2,"S":"2"},{"k":3,"S":"1"}])"));

    const auto human = run({"table", "--path", "5"});
    CHECK(human.code == 0);
    CHECK(human.err.find("graph_bell") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"table"}).code == 2);
    CHECK(run({"table", "--cycle", "4", "--path", "3"}).code == 2);
    CHECK(run({"table", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--format", "xml", "table", "--cycle", "4"}).code == 2);
    CHECK(run({"table", "--forest", "3"}).code == 2);
    CHECK(run({"table", "--forest", "3", "5"}).code == 3);
    CHECK(run({"table", "--cycle", "1"}).code == 3);
    CHECK(run({"interlace", "--c", "3", "--n", "2"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("big integers are strings") {
    const auto r = run({"bell", "--n", "40", "--quiet"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("payload").at("bell") == gstir::bell(40).get_str());
    for (const auto& row : j.at("payload").at("rows")) {
        CHECK(row.at("B").is_string());
    }
    const auto g = run({"bell", "--cycle", "4", "--quiet"});
    CHECK(json::parse(g.out).at("payload").at("graph_bell") == "4");
}

TEST_CASE("every command emits command, parameters and payload") {
    const std::vector<std::vector<const char*>> commands{
        {"table", "--cycle", "6"},       {"poly", "--forest", "5", "2"},  {"roots", "--path", "7"},
        {"interlace", "--c", "2", "--n", "3"}, {"ulc", "--cycle", "9"},   {"moments", "--empty", "8"},
        {"normality", "--cycle", "12"},  {"estimates", "--path", "30"},   {"oracle-check", "--max-n", "5"},
        {"bell", "--n", "5"},
    };
    for (const auto& args : commands) {
        std::vector<const char*> argv{"gstir", "--quiet"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::ostringstream out;
        std::ostringstream err;
        const int code = gstir::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        CAPTURE(args[0]);
        CHECK(code == 0);
        const auto j = json::parse(out.str());
        CHECK(j.at("command") == args[0]);
        CHECK(j.contains("parameters"));
        CHECK(j.contains("payload"));
    }
}

TEST_CASE("ulc, interlace and oracle-check") {
    const auto u = run({"ulc", "--cycle", "300", "--quiet"});
    REQUIRE(u.code == 0);
    const auto uj = json::parse(u.out).at("payload");
    CHECK(uj.at("holds") == true);
    CHECK(uj.at("strict_from") == 2);

    const auto i = run({"interlace", "--c", "2", "--n", "3", "--quiet"});
    REQUIRE(i.code == 0);
    const auto rows = rows_of(i);
    CHECK(rows.size() == 5);
    for (const auto& row : rows) {
        CHECK(row.at("applicable") == true);
        CHECK(row.at("holds") == true);
    }

    const auto o = run({"oracle-check", "--max-n", "9", "--quiet"});
    CHECK(o.code == 0);
    CHECK(json::parse(o.out).at("payload").at("mismatches") == 0);
    CHECK(run({"oracle-check", "--max-n", "14"}).code == 3);
}

TEST_CASE("moments output") {
    const auto m = run({"moments", "--forest", "3", "3", "--quiet"});
    const auto p = json::parse(m.out).at("payload");
    CHECK(p.at("mean_exact") == "2");
    CHECK(p.at("variance_exact") == "2/5");
    CHECK(p.at("identities_hold") == true);
}

TEST_CASE("csv format") {
    const auto r = run({"--format", "csv", "table", "--cycle", "4", "--quiet"});
    CHECK(r.code == 0);
    CHECK(r.out == "k,S\r\n2,1\r\n3,2\r\n4,1\r\n");
    const auto tail = run({"table", "--cycle", "4", "--format", "csv", "--quiet"});
    CHECK(tail.out == r.out);
}

TEST_CASE("bell cache persistence") {
    const auto path = temp_dir() / "cli_bell.cache";
    std::filesystem::remove(path);
    const auto first = run({"--bell-cache", path.c_str(), "bell", "--n", "30", "--quiet"});
    REQUIRE(first.code == 0);
    REQUIRE(std::filesystem::exists(path));
    const auto second = run({"--bell-cache", path.c_str(), "bell", "--n", "30", "--quiet"});
    CHECK(second.code == 0);
    CHECK(second.out == first.out);

    {
        std::ofstream bad(path, std::ios::trunc);
        bad << "BELLCACHE v1\n1\n1\n12x\n";
    }
    const auto broken = run({"--bell-cache", path.c_str(), "bell", "--n", "5"});
    CHECK(broken.code == 5);
    CHECK(broken.err.find("line 4") != std::string::npos);
    std::filesystem::remove(path);
}
