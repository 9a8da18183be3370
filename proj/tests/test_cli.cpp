#include "doctest.h"

#include "octaves/cli.hpp"
#include "octaves/formats.hpp"

#include "json.hpp"

#include <stdexcept>

using namespace octaves;
using cli::run_captured;

TEST_CASE("table json round trip") {
    const fano::MultTable t = fano::table_from_oriented_lines(fano::standard_labeling(), fano::standard_rules());
    const std::string text = formats::table_to_json(t);
    CHECK(formats::table_from_json(text) == t);
    CHECK(formats::table_to_json(formats::table_from_json(text)) == text);
    CHECK(formats::reformat_json(text) == text);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["entries"][2][2] == -8);
    CHECK(doc["entries"][1][2] == -3);
    CHECK(doc["entries"][0][0] == 0);
}

TEST_CASE("malformed table json") {
    CHECK_THROWS_AS(formats::table_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(formats::table_from_json(R"({"format": "octonion-table", "entries": [[0]]})"), std::invalid_argument);
    CHECK_THROWS_AS(formats::table_from_json(R"({"format": "other", "entries": []})"), std::invalid_argument);
}

TEST_CASE("subspace json round trip") {
    const auto subspaces = geometry::enumerate_subspaces(3, 2, 2);
    const std::string text = formats::subspaces_to_json(3, 2, 2, subspaces);
    const formats::SubspaceListing listing = formats::subspaces_from_json(text);
    CHECK(listing.n == 3);
    CHECK(listing.k == 2);
    CHECK(listing.subspaces.size() == 7);
    for (const auto& s : listing.subspaces) {
        CHECK(s.size() == 4);
        CHECK(s.front() == "000");
    }
    CHECK(formats::reformat_json(text) == text);
}

TEST_CASE("galois") {
    CHECK(run_captured({"galois", "--n", "3", "--q", "2"}).out == "16\n");
    CHECK(run_captured({"galois", "--n", "2", "--q", "2"}).out == "5\n");
    CHECK(run_captured({"galois", "--n", "3", "--q", "2", "--k", "1"}).out == "7\n");
    const auto json = nlohmann::json::parse(run_captured({"galois", "--n", "4", "--q", "2", "--k", "2", "--format", "json"}).out);
    CHECK(json["gaussian_binomial"] == "35");
    const auto qexp = run_captured({"galois", "--q", "3", "--qexp"});
    CHECK(qexp.exit_code == 0);
    CHECK(qexp.out.find("holds through degree 12") != std::string::npos);
}

TEST_CASE("subspaces and lattice") {
    const auto r = run_captured({"subspaces", "--n", "3", "--q", "2", "--k", "2", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 7);
    CHECK(run_captured({"subspaces", "--n", "3", "--q", "2", "--dim", "2"}).out ==
          run_captured({"subspaces", "--n", "3", "--q", "2", "--k", "2"}).out);
    CHECK(run_captured({"lattice", "--n", "2", "--q", "2"}).out.find("5 subspaces") != std::string::npos);
    CHECK(run_captured({"lattice", "--n", "3", "--q", "2", "--format", "dot"}).out.rfind("graph hasse_L3_2", 0) == 0);
}

TEST_CASE("fano") {
    const auto r = run_captured({"fano", "--format", "json"});
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["points"].size() == 7);
    CHECK(doc["lines"].size() == 7);
    bool l1 = false;
    for (const auto& line : doc["lines"]) {
        l1 = l1 || line == nlohmann::json{"010", "100", "110"};
    }
    CHECK(l1);
}

TEST_CASE("octonion tables and validation") {
    const auto json = run_captured({"octonion-table", "--format", "json"});
    CHECK(json.exit_code == 0);
    CHECK(formats::table_from_json(json.out) ==
          fano::table_from_oriented_lines(fano::standard_labeling(), fano::standard_rules()));
    CHECK(run_captured({"validate"}).exit_code == 0);
    CHECK(run_captured({"validate", "--source", "cd"}).exit_code == 0);
    CHECK(run_captured({"validate", "--table", "/nonexistent/table.json"}).exit_code != 0);
    CHECK(run_captured({"octonion-table", "--format", "dot"}).out.rfind("digraph", 0) == 0);
}

TEST_CASE("identity") {
    CHECK(run_captured({"identity", "--n", "2"}).out ==
          "(a1^2+a2^2)(b1^2+b2^2) = (a1b1-a2b2)^2 + (a2b1+a1b2)^2\n");
    CHECK(run_captured({"identity", "--n", "8", "--source", "standard"}).exit_code == 0);
    const auto sixteen = run_captured({"identity", "--n", "16"});
    CHECK(sixteen.exit_code != 0);
    CHECK(run_captured({"identity", "--n", "3"}).exit_code != 0);
}

TEST_CASE("probe and sweep") {
    const auto assoc = run_captured({"probe", "--level", "3", "--law", "associative"});
    CHECK(assoc.exit_code == 0);
    CHECK(assoc.out == "level 3 associative: fails at (e1, e2, e4)\n");
    CHECK(run_captured({"probe", "--level", "3", "--law", "alternative"}).out.find("holds") != std::string::npos);
    CHECK(run_captured({"sweep", "--orientations"}).out == "16 of 128 orientation assignments validate\n");
}

TEST_CASE("usage errors") {
    const auto bogus = run_captured({"bogus"});
    CHECK(bogus.exit_code != 0);
    CHECK(bogus.err.find("Usage") != std::string::npos);
    const auto missing = run_captured({"galois", "--n", "3"});
    CHECK(missing.exit_code != 0);
    CHECK(missing.err.find("--q") != std::string::npos);
    CHECK(run_captured({"galois", "--n", "3", "--q", "2", "--frobnicate"}).exit_code != 0);
    CHECK(run_captured({}).exit_code != 0);
    const auto domain = run_captured({"subspaces", "--n", "3", "--q", "4", "--k", "1"});
    CHECK(domain.exit_code != 0);
    CHECK(domain.err.find("prime") != std::string::npos);
}

TEST_CASE("commands are deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"probe", "--level", "4", "--law", "all", "--trials", "20", "--seed", "9"},
        {"lattice", "--n", "3", "--q", "2", "--format", "json"},
        {"identity", "--n", "8", "--format", "json"},
        {"sweep", "--orientations", "--format", "json"},
    };
    for (const auto& args : commands) {
        const auto first = run_captured(args);
        const auto second = run_captured(args);
        CHECK(first.out == second.out);
        CHECK(first.exit_code == second.exit_code);
    }
}
