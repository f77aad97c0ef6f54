#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "ringcode/cli_app.hpp"
#include "ringcode/enumeration.hpp"

using namespace ringcode;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify reports verdicts with witnesses") {
    auto r = run({"classify", "--ring", "F2[v]/v^3", "--n", "4", "--gen", "z+1", "--u", "1",
                  "--k", "1"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "code size: 512"));
    CHECK(contains(r.out, "reversible: yes"));
    CHECK(contains(r.out, "rc with u = 1, k = 1: yes"));
    CHECK(contains(r.out, "u_0 = 1"));
    CHECK(contains(r.out, "audited"));

    auto v = run({"classify", "--ring", "F2[v]/v^3", "--n", "4", "--gen", "v", "--u", "1",
                  "--k", "1"});
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "reversible: yes"));
    CHECK(contains(v.out, "rc with u = 1, k = 1: no"));

    auto z = run({"classify", "--ring", "Z4", "--n", "3", "--gen", "0", "--u", "3", "--k", "0"});
    CHECK(z.exit_code == 0);
    CHECK(contains(z.out, "rc with u = 3, k = 0: yes"));
}

TEST_CASE("classify options and failure modes") {
    SUBCASE("multiple generators span together") {
        auto r = run({"classify", "--ring", "Z4", "--n", "3", "--gen", "2", "--gen", "1+z",
                      "--u", "1", "--k", "0", "--format", "csv"});
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "generator,code_size,s_profile,reversible,rc\n"));
        CHECK(contains(r.out, "2;1+z,32,0:1|1:0,yes,yes"));
    }
    SUBCASE("no-oracle skips the audit line") {
        auto r = run({"classify", "--ring", "Z4", "--n", "2", "--gen", "1+z", "--u", "1", "--k",
                      "1", "--no-oracle"});
        CHECK(r.exit_code == 0);
        CHECK_FALSE(contains(r.out, "audited"));
    }
    SUBCASE("parse errors exit 1") {
        CHECK(run({"classify", "--ring", "Q4", "--n", "2", "--gen", "1", "--u", "1", "--k", "1"})
                  .exit_code == 1);
        CHECK(run({"classify", "--ring", "Z4", "--n", "2", "--gen", "w", "--u", "1", "--k", "1"})
                  .exit_code == 1);
        CHECK(run({"classify", "--ring", "Z4", "--n", "2", "--gen", "1", "--u", "2", "--k", "1"})
                  .exit_code == 1);
        auto r = run({"classify", "--ring", "Z4", "--n", "13", "--gen", "1", "--u", "1", "--k",
                      "1"});
        CHECK(r.exit_code == 1);
        CHECK(contains(r.err, "error:"));
    }
    SUBCASE("missing required options exit 1") {
        CHECK(run({"classify", "--ring", "Z4", "--n", "2", "--u", "1", "--k", "1"}).exit_code ==
              1);
        CHECK(run({"classify"}).exit_code == 1);
    }
}

TEST_CASE("enumerate emits the census in every format") {
    SUBCASE("csv over Z2 length 1 is exact") {
        auto r = run({"enumerate", "--ring", "Z2", "--n", "1", "--u", "1", "--k", "1",
                      "--format", "csv"});
        CHECK(r.exit_code == 0);
        CHECK(r.out ==
              "generator,code_size,s_profile,reversible,rc\n"
              "0,1,,yes,no\n"
              "1,2,0:0,yes,yes\n");
    }
    SUBCASE("csv census over F2[v]/v^3 length 4") {
        auto r = run({"enumerate", "--ring", "F2[v]/v^3", "--n", "4", "--u", "1", "--k", "1",
                      "--format", "csv"});
        CHECK(r.exit_code == 0);
        std::istringstream lines(r.out);
        std::string line;
        uint32_t data_rows = 0, rc_rows = 0;
        REQUIRE(std::getline(lines, line));
        CHECK(line == "generator,code_size,s_profile,reversible,rc");
        while (std::getline(lines, line)) {
            ++data_rows;
            if (line.size() >= 4 && line.compare(line.size() - 4, 4, ",yes") == 0) ++rc_rows;
        }
        CHECK(data_rows == 42);
        CHECK(rc_rows == 6);
    }
    SUBCASE("json rows reconstruct the classification bit-exactly") {
        auto r = run({"enumerate", "--ring", "Z4", "--n", "3", "--u", "3", "--k", "2",
                      "--format", "json"});
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        auto R = make_ring("Z4");
        auto rows = classify_all(R, 3, R.element(3), R.element(2));
        REQUIRE(j.at("rows").size() == rows.size());
        CHECK(j.at("census_size").get<uint64_t>() == rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            const json& row = j.at("rows")[i];
            CHECK(row.at("canonical_generator").get<std::string>() ==
                  rows[i].canonical_generator().str());
            CHECK(row.at("code_size").get<uint64_t>() == rows[i].code.size());
            CHECK(row.at("reversible").get<bool>() == rows[i].analysis.reversible.value);
            CHECK(row.at("rc").get<bool>() == rows[i].analysis.rc.value);
            auto profile = rows[i].code.degree_profile();
            REQUIRE(row.at("S_profile").size() == profile.size());
            for (size_t p = 0; p < profile.size(); ++p) {
                CHECK(row.at("S_profile")[p][0].get<uint32_t>() == profile[p].first);
                CHECK(row.at("S_profile")[p][1].get<uint32_t>() == profile[p].second);
            }
        }
    }
    SUBCASE("markdown table carries a summary line") {
        auto r = run({"enumerate", "--ring", "Z4", "--n", "2", "--u", "1", "--k", "1"});
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "| generator | code_size | s_profile | reversible | rc |"));
        CHECK(contains(r.out, "6 codes over Z4 at length 2"));
    }
    SUBCASE("inadmissible pair exits 1") {
        auto r = run({"enumerate", "--ring", "Z4", "--n", "2", "--u", "3", "--k", "1"});
        CHECK(r.exit_code == 1);
        CHECK(contains(r.err, "inadmissible"));
    }
    SUBCASE("bound below the candidate space exits 1") {
        auto r = run({"enumerate", "--ring", "Z4", "--n", "2", "--u", "1", "--k", "1",
                      "--bound", "10"});
        CHECK(r.exit_code == 1);
    }
}

TEST_CASE("reproduce-table audits the shipped reference classification") {
    auto r = run({"reproduce-table"});
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "rows agreeing with the reference verdicts: 42/46"));
    CHECK(contains(r.out, "divergent rows: 26 33 38 39"));
    CHECK(contains(r.out, "distinct ideals named by the rows: 34"));
    CHECK(contains(r.out, "census codes: 42"));
    CHECK(contains(r.out, "census codes named by no row: 8"));
    CHECK(contains(r.out, "row 26  <h+v>"));
    CHECK(contains(r.out, "DIVERGES"));

    SUBCASE("json form carries the same summary") {
        auto j = run({"reproduce-table", "--format", "json"});
        CHECK(j.exit_code == 2);
        json doc = json::parse(j.out);
        CHECK(doc.at("rows").size() == 46);
        const json& summary = doc.at("summary");
        CHECK(summary.at("agreements").get<uint32_t>() == 42);
        CHECK(summary.at("census_size").get<uint32_t>() == 42);
        CHECK(summary.at("distinct_row_ideals").get<uint32_t>() == 34);
        CHECK(summary.at("divergent_rows") == json::array({26, 33, 38, 39}));
        CHECK_FALSE(summary.at("perfect").get<bool>());
    }
    SUBCASE("csv form lists one line per row") {
        auto c = run({"reproduce-table", "--format", "csv"});
        CHECK(c.exit_code == 2);
        CHECK(contains(c.out, "row,generator,claimed_rc,computed_rc,agrees\n"));
        CHECK(contains(c.out, "26,h+v,yes,no,no"));
        CHECK(contains(c.out, "11,h,yes,yes,yes"));
    }
}

TEST_CASE("ring-info describes both families") {
    auto r = run({"ring-info", "--ring", "F2[v]/v^3"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "size: 8"));
    CHECK(contains(r.out, "nilpotency: 3"));
    CHECK(contains(r.out, "maximal ideal generator: v"));
    CHECK(contains(r.out, "admissible (u,k) pairs: 12"));

    auto z = run({"ring-info", "--ring", "Z4", "--format", "json"});
    CHECK(z.exit_code == 0);
    json j = json::parse(z.out);
    CHECK(j.at("size").get<uint64_t>() == 4);
    CHECK(j.at("admissible_pairs").get<uint64_t>() == 6);
    CHECK(j.at("maximal_ideal_generator").get<std::string>() == "2");
}

TEST_CASE("top-level argument handling") {
    CHECK(run({}).exit_code == 1);
    CHECK(run({"frobnicate"}).exit_code == 1);
    CHECK(run({"enumerate", "--ring", "Z4", "--n", "2", "--u", "1", "--k", "1", "--format",
               "xml"})
              .exit_code == 1);
    auto help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(contains(help.out, "classify"));
    CHECK(contains(help.out, "reproduce-table"));
}
