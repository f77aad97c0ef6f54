#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ringcode/enumeration.hpp"

using namespace ringcode;

namespace {

CyclicCode span_text(const ChainRing& R, uint32_t n, const char* text) {
    return CyclicCode::span(R, n, {parse_poly(R, n, text)});
}

std::map<uint64_t, uint32_t> size_histogram(const std::vector<CyclicCode>& codes) {
    std::map<uint64_t, uint32_t> h;
    for (const CyclicCode& c : codes) ++h[c.size()];
    return h;
}

}  // namespace

TEST_CASE("principal census over F2[v]/v^3 at length 4") {
    auto R = make_ring("F2[v]/v^3");
    auto codes = enumerate_principal(R, 4);
    REQUIRE(codes.size() == 42);

    std::map<uint64_t, uint32_t> expected{{1, 1},  {2, 1},  {4, 3},   {8, 6},   {16, 8},
                                          {32, 2}, {64, 12}, {256, 4}, {512, 4}, {4096, 1}};
    CHECK(size_histogram(codes) == expected);

    SUBCASE("ordered by size then packed canonical generator") {
        for (size_t i = 1; i < codes.size(); ++i) {
            auto key = [](const CyclicCode& c) {
                return std::pair{c.size(), c.generators().front().pack()};
            };
            CHECK(key(codes[i - 1]) < key(codes[i]));
        }
        CHECK(codes.front().size() == 1);
        CHECK(codes.back().size() == R.size() * R.size() * R.size() * R.size());
    }

    SUBCASE("codes are pairwise distinct as word sets") {
        for (size_t i = 0; i < codes.size(); ++i)
            for (size_t j = i + 1; j < codes.size(); ++j) CHECK_FALSE(codes[i].same_words(codes[j]));
    }

    SUBCASE("each canonical generator is the packed-smallest in its unit-shift orbit") {
        for (const CyclicCode& c : codes) {
            const CyclicPoly& g = c.generators().front();
            uint64_t packed = g.pack();
            for (const RingElem& u : units(R))
                for (uint32_t j = 0; j < 4; ++j)
                    CHECK(g.scaled(u).shifted(j).pack() >= packed);
        }
    }

    SUBCASE("every candidate generator spans exactly one census member") {
        for (uint64_t w = 0; w < 4096; w += 37) {
            auto C = CyclicCode::span(R, 4, {CyclicPoly::unpack(&R, 4, w)});
            int hits = 0;
            for (const CyclicCode& c : codes)
                if (c.same_words(C)) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("small censuses pin their counts") {
    SUBCASE("Z2 length 1") {
        auto R = make_ring("Z2");
        auto codes = enumerate_principal(R, 1);
        REQUIRE(codes.size() == 2);
        CHECK(codes[0].size() == 1);
        CHECK(codes[1].size() == 2);
    }
    SUBCASE("Z4 length 2") {
        auto R = make_ring("Z4");
        auto codes = enumerate_principal(R, 2);
        REQUIRE(codes.size() == 6);
        std::map<uint64_t, uint32_t> expected{{1, 1}, {2, 1}, {4, 3}, {16, 1}};
        CHECK(size_histogram(codes) == expected);
    }
    SUBCASE("binary subring at length 4 gives the divisor chain of (z+1)^4") {
        auto R = make_ring("Z2");
        auto codes = enumerate_principal(R, 4);
        REQUIRE(codes.size() == 5);
        for (uint32_t t = 0; t <= 4; ++t) {
            auto power = CyclicCode::span(R, 4, {parse_poly(R, 4, "h").pow(t)});
            CHECK(codes[t].size() == (1u << t));
            CHECK(codes[4 - t].same_words(power));
        }
    }
    SUBCASE("candidate space over the bound is rejected") {
        auto R = make_ring("Z4");
        CHECK_THROWS_AS(enumerate_principal(R, 13), std::length_error);
    }
}

TEST_CASE("classify_all attaches audited verdicts") {
    auto R = make_ring("F2[v]/v^3");
    auto rows = classify_all(R, 4, R.one(), R.one());
    REQUIRE(rows.size() == 42);

    uint32_t reversible = 0, rc = 0;
    for (const auto& row : rows) {
        CHECK(row.analysis.audited);
        CHECK_FALSE(row.reference_label.has_value());
        reversible += row.analysis.reversible.value ? 1 : 0;
        rc += row.analysis.rc.value ? 1 : 0;
    }
    CHECK(reversible == 34);
    CHECK(rc == 6);

    SUBCASE("the rc members are exactly the six known ideals") {
        const char* texts[] = {"1", "h", "h+v^2", "h^2", "h^2+v^2h", "h^3"};
        for (const char* t : texts) {
            auto ideal = span_text(R, 4, t);
            int found = 0;
            for (const auto& row : rows)
                if (row.analysis.rc.value && row.code.same_words(ideal)) ++found;
            CHECK(found == 1);
        }
    }

    SUBCASE("inadmissible pairs are rejected before enumerating") {
        auto Z = make_ring("Z4");
        CHECK_THROWS_AS(classify_all(Z, 2, Z.element(3), Z.element(1)), std::invalid_argument);
    }

    SUBCASE("unit ideal is rc, zero ideal is not, over Z2 length 1") {
        auto Z = make_ring("Z2");
        auto tiny = classify_all(Z, 1, Z.one(), Z.one());
        REQUIRE(tiny.size() == 2);
        CHECK(tiny[0].code.size() == 1);
        CHECK_FALSE(tiny[0].analysis.rc.value);
        CHECK(tiny[1].analysis.rc.value);
    }
}

TEST_CASE("reference table fixture") {
    const auto& rows = builtin_reference_table();
    REQUIRE(rows.size() == 46);
    for (size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].index == i + 1);

    std::set<uint32_t> claimed_yes;
    for (const auto& row : rows)
        if (row.rc_claim) claimed_yes.insert(row.index);
    CHECK(claimed_yes == std::set<uint32_t>{10, 11, 12, 13, 21, 26, 33, 38, 39});

    SUBCASE("text form parses back to the same rows") {
        auto parsed = parse_reference_table(reference_table_text());
        REQUIRE(parsed.size() == rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            CHECK(parsed[i].index == rows[i].index);
            CHECK(parsed[i].expression == rows[i].expression);
            CHECK(parsed[i].rc_claim == rows[i].rc_claim);
        }
    }

    SUBCASE("shipped data file is identical to the builtin copy") {
        std::ifstream in(RINGCODE_SOURCE_DIR "/data/reference_table.txt", std::ios::binary);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == reference_table_text());
    }

    SUBCASE("comments and blank lines are skipped") {
        auto parsed = parse_reference_table("# header\n\n3;h;yes\r\n");
        REQUIRE(parsed.size() == 1);
        CHECK(parsed[0].index == 3);
        CHECK(parsed[0].expression == "h");
        CHECK(parsed[0].rc_claim);
    }

    SUBCASE("malformed lines are rejected") {
        CHECK_THROWS_AS(parse_reference_table("1;h"), std::invalid_argument);
        CHECK_THROWS_AS(parse_reference_table("1;h;maybe"), std::invalid_argument);
        CHECK_THROWS_AS(parse_reference_table("one;h;yes"), std::invalid_argument);
        CHECK_THROWS_AS(parse_reference_table("1;;yes"), std::invalid_argument);
    }
}

TEST_CASE("matching the reference table against the census") {
    auto R = make_ring("F2[v]/v^3");
    auto census = classify_all(R, 4, R.one(), R.one());
    auto report = match_reference_table(builtin_reference_table(), census);

    REQUIRE(report.rows.size() == 46);
    CHECK(report.census_size == 42);
    CHECK(report.agreements == 42);
    CHECK(report.divergent_rows == std::vector<uint32_t>{26, 33, 38, 39});
    CHECK(report.distinct_row_ideals == 34);
    CHECK(report.uncovered.size() == 8);
    CHECK_FALSE(report.perfect());

    SUBCASE("agreeing and diverging rows carry their verdict pair") {
        const RowMatch& h_row = report.rows[10];
        CHECK(h_row.index == 11);
        CHECK(h_row.rc_claim);
        CHECK(h_row.computed_rc);
        CHECK(h_row.agrees);

        const RowMatch& divergent = report.rows[25];
        CHECK(divergent.index == 26);
        CHECK(divergent.rc_claim);
        CHECK_FALSE(divergent.computed_rc);
        CHECK_FALSE(divergent.agrees);
    }

    SUBCASE("rows naming the same ideal resolve to the same census position") {
        auto position = [&](uint32_t index) {
            for (const RowMatch& m : report.rows)
                if (m.index == index) return m.census_position;
            REQUIRE(false);
            return 0u;
        };
        CHECK(position(19) == position(20));
        CHECK(position(23) == position(25));
        CHECK(position(27) == position(34));
        CHECK(position(27) == position(35));
        CHECK(position(27) == position(36));
        CHECK(position(29) == position(37));
        CHECK(position(31) == position(32));
        CHECK(position(31) == position(42));
        CHECK(position(31) == position(43));
        CHECK(position(41) == position(44));
        CHECK(position(41) == position(45));
        CHECK(position(41) == position(46));
    }

    SUBCASE("matched census rows get the first naming expression as label") {
        uint32_t pos = report.rows[10].census_position;
        REQUIRE(census[pos].reference_label.has_value());
        CHECK(*census[pos].reference_label == "h");
        for (uint32_t u : report.uncovered) CHECK_FALSE(census[u].reference_label.has_value());
    }

    SUBCASE("a corrupted verdict column is reported, not repaired") {
        auto corrupted = builtin_reference_table();
        corrupted[10].rc_claim = false;
        auto fresh = classify_all(R, 4, R.one(), R.one());
        auto rep = match_reference_table(corrupted, fresh);
        CHECK(rep.agreements == 41);
        CHECK(std::count(rep.divergent_rows.begin(), rep.divergent_rows.end(), 11) == 1);
    }

    SUBCASE("a row ideal missing from the census is an error") {
        auto truncated = classify_all(R, 4, R.one(), R.one());
        truncated.erase(truncated.begin());
        CHECK_THROWS_AS(match_reference_table(builtin_reference_table(), truncated),
                        VerificationError);
    }
}
