#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagdod/dims.hpp"
#include "flagdod/error.hpp"
#include "oracles.hpp"

using namespace flagdod;

TEST_CASE("dimension examples") {
    CHECK(flag_dim({GroupFamily::SL, 4, {{1, 0}}}) == 3);
    CHECK(flag_dim({GroupFamily::Sp, 2, {{2, 0}}}) == 3);
    CHECK(flag_dim({GroupFamily::Sp, 2, {{1, 0}}}) == 3);
    CHECK(flag_dim({GroupFamily::SO, 5, {{1, 0}}}) == 3);
    CHECK(flag_dim({GroupFamily::SL, 3, {{1, 0}, {2, 0}}}) == 3);
    CHECK(flag_dim({GroupFamily::SL, 5, {{2, 0}}}) == 6);
}

TEST_CASE("dimensions agree with positive-root counts") {
    for (const auto& d : all_flag_varieties(5)) {
        CAPTURE(d.group_name());
        CAPTURE(d.variety_name());
        CHECK(flag_dim(d) == oracle::flag_dim_rootcount(d));
    }
}

TEST_CASE("full flag varieties have dimension |positive roots|") {
    for (int n = 3; n <= 7; ++n) {
        FlagVarietyDescriptor d{GroupFamily::SL, n, {}};
        for (int k = 1; k < n; ++k) d.indices.push_back({k, 0});
        CHECK(flag_dim(d) == n * (n - 1) / 2);
    }
    for (int n = 2; n <= 6; ++n) {
        FlagVarietyDescriptor d{GroupFamily::Sp, n, {}};
        for (int k = 1; k <= n; ++k) d.indices.push_back({k, 0});
        CHECK(flag_dim(d) == n * n);
    }
    for (int p = 2; p <= 5; ++p) {
        FlagVarietyDescriptor odd{GroupFamily::SO, 2 * p + 1, {}};
        for (int k = 1; k <= p; ++k) odd.indices.push_back({k, 0});
        CHECK(flag_dim(odd) == p * p);
        FlagVarietyDescriptor even{GroupFamily::SO, 2 * p, {}};
        for (int k = 1; k <= p - 2; ++k) even.indices.push_back({k, 0});
        even.indices.push_back({p, -1});
        even.indices.push_back({p, 1});
        CHECK(flag_dim(even) == p * (p - 1));
    }
}

TEST_CASE("census of 3-dimensional flag varieties") {
    auto census = enumerate_3dim_flag_varieties(8);
    std::vector<std::string> names;
    for (const auto& d : census) {
        CHECK(flag_dim(d) == 3);
        CHECK(d.rank() <= 3);
        names.push_back(d.group_name() + " " + d.variety_name());
    }
    CHECK(names == std::vector<std::string>{"SL3 Flag(ℂ³)", "SL4 ℂP³", "SL4 Gr₃(ℂ⁴)", "Sp4 ℂP³",
                                            "Sp4 Lag(ℂ⁴)", "SO5 Quad₃", "SO5 IsoFlag₂(ℂ⁵)",
                                            "SO6 IsoFlag₃₊(ℂ⁶)", "SO6 IsoFlag₃₋(ℂ⁶)"});
    for (const auto& d : census) CHECK(!(d.family == GroupFamily::SL && d.n >= 5));
    CHECK_THROWS_AS(enumerate_3dim_flag_varieties(1), Error);
}

TEST_CASE("case table") {
    auto rows = fullcases_table();
    REQUIRE(rows.size() == 3);
    auto parts = [](const CaseTableRow& r) {
        std::vector<std::string> out;
        for (const auto& p : r.partitions) out.push_back(p.to_string());
        return out;
    };
    CHECK(rows[0].group == "SL3");
    CHECK(rows[0].variety == "Flag(ℂ³)");
    CHECK(parts(rows[0]) == std::vector<std::string>{"(3)", "(2,1)"});
    CHECK(rows[1].group == "SL4/Sp4");
    CHECK(rows[1].variety == "ℂP³");
    CHECK(parts(rows[1]) == std::vector<std::string>{"(4)", "(2,2)"});
    CHECK(rows[2].group == "Sp4");
    CHECK(rows[2].variety == "Lag(ℂ⁴)");
    CHECK(parts(rows[2]) == std::vector<std::string>{"(4)", "(2,1,1)"});
}

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(flag_dim({GroupFamily::SL, 4, {{4, 0}}}), Error);
    CHECK_THROWS_AS(flag_dim({GroupFamily::Sp, 2, {{3, 0}}}), Error);
    CHECK_THROWS_AS(flag_dim({GroupFamily::SO, 7, {{4, 0}}}), Error);
    CHECK_THROWS_AS(flag_dim({GroupFamily::SO, 6, {{3, 0}}}), Error);  // needs a half-spin tag
    CHECK_THROWS_AS(flag_dim({GroupFamily::SL, 4, {{2, 0}, {1, 0}}}), Error);
    CHECK_THROWS_AS(flag_dim({GroupFamily::SL, 4, {}}), Error);
}
