#include <gtest/gtest.h>

#include "cospec/json_io.hpp"

using namespace cospec;

TEST(Json, FactoredPolySchema) {
    auto j = to_json(pineapple_poly({5, 2, 3}));
    EXPECT_EQ(j["x_mult"], 2);
    EXPECT_EQ(j["x1_mult"], 3);
    EXPECT_EQ(j["cubic"], json::array({"12", "-10", "-3", "1"}));
    EXPECT_EQ(factored_poly_from_json(j), pineapple_poly({5, 2, 3}));
}

TEST(Json, BigCoefficientsAsStrings) {
    auto f = IntPoly({1, 1}).pow(90);
    auto j = to_json(f);
    EXPECT_TRUE(j[45].is_string());
    EXPECT_EQ(int_poly_from_json(j), f);
}

TEST(Json, ClassificationRoundTrip) {
    for (PineappleParams pk : {PineappleParams{5, 1, 12}, PineappleParams{11, 1, 84}, PineappleParams{8, 1, 1}}) {
        auto c = enumerate_mates(pk);
        auto j = to_json(c);
        EXPECT_EQ(j["das"], c.das());
        auto back = classification_from_json(json::parse(j.dump()));
        EXPECT_EQ(back.params, c.params);
        EXPECT_EQ(back.mates, c.mates);
    }
}

TEST(Json, MateFields) {
    auto j = to_json(enumerate_mates({8, 3, 4}).mates.at(0));
    EXPECT_EQ(j["family"], "P3_mixed");
    EXPECT_EQ(j["params"]["l"], 2);
    EXPECT_EQ(j["isolated"], 1);
    EXPECT_EQ(j["order"], 12);
    EXPECT_EQ(j["type"], json::array({2, -3, 6}));
}

TEST(Json, RejectsInconsistentInput) {
    auto j = to_json(enumerate_mates({8, 3, 4}));
    j["das"] = true;
    EXPECT_THROW(classification_from_json(j), std::invalid_argument);
    auto s = to_json(FamilySpec::p3_cc(1, 1, 5, 0));
    s["params"]["n"] = 1;
    EXPECT_THROW(family_spec_from_json(s), std::invalid_argument);
    s["family"] = "P9";
    EXPECT_THROW(family_spec_from_json(s), std::invalid_argument);
}

TEST(Csv, RowQuoting) {
    auto table = census(8, {3, 3}, {4, 4});
    auto csv = census_csv(table);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), census_csv_header());
    auto row = census_csv_row(table.rows.at(0));
    EXPECT_EQ(row.substr(0, 20), "8,3,4,false,1,\"[{\"\"f");
}
