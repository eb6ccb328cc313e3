#include <gtest/gtest.h>

#include <string>

#include "homalg/homalg.h"
#include "json.hpp"

using nlohmann::json;

namespace {

const char* kPath = R"({"field":{"type":"Q"},"directed":false,"alpha":["1","1","1"],"beta":[["0","1","0"],["1","0","1"],["0","1","0"]]})";
const char* kTriangle = R"({"field":{"type":"Q"},"directed":false,"alpha":["1","1","1"],"beta":[["0","1","1"],["1","0","1"],["1","1","0"]]})";
const char* kRigid = R"({"field":{"type":"Q"},"directed":false,"alpha":["1","2"],"beta":[["1","-1"],["-1","0"]]})";
const char* kEdge = R"({"directed":false,"k":0,"n":2,"labels":[],"edges":[[1,2,1]]})";

struct Ctx {
    homalg_context* ctx = homalg_context_new();
    ~Ctx() { homalg_context_free(ctx); }
};

homalg_weighted_graph* target(homalg_context* ctx, const char* text) {
    homalg_weighted_graph* h = nullptr;
    EXPECT_EQ(homalg_weighted_graph_from_json(ctx, text, &h), HOMALG_OK) << homalg_last_error(ctx);
    return h;
}

json take(char* s) {
    json j = json::parse(s);
    homalg_string_free(s);
    return j;
}

}  // namespace

TEST(CApi, RoundTripAndHom) {
    Ctx c;
    auto* h = target(c.ctx, kPath);
    EXPECT_EQ(homalg_weighted_graph_size(h), 3u);
    char* out = nullptr;
    ASSERT_EQ(homalg_weighted_graph_to_json(c.ctx, h, &out), HOMALG_OK);
    EXPECT_EQ(take(out), json::parse(kPath));

    homalg_labeled_graph* g = nullptr;
    ASSERT_EQ(homalg_labeled_graph_from_json(c.ctx, kEdge, &g), HOMALG_OK);
    EXPECT_EQ(homalg_labeled_graph_label_count(g), 0u);
    ASSERT_EQ(homalg_hom(c.ctx, g, h, nullptr, 0, &out), HOMALG_OK);
    EXPECT_EQ(take(out)["value"], "4");
    homalg_labeled_graph_free(g);

    homalg_labeled_graph* pinned = nullptr;
    ASSERT_EQ(homalg_labeled_graph_from_json(c.ctx, R"({"directed":false,"k":1,"n":2,"labels":[1],"edges":[[1,2,1]]})",
                                             &pinned),
              HOMALG_OK);
    const size_t middle[] = {1};
    ASSERT_EQ(homalg_hom(c.ctx, pinned, h, middle, 1, &out), HOMALG_OK);
    EXPECT_EQ(take(out)["value"], "2");
    const size_t bad[] = {7};
    EXPECT_EQ(homalg_hom(c.ctx, pinned, h, bad, 1, &out), HOMALG_ERR_MISMATCH);
    EXPECT_NE(std::string(homalg_last_error(c.ctx)), "");
    homalg_labeled_graph_free(pinned);
    homalg_weighted_graph_free(h);
}

TEST(CApi, Malformed) {
    Ctx c;
    homalg_weighted_graph* h = nullptr;
    EXPECT_EQ(homalg_weighted_graph_from_json(c.ctx, "{", &h), HOMALG_ERR_MALFORMED);
    EXPECT_EQ(homalg_weighted_graph_from_json(c.ctx, R"({"field":{"type":"Q"},"directed":false,"alpha":["0"],"beta":[["1"]]})", &h),
              HOMALG_ERR_MALFORMED);
    EXPECT_EQ(h, nullptr);
    EXPECT_EQ(homalg_weighted_graph_from_json(nullptr, kPath, &h), HOMALG_ERR_MALFORMED);
    EXPECT_EQ(homalg_weighted_graph_from_json(c.ctx, nullptr, &h), HOMALG_ERR_MALFORMED);
}

TEST(CApi, IsoAndWitness) {
    Ctx c;
    auto* a = target(c.ctx, kPath);
    auto* b = target(c.ctx, kTriangle);
    char* out = nullptr;
    auto* r = target(c.ctx, kRigid);
    for (auto mode : {HOMALG_MODE_ORACLE, HOMALG_MODE_CONSTRUCTIVE, HOMALG_MODE_BOTH}) {
        ASSERT_EQ(homalg_iso(c.ctx, r, r, nullptr, nullptr, 0, mode, &out), HOMALG_OK);
        EXPECT_EQ(take(out)["sigma"], json::array({1, 2}));
    }
    homalg_weighted_graph_free(r);
    // The path has twins, so constructive recovery refuses it.
    EXPECT_EQ(homalg_iso(c.ctx, a, a, nullptr, nullptr, 0, HOMALG_MODE_BOTH, &out), HOMALG_ERR_PRECONDITION);
    ASSERT_EQ(homalg_iso(c.ctx, a, b, nullptr, nullptr, 0, HOMALG_MODE_ORACLE, &out), HOMALG_NONISO);
    const auto cert = take(out);
    EXPECT_EQ(cert["verdict"], "noniso");
    EXPECT_NE(cert["lhs"], cert["rhs"]);

    ASSERT_EQ(homalg_witness(c.ctx, a, b, nullptr, nullptr, 0, 3, &out), HOMALG_OK);
    const auto w = take(out);
    EXPECT_NE(w["lhs"], w["rhs"]);
    EXPECT_EQ(homalg_witness(c.ctx, a, a, nullptr, nullptr, 0, 2, &out), HOMALG_ERR_NOT_FOUND);
    EXPECT_TRUE(take(out)["witness"].is_null());
    EXPECT_EQ(homalg_iso(c.ctx, a, b, nullptr, nullptr, 0, static_cast<homalg_iso_mode>(9), &out),
              HOMALG_ERR_MALFORMED);
    homalg_weighted_graph_free(a);
    homalg_weighted_graph_free(b);
}

TEST(CApi, Budget) {
    Ctx c;
    homalg_context_set_budget(c.ctx, 5);
    EXPECT_EQ(homalg_context_budget(c.ctx), 5u);
    auto* h = target(c.ctx, kTriangle);
    homalg_labeled_graph* g = nullptr;
    ASSERT_EQ(homalg_labeled_graph_from_json(c.ctx, R"({"directed":false,"k":0,"n":6,"labels":[],"edges":[]})", &g),
              HOMALG_OK);
    char* out = nullptr;
    EXPECT_EQ(homalg_hom(c.ctx, g, h, nullptr, 0, &out), HOMALG_ERR_BUDGET);
    homalg_labeled_graph_free(g);
    homalg_weighted_graph_free(h);
}

TEST(CApi, ContractRankOrbits) {
    Ctx c;
    auto* h = target(c.ctx, kPath);
    homalg_weighted_graph* small = nullptr;
    ASSERT_EQ(homalg_contract(c.ctx, h, &small), HOMALG_OK);
    // The two ends of a path are twins.
    EXPECT_EQ(homalg_weighted_graph_size(small), 2u);
    char* out = nullptr;
    ASSERT_EQ(homalg_orbits(c.ctx, h, 1, &out), HOMALG_OK);
    EXPECT_EQ(take(out)["orbits"], 2);
    ASSERT_EQ(homalg_rank_report(c.ctx, small, 1, &out), HOMALG_OK);
    const auto rep = take(out);
    EXPECT_TRUE(rep.contains("rank"));
    EXPECT_TRUE(rep.contains("column_space"));
    homalg_weighted_graph_free(small);
    homalg_weighted_graph_free(h);
}

TEST(CApi, CounterexampleAndSelftest) {
    Ctx c;
    const size_t ells[] = {2, 1};
    char* out = nullptr;
    ASSERT_EQ(homalg_counterexample(c.ctx, 2, 2, ells, 2, 1, &out), HOMALG_OK);
    EXPECT_EQ(take(out)["violation"], true);
    const size_t bad[] = {1, 2};
    EXPECT_EQ(homalg_counterexample(c.ctx, 2, 2, bad, 2, 1, &out), HOMALG_ERR_MALFORMED);
    int passed = 0;
    ASSERT_EQ(homalg_selftest(c.ctx, 3, &passed, &out), HOMALG_OK);
    EXPECT_EQ(passed, 1);
    EXPECT_EQ(take(out)["passed"], true);
}
