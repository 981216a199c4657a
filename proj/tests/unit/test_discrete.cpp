#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"
#include "ugkit/discrete.hpp"
#include "ugkit/error.hpp"

using namespace ugkit;
using ugkit::fixture::V;

namespace {

std::size_t total(const DiscreteBranchingSystem& bs) {
    std::size_t n = 0;
    for (const auto& [v, d] : bs.D) n += d.size();
    return n;
}

void expect_error(const std::function<void()>& fn, const std::string& fragment) {
    try {
        fn();
        ADD_FAILURE() << "expected error containing \"" << fragment << "\"";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
}

}  // namespace

TEST(DiscreteFromPeeling, TenVertexSizes) {
    auto bs = build_discrete_bs_from_peeling(fixture::ten_vertex());
    for (auto s : {"v3", "v4", "v5", "v7", "v8", "v9", "v2"}) EXPECT_EQ(bs.D_of(V(s)).size(), 1u) << s;
    EXPECT_EQ(bs.D_of(V("v10")).size(), 2u);
    EXPECT_EQ(bs.D_of(V("v1")).size(), 2u);
    EXPECT_EQ(bs.D_of(V("v6")).size(), 5u);
    EXPECT_EQ(total(bs), 16u);
    EXPECT_EQ(bs.max_index(), 16u);
    EXPECT_TRUE(validate_bs(bs).ok());
}

TEST(DiscreteFromPeeling, IndicesAreConsecutiveAndDisjoint) {
    auto bs = build_discrete_bs_from_peeling(fixture::ten_vertex());
    std::set<std::uint64_t> all;
    for (const auto& [v, d] : bs.D) {
        for (auto x : d) EXPECT_TRUE(all.insert(x).second) << "index " << x << " reused";
    }
    std::set<std::uint64_t> expected;
    for (std::uint64_t i = 1; i <= 16; ++i) expected.insert(i);
    EXPECT_EQ(all, expected);
}

TEST(DiscreteFromPeeling, SingleEdge) {
    auto g = fixture::single_edge();
    auto bs = build_discrete_bs_from_peeling(g);
    EXPECT_EQ(bs.D_of(V("w")).size(), 1u);
    EXPECT_EQ(bs.D_of(V("u")).size(), 1u);
    const auto w = *bs.D_of(V("w")).begin();
    EXPECT_EQ(bs.f[0].at(w), *bs.R[0].begin());
}

TEST(DiscreteFromPeeling, Preconditions) {
    expect_error([] { build_discrete_bs_from_peeling(fixture::single_loop()); }, "acyclicity");
    expect_error([] { build_discrete_bs_from_peeling(fixture::tailed()); }, "finite");
    // Acyclic but not permutative: v is in a range and emits two edges.
    auto g = make_graph({"a", "v", "x", "y"},
                        {{"e", "a", {"v", "x"}, {}}, {"f", "v", {"y"}, {}}, {"h", "v", {"x", "y"}, {}}});
    expect_error([&] { build_discrete_bs_from_peeling(g); }, "permutativity");
}

TEST(DiscreteValidation, NonSurjectiveMapFailsConditionFive) {
    auto bs = build_discrete_bs_from_peeling(fixture::ten_vertex());
    auto& f = bs.f[1];
    f.erase(f.begin());
    auto r = validate_bs(bs);
    EXPECT_FALSE(r.conditions[4].pass);
    EXPECT_TRUE(r.conditions[4].index.has_value());
}

TEST(DiscreteValidation, OverlappingRangesFailConditionOne) {
    auto bs = build_discrete_bs_from_peeling(fixture::ten_vertex());
    bs.R[0].insert(*bs.R[1].begin());
    auto r = validate_bs(bs);
    EXPECT_FALSE(r.conditions[0].pass);
    EXPECT_EQ(r.conditions[0].index, *bs.R[1].begin());
}
