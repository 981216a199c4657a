#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ugkit/error.hpp"
#include "ugkit/g0.hpp"

using namespace ugkit;
using ugkit::fixture::V;

namespace {

VertexId w(std::uint64_t i) { return VertexId::tail_vertex(i); }

Ultragraph single_tail_edge() { return make_graph({"u"}, {{"e", "u", {}, 3}}, TailSpec{"w", 1}); }

}  // namespace

TEST(G0, FiniteTargetsAreMembers) {
    auto g = fixture::ten_vertex();
    auto target = VertexSet::of({V("v3"), V("v7")});
    auto d = g0_membership(g, target);
    ASSERT_TRUE(d.member);
    ASSERT_TRUE(d.witness);
    EXPECT_TRUE(d.witness->intersections.empty());
    EXPECT_EQ(d.witness->finite_part, target);
    EXPECT_EQ(evaluate_witness(g, *d.witness), target);
}

TEST(G0, TailBeyondEveryRangeIsNotAMember) {
    auto d = g0_membership(single_tail_edge(), VertexSet::tail(5));
    EXPECT_FALSE(d.member);
    EXPECT_FALSE(d.witness);
}

TEST(G0, RangePlusSingletonIsAMember) {
    auto g = single_tail_edge();
    VertexSet target({w(1)}, 3);
    auto d = g0_membership(g, target);
    ASSERT_TRUE(d.member);
    EXPECT_EQ(d.witness->intersections, (std::vector<std::vector<std::string>>{{"e"}}));
    EXPECT_EQ(d.witness->finite_part, VertexSet::of({w(1)}));
    EXPECT_EQ(evaluate_witness(g, *d.witness), target);
}

TEST(G0, IntersectionOfRangesIsAMember) {
    auto g = fixture::tailed();
    auto d = g0_membership(g, VertexSet::tail(4));
    ASSERT_TRUE(d.member);
    EXPECT_EQ(evaluate_witness(g, *d.witness), VertexSet::tail(4));
    EXPECT_FALSE(g0_membership(g, VertexSet::tail(5)).member);
    EXPECT_TRUE(g0_membership(g, VertexSet({V("u")}, 2)).member);
}

TEST(G0, InfiniteTargetWithoutTailedRanges) {
    auto g = make_graph({"u"}, {{"e", "u", {"w1"}, {}}}, TailSpec{"w", 1});
    EXPECT_FALSE(g0_membership(g, VertexSet::tail(1)).member);
    EXPECT_TRUE(g0_membership(g, VertexSet::of({w(9)})).member);
}

TEST(G0, TargetOutsideUniverseThrows) {
    EXPECT_THROW(g0_membership(fixture::ten_vertex(), VertexSet::tail(1)), Error);
    EXPECT_THROW(g0_membership(fixture::ten_vertex(), VertexSet::of({V("zz")})), Error);
}

TEST(G0Enumerate, EdgelessGraphGivesPowerSet) {
    auto g = make_graph({"a", "b"}, {});
    auto all = g0_enumerate(g, 1);
    EXPECT_EQ(all, (std::vector<VertexSet>{VertexSet(), VertexSet::of({V("a")}), VertexSet::of({V("a"), V("b")}),
                                           VertexSet::of({V("b")})}));
}

TEST(G0Enumerate, SingleEdge) {
    auto all = g0_enumerate(fixture::single_edge(), 1);
    EXPECT_EQ(all.size(), 4u);
    EXPECT_NE(std::find(all.begin(), all.end(), VertexSet::of({V("w")})), all.end());
}

TEST(G0Enumerate, TenVertexCollapsesToPowerSet) {
    auto all = g0_enumerate(fixture::ten_vertex(), 1);
    EXPECT_EQ(all.size(), 1024u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(G0Enumerate, TailedGraphMatchesBruteForceClosure) {
    auto g = fixture::tailed();
    for (std::uint64_t cut = 4; cut <= 6; ++cut) {
        oracle::TruncatedUniverse u(g, cut);
        auto expected = oracle::truncated_closure(g, u);
        expected.insert(0);  // the empty union
        std::set<std::uint64_t> got;
        for (const auto& a : g0_enumerate(g, cut)) got.insert(u.mask(a));
        EXPECT_EQ(got, expected) << "cut " << cut;
    }
}

TEST(G0Enumerate, Guards) {
    EXPECT_THROW(g0_enumerate(fixture::tailed(), 3), Error);
    EXPECT_THROW(g0_enumerate(fixture::ten_vertex(), 0), Error);
    try {
        g0_enumerate(fixture::ten_vertex(), 1, 100);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("closure too large"), std::string::npos);
    }
}
