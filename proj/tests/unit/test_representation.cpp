#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "generators.hpp"
#include "ugkit/error.hpp"
#include "ugkit/representation.hpp"

using namespace ugkit;
using ugkit::fixture::V;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }
Interval I(Rational a, Rational b) { return Interval(std::move(a), std::move(b)); }
StepFunction chi(Rational a, Rational b, double v = 1.0) { return StepFunction({StepPiece{I(a, b), v}}); }

// Pointwise reading of π(s_e)φ at x: sqrt(slope of f_e^{-1}) · φ(f_e^{-1}(x)).
double s_pointwise(const PiecewiseAffineMap& f, const StepFunction& phi, const Rational& x) {
    for (const auto& p : f.pieces())
        if (p.image().lo < x && x < p.image().hi) return std::sqrt(1.0 / to_double(p.slope)) * phi.value_at(p.preimage(x));
    return 0.0;
}

}  // namespace

TEST(RepApply, ProjectionOntoVertexDomain) {
    auto bs = build_standard_interval_bs(fixture::ten_vertex());
    auto out = rep_apply(bs, Generator::p(VertexSet::of({V("v6")})), chi(q(0), q(3)));
    EXPECT_EQ(out, chi(q(1), q(2)));
    EXPECT_TRUE(rep_apply(bs, Generator::p(VertexSet()), chi(q(0), q(3))).is_zero());
}

TEST(RepApply, PartialIsometry) {
    auto bs = build_standard_interval_bs(fixture::ten_vertex());
    auto out = rep_apply(bs, Generator::s("e1"), chi(q(-1), q(0)));
    ASSERT_EQ(out.pieces().size(), 1u);
    EXPECT_EQ(out.pieces()[0].iv, I(q(0), q(1, 2)));
    EXPECT_NEAR(out.pieces()[0].value, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(out.norm2(), 1.0, 1e-15);
}

TEST(RepApply, MatchesPointwiseFormula) {
    auto bs = build_standard_interval_bs(fixture::ten_vertex());
    fixture::Rng rng(7);
    auto phi = fixture::random_step_function(rng, IntervalSet{I(q(-6), q(5))}, 2);
    for (std::size_t e = 0; e < bs.f.size(); ++e) {
        auto out = rep_apply(bs, Generator::s(bs.graph.edge(e).id), phi);
        for (Rational x = q(-6) + q(1, 16); x < q(5); x += q(1, 8))
            EXPECT_NEAR(out.value_at(x), s_pointwise(bs.f[e], phi, x), 1e-14) << "edge " << e << " at " << to_string(x);
    }
}

TEST(RepApply, AdjointPair) {
    auto bs = build_standard_interval_bs(fixture::ten_vertex());
    fixture::Rng rng(11);
    for (int k = 0; k < 5; ++k) {
        auto phi = fixture::random_step_function(rng, IntervalSet{I(q(-6), q(5))}, 2);
        auto eta = fixture::random_step_function(rng, IntervalSet{I(q(-6), q(5))}, 2);
        for (const auto& e : bs.graph.edges()) {
            double lhs = inner(rep_apply(bs, Generator::s_star(e.id), phi), eta);
            double rhs = inner(phi, rep_apply(bs, Generator::s(e.id), eta));
            EXPECT_NEAR(lhs, rhs, 1e-12);
        }
    }
}

TEST(RepApply, PathsAndErrors) {
    auto bs = build_standard_interval_bs(fixture::ten_vertex());
    auto phi = chi(q(-4), q(-3));
    auto composed = rep_apply(bs, Generator::s_path(Path{{"e1", "e3"}}), phi);
    auto stepwise = rep_apply(bs, Generator::s("e1"), rep_apply(bs, Generator::s("e3"), phi));
    EXPECT_LT((composed - stepwise).norm1(), 1e-14);
    auto back = rep_apply(bs, Generator::s_path_star(Path{{"e1", "e3"}}), composed);
    EXPECT_LT((back - phi).norm1(), 1e-14);

    EXPECT_THROW(rep_apply(bs, Generator::s("nope"), phi), Error);
    EXPECT_THROW(rep_apply(bs, Generator::p(VertexSet::of({V("zz")})), phi), Error);
    EXPECT_THROW(rep_apply(bs, Generator::s_path(Path{{"e3", "e1"}}), phi), Error);
}

TEST(RepApply, TailSystem) {
    auto bs = build_standard_interval_bs(fixture::tailed());
    auto phi = chi(q(-3), q(-2));  // D of w3
    auto out = rep_apply(bs, Generator::s("a"), phi);
    EXPECT_EQ(out.support(), (IntervalSet{I(q(3, 4), q(7, 8))}));
    EXPECT_NEAR(out.norm2(), 1.0, 1e-15);
    auto tail = rep_apply(bs, Generator::p(VertexSet::tail(3)), chi(q(-5), q(1)));
    EXPECT_EQ(tail.support(), (IntervalSet{I(q(-5), q(-2))}));
}

TEST(CkRelations, TenVertex) {
    auto r = verify_ck_relations(build_standard_interval_bs(fixture::ten_vertex()));
    ASSERT_EQ(r.relations.size(), 4u);
    for (const auto& rel : r.relations) EXPECT_LT(rel.max_deviation, 1e-12) << "relation " << rel.relation;
    EXPECT_TRUE(r.ok());
    EXPECT_FALSE(r.exact);
    EXPECT_GT(r.family_size, 10u);
}

TEST(CkRelations, ShrunkenImageFailsRelationFour) {
    // f_e3 still carries D(v7) isometrically but onto half of R_e3 only.
    auto bs = build_standard_interval_bs(fixture::ten_vertex());
    bs.f[2] = PiecewiseAffineMap({AffinePiece{Interval(q(-4), q(-3)), q(1, 2), q(4)}});
    auto r = verify_ck_relations(bs);
    EXPECT_TRUE(r.relations[1].pass);
    EXPECT_FALSE(r.relations[3].pass);
    EXPECT_GT(r.relations[3].max_deviation, 1e-10);
    EXPECT_NE(r.relations[3].witness.find("v2"), std::string::npos) << r.relations[3].witness;
}

TEST(CkRelations, DiscreteIsExact) {
    auto r = verify_ck_relations(build_discrete_bs_from_peeling(fixture::ten_vertex()));
    EXPECT_TRUE(r.exact);
    for (const auto& rel : r.relations) EXPECT_EQ(rel.max_deviation, 0.0);
}

TEST(CkRelations, FamilyIsSeeded) {
    auto bs = build_standard_interval_bs(fixture::ten_vertex());
    EXPECT_EQ(ck_test_family(bs, 5, 4), ck_test_family(bs, 5, 4));
    EXPECT_NE(ck_test_family(bs, 5, 4), ck_test_family(bs, 6, 4));
}

TEST(DiscreteMatrix, SingleEdge) {
    auto g = fixture::single_edge();
    DiscreteBranchingSystem bs{g, {{2}}, {{V("w"), {1}}, {V("u"), {2}}}, {{{1, 2}}}};
    auto m = discrete_rep_matrix(bs, Generator::s("e"), 2);
    IntMatrix expected = IntMatrix::Zero(2, 2);
    expected(1, 0) = 1;
    EXPECT_EQ(m, expected);
    EXPECT_EQ(discrete_rep_matrix(bs, Generator::p(VertexSet()), 2), IntMatrix::Zero(2, 2));
    IntMatrix ss = discrete_rep_matrix(bs, Generator::s_star("e"), 2) * m;
    EXPECT_EQ(ss, discrete_rep_matrix(bs, Generator::p(VertexSet::of({V("w")})), 2));
    EXPECT_THROW(discrete_rep_matrix(bs, Generator::s("e"), 1), Error);
}

TEST(Faithfulness, ThreeCycle) {
    auto g = fixture::single_loop();
    DiscreteBranchingSystem bs{g, {{1, 2, 3}}, {{V("v"), {1, 2, 3}}}, {{{1, 2}, {2, 3}, {3, 1}}}};
    auto c = make_cycle(g, Path{{"e"}});
    auto yes = faithfulness_witness(bs, c, {1, 2});
    ASSERT_TRUE(yes.witness);
    EXPECT_EQ(*yes.witness, (std::set<std::uint64_t>{1}));
    EXPECT_EQ(yes.orbit_bound, 3u);
    EXPECT_FALSE(faithfulness_witness(bs, c, {3}).witness);
}

TEST(Faithfulness, IdentityAndExits) {
    auto g = fixture::single_loop();
    DiscreteBranchingSystem id{g, {{1}}, {{V("v"), {1}}}, {{{1, 1}}}};
    EXPECT_FALSE(faithfulness_witness(id, make_cycle(g, Path{{"e"}}), {1}).witness);

    auto h = make_graph({"v", "u"}, {{"e", "v", {"v"}, {}}, {"g", "v", {"u"}, {}}});
    DiscreteBranchingSystem bs{h, {{1}, {2}}, {{V("v"), {1, 2}}, {V("u"), {3}}}, {{{1, 1}}, {{3, 2}}}};
    EXPECT_THROW(faithfulness_witness(bs, make_cycle(h, Path{{"e"}}), {1}), Error);
}
