#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ugkit/error.hpp"
#include "ugkit/io.hpp"

using namespace ugkit;
using ugkit::fixture::V;
using nlohmann::json;

TEST(GraphDocument, RoundTrip) {
    for (const auto& g : {fixture::ten_vertex(), fixture::tailed(), fixture::single_loop()}) {
        auto doc = io::to_json(g);
        EXPECT_EQ(io::graph_from_json(doc), g);
        EXPECT_EQ(io::document_kind(doc), io::DocumentKind::Graph);
    }
}

TEST(GraphDocument, SchemaFields) {
    auto doc = json::parse(R"({"vertices":["a","b"],"tail":{"prefix":"w","start":2},
        "edges":[{"id":"e","source":"a","range":{"vertices":["b","w3"],"tail_from":5}}]})");
    auto g = io::graph_from_json(doc);
    EXPECT_EQ(g.tail()->start, 2u);
    EXPECT_EQ(g.edge(0).range, VertexSet({V("b"), VertexId::tail_vertex(3)}, 5));
}

TEST(GraphDocument, Errors) {
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"edges":[]})")), Error);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"vertices":[1]})")), Error);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"vertices":["a"],"edges":[{"id":"e","source":"a"}]})")), Error);
    EXPECT_THROW(io::graph_from_json(json::parse(R"([1,2])")), Error);
    EXPECT_THROW(io::graph_from_json(json::parse(
                     R"({"vertices":["a"],"edges":[{"id":"e","source":"a","range":{"vertices":[]}}]})")),
                 Error);
}

TEST(VertexList, Parsing) {
    auto g = fixture::tailed();
    EXPECT_EQ(io::parse_vertex_list(g, "u,w1+tail:3"), VertexSet({V("u"), VertexId::tail_vertex(1)}, 3));
    EXPECT_EQ(io::parse_vertex_list(g, "+tail:2"), VertexSet::tail(2));
    EXPECT_EQ(io::parse_vertex_list(g, ""), VertexSet());
    EXPECT_EQ(io::parse_vertex_list(g, "v, u"), VertexSet::of({V("u"), V("v")}));
    EXPECT_THROW(io::parse_vertex_list(g, "u,,v"), Error);
    EXPECT_THROW(io::parse_vertex_list(g, "u+tail:x"), Error);
    EXPECT_THROW(io::parse_vertex_list(g, "u+tail:0"), Error);
    EXPECT_THROW(io::parse_vertex_list(fixture::ten_vertex(), "+tail:1"), Error);
    EXPECT_EQ(io::parse_int_list("3,1,2"), (std::set<std::uint64_t>{1, 2, 3}));
    EXPECT_THROW(io::parse_int_list("1,-2"), Error);
    EXPECT_EQ(io::parse_edge_list("e1,e3").edges, (std::vector<std::string>{"e1", "e3"}));
}

TEST(BranchingDocument, IntervalRoundTrip) {
    for (const auto& g : {fixture::ten_vertex(), fixture::tailed()}) {
        auto bs = build_standard_interval_bs(g);
        auto doc = io::to_json(bs);
        EXPECT_EQ(io::document_kind(doc), io::DocumentKind::Interval);
        auto back = io::interval_bs_from_json(json::parse(doc.dump()));
        EXPECT_EQ(back.R, bs.R);
        EXPECT_EQ(back.D, bs.D);
        EXPECT_EQ(back.f, bs.f);
        EXPECT_EQ(back.f_tail, bs.f_tail);
        EXPECT_EQ(back.tail_layout, bs.tail_layout);
    }
}

TEST(BranchingDocument, RationalsAreStrings) {
    auto doc = io::to_json(build_standard_interval_bs(fixture::ten_vertex()));
    EXPECT_EQ(doc["R"]["e1"], json::parse(R"([["0/1","1/1"]])"));
    EXPECT_EQ(doc["f"]["e1"][0]["slope"], "1/2");
    EXPECT_EQ(doc["f"]["e1"][0]["dom"], json::parse(R"(["-1/1","0/1"])"));
}

TEST(BranchingDocument, DiscreteRoundTrip) {
    auto bs = build_discrete_bs_from_peeling(fixture::ten_vertex());
    auto doc = io::to_json(bs);
    EXPECT_EQ(io::document_kind(doc), io::DocumentKind::Discrete);
    auto back = io::discrete_bs_from_json(doc);
    EXPECT_EQ(back.R, bs.R);
    EXPECT_EQ(back.D, bs.D);
    EXPECT_EQ(back.f, bs.f);
}

TEST(BranchingDocument, Errors) {
    auto doc = io::to_json(build_standard_interval_bs(fixture::ten_vertex()));
    doc["f"]["e1"][0]["slope"] = "1/0";
    EXPECT_THROW(io::interval_bs_from_json(doc), Error);
    doc = io::to_json(build_standard_interval_bs(fixture::ten_vertex()));
    doc["R"]["e9"] = json::array();
    EXPECT_THROW(io::interval_bs_from_json(doc), Error);
    EXPECT_THROW(io::document_kind(json::parse(R"({"kind":"other"})")), Error);
}

TEST(StepDocument, RoundTrip) {
    auto doc = json::parse(R"({"pieces":[{"from":"0/1","to":"1/2","value":1.0},{"from":"1/2","to":"1/1","value":-0.5}]})");
    auto phi = io::step_function_from_json(doc);
    EXPECT_EQ(phi.pieces().size(), 2u);
    EXPECT_EQ(io::to_json(phi), doc);
    EXPECT_THROW(io::step_function_from_json(json::parse(R"({"pieces":[{"from":"1/1","to":"0/1","value":1}]})")), Error);
    EXPECT_THROW(io::step_function_from_json(json::parse(R"({"pieces":[{"from":"0/1","to":"1/1","value":"x"}]})")), Error);
}
