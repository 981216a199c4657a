#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ugkit/vertex_set.hpp"

namespace ugkit {

struct TailSpec {
    std::string prefix;
    std::uint64_t start = 1;

    friend bool operator==(const TailSpec&, const TailSpec&) = default;
};

struct Edge {
    std::string id;
    VertexId source;
    VertexSet range;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite edge set over explicit vertices plus an optional sink tail.
/// Edges are indexed by declaration order; that order is the canonical edge order.
class Ultragraph {
public:
    Ultragraph() = default;
    /// Validates and normalizes. Throws ugkit::Error on duplicate ids, unknown
    /// vertices, empty ranges, or tail vertices used as sources.
    Ultragraph(std::vector<VertexId> vertices, std::optional<TailSpec> tail, std::vector<Edge> edges);

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    const std::optional<TailSpec>& tail() const noexcept { return tail_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool is_finite() const noexcept { return !tail_; }

    const Edge& edge(std::size_t index) const { return edges_.at(index); }
    std::size_t edge_index(const std::string& id) const;
    bool has_edge(const std::string& id) const { return edge_pos_.count(id) != 0; }

    bool has_vertex(const VertexId& v) const;
    /// Position of an explicit vertex in declaration order.
    std::size_t vertex_index(const VertexId& v) const;

    /// s^{-1}(v) as edge indices in declaration order.
    const std::vector<std::size_t>& emitted_by(const VertexId& v) const;
    bool is_sink(const VertexId& v) const { return emitted_by(v).empty(); }

    /// All vertices, the tail included.
    VertexSet universe() const;

    std::string name_of(const VertexId& v) const;
    /// Resolves a name to an explicit vertex or, via the tail prefix, a tail vertex.
    VertexId resolve(const std::string& name) const;
    bool in_universe(const VertexSet& a) const;

    /// Largest tail index mentioned anywhere in the graph (0 if none).
    std::uint64_t max_tail_index() const;

    /// Union of all ranges.
    VertexSet all_ranges() const;
    std::set<VertexId> all_sources() const;

    friend bool operator==(const Ultragraph& a, const Ultragraph& b) {
        return a.vertices_ == b.vertices_ && a.tail_ == b.tail_ && a.edges_ == b.edges_;
    }

private:
    std::vector<VertexId> vertices_;
    std::optional<TailSpec> tail_;
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> edge_pos_;
    std::map<VertexId, std::size_t> vertex_pos_;
    std::map<VertexId, std::vector<std::size_t>> emitted_;
};

struct EdgeSpec {
    std::string id;
    std::string source;
    std::vector<std::string> range;
    std::optional<std::uint64_t> tail_from;
};

/// Builds a graph from vertex names, resolving tail names through `tail`.
Ultragraph make_graph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
                      const std::optional<TailSpec>& tail = std::nullopt);

}  // namespace ugkit
