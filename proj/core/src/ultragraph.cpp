#include "ugkit/ultragraph.hpp"

#include <algorithm>
#include <cctype>

#include "ugkit/error.hpp"

namespace ugkit {

namespace {

// Index encoded by `name` under the tail prefix, if any.
std::optional<std::uint64_t> tail_index_of(const TailSpec& tail, const std::string& name) {
    if (name.size() <= tail.prefix.size() || name.compare(0, tail.prefix.size(), tail.prefix) != 0)
        return std::nullopt;
    std::uint64_t idx = 0;
    for (std::size_t i = tail.prefix.size(); i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        idx = idx * 10 + static_cast<std::uint64_t>(name[i] - '0');
    }
    if (name[tail.prefix.size()] == '0') return std::nullopt;
    return idx;
}

}  // namespace

Ultragraph::Ultragraph(std::vector<VertexId> vertices, std::optional<TailSpec> tail, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), tail_(std::move(tail)), edges_(std::move(edges)) {
    if (tail_ && tail_->start == 0) throw Error("tail start must be positive");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        if (v.is_tail()) throw Error("tail vertices cannot be declared explicitly");
        if (v.name.empty()) throw Error("empty vertex name");
        if (tail_) {
            auto idx = tail_index_of(*tail_, v.name);
            if (idx && *idx >= tail_->start) throw Error("vertex name \"" + v.name + "\" collides with the tail");
        }
        if (!vertex_pos_.emplace(v, i).second) throw Error("duplicate vertex id \"" + v.name + "\"");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.id.empty()) throw Error("empty edge id");
        if (!edge_pos_.emplace(e.id, i).second) throw Error("duplicate edge id \"" + e.id + "\"");
        if (e.source.is_tail()) throw Error("tail vertex used as source of edge \"" + e.id + "\"");
        if (!has_vertex(e.source)) throw Error("unknown vertex \"" + e.source.name + "\" in edge \"" + e.id + "\"");
        if (e.range.empty()) throw Error("empty range for edge \"" + e.id + "\"");
        if (!e.range.is_finite() && !tail_) throw Error("edge \"" + e.id + "\" has a tail range but the graph has no tail");
        if (!in_universe(e.range)) throw Error("unknown vertex in range of edge \"" + e.id + "\"");
        emitted_[e.source].push_back(i);
    }
}

std::size_t Ultragraph::edge_index(const std::string& id) const {
    auto it = edge_pos_.find(id);
    if (it == edge_pos_.end()) throw Error("unknown edge \"" + id + "\"");
    return it->second;
}

bool Ultragraph::has_vertex(const VertexId& v) const {
    if (v.is_tail()) return tail_ && v.tail >= tail_->start;
    return vertex_pos_.count(v) != 0;
}

std::size_t Ultragraph::vertex_index(const VertexId& v) const {
    auto it = vertex_pos_.find(v);
    if (it == vertex_pos_.end()) throw Error("unknown vertex \"" + name_of(v) + "\"");
    return it->second;
}

const std::vector<std::size_t>& Ultragraph::emitted_by(const VertexId& v) const {
    static const std::vector<std::size_t> none;
    auto it = emitted_.find(v);
    return it == emitted_.end() ? none : it->second;
}

VertexSet Ultragraph::universe() const {
    std::set<VertexId> m(vertices_.begin(), vertices_.end());
    std::optional<std::uint64_t> t;
    if (tail_) t = tail_->start;
    return VertexSet(std::move(m), t);
}

std::string Ultragraph::name_of(const VertexId& v) const {
    if (!v.is_tail()) return v.name;
    return (tail_ ? tail_->prefix : std::string("#")) + std::to_string(v.tail);
}

VertexId Ultragraph::resolve(const std::string& name) const {
    VertexId v = VertexId::named(name);
    if (vertex_pos_.count(v)) return v;
    if (tail_) {
        auto idx = tail_index_of(*tail_, name);
        if (idx && *idx >= tail_->start) return VertexId::tail_vertex(*idx);
    }
    throw Error("unknown vertex \"" + name + "\"");
}

bool Ultragraph::in_universe(const VertexSet& a) const {
    for (const auto& v : a.explicit_part())
        if (!has_vertex(v)) return false;
    if (a.tail_from() && (!tail_ || *a.tail_from() < tail_->start)) return false;
    return true;
}

std::uint64_t Ultragraph::max_tail_index() const {
    std::uint64_t m = 0;
    for (const auto& e : edges_) m = std::max(m, e.range.max_tail_index());
    return m;
}

VertexSet Ultragraph::all_ranges() const {
    VertexSet out;
    for (const auto& e : edges_) out = vs_union(out, e.range);
    return out;
}

std::set<VertexId> Ultragraph::all_sources() const {
    std::set<VertexId> out;
    for (const auto& e : edges_) out.insert(e.source);
    return out;
}

Ultragraph make_graph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
                      const std::optional<TailSpec>& tail) {
    std::vector<VertexId> vs;
    vs.reserve(vertices.size());
    for (const auto& n : vertices) vs.push_back(VertexId::named(n));
    // Resolution needs the vertex table, so build an edgeless graph first.
    Ultragraph names(vs, tail, {});
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& spec : edges) {
        std::set<VertexId> members;
        for (const auto& n : spec.range) members.insert(names.resolve(n));
        VertexId src = VertexId::named(spec.source);
        if (!names.has_vertex(src)) {
            VertexId r = names.resolve(spec.source);
            if (r.is_tail()) throw Error("tail vertex used as source of edge \"" + spec.id + "\"");
        }
        es.push_back(Edge{spec.id, src, VertexSet(std::move(members), spec.tail_from)});
    }
    return Ultragraph(std::move(vs), tail, std::move(es));
}

}  // namespace ugkit
