#include "ugkit/discrete.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "ugkit/error.hpp"
#include "ugkit/paths.hpp"
#include "ugkit/permutative.hpp"

namespace ugkit {

std::set<std::uint64_t> DiscreteBranchingSystem::D_of(const VertexId& v) const {
    auto it = D.find(v);
    return it == D.end() ? std::set<std::uint64_t>{} : it->second;
}

std::set<std::uint64_t> DiscreteBranchingSystem::D_of(const VertexSet& A) const {
    if (A.tail_from()) throw Error("discrete systems have no tail");
    std::set<std::uint64_t> out;
    for (const auto& v : A.explicit_part()) {
        auto d = D_of(v);
        out.insert(d.begin(), d.end());
    }
    return out;
}

std::uint64_t DiscreteBranchingSystem::max_index() const {
    std::uint64_t m = 0;
    for (const auto& r : R)
        if (!r.empty()) m = std::max(m, *r.rbegin());
    for (const auto& [v, d] : D)
        if (!d.empty()) m = std::max(m, *d.rbegin());
    for (const auto& fe : f)
        for (const auto& [a, b] : fe) m = std::max({m, a, b});
    return m;
}

namespace {

void fail(ConditionReport& c, std::string detail, std::optional<std::uint64_t> index = std::nullopt) {
    if (!c.pass) return;
    c.pass = false;
    c.detail = std::move(detail);
    c.index = index;
}

std::optional<std::uint64_t> first_difference(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    for (auto x : a)
        if (!b.count(x)) return x;
    for (auto x : b)
        if (!a.count(x)) return x;
    return std::nullopt;
}

}  // namespace

BsReport validate_bs(const DiscreteBranchingSystem& bs) {
    const auto& g = bs.graph;
    const auto m = g.edge_count();
    BsReport rep;
    for (int k = 1; k <= 5; ++k) rep.conditions.push_back(ConditionReport{k, true, {}, {}, std::nullopt});
    auto& c1 = rep.conditions[0];
    auto& c2 = rep.conditions[1];
    auto& c3 = rep.conditions[2];
    auto& c4 = rep.conditions[3];
    auto& c5 = rep.conditions[4];
    if (bs.R.size() != m || bs.f.size() != m) {
        for (auto& c : rep.conditions) fail(c, "edge data does not match the graph");
        return rep;
    }
    auto zero_index = [](const std::set<std::uint64_t>& s) { return !s.empty() && *s.begin() == 0; };

    for (std::size_t e = 0; e < m; ++e) {
        if (zero_index(bs.R[e])) fail(c1, "R_" + g.edge(e).id + " uses index 0", 0);
        for (std::size_t f = e + 1; f < m; ++f)
            for (auto x : bs.R[e])
                if (bs.R[f].count(x)) fail(c1, "R_" + g.edge(e).id + " and R_" + g.edge(f).id + " share an index", x);
    }

    if (!g.is_finite()) fail(c2, "tail vertices have no index sets");
    for (const auto& [v, d] : bs.D) {
        if (!g.has_vertex(v)) fail(c2, "D given for unknown vertex \"" + g.name_of(v) + "\"");
        if (zero_index(d)) fail(c2, "D_" + g.name_of(v) + " uses index 0", 0);
    }
    for (auto a = bs.D.begin(); a != bs.D.end(); ++a)
        for (auto b = std::next(a); b != bs.D.end(); ++b)
            for (auto x : a->second)
                if (b->second.count(x))
                    fail(c2, "D_" + g.name_of(a->first) + " and D_" + g.name_of(b->first) + " share an index", x);

    for (std::size_t e = 0; e < m; ++e) {
        auto d = bs.D_of(g.edge(e).source);
        for (auto x : bs.R[e])
            if (!d.count(x)) fail(c3, "R_" + g.edge(e).id + " not inside D_" + g.name_of(g.edge(e).source), x);
    }

    for (const auto& v : g.vertices()) {
        const auto& out = g.emitted_by(v);
        if (out.empty()) continue;
        std::set<std::uint64_t> u;
        for (auto e : out) u.insert(bs.R[e].begin(), bs.R[e].end());
        if (auto x = first_difference(bs.D_of(v), u))
            fail(c4, "D_" + g.name_of(v) + " differs from the union of its edge sets", x);
    }

    for (std::size_t e = 0; e < m; ++e) {
        const auto& edge = g.edge(e);
        if (edge.range.tail_from()) {
            fail(c5, "f_" + edge.id + " has an infinite domain");
            continue;
        }
        std::set<std::uint64_t> dom, img;
        for (const auto& [a, b] : bs.f[e]) {
            dom.insert(a);
            if (!img.insert(b).second) fail(c5, "f_" + edge.id + " is not injective", b);
        }
        if (auto x = first_difference(dom, bs.D_of(edge.range)))
            fail(c5, "domain of f_" + edge.id + " differs from D_r(" + edge.id + ")", x);
        if (auto x = first_difference(img, bs.R[e]))
            fail(c5, "f_" + edge.id + " is not a bijection onto R_" + edge.id, x);
    }
    return rep;
}

DiscreteBranchingSystem build_discrete_bs_from_peeling(const Ultragraph& g) {
    if (!g.is_finite()) throw Error("peeling requires a finite graph");
    if (!enumerate_simple_cycles(g).empty()) throw Error("finite discrete synthesis requires acyclicity");
    auto perm = permutativity_condition(g);
    if (!perm.holds) throw Error("permutativity condition fails: " + perm.certificate);

    // |D_v| bottom-up; recursion terminates because the graph is acyclic.
    std::map<VertexId, std::uint64_t> size;
    const auto cap = std::numeric_limits<std::uint64_t>::max() / 4;
    std::function<std::uint64_t(const VertexId&)> dsize = [&](const VertexId& v) -> std::uint64_t {
        if (auto it = size.find(v); it != size.end()) return it->second;
        const auto& out = g.emitted_by(v);
        std::uint64_t total = 0;
        if (out.empty()) total = 1;
        for (auto e : out)
            for (const auto& u : g.edge(e).range.explicit_part()) {
                total += dsize(u);
                if (total > cap) throw Error("index sets too large");
            }
        size.emplace(v, total);
        return total;
    };

    DiscreteBranchingSystem bs;
    bs.graph = g;
    bs.R.resize(g.edge_count());
    bs.f.resize(g.edge_count());
    std::uint64_t next = 1;
    for (const auto& v : g.vertices()) {
        const auto n = dsize(v);
        auto& d = bs.D[v];
        std::uint64_t cursor = next;
        for (std::uint64_t k = 0; k < n; ++k) d.insert(next + k);
        for (auto e : g.emitted_by(v)) {
            std::uint64_t len = 0;
            for (const auto& u : g.edge(e).range.explicit_part()) len += dsize(u);
            for (std::uint64_t k = 0; k < len; ++k) bs.R[e].insert(cursor + k);
            cursor += len;
        }
        next += n;
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto dom = bs.D_of(g.edge(e).range);
        auto it = bs.R[e].begin();
        for (auto x : dom) bs.f[e].emplace(x, *it++);
    }
    return bs;
}

}  // namespace ugkit
