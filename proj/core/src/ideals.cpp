#include "ugkit/ideals.hpp"

#include <algorithm>
#include <deque>

#include "ugkit/error.hpp"

namespace ugkit {

namespace {

[[noreturn]] void finite_only() { throw Error("hs operations require finite data"); }

void require_finite_set(const std::set<VertexId>& W) {
    for (const auto& v : W)
        if (v.is_tail()) finite_only();
}

bool range_inside(const VertexSet& range, const std::set<VertexId>& W) {
    if (range.tail_from()) return false;
    return std::all_of(range.explicit_part().begin(), range.explicit_part().end(),
                       [&](const VertexId& v) { return W.count(v) != 0; });
}

bool saturates(const Ultragraph& g, const VertexId& v, const std::set<VertexId>& W) {
    const auto& out = g.emitted_by(v);
    if (out.empty()) return false;
    return std::all_of(out.begin(), out.end(), [&](std::size_t e) { return range_inside(g.edge(e).range, W); });
}

}  // namespace

HSCheck is_hereditary_saturated(const Ultragraph& g, const std::set<VertexId>& W) {
    require_finite_set(W);
    for (const auto& v : W)
        if (!g.has_vertex(v)) throw Error("unknown vertex \"" + v.name + "\"");
    HSCheck r;
    for (const auto& e : g.edges())
        if (W.count(e.source) && !range_inside(e.range, W)) r.hereditary_witnesses.push_back(e.id);
    for (const auto& v : g.vertices())
        if (!W.count(v) && saturates(g, v, W)) r.saturated_witnesses.push_back(v);
    r.hereditary = r.hereditary_witnesses.empty();
    r.saturated = r.saturated_witnesses.empty();
    return r;
}

HSSet hs_closure(const Ultragraph& g, const std::set<VertexId>& W0) {
    require_finite_set(W0);
    for (const auto& v : W0)
        if (!g.has_vertex(v)) throw Error("unknown vertex \"" + v.name + "\"");
    std::set<VertexId> W = W0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : g.edges()) {
            if (!W.count(e.source) || range_inside(e.range, W)) continue;
            if (e.range.tail_from()) finite_only();
            for (const auto& v : e.range.explicit_part())
                if (W.insert(v).second) changed = true;
        }
        for (const auto& v : g.vertices())
            if (!W.count(v) && saturates(g, v, W)) {
                W.insert(v);
                changed = true;
            }
    }
    return HSSet{std::move(W)};
}

std::set<VertexId> reachable_from(const Ultragraph& g, const VertexId& v) {
    std::set<VertexId> seen;
    std::deque<VertexId> todo{v};
    std::set<VertexId> expanded;
    while (!todo.empty()) {
        auto u = todo.front();
        todo.pop_front();
        if (!expanded.insert(u).second) continue;
        for (auto e : g.emitted_by(u)) {
            const auto& range = g.edge(e).range;
            for (const auto& w : range.explicit_part()) {
                seen.insert(w);
                todo.push_back(w);
            }
        }
    }
    return seen;
}

EssentialResult is_essential(const Ultragraph& g, const HSSet& sh) {
    require_finite_set(sh.W);
    // Reverse reachability from W: v reaches W iff some edge out of v has a range meeting W or a reaching vertex.
    std::set<VertexId> good;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : g.edges()) {
            if (good.count(e.source)) continue;
            bool hits = std::any_of(e.range.explicit_part().begin(), e.range.explicit_part().end(),
                                    [&](const VertexId& w) { return sh.W.count(w) || good.count(w); });
            if (hits) {
                good.insert(e.source);
                changed = true;
            }
        }
    }
    for (const auto& v : g.vertices())
        if (!sh.W.count(v) && !good.count(v)) return {false, v};
    if (g.tail()) return {false, VertexId::tail_vertex(g.tail()->start)};
    return {true, std::nullopt};
}

UniquenessDecomposition uniqueness_decomposition(const Ultragraph& g) {
    if (!g.is_finite()) finite_only();
    UniquenessDecomposition d;
    std::set<VertexId> x1;
    for (const auto& c : enumerate_simple_cycles(g)) {
        if (!cycle_exits(g, c).empty()) continue;
        for (const auto& id : c.path.edges) x1.insert(g.edge(g.edge_index(id)).source);
    }
    d.X1 = x1;
    d.W1 = hs_closure(g, x1);
    for (const auto& v : g.vertices()) {
        if (d.W1.W.count(v)) continue;
        auto reach = reachable_from(g, v);
        bool meets = std::any_of(reach.begin(), reach.end(), [&](const VertexId& w) { return d.W1.W.count(w) != 0; });
        if (!meets) d.W2.W.insert(v);
    }
    d.disjoint = std::none_of(d.W1.W.begin(), d.W1.W.end(), [&](const VertexId& v) { return d.W2.W.count(v) != 0; });
    return d;
}

UniquenessReport uniqueness_report(const Ultragraph& g) {
    UniquenessReport r;
    auto cl = condition_l(g);
    r.condition_l = cl.holds;
    r.no_exit_cycles = cl.violations;
    r.decomposition = uniqueness_decomposition(g);
    std::set<VertexId> both = r.decomposition.W1.W;
    both.insert(r.decomposition.W2.W.begin(), r.decomposition.W2.W.end());
    auto ess = is_essential(g, hs_closure(g, both));
    r.essential = ess.essential;
    r.orphan = ess.orphan;
    r.certificate_obligations.push_back("p_A != 0 for all nonempty A");
    for (const auto& c : r.no_exit_cycles) {
        std::string label;
        for (const auto& id : c.path.edges) label += (label.empty() ? "" : ",") + id;
        r.certificate_obligations.push_back("spectrum of image of s_(" + label + ") contains unit circle");
    }
    return r;
}

}  // namespace ugkit
