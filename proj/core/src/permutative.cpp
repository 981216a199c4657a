#include "ugkit/permutative.hpp"

#include <algorithm>

#include "ugkit/error.hpp"

namespace ugkit {

namespace {

void require_finite(const Ultragraph& g) {
    if (!g.is_finite()) throw Error("peeling requires a finite graph");
}

bool range_clause(const Ultragraph& g, std::size_t e) {
    const auto& a = g.edge(e).range;
    for (std::size_t f = 0; f < g.edge_count(); ++f)
        if (f != e && a.intersects(g.edge(f).range)) return false;
    for (const auto& edge : g.edges())
        if (a.contains(edge.source)) return false;
    return true;
}

bool source_clause(const Ultragraph& g, std::size_t e) {
    const auto& v = g.edge(e).source;
    if (g.emitted_by(v).size() != 1) return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& edge) { return edge.range.contains(v); });
}

Ultragraph remove(const Ultragraph& g, const std::set<VertexId>& vertices, const std::set<std::string>& edges) {
    std::vector<VertexId> vs;
    for (const auto& v : g.vertices())
        if (!vertices.count(v)) vs.push_back(v);
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (!edges.count(e.id)) es.push_back(e);
    return Ultragraph(std::move(vs), g.tail(), std::move(es));
}

}  // namespace

std::set<VertexId> isolated_vertices(const Ultragraph& g) {
    require_finite(g);
    auto ranges = g.all_ranges();
    auto sources = g.all_sources();
    std::set<VertexId> out;
    for (const auto& v : g.vertices())
        if (!ranges.contains(v) && !sources.count(v)) out.insert(v);
    return out;
}

std::vector<Extreme> extreme_vertices(const Ultragraph& g) {
    require_finite(g);
    std::vector<Extreme> out;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        if (range_clause(g, e)) out.push_back(Extreme{edge.range, edge.id, ExtremeKind::Fin});
        if (source_clause(g, e)) out.push_back(Extreme{VertexSet::of({edge.source}), edge.id, ExtremeKind::Ini});
    }
    return out;
}

PeelTrace peel_sequence(const Ultragraph& g) {
    require_finite(g);
    PeelTrace trace;
    trace.I0 = isolated_vertices(g);
    Ultragraph current = remove(g, trace.I0, {});
    for (;;) {
        PeelLevel level;
        for (auto& x : extreme_vertices(current))
            if (level.Y.empty() || level.Y.back() != x.edge) {
                level.Y.push_back(x.edge);
                level.X.push_back(std::move(x));
            }
        if (level.X.empty()) break;
        std::set<VertexId> xbar;
        for (const auto& x : level.X) xbar.insert(x.set.explicit_part().begin(), x.set.explicit_part().end());
        Ultragraph stripped = remove(current, xbar, std::set<std::string>(level.Y.begin(), level.Y.end()));
        level.I = isolated_vertices(stripped);
        level.remaining = remove(stripped, level.I, {});
        current = level.remaining;
        trace.levels.push_back(std::move(level));
    }
    return trace;
}

PermutativityResult permutativity_condition(const Ultragraph& g) {
    auto trace = peel_sequence(g);
    std::set<VertexId> target = g.all_sources();
    const auto ranges = g.all_ranges();
    target.insert(ranges.explicit_part().begin(), ranges.explicit_part().end());

    PermutativityResult r;
    std::set<VertexId> covered;
    for (std::size_t i = 0; i < trace.levels.size(); ++i) {
        const auto& level = trace.levels[i];
        for (const auto& x : level.X) covered.insert(x.set.explicit_part().begin(), x.set.explicit_part().end());
        covered.insert(level.I.begin(), level.I.end());
        if (covered == target) {
            r.holds = true;
            r.n = i + 1;
            r.certificate = "peeling levels 1.." + std::to_string(i + 1) +
                            " cover every range and source; every representation with H_r(e) the direct sum "
                            "of H_v over v in r(e) is permutative";
            return r;
        }
    }
    r.certificate = trace.levels.empty() ? "no extreme vertices" : "peeling stops before covering every range and source";
    return r;
}

bool L1Report::ok() const {
    return std::all_of(items.begin(), items.end(), [](const L1Item& i) { return i.pass; });
}

namespace {

void fail(L1Item& item, std::string witness) {
    if (!item.pass) return;
    item.pass = false;
    item.witness = std::move(witness);
}

bool is_final_up_to(const PeelTrace& t, std::size_t last_level, const VertexSet& a) {
    for (std::size_t i = 0; i < last_level && i < t.levels.size(); ++i)
        for (const auto& x : t.levels[i].X)
            if (x.kind == ExtremeKind::Fin && x.set == a) return true;
    return false;
}

}  // namespace

L1Report check_l1_invariants(const Ultragraph& g, const PeelTrace& trace) {
    if (!(peel_sequence(g) == trace)) throw Error("trace does not match graph");
    auto perm = permutativity_condition(g);
    if (!perm.holds) throw Error("permutativity condition does not hold");
    const std::size_t n = *perm.n;

    std::set<VertexId> item4_base;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& x : trace.levels[i].X)
            if (x.kind == ExtremeKind::Fin) item4_base.insert(x.set.explicit_part().begin(), x.set.explicit_part().end());
        item4_base.insert(trace.levels[i].I.begin(), trace.levels[i].I.end());
    }

    L1Report rep;
    for (std::size_t N = 1; N <= n; ++N) {
        const auto& level = trace.levels[N - 1];
        const std::string tag = "level " + std::to_string(N) + ": ";
        for (std::size_t a = 0; a < level.X.size(); ++a)
            for (std::size_t b = a + 1; b < level.X.size(); ++b)
                if (level.X[a].set.intersects(level.X[b].set))
                    fail(rep.items[0], tag + "extremes of " + level.X[a].edge + " and " + level.X[b].edge + " meet");

        for (const auto& x : level.X) {
            if (x.kind != ExtremeKind::Fin) continue;
            for (const auto& e : g.edges())
                if (x.set.contains(e.source) && !is_final_up_to(trace, N - 1, e.range))
                    fail(rep.items[1], tag + "r(" + e.id + ") is not a final extreme of an earlier level");
        }

        for (const auto& v : level.I)
            for (auto ei : g.emitted_by(v))
                if (!is_final_up_to(trace, N, g.edge(ei).range))
                    fail(rep.items[2], tag + "r(" + g.edge(ei).id + ") is not a final extreme up to this level");

        std::set<VertexId> allowed = item4_base;
        for (std::size_t i = N; i < n; ++i)
            for (const auto& x : trace.levels[i].X)
                if (x.kind == ExtremeKind::Ini) allowed.insert(x.set.explicit_part().begin(), x.set.explicit_part().end());
        for (const auto& x : level.X) {
            if (x.kind != ExtremeKind::Ini) continue;
            for (auto ei : g.emitted_by(*x.set.explicit_part().begin()))
                for (const auto& w : g.edge(ei).range.explicit_part())
                    if (!allowed.count(w))
                        fail(rep.items[3], tag + "r(" + g.edge(ei).id + ") contains " + g.name_of(w) +
                                               " outside the permitted levels");
        }
    }
    return rep;
}

}  // namespace ugkit
