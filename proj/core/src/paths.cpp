#include "ugkit/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ugkit/error.hpp"

namespace ugkit {

std::size_t Digraph::arc_count() const {
    std::size_t n = 0;
    for (const auto& s : succ) n += s.size();
    return n;
}

Digraph composability_graph(const Ultragraph& g) {
    Digraph d;
    const auto m = g.edge_count();
    d.succ.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        d.nodes.push_back(g.edge(i).id);
        for (std::size_t j = 0; j < m; ++j)
            if (g.edge(i).range.contains(g.edge(j).source)) d.succ[i].push_back(j);
    }
    return d;
}

namespace {

std::vector<std::size_t> indices_of(const Ultragraph& g, const Path& p) {
    if (p.edges.empty()) throw Error("empty path");
    std::vector<std::size_t> out;
    out.reserve(p.edges.size());
    for (const auto& id : p.edges) out.push_back(g.edge_index(id));
    return out;
}

Path path_of(const Ultragraph& g, const std::vector<std::size_t>& idx) {
    Path p;
    p.edges.reserve(idx.size());
    for (auto i : idx) p.edges.push_back(g.edge(i).id);
    return p;
}

}  // namespace

bool is_composable(const Ultragraph& g, const Path& p) {
    if (p.edges.empty()) return false;
    auto idx = indices_of(g, p);
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (!g.edge(idx[i]).range.contains(g.edge(idx[i + 1]).source)) return false;
    return true;
}

bool is_cycle(const Ultragraph& g, const Path& p) {
    if (!is_composable(g, p)) return false;
    const auto& first = g.edge(g.edge_index(p.edges.front()));
    const auto& last = g.edge(g.edge_index(p.edges.back()));
    return last.range.contains(first.source);
}

Cycle make_cycle(const Ultragraph& g, Path p) {
    if (!is_cycle(g, p)) throw Error("not a cycle");
    std::set<std::string> seen(p.edges.begin(), p.edges.end());
    bool simple = seen.size() == p.edges.size();
    return Cycle{std::move(p), simple};
}

std::vector<Path> enumerate_paths(const Ultragraph& g, std::size_t max_len, std::size_t cap) {
    if (max_len == 0) throw Error("max_len must be at least 1");
    auto d = composability_graph(g);
    std::vector<std::vector<std::size_t>> level;
    for (std::size_t i = 0; i < g.edge_count(); ++i) level.push_back({i});
    std::vector<Path> out;
    for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
        if (out.size() + level.size() > cap)
            throw Error("path enumeration exceeds cap of " + std::to_string(cap) + " (at least " +
                        std::to_string(out.size() + level.size()) + " paths)");
        for (const auto& p : level) out.push_back(path_of(g, p));
        if (len == max_len) break;
        std::vector<std::vector<std::size_t>> next;
        for (const auto& p : level)
            for (auto j : d.succ[p.back()]) {
                auto q = p;
                q.push_back(j);
                next.push_back(std::move(q));
                if (out.size() + next.size() > cap)
                    throw Error("path enumeration exceeds cap of " + std::to_string(cap));
            }
        level = std::move(next);
    }
    return out;
}

std::vector<Cycle> enumerate_simple_cycles(const Ultragraph& g) {
    auto d = composability_graph(g);
    const auto n = d.nodes.size();
    std::vector<std::vector<std::size_t>> found;

    // Johnson's circuit search, rooted at each node in turn over the nodes >= root.
    std::vector<bool> blocked(n);
    std::vector<std::set<std::size_t>> bmap(n);
    std::vector<std::size_t> stack;

    std::function<void(std::size_t)> unblock = [&](std::size_t u) {
        blocked[u] = false;
        auto waiting = std::move(bmap[u]);
        bmap[u].clear();
        for (auto w : waiting)
            if (blocked[w]) unblock(w);
    };

    for (std::size_t root = 0; root < n; ++root) {
        std::fill(blocked.begin(), blocked.end(), false);
        for (auto& b : bmap) b.clear();
        std::function<bool(std::size_t)> circuit = [&](std::size_t v) {
            bool closed = false;
            stack.push_back(v);
            blocked[v] = true;
            for (auto w : d.succ[v]) {
                if (w < root) continue;
                if (w == root) {
                    found.push_back(stack);
                    closed = true;
                } else if (!blocked[w] && circuit(w)) {
                    closed = true;
                }
            }
            if (closed) {
                unblock(v);
            } else {
                for (auto w : d.succ[v])
                    if (w >= root) bmap[w].insert(v);
            }
            stack.pop_back();
            return closed;
        };
        circuit(root);
    }

    std::sort(found.begin(), found.end());
    std::vector<Cycle> out;
    out.reserve(found.size());
    for (const auto& c : found) out.push_back(Cycle{path_of(g, c), true});
    return out;
}

std::vector<Exit> cycle_exits(const Ultragraph& g, const Cycle& c) {
    if (!is_cycle(g, c.path)) throw Error("not a cycle");
    auto idx = indices_of(g, c.path);
    const auto n = idx.size();
    std::vector<Exit> out;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& range = g.edge(idx[i]).range;
        const auto next = idx[(i + 1) % n];
        const int condition = i + 1 < n ? 1 : 2;
        // s^{-1}(r(α_i)) compared with {α_{i+1}}
        for (std::size_t j = 0; j < g.edge_count(); ++j)
            if (j != next && range.contains(g.edge(j).source))
                out.push_back(Exit{condition, i + 1, g.edge(j).id, std::nullopt});
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& range = g.edge(idx[i]).range;
        for (const auto& v : range.explicit_part())
            if (g.is_sink(v)) out.push_back(Exit{3, i + 1, std::nullopt, v});
        if (range.tail_from()) {
            bool listed = std::any_of(range.explicit_part().begin(), range.explicit_part().end(),
                                      [](const VertexId& v) { return v.is_tail(); });
            if (!listed) out.push_back(Exit{3, i + 1, std::nullopt, VertexId::tail_vertex(*range.tail_from())});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Exit& a, const Exit& b) {
        return std::tie(a.index, a.condition) < std::tie(b.index, b.condition);
    });
    return out;
}

ConditionL condition_l(const Ultragraph& g) {
    ConditionL r;
    for (auto& c : enumerate_simple_cycles(g))
        if (cycle_exits(g, c).empty()) r.violations.push_back(std::move(c));
    r.holds = r.violations.empty();
    return r;
}

}  // namespace ugkit
