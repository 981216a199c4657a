#include "ugkit/g0.hpp"

#include <algorithm>

#include "ugkit/error.hpp"

namespace ugkit {

namespace {

std::vector<std::size_t> tailed_edges(const Ultragraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (g.edge(i).range.tail_from()) out.push_back(i);
    return out;
}

}  // namespace

G0Decision g0_membership(const Ultragraph& g, const VertexSet& target) {
    if (!g.in_universe(target)) throw Error("target is not a subset of the vertex universe");
    if (target.is_finite()) return {true, G0Witness{{}, target}};

    // Any infinite lattice element contains an intersection of tailed ranges,
    // and every such intersection contains the intersection of all of them.
    auto tailed = tailed_edges(g);
    if (tailed.empty()) return {false, std::nullopt};
    VertexSet core = g.edge(tailed.front()).range;
    for (auto i : tailed) core = vs_intersect(core, g.edge(i).range);
    if (!core.subset_of(target)) return {false, std::nullopt};

    G0Witness w;
    w.intersections.emplace_back();
    for (auto i : tailed) w.intersections.back().push_back(g.edge(i).id);
    w.finite_part = vs_difference(target, core);
    return {true, std::move(w)};
}

VertexSet evaluate_witness(const Ultragraph& g, const G0Witness& w) {
    VertexSet out = w.finite_part;
    for (const auto& term : w.intersections) {
        if (term.empty()) throw Error("empty intersection in witness");
        VertexSet acc = g.edge(g.edge_index(term.front())).range;
        for (const auto& id : term) acc = vs_combine(CombineOp::Intersect, acc, g.edge(g.edge_index(id)).range);
        out = vs_combine(CombineOp::Union, out, acc);
    }
    return out;
}

std::vector<VertexSet> g0_enumerate(const Ultragraph& g, std::uint64_t cut, std::size_t cap) {
    if (cut == 0) throw Error("cut must be positive");
    if (g.max_tail_index() > cut) throw Error("cut is below an index appearing in the graph");

    // Atoms in canonical order: explicit vertices, tail vertices up to cut, then the token.
    std::vector<VertexId> atoms(g.vertices().begin(), g.vertices().end());
    std::sort(atoms.begin(), atoms.end());
    if (g.tail())
        for (auto i = g.tail()->start; i <= cut; ++i) atoms.push_back(VertexId::tail_vertex(i));
    const std::size_t n = atoms.size();
    if (n >= 63) throw Error("closure too large");

    auto tailed = tailed_edges(g);
    std::uint64_t core_mask = 0;
    if (!tailed.empty()) {
        VertexSet core = g.edge(tailed.front()).range;
        for (auto i : tailed) core = vs_intersect(core, g.edge(i).range);
        for (std::size_t k = 0; k < n; ++k)
            if (core.contains(atoms[k])) core_mask |= std::uint64_t{1} << k;
    }
    const std::uint64_t finite_count = std::uint64_t{1} << n;
    const std::uint64_t free_bits = n - static_cast<std::uint64_t>(__builtin_popcountll(core_mask));
    const std::uint64_t infinite_count = tailed.empty() ? 0 : (std::uint64_t{1} << free_bits);
    if (finite_count + infinite_count > cap) throw Error("closure too large");

    std::vector<VertexSet> out;
    out.reserve(finite_count + infinite_count);
    auto build = [&](std::uint64_t mask, bool token) {
        std::set<VertexId> m;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) m.insert(atoms[k]);
        std::optional<std::uint64_t> t;
        if (token) t = cut + 1;
        return VertexSet(std::move(m), t);
    };
    for (std::uint64_t mask = 0; mask < finite_count; ++mask) out.push_back(build(mask, false));
    if (!tailed.empty())
        for (std::uint64_t mask = 0; mask < finite_count; ++mask)
            if ((mask & core_mask) == core_mask) out.push_back(build(mask, true));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ugkit
