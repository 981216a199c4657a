#include "ugkit/branching.hpp"

#include <algorithm>
#include <numeric>

#include "ugkit/error.hpp"

namespace ugkit {

Interval TailLayout::unit(std::uint64_t index) const {
    if (index < start) throw Error("tail index below start");
    Rational k(base + (index - start));
    return Interval(-(k + 1), -k);
}

Rational TailLayout::upper_end(std::uint64_t from) const {
    if (from < start) throw Error("tail index below start");
    return -Rational(base + (from - start));
}

AffinePiece GeometricTail::piece(const TailLayout& layout, std::uint64_t j) const {
    Interval dom = layout.unit(first_index + j);
    auto i = static_cast<unsigned>(first_piece + j);
    Rational lo = top - dyadic(i - 1);
    Rational slope = dyadic(i);
    return AffinePiece{dom, slope, lo - slope * dom.lo};
}

Interval GeometricTail::image_hull() const {
    return Interval(top - dyadic(static_cast<unsigned>(first_piece - 1)), top);
}

namespace {

// Tail indices >= from whose unit meets `window` in positive measure.
std::vector<std::uint64_t> tail_indices_meeting(const TailLayout& layout, std::uint64_t from,
                                                const IntervalSet& window) {
    std::vector<std::uint64_t> out;
    const std::int64_t k0 = static_cast<std::int64_t>(layout.base + (from - layout.start));
    for (const auto& part : window.parts()) {
        // unit = [-(k+1), -k] meets [a, b] iff -b - 1 < k < -a
        std::int64_t kmin = std::max(k0, floor_int(-part.hi - 1) + 1);
        for (std::int64_t k = kmin; Rational(k) < -part.lo; ++k)
            out.push_back(static_cast<std::uint64_t>(k - static_cast<std::int64_t>(layout.base)) + layout.start);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Interval> unit_split(const IntervalSet& s) {
    std::vector<Interval> out;
    for (const auto& p : s.parts()) {
        if (denominator(p.lo) != 1 || denominator(p.hi) != 1) {
            out.push_back(p);
            continue;
        }
        for (Rational x = p.lo; x < p.hi; x += 1) out.emplace_back(x, x + 1);
    }
    return out;
}

}  // namespace

bool IntervalBranchingSystem::has_tail_pieces() const {
    return std::any_of(f_tail.begin(), f_tail.end(), [](const auto& t) { return t.has_value(); });
}

IntervalSet IntervalBranchingSystem::D_of(const VertexId& v) const {
    if (v.is_tail()) {
        if (!tail_layout) throw Error("tail vertex without a tail layout");
        return IntervalSet{tail_layout->unit(v.tail)};
    }
    auto it = D.find(v);
    return it == D.end() ? IntervalSet{} : it->second;
}

IntervalSet IntervalBranchingSystem::D_of(const VertexSet& A, const std::optional<IntervalSet>& window) const {
    IntervalSet out;
    for (const auto& v : A.explicit_part()) out = out.unite(D_of(v));
    if (A.tail_from()) {
        if (!window) throw Error("tail-dependent set needs a bounded window");
        if (!tail_layout) throw Error("tail vertex without a tail layout");
        for (auto j : tail_indices_meeting(*tail_layout, *A.tail_from(), *window))
            out = out.unite(IntervalSet{tail_layout->unit(j)});
    }
    return out;
}

PiecewiseAffineMap IntervalBranchingSystem::f_for_domain(std::size_t e, const IntervalSet& window) const {
    std::vector<AffinePiece> out;
    for (const auto& p : f.at(e).pieces())
        if (!IntervalSet{p.dom}.intersect(window).empty()) out.push_back(p);
    if (const auto& t = f_tail.at(e)) {
        if (!tail_layout) throw Error("tail pieces without a tail layout");
        for (auto idx : tail_indices_meeting(*tail_layout, t->first_index, window))
            out.push_back(t->piece(*tail_layout, idx - t->first_index));
    }
    return PiecewiseAffineMap(std::move(out));
}

PiecewiseAffineMap IntervalBranchingSystem::f_for_image(std::size_t e, const IntervalSet& window) const {
    std::vector<AffinePiece> out;
    for (const auto& p : f.at(e).pieces())
        if (!IntervalSet{p.image()}.intersect(window).empty()) out.push_back(p);
    if (const auto& t = f_tail.at(e)) {
        if (!tail_layout) throw Error("tail pieces without a tail layout");
        const Interval hull = t->image_hull();
        for (const auto& part : window.parts()) {
            if (!overlap(part, hull)) continue;
            if (part.hi >= t->top)
                throw Error("support accumulates at the tail end " + to_string(t->top) + " of edge \"" +
                            graph.edge(e).id + "\"");
            for (std::uint64_t j = 0;; ++j) {
                auto p = t->piece(*tail_layout, j);
                if (p.image().lo >= part.hi) break;
                if (overlap(p.image(), part)) out.push_back(p);
            }
        }
        std::sort(out.begin(), out.end(), [](const AffinePiece& a, const AffinePiece& b) { return a.dom.lo < b.dom.lo; });
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return PiecewiseAffineMap(std::move(out));
}

namespace {

IntervalBranchingSystem build_with_order(const Ultragraph& g, const std::vector<std::size_t>& order) {
    IntervalBranchingSystem bs;
    bs.graph = g;
    const auto m = g.edge_count();
    bs.R.resize(m);
    bs.f.resize(m);
    bs.f_tail.assign(m, std::nullopt);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        Rational lo(static_cast<long long>(pos));
        bs.R[order[pos]] = IntervalSet{Interval(lo, lo + 1)};
    }
    std::uint64_t sinks = 0;
    for (const auto& v : g.vertices()) {
        if (g.is_sink(v)) {
            ++sinks;
            Rational hi(-static_cast<long long>(sinks - 1));
            bs.D[v] = IntervalSet{Interval(hi - 1, hi)};
        } else {
            IntervalSet d;
            for (auto e : g.emitted_by(v)) d = d.unite(bs.R[e]);
            bs.D[v] = d;
        }
    }
    if (g.tail()) bs.tail_layout = TailLayout{g.tail()->start, sinks};

    for (std::size_t e = 0; e < m; ++e) {
        const auto& range = g.edge(e).range;
        const Rational n = bs.R[e].parts().front().lo;
        std::vector<Interval> named_units;
        std::vector<Interval> tail_units;
        for (const auto& v : range.explicit_part()) {
            auto units = unit_split(bs.D_of(v));
            auto& dst = v.is_tail() && range.tail_from() ? tail_units : named_units;
            dst.insert(dst.end(), units.begin(), units.end());
        }
        std::sort(named_units.begin(), named_units.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        std::vector<Interval> units = named_units;
        units.insert(units.end(), tail_units.begin(), tail_units.end());

        std::vector<AffinePiece> pieces;
        if (!range.tail_from()) {
            const Rational count(static_cast<long long>(units.size()));
            for (std::size_t i = 0; i < units.size(); ++i) {
                Rational lo = n + Rational(static_cast<long long>(i)) / count;
                Rational slope = (Rational(1) / count) / units[i].length();
                pieces.push_back(AffinePiece{units[i], slope, lo - slope * units[i].lo});
            }
        } else {
            for (std::size_t i = 0; i < units.size(); ++i) {
                auto k = static_cast<unsigned>(i + 1);
                Rational lo = n + 1 - dyadic(k - 1);
                Rational slope = dyadic(k) / units[i].length();
                pieces.push_back(AffinePiece{units[i], slope, lo - slope * units[i].lo});
            }
            bs.f_tail[e] = GeometricTail{n + 1, *range.tail_from(), units.size() + 1};
        }
        bs.f[e] = PiecewiseAffineMap(std::move(pieces));
    }
    return bs;
}

}  // namespace

IntervalBranchingSystem build_standard_interval_bs(const Ultragraph& g) {
    std::vector<std::size_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return build_with_order(g, order);
}

IntervalBranchingSystem build_no_exit_degenerate_bs(const Ultragraph& g, const Cycle& c) {
    auto checked = make_cycle(g, c.path);
    if (!checked.simple) throw Error("cycle is not simple");
    if (!cycle_exits(g, checked).empty()) throw Error("cycle has an exit");
    std::vector<std::size_t> order;
    std::vector<bool> used(g.edge_count());
    for (const auto& id : checked.path.edges) {
        auto i = g.edge_index(id);
        order.push_back(i);
        used[i] = true;
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!used[i]) order.push_back(i);
    return build_with_order(g, order);
}

bool BsReport::ok() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const ConditionReport& c) { return c.pass; });
}

namespace {

void fail(ConditionReport& c, std::string detail, IntervalSet region = {}) {
    if (!c.pass) return;  // keep the first witness
    c.pass = false;
    c.detail = std::move(detail);
    c.region = std::move(region);
}

IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b) {
    return a.minus(b).unite(b.minus(a));
}

}  // namespace

BsReport validate_bs(const IntervalBranchingSystem& bs) {
    const auto& g = bs.graph;
    const auto m = g.edge_count();
    BsReport rep;
    for (int k = 1; k <= 5; ++k) rep.conditions.push_back(ConditionReport{k, true, {}, {}, std::nullopt});
    auto& c1 = rep.conditions[0];
    auto& c2 = rep.conditions[1];
    auto& c3 = rep.conditions[2];
    auto& c4 = rep.conditions[3];
    auto& c5 = rep.conditions[4];

    if (bs.R.size() != m || bs.f.size() != m || bs.f_tail.size() != m) {
        for (auto& c : rep.conditions) fail(c, "edge data does not match the graph");
        return rep;
    }

    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t f = e + 1; f < m; ++f) {
            auto ov = bs.R[e].intersect(bs.R[f]);
            if (!ov.empty()) fail(c1, "R_" + g.edge(e).id + " and R_" + g.edge(f).id + " overlap", ov);
        }

    for (const auto& [v, d] : bs.D)
        if (v.is_tail() || !g.has_vertex(v)) fail(c2, "D given for unknown vertex \"" + g.name_of(v) + "\"");
    if (g.tail() && !bs.tail_layout) fail(c2, "tail vertices have no layout");
    for (auto a = bs.D.begin(); a != bs.D.end(); ++a) {
        for (auto b = std::next(a); b != bs.D.end(); ++b) {
            auto ov = a->second.intersect(b->second);
            if (!ov.empty())
                fail(c2, "D_" + g.name_of(a->first) + " and D_" + g.name_of(b->first) + " overlap", ov);
        }
        if (g.tail() && bs.tail_layout) {
            Rational top = bs.tail_layout->upper_end(g.tail()->start);
            for (const auto& p : a->second.parts())
                if (p.lo < top)
                    fail(c2, "D_" + g.name_of(a->first) + " overlaps the tail units",
                         IntervalSet{Interval(p.lo, std::min(p.hi, top))});
        }
    }

    for (std::size_t e = 0; e < m; ++e) {
        auto outside = bs.R[e].minus(bs.D_of(g.edge(e).source));
        if (!outside.empty()) fail(c3, "R_" + g.edge(e).id + " not inside D_" + g.name_of(g.edge(e).source), outside);
    }

    for (const auto& v : g.vertices()) {
        const auto& out = g.emitted_by(v);
        if (out.empty()) continue;
        IntervalSet u;
        for (auto e : out) u = u.unite(bs.R[e]);
        auto diff = symmetric_difference(bs.D_of(v), u);
        if (!diff.empty()) fail(c4, "D_" + g.name_of(v) + " differs from the union of its edge intervals", diff);
    }

    for (std::size_t e = 0; e < m; ++e) {
        const auto& edge = g.edge(e);
        const auto& fe = bs.f[e];
        if (!fe.images_disjoint()) {
            IntervalSet overlapping;
            const auto& ps = fe.pieces();
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = i + 1; j < ps.size(); ++j)
                    if (auto ov = overlap(ps[i].image(), ps[j].image())) overlapping = overlapping.unite(IntervalSet{*ov});
            fail(c5, "f_" + edge.id + " is not injective", overlapping);
            continue;
        }
        if (edge.range.tail_from() && !bs.tail_layout) {
            fail(c5, "f_" + edge.id + " needs a tail layout");
            continue;
        }
        IntervalSet expected_dom = bs.D_of(VertexSet(edge.range.explicit_part()));
        auto dom_diff = symmetric_difference(fe.domain(), expected_dom);
        if (!dom_diff.empty()) {
            fail(c5, "domain of f_" + edge.id + " differs from D_r(" + edge.id + ")", dom_diff);
            continue;
        }
        IntervalSet img = fe.image();
        const auto& t = bs.f_tail[e];
        if (edge.range.tail_from().has_value() != t.has_value() ||
            (t && t->first_index != *edge.range.tail_from())) {
            fail(c5, "tail pieces of f_" + edge.id + " do not match the range tail");
            continue;
        }
        if (t) {
            IntervalSet hull{t->image_hull()};
            auto clash = img.intersect(hull);
            if (!clash.empty()) {
                fail(c5, "tail pieces of f_" + edge.id + " overlap its finite pieces", clash);
                continue;
            }
            img = img.unite(hull);
        }
        auto img_diff = symmetric_difference(img, bs.R[e]);
        if (!img_diff.empty()) fail(c5, "image of f_" + edge.id + " differs from R_" + edge.id, img_diff);
    }
    return rep;
}

namespace {

PiecewiseAffineMap assemble_from(const IntervalBranchingSystem& bs, const std::vector<PiecewiseAffineMap>& maps) {
    std::vector<AffinePiece> out;
    IntervalSet covered;
    for (std::size_t e = 0; e < maps.size(); ++e) {
        for (const auto& p : maps[e].pieces()) {
            AffinePiece inv = p.inverse();
            auto dom = IntervalSet{inv.dom}.intersect(bs.R[e]).minus(covered);
            for (const auto& part : dom.parts()) out.push_back(AffinePiece{part, inv.slope, inv.offset});
            covered = covered.unite(dom);
        }
    }
    return PiecewiseAffineMap(std::move(out), true);
}

}  // namespace

PiecewiseAffineMap assemble_F(const IntervalBranchingSystem& bs) {
    if (bs.has_tail_pieces()) throw Error("system has tail pieces; assemble_F needs a window");
    return assemble_from(bs, bs.f);
}

PiecewiseAffineMap assemble_F(const IntervalBranchingSystem& bs, const IntervalSet& window) {
    std::vector<PiecewiseAffineMap> maps;
    for (std::size_t e = 0; e < bs.f.size(); ++e) maps.push_back(bs.f_for_image(e, window));
    return assemble_from(bs, maps);
}

}  // namespace ugkit
