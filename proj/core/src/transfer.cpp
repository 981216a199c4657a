#include "ugkit/transfer.hpp"

#include <cmath>

#include "ugkit/error.hpp"
#include "ugkit/representation.hpp"

namespace ugkit {

StepFunction pf_direct(const PiecewiseAffineMap& F, const StepFunction& phi) {
    std::vector<StepPiece> out;
    for (const auto& p : F.pieces()) {
        const double scale = 1.0 / to_double(p.slope);
        for (const auto& q : phi.pieces())
            if (auto ov = overlap(p.dom, q.iv))
                out.push_back(StepPiece{Interval(p.apply(ov->lo), p.apply(ov->hi)), q.value * scale});
    }
    if (F.identity_elsewhere()) {
        auto rest = phi.restrict_to(phi.support().minus(F.domain()));
        out.insert(out.end(), rest.pieces().begin(), rest.pieces().end());
    }
    return StepFunction::sum_of(out);
}

namespace {

StepFunction squared_sum(const IntervalBranchingSystem& bs, const StepFunction& phi) {
    std::vector<StepPiece> out;
    for (std::size_t e = 0; e < bs.graph.edge_count(); ++e) {
        if (bs.R[e].intersect(phi.support()).empty()) continue;
        auto term = rep_apply(bs, Generator::s_star(bs.graph.edge(e).id), phi).map_values([](double v) { return v * v; });
        out.insert(out.end(), term.pieces().begin(), term.pieces().end());
    }
    return StepFunction::sum_of(out);
}

}  // namespace

StepFunction pf_via_rep(const IntervalBranchingSystem& bs, const StepFunction& phi, PfMode mode) {
    IntervalSet covered;
    for (const auto& r : bs.R) covered = covered.unite(r);
    auto uncovered = phi.support().minus(covered);
    if (!uncovered.empty()) {
        const auto& first = uncovered.parts().front();
        throw Error("support not covered by the edge intervals: [" + to_string(first.lo) + ", " +
                    to_string(first.hi) + "]");
    }
    if (mode == PfMode::Squared) return squared_sum(bs, phi);
    auto pos = phi.map_values([](double v) { return v > 0 ? std::sqrt(v) : 0.0; });
    auto neg = phi.map_values([](double v) { return v < 0 ? std::sqrt(-v) : 0.0; });
    return squared_sum(bs, pos) - squared_sum(bs, neg);
}

}  // namespace ugkit
