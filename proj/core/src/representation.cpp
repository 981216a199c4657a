#include "ugkit/representation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "ugkit/error.hpp"

namespace ugkit {

namespace {

// f_{α1}∘…∘f_{αn} on the pieces whose domain meets `window`.
PiecewiseAffineMap path_map_forward(const IntervalBranchingSystem& bs, const std::vector<std::size_t>& idx,
                                    const IntervalSet& window) {
    PiecewiseAffineMap comp = bs.f_for_domain(idx.back(), window);
    for (std::size_t k = idx.size() - 1; k-- > 0;) {
        auto outer = bs.f_for_domain(idx[k], comp.image());
        comp = outer.compose(comp);
    }
    return comp;
}

// Same composite on the pieces whose image meets `window`.
PiecewiseAffineMap path_map_backward(const IntervalBranchingSystem& bs, const std::vector<std::size_t>& idx,
                                     const IntervalSet& window) {
    std::vector<PiecewiseAffineMap> maps;
    IntervalSet w = window;
    for (auto e : idx) {
        maps.push_back(bs.f_for_image(e, w));
        w = maps.back().domain();
    }
    PiecewiseAffineMap comp = maps.back();
    for (std::size_t k = maps.size() - 1; k-- > 0;) comp = maps[k].compose(comp);
    return comp;
}

std::vector<std::size_t> checked_path(const IntervalBranchingSystem& bs, const Path& p) {
    if (p.edges.empty()) throw Error("empty path");
    std::vector<std::size_t> idx;
    for (const auto& id : p.edges) idx.push_back(bs.graph.edge_index(id));
    if (!is_composable(bs.graph, p)) throw Error("path is not composable");
    return idx;
}

StepFunction push_forward(const PiecewiseAffineMap& m, const StepFunction& phi) {
    std::vector<StepPiece> out;
    for (const auto& p : m.pieces()) {
        const double scale = 1.0 / std::sqrt(to_double(p.slope));
        for (const auto& q : phi.pieces())
            if (auto ov = overlap(p.dom, q.iv))
                out.push_back(StepPiece{Interval(p.apply(ov->lo), p.apply(ov->hi)), q.value * scale});
    }
    return StepFunction::sum_of(out);
}

StepFunction pull_back(const PiecewiseAffineMap& m, const StepFunction& phi) {
    std::vector<StepPiece> out;
    for (const auto& p : m.pieces()) {
        const double scale = std::sqrt(to_double(p.slope));
        const Interval im = p.image();
        for (const auto& q : phi.pieces())
            if (auto ov = overlap(im, q.iv))
                out.push_back(StepPiece{Interval(p.preimage(ov->lo), p.preimage(ov->hi)), q.value * scale});
    }
    return StepFunction::sum_of(out);
}

}  // namespace

StepFunction rep_apply(const IntervalBranchingSystem& bs, const Generator& gen, const StepFunction& phi) {
    switch (gen.kind) {
        case Generator::Kind::P: {
            if (!bs.graph.in_universe(gen.set)) throw Error("unknown vertex in projection set");
            if (phi.is_zero() || gen.set.empty()) return {};
            return phi.restrict_to(bs.D_of(gen.set, phi.support()));
        }
        case Generator::Kind::S:
            return rep_apply(bs, Generator::s_path(Path{{gen.edge}}), phi);
        case Generator::Kind::SStar:
            return rep_apply(bs, Generator::s_path_star(Path{{gen.edge}}), phi);
        case Generator::Kind::SPath: {
            auto idx = checked_path(bs, gen.path);
            if (phi.is_zero()) return {};
            return push_forward(path_map_forward(bs, idx, phi.support()), phi);
        }
        case Generator::Kind::SPathStar: {
            auto idx = checked_path(bs, gen.path);
            if (phi.is_zero()) return {};
            return pull_back(path_map_backward(bs, idx, phi.support()), phi);
        }
    }
    throw Error("unknown generator");
}

bool CkReport::ok() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.pass; });
}

std::vector<StepFunction> ck_test_family(const IntervalBranchingSystem& bs, std::uint64_t seed,
                                         std::size_t random_functions) {
    const auto& g = bs.graph;
    std::set<Rational> cuts;
    auto add = [&](const Interval& iv) {
        cuts.insert(iv.lo);
        cuts.insert(iv.hi);
    };
    for (const auto& r : bs.R)
        for (const auto& p : r.parts()) add(p);
    for (const auto& [v, d] : bs.D)
        for (const auto& p : d.parts()) add(p);
    std::uint64_t limit = 0;
    if (g.tail() && bs.tail_layout) {
        limit = std::max(g.tail()->start, g.max_tail_index()) + 1;
        for (auto j = g.tail()->start; j <= limit; ++j) add(bs.tail_layout->unit(j));
    }
    std::vector<Rational> tops;
    for (std::size_t e = 0; e < bs.f.size(); ++e) {
        for (const auto& p : bs.f[e].pieces()) {
            add(p.dom);
            add(p.image());
        }
        if (const auto& t = bs.f_tail[e]; t && bs.tail_layout) {
            tops.push_back(t->top);
            for (auto j = t->first_index; j <= limit; ++j) {
                auto p = t->piece(*bs.tail_layout, j - t->first_index);
                add(p.dom);
                add(p.image());
            }
        }
    }

    std::vector<Interval> cells;
    for (auto it = cuts.begin(); it != cuts.end() && std::next(it) != cuts.end(); ++it) {
        Interval cell(*it, *std::next(it));
        bool accumulates = std::any_of(tops.begin(), tops.end(), [&](const Rational& t) { return cell.hi == t; });
        if (!accumulates) cells.push_back(cell);
    }

    std::vector<StepFunction> family;
    for (const auto& c : cells) family.push_back(StepFunction::indicator(IntervalSet{c}));
    if (cells.empty()) return family;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::bernoulli_distribution pick(0.5);
    for (std::size_t k = 0; k < random_functions; ++k) {
        std::vector<StepPiece> pieces;
        for (const auto& c : cells)
            if (pick(rng)) pieces.push_back(StepPiece{c, value(rng)});
        if (pieces.empty()) pieces.push_back(StepPiece{cells[k % cells.size()], value(rng)});
        family.emplace_back(std::move(pieces));
    }
    return family;
}

namespace {

void record(RelationResult& r, double dev, double tol, const std::string& witness) {
    if (dev > r.max_deviation) {
        r.max_deviation = dev;
        r.witness = witness;
    }
    if (dev > tol) r.pass = false;
}

std::vector<VertexSet> sample_sets(const Ultragraph& g) {
    std::vector<VertexSet> out{VertexSet{}};
    for (const auto& v : g.vertices()) out.push_back(VertexSet::of({v}));
    for (const auto& e : g.edges()) out.push_back(e.range);
    if (g.tail()) out.push_back(VertexSet::tail(g.tail()->start));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

CkReport verify_ck_relations(const IntervalBranchingSystem& bs, const CkOptions& opts) {
    const auto& g = bs.graph;
    auto family = ck_test_family(bs, opts.seed, opts.random_functions);
    auto sets = sample_sets(g);
    CkReport rep;
    rep.family_size = family.size();
    for (int k = 1; k <= 4; ++k) rep.relations.push_back(RelationResult{k, 0.0, true, {}});
    auto& r1 = rep.relations[0];
    auto& r2 = rep.relations[1];
    auto& r3 = rep.relations[2];
    auto& r4 = rep.relations[3];

    for (std::size_t k = 0; k < family.size(); ++k) {
        const auto& phi = family[k];
        const std::string tag = "test function " + std::to_string(k);
        std::vector<StepFunction> p;
        for (const auto& a : sets) p.push_back(rep_apply(bs, Generator::p(a), phi));
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = 0; b < sets.size(); ++b) {
                auto pab = rep_apply(bs, Generator::p(sets[a]), p[b]);
                auto pmeet = rep_apply(bs, Generator::p(vs_intersect(sets[a], sets[b])), phi);
                auto pjoin = rep_apply(bs, Generator::p(vs_union(sets[a], sets[b])), phi);
                double dev = std::max((pab - pmeet).norm2(), (pjoin - (p[a] + p[b] - pmeet)).norm2());
                record(r1, dev, opts.tol, tag + ", sets " + std::to_string(a) + "," + std::to_string(b));
            }

        std::vector<StepFunction> proj(g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto& id = g.edge(e).id;
            auto se = rep_apply(bs, Generator::s(id), phi);
            auto back = rep_apply(bs, Generator::s_star(id), se);
            auto pr = rep_apply(bs, Generator::p(g.edge(e).range), phi);
            record(r2, (back - pr).norm2(), opts.tol, tag + ", edge " + id);

            proj[e] = rep_apply(bs, Generator::s(id), rep_apply(bs, Generator::s_star(id), phi));
            auto ps = rep_apply(bs, Generator::p(VertexSet::of({g.edge(e).source})), phi);
            double q = inner(ps - proj[e], phi);
            record(r3, std::max(0.0, -q), opts.tol, tag + ", edge " + id);
        }

        for (const auto& v : g.vertices()) {
            const auto& out = g.emitted_by(v);
            if (out.empty()) continue;
            StepFunction sum;
            for (auto e : out) sum = sum + proj[e];
            auto pv = rep_apply(bs, Generator::p(VertexSet::of({v})), phi);
            record(r4, (pv - sum).norm2(), opts.tol, tag + ", vertex " + g.name_of(v));
        }
    }
    return rep;
}

IntMatrix discrete_rep_matrix(const DiscreteBranchingSystem& bs, const Generator& gen, std::uint64_t N) {
    if (N < bs.max_index()) throw Error("truncation N too small: need at least " + std::to_string(bs.max_index()));
    const auto n = static_cast<Eigen::Index>(N);
    IntMatrix m = IntMatrix::Zero(n, n);
    const auto& g = bs.graph;
    switch (gen.kind) {
        case Generator::Kind::P: {
            if (!g.in_universe(gen.set)) throw Error("unknown vertex in projection set");
            for (auto k : bs.D_of(gen.set)) m(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k - 1)) = 1;
            return m;
        }
        case Generator::Kind::S: {
            for (const auto& [a, b] : bs.f.at(g.edge_index(gen.edge)))
                m(static_cast<Eigen::Index>(b - 1), static_cast<Eigen::Index>(a - 1)) = 1;
            return m;
        }
        case Generator::Kind::SStar:
            return discrete_rep_matrix(bs, Generator::s(gen.edge), N).transpose();
        case Generator::Kind::SPath: {
            if (gen.path.edges.empty()) throw Error("empty path");
            if (!is_composable(g, gen.path)) throw Error("path is not composable");
            m = IntMatrix::Identity(n, n);
            for (const auto& id : gen.path.edges) m = m * discrete_rep_matrix(bs, Generator::s(id), N);
            return m;
        }
        case Generator::Kind::SPathStar:
            return discrete_rep_matrix(bs, Generator::s_path(gen.path), N).transpose();
    }
    throw Error("unknown generator");
}

CkReport verify_ck_relations(const DiscreteBranchingSystem& bs, const CkOptions& opts) {
    const auto& g = bs.graph;
    if (!g.is_finite()) throw Error("discrete systems have no tail");
    const auto N = bs.max_index();
    const auto n = static_cast<Eigen::Index>(N);
    CkReport rep;
    rep.exact = true;
    for (int k = 1; k <= 4; ++k) rep.relations.push_back(RelationResult{k, 0.0, true, {}});
    auto& r1 = rep.relations[0];
    auto& r2 = rep.relations[1];
    auto& r3 = rep.relations[2];
    auto& r4 = rep.relations[3];
    auto maxabs = [](const IntMatrix& a) { return a.size() == 0 ? 0.0 : static_cast<double>(a.cwiseAbs().maxCoeff()); };

    auto sets = sample_sets(g);
    std::vector<IntMatrix> p;
    for (const auto& a : sets) p.push_back(discrete_rep_matrix(bs, Generator::p(a), N));
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = 0; b < sets.size(); ++b) {
            IntMatrix meet = discrete_rep_matrix(bs, Generator::p(vs_intersect(sets[a], sets[b])), N);
            IntMatrix join = discrete_rep_matrix(bs, Generator::p(vs_union(sets[a], sets[b])), N);
            double dev = std::max(maxabs(p[a] * p[b] - meet), maxabs(join - (p[a] + p[b] - meet)));
            record(r1, dev, 0.0, "sets " + std::to_string(a) + "," + std::to_string(b));
        }

    std::vector<Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>> probes;
    for (Eigen::Index k = 0; k < n; ++k) probes.push_back(Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>::Unit(n, k));
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (std::size_t k = 0; k < opts.random_functions && n > 0; ++k) {
        Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> x(n);
        for (Eigen::Index i = 0; i < n; ++i) x(i) = coef(rng);
        probes.push_back(std::move(x));
    }
    rep.family_size = probes.size();

    std::vector<IntMatrix> proj(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& id = g.edge(e).id;
        IntMatrix s = discrete_rep_matrix(bs, Generator::s(id), N);
        IntMatrix pr = discrete_rep_matrix(bs, Generator::p(g.edge(e).range), N);
        record(r2, maxabs(s.transpose() * s - pr), 0.0, "edge " + id);
        proj[e] = s * s.transpose();
        IntMatrix gap = discrete_rep_matrix(bs, Generator::p(VertexSet::of({g.edge(e).source})), N) - proj[e];
        for (std::size_t k = 0; k < probes.size(); ++k) {
            std::int64_t q = probes[k].dot(gap * probes[k]);
            record(r3, std::max<double>(0.0, static_cast<double>(-q)), 0.0, "edge " + id + ", probe " + std::to_string(k));
        }
    }
    for (const auto& v : g.vertices()) {
        const auto& out = g.emitted_by(v);
        if (out.empty()) continue;
        IntMatrix sum = IntMatrix::Zero(n, n);
        for (auto e : out) sum += proj[e];
        record(r4, maxabs(discrete_rep_matrix(bs, Generator::p(VertexSet::of({v})), N) - sum), 0.0,
               "vertex " + g.name_of(v));
    }
    return rep;
}

FaithfulnessResult faithfulness_witness(const DiscreteBranchingSystem& bs, const Cycle& c,
                                        const std::set<std::uint64_t>& fset) {
    const auto& g = bs.graph;
    auto checked = make_cycle(g, c.path);
    if (!checked.simple) throw Error("cycle is not simple");
    if (!cycle_exits(g, checked).empty()) throw Error("cycle has an exit");
    for (auto n : fset)
        if (n == 0) throw Error("fset entries must be positive");

    std::vector<std::size_t> idx;
    for (const auto& id : checked.path.edges) idx.push_back(g.edge_index(id));
    const auto domain = bs.D_of(g.edge(idx.front()).source);
    std::map<std::uint64_t, std::uint64_t> perm;
    std::set<std::uint64_t> image;
    for (auto x : domain) {
        std::uint64_t y = x;
        for (auto k = idx.size(); k-- > 0;) {
            auto it = bs.f[idx[k]].find(y);
            if (it == bs.f[idx[k]].end()) throw Error("composed map is not a permutation of D_s(alpha_1)");
            y = it->second;
        }
        perm.emplace(x, y);
        image.insert(y);
    }
    if (image != domain) throw Error("composed map is not a permutation of D_s(alpha_1)");

    std::map<std::uint64_t, std::uint64_t> orbit;
    for (auto x : domain) {
        if (orbit.count(x)) continue;
        std::vector<std::uint64_t> cyc{x};
        for (auto y = perm[x]; y != x; y = perm[y]) cyc.push_back(y);
        for (auto y : cyc) orbit[y] = cyc.size();
    }
    FaithfulnessResult r;
    for (const auto& [x, len] : orbit) r.orbit_bound = std::max<std::uint64_t>(r.orbit_bound, len);
    for (auto x : domain) {
        auto len = orbit[x];
        bool moves = std::all_of(fset.begin(), fset.end(), [len](std::uint64_t n) { return n % len != 0; });
        if (moves) {
            r.witness = std::set<std::uint64_t>{x};
            break;
        }
    }
    return r;
}

}  // namespace ugkit
