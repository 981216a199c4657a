// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "ugkit/error.hpp"
#include "ugkit/io.hpp"
#include "ugkit/transfer.hpp"

using namespace ugkit;
using ugkit::fixture::Rng;

namespace {

/// Collects the first few failure messages of one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (notes_.size() < 5) notes_.push_back(what);
    }

    bool ok() const { return failed_ == 0 && total_ > 0; }
    const std::vector<std::string>& notes() const { return notes_; }
    std::string summary() const {
        std::ostringstream out;
        out << total_ - failed_ << "/" << total_ << " checks";
        return out.str();
    }

private:
    std::size_t total_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> notes_;
};

std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

VertexSet vs(std::initializer_list<const char*> names) {
    std::set<VertexId> m;
    for (auto n : names) m.insert(fixture::V(n));
    return VertexSet(m);
}

void peel_reproduction(Check& c) {
    auto g = fixture::ten_vertex();
    auto trace = peel_sequence(g);
    c.expect(!trace.levels.empty(), "no peeling level");
    if (trace.levels.empty()) return;
    const auto& l1 = trace.levels[0];
    std::set<std::pair<VertexSet, std::string>> x;
    for (const auto& e : l1.X) x.insert({e.set, e.edge});
    c.expect(x == std::set<std::pair<VertexSet, std::string>>{{vs({"v1"}), "e1"}, {vs({"v7"}), "e3"}, {vs({"v8", "v9"}), "e5"}},
             "X1 differs");
    c.expect(l1.Y == std::vector<std::string>{"e1", "e3", "e5"}, "Y1 differs");
    c.expect(l1.I == std::set<VertexId>{fixture::V("v2")}, "I1 differs");
    // Byte stability: an independent round trip through the document format.
    const auto first = io::to_json(g, trace).dump(2);
    auto again = io::graph_from_json(nlohmann::json::parse(io::to_json(g).dump()));
    c.expect(io::to_json(again, peel_sequence(again)).dump(2) == first, "report is not byte-stable");
}

void ck_suite(Check& c) {
    auto check_interval = [&](const Ultragraph& g, const std::string& label) {
        auto r = verify_ck_relations(build_standard_interval_bs(g));
        for (const auto& rel : r.relations)
            c.expect(rel.pass && rel.max_deviation < 1e-10,
                     label + " relation " + std::to_string(rel.relation) + " deviation " + str(rel.max_deviation));
    };
    check_interval(fixture::ten_vertex(), "ten-vertex graph");
    Rng rng(2024);
    for (int k = 0; k < 25; ++k) check_interval(fixture::random_graph(rng, 6, 6), "random graph " + std::to_string(k));

    auto check_discrete = [&](const DiscreteBranchingSystem& bs, const std::string& label) {
        auto r = verify_ck_relations(bs);
        c.expect(r.exact, label + " not exact");
        for (const auto& rel : r.relations)
            c.expect(rel.max_deviation == 0.0, label + " relation " + std::to_string(rel.relation) + " deviation " +
                                                   str(rel.max_deviation));
    };
    check_discrete(build_discrete_bs_from_peeling(fixture::ten_vertex()), "ten-vertex discrete");
    for (int k = 0; k < 10; ++k) {
        auto g = fixture::ring(fixture::uniform(rng, 1, 4));
        check_discrete(fixture::random_ring_system(rng, g, fixture::uniform(rng, 1, 4)), "ring " + std::to_string(k));
    }
}

void pf_identity(Check& c) {
    auto bs = build_standard_interval_bs(fixture::two_loops());
    auto F = assemble_F(bs);
    const IntervalSet where{Interval(Rational(0), Rational(2))};
    Rng rng(99);
    for (int k = 0; k < 25; ++k) {
        auto phi = fixture::random_step_function(rng, where, 1 + k % 4);
        const double gap = (pf_via_rep(bs, phi, PfMode::Squared) - pf_direct(F, phi * phi)).norm1();
        c.expect(gap < 1e-10, "L1 gap " + str(gap) + " in case " + std::to_string(k));
        const double mass = std::abs(pf_direct(F, phi).integral() - phi.integral());
        c.expect(mass < 1e-12, "integral drift " + str(mass) + " in case " + std::to_string(k));
        auto psi = fixture::random_step_function(rng, where, 1 + k % 4, true);
        bool positive = true;
        for (const auto& p : pf_direct(F, psi).pieces()) positive = positive && p.value >= 0.0;
        c.expect(positive, "negative value in case " + std::to_string(k));
    }
}

void degeneracy(Check& c) {
    Rng rng(7);
    int graphs = 0;
    for (int k = 0; k < 200 && graphs < 15; ++k) {
        auto g = fixture::random_cyclic_graph(rng, 0.0);
        bool any = false;
        for (const auto& cyc : enumerate_simple_cycles(g)) {
            if (!cycle_exits(g, cyc).empty()) continue;
            any = true;
            auto bs = build_no_exit_degenerate_bs(g, cyc);
            const auto start = VertexSet::of({g.edge(g.edge_index(cyc.path.edges.front())).source});
            for (const auto& psi : ck_test_family(bs, kDefaultSeed, 10))
                c.expect(rep_apply(bs, Generator::s_path_star(cyc.path), psi) == rep_apply(bs, Generator::p(start), psi),
                         "s_alpha* differs from p_s(alpha_1) in graph " + std::to_string(k));
            StepFunction everything;
            for (const auto& [v, d] : bs.D) everything = everything + StepFunction::indicator(d);
            for (const auto& a : g0_enumerate(g, 1))
                if (!a.empty())
                    c.expect(!rep_apply(bs, Generator::p(a), everything).is_zero(), "p_A vanishes in graph " + std::to_string(k));
        }
        graphs += any;
    }
    c.expect(graphs >= 10, "only " + std::to_string(graphs) + " cyclic graphs generated");
}

void oracle_equivalence(Check& c) {
    Rng rng(5);
    for (int k = 0; k < 60; ++k) {
        auto g = fixture::random_tailed_graph(rng, 5, 4, 1 + k % 8);
        const auto cut = std::max<std::uint64_t>(g.max_tail_index(), 1);
        oracle::TruncatedUniverse u(g, cut);
        auto closure = oracle::truncated_closure(g, u);
        closure.insert(0);
        std::vector<VertexId> atoms(g.vertices().begin(), g.vertices().end());
        for (auto i = g.tail()->start; i <= cut; ++i) atoms.push_back(VertexId::tail_vertex(i));
        const std::uint64_t masks = std::uint64_t{1} << u.atom_count();
        const bool exhaustive = masks <= (1u << 13);
        for (std::uint64_t n = 0; n < (exhaustive ? masks : 4096); ++n) {
            const std::uint64_t bits = exhaustive ? n : fixture::uniform(rng, 0, masks - 1);
            std::set<VertexId> m;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                if (bits >> i & 1) m.insert(atoms[i]);
            std::optional<std::uint64_t> tf;
            if (bits & u.token()) tf = cut + 1;
            VertexSet target(m, tf);
            auto d = g0_membership(g, target);
            c.expect(d.member == (closure.count(u.mask(target)) == 1), "g0 disagreement in graph " + std::to_string(k));
            if (d.witness) c.expect(evaluate_witness(g, *d.witness) == target, "witness does not evaluate to target");
        }
    }
    for (int k = 0; k < 60; ++k) {
        auto g = k % 2 ? fixture::random_graph(rng, 6, 6) : fixture::random_cyclic_graph(rng);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.vertices().size()); ++bits) {
            auto w0 = oracle::subset_of(g, bits);
            auto sh = hs_closure(g, w0);
            auto expected = oracle::minimal_hs_superset(g, w0);
            c.expect(expected && sh.W == *expected, "hs closure disagreement in graph " + std::to_string(k));
            c.expect(is_essential(g, sh).essential == oracle::orphans(g, sh.W).empty(),
                     "essential disagreement in graph " + std::to_string(k));
        }
    }
}

void l1_suite(Check& c) {
    Rng rng(11);
    int permutative = 0;
    for (int k = 0; k < 400; ++k) {
        auto g = k % 2 ? fixture::random_dag(rng) : fixture::random_graph(rng);
        if (!permutativity_condition(g).holds) continue;
        ++permutative;
        auto r = check_l1_invariants(g, peel_sequence(g));
        for (std::size_t i = 0; i < r.items.size(); ++i)
            c.expect(r.items[i].pass, "graph " + std::to_string(k) + " item " + std::to_string(i + 1) + ": " + r.items[i].witness);
    }
    c.expect(permutative >= 50, "only " + std::to_string(permutative) + " permutative graphs");
}

void condition_l_coherence(Check& c) {
    Rng rng(13);
    for (int k = 0; k < 300; ++k) {
        auto g = k % 2 ? fixture::random_graph(rng) : fixture::random_cyclic_graph(rng);
        auto d = uniqueness_decomposition(g);
        c.expect(condition_l(g).holds == d.X1.empty(), "Condition L disagrees with X1 in graph " + std::to_string(k));
        c.expect(d.disjoint, "W1 and W2 intersect in graph " + std::to_string(k));
    }
}

void faithfulness(Check& c) {
    Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        const auto len = fixture::uniform(rng, 1, 3);
        auto g = fixture::ring(len);
        auto bs = fixture::random_ring_system(rng, g, fixture::uniform(rng, 1, 6));
        Path alpha;
        for (const auto& e : g.edges()) alpha.edges.push_back(e.id);
        std::map<std::uint64_t, std::uint64_t> perm;
        for (auto x : bs.D_of(g.edge(0).source)) {
            auto y = x;
            for (auto i = alpha.edges.size(); i-- > 0;) y = bs.f[i].at(y);
            perm[x] = y;
        }
        std::set<std::uint64_t> fset;
        for (std::uint64_t n = 1; n <= 8; ++n)
            if (fixture::coin(rng, 0.35)) fset.insert(n);
        if (fset.empty()) fset.insert(fixture::uniform(rng, 1, 8));
        auto r = faithfulness_witness(bs, make_cycle(g, alpha), fset);
        c.expect(r.witness.has_value() == oracle::wandering_subset_exists(perm, fset),
                 "witness disagreement in system " + std::to_string(k));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"peeling reproduces the ten-vertex example", peel_reproduction},
        {"Cuntz-Krieger relations on interval and discrete systems", ck_suite},
        {"Perron-Frobenius identity, mass and positivity", pf_identity},
        {"degenerate no-exit systems and nonvanishing projections", degeneracy},
        {"lattice, closure and essentiality agree with brute force", oracle_equivalence},
        {"peeling invariants on permutative graphs", l1_suite},
        {"Condition L and uniqueness decomposition coherence", condition_l_coherence},
        {"faithfulness witness agrees with wandering-set search", faithfulness},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << " (" << c.summary()
                  << ", " << str(secs) << " s)\n";
        for (const auto& n : c.notes()) std::cout << "       " << n << "\n";
        failures += !c.ok();
    }
    return failures == 0 ? 0 : 1;
}
