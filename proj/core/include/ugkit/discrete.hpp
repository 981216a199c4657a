#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ugkit/branching.hpp"
#include "ugkit/ultragraph.hpp"

namespace ugkit {

/// Branching data on the positive integers with counting measure, indexed by edge.
struct DiscreteBranchingSystem {
    Ultragraph graph;
    std::vector<std::set<std::uint64_t>> R;
    std::map<VertexId, std::set<std::uint64_t>> D;
    std::vector<std::map<std::uint64_t, std::uint64_t>> f;

    std::set<std::uint64_t> D_of(const VertexId& v) const;
    std::set<std::uint64_t> D_of(const VertexSet& A) const;
    std::uint64_t max_index() const;
};

BsReport validate_bs(const DiscreteBranchingSystem& bs);

/// Index-set shadow of a permutative representation. Requires a finite graph
/// with acyclic composability and the permutativity condition.
DiscreteBranchingSystem build_discrete_bs_from_peeling(const Ultragraph& g);

}  // namespace ugkit
