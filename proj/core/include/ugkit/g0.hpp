#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ugkit/ultragraph.hpp"
#include "ugkit/vertex_set.hpp"

namespace ugkit {

/// A generalized vertex written as  (∪_j ∩_{e ∈ intersections[j]} r(e)) ∪ finite_part.
struct G0Witness {
    std::vector<std::vector<std::string>> intersections;
    VertexSet finite_part;
};

struct G0Decision {
    bool member = false;
    std::optional<G0Witness> witness;
};

/// Decides whether `target` lies in the lattice generated by singletons and ranges.
G0Decision g0_membership(const Ultragraph& g, const VertexSet& target);

/// Evaluates a witness expression with vs_combine.
VertexSet evaluate_witness(const Ultragraph& g, const G0Witness& w);

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

/// All lattice elements seen through the quotient that keeps tail indices up to
/// `cut` and merges {w_i : i > cut} into one token. Sorted by VertexSet order.
std::vector<VertexSet> g0_enumerate(const Ultragraph& g, std::uint64_t cut,
                                    std::size_t cap = kDefaultClosureCap);

}  // namespace ugkit
