#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ugkit/paths.hpp"
#include "ugkit/ultragraph.hpp"

namespace ugkit {

/// A hereditary saturated family, stored as the union W of its members.
struct HSSet {
    std::set<VertexId> W;

    friend bool operator==(const HSSet&, const HSSet&) = default;
};

struct HSCheck {
    bool hereditary = true;
    bool saturated = true;
    std::vector<std::string> hereditary_witnesses;  // edges with s(e) ∈ W, r(e) ⊄ W
    std::vector<VertexId> saturated_witnesses;      // regular v ∉ W with r(s^{-1}(v)) ⊆ W
};

/// W must avoid the tail; otherwise throws "hs operations require finite data".
HSCheck is_hereditary_saturated(const Ultragraph& g, const std::set<VertexId>& W);

/// Least hereditary saturated superset of W0.
HSSet hs_closure(const Ultragraph& g, const std::set<VertexId>& W0);

struct EssentialResult {
    bool essential = true;
    std::optional<VertexId> orphan;
};

/// Every vertex outside W must reach W along a path.
EssentialResult is_essential(const Ultragraph& g, const HSSet& sh);

/// Vertices reachable from v by paths of positive length (ranges of paths from v).
std::set<VertexId> reachable_from(const Ultragraph& g, const VertexId& v);

struct UniquenessDecomposition {
    std::set<VertexId> X1;
    HSSet W1;
    HSSet W2;
    bool disjoint = true;
};

/// Finite graphs only.
UniquenessDecomposition uniqueness_decomposition(const Ultragraph& g);

struct UniquenessReport {
    bool condition_l = true;
    std::vector<Cycle> no_exit_cycles;
    UniquenessDecomposition decomposition;
    bool essential = true;
    std::optional<VertexId> orphan;
    std::vector<std::string> certificate_obligations;
};

UniquenessReport uniqueness_report(const Ultragraph& g);

}  // namespace ugkit
