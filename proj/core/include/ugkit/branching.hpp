#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ugkit/interval.hpp"
#include "ugkit/paths.hpp"
#include "ugkit/ultragraph.hpp"

namespace ugkit {

/// Unit intervals for tail sinks: D(w_j) = [-(base + j - start + 1), -(base + j - start)].
struct TailLayout {
    std::uint64_t start = 1;
    std::uint64_t base = 0;

    Interval unit(std::uint64_t index) const;
    /// The half-line occupied by all tail units from `from` on.
    Rational upper_end(std::uint64_t from) const;

    friend bool operator==(const TailLayout&, const TailLayout&) = default;
};

/// Geometric pieces for a range tail: the j-th tail vertex (j >= 0, index
/// first_index + j) is mapped onto [top - 2^{-(i-1)}, top - 2^{-i}] with
/// i = first_piece + j.
struct GeometricTail {
    Rational top;
    std::uint64_t first_index = 1;
    std::uint64_t first_piece = 1;

    AffinePiece piece(const TailLayout& layout, std::uint64_t j) const;
    /// Union of all piece images: [top - 2^{-(first_piece-1)}, top].
    Interval image_hull() const;

    friend bool operator==(const GeometricTail&, const GeometricTail&) = default;
};

/// Branching data on the real line with Lebesgue measure. R, f and f_tail are
/// indexed by edge; D holds explicit vertices, tail vertices come from the layout.
struct IntervalBranchingSystem {
    Ultragraph graph;
    std::vector<IntervalSet> R;
    std::map<VertexId, IntervalSet> D;
    std::optional<TailLayout> tail_layout;
    std::vector<PiecewiseAffineMap> f;
    std::vector<std::optional<GeometricTail>> f_tail;

    bool has_tail_pieces() const;

    IntervalSet D_of(const VertexId& v) const;
    /// D_A; a tailed A needs a window, and only tail units meeting it are included.
    IntervalSet D_of(const VertexSet& A, const std::optional<IntervalSet>& window = std::nullopt) const;

    /// f_e restricted to the pieces whose domain meets `window`.
    PiecewiseAffineMap f_for_domain(std::size_t e, const IntervalSet& window) const;
    /// f_e restricted to the pieces whose image meets `window`. Throws when
    /// the window reaches the accumulation point of a tail.
    PiecewiseAffineMap f_for_image(std::size_t e, const IntervalSet& window) const;
};

IntervalBranchingSystem build_standard_interval_bs(const Ultragraph& g);

/// Same layout with the cycle's edges placed first, so that f_α is the identity.
IntervalBranchingSystem build_no_exit_degenerate_bs(const Ultragraph& g, const Cycle& c);

struct ConditionReport {
    int condition = 0;
    bool pass = true;
    std::string detail;
    IntervalSet region;                  // interval systems
    std::optional<std::uint64_t> index;  // discrete systems
};

struct BsReport {
    std::vector<ConditionReport> conditions;

    bool ok() const;
};

BsReport validate_bs(const IntervalBranchingSystem& bs);

/// F = f_e^{-1} on each R_e, the identity elsewhere. Earlier edges win on overlaps.
PiecewiseAffineMap assemble_F(const IntervalBranchingSystem& bs);
/// Tail pieces are included when their image in R_e meets `window`.
PiecewiseAffineMap assemble_F(const IntervalBranchingSystem& bs, const IntervalSet& window);

}  // namespace ugkit
