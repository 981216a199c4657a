#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ugkit/ultragraph.hpp"

namespace ugkit {

enum class ExtremeKind { Ini, Fin };

/// An extreme vertex A together with its extreme edge.
struct Extreme {
    VertexSet set;
    std::string edge;
    ExtremeKind kind = ExtremeKind::Fin;

    friend bool operator==(const Extreme&, const Extreme&) = default;
};

/// Vertices neither in a range nor a source.
std::set<VertexId> isolated_vertices(const Ultragraph& g);

/// Every qualifying pair; an edge may appear twice (once per kind).
std::vector<Extreme> extreme_vertices(const Ultragraph& g);

struct PeelLevel {
    std::vector<Extreme> X;      // one per edge; r(e) preferred when both qualify
    std::vector<std::string> Y;
    std::set<VertexId> I;
    Ultragraph remaining;

    friend bool operator==(const PeelLevel&, const PeelLevel&) = default;
};

struct PeelTrace {
    std::set<VertexId> I0;
    std::vector<PeelLevel> levels;

    friend bool operator==(const PeelTrace&, const PeelTrace&) = default;
};

/// Finite graphs only.
PeelTrace peel_sequence(const Ultragraph& g);

struct PermutativityResult {
    bool holds = false;
    std::optional<std::size_t> n;
    std::string certificate;
};

PermutativityResult permutativity_condition(const Ultragraph& g);

struct L1Item {
    bool pass = true;
    std::string witness;
};

struct L1Report {
    std::array<L1Item, 4> items;

    bool ok() const;
};

/// Throws if the trace was not produced from `g` or the condition fails.
L1Report check_l1_invariants(const Ultragraph& g, const PeelTrace& trace);

}  // namespace ugkit
