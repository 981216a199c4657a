#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ugkit/ultragraph.hpp"

namespace ugkit {

/// A nonempty edge sequence with s(α_{i+1}) ∈ r(α_i).
struct Path {
    std::vector<std::string> edges;

    friend bool operator==(const Path&, const Path&) = default;
};

struct Cycle {
    Path path;
    bool simple = false;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Arc e -> f iff s(f) ∈ r(e). Nodes are edge indices; successor lists are sorted.
struct Digraph {
    std::vector<std::string> nodes;
    std::vector<std::vector<std::size_t>> succ;

    std::size_t arc_count() const;
};

Digraph composability_graph(const Ultragraph& g);

bool is_composable(const Ultragraph& g, const Path& p);
bool is_cycle(const Ultragraph& g, const Path& p);

/// Validates closure and fills in `simple`. Throws if `p` is not a cycle.
Cycle make_cycle(const Ultragraph& g, Path p);

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// All composable paths of length 1..max_len, ordered by length then by edge
/// declaration order.
std::vector<Path> enumerate_paths(const Ultragraph& g, std::size_t max_len,
                                  std::size_t cap = kDefaultPathCap);

/// Each simple cycle once, rotated so that its earliest-declared edge comes first.
std::vector<Cycle> enumerate_simple_cycles(const Ultragraph& g);

struct Exit {
    int condition = 0;   // 1, 2 or 3
    std::size_t index = 0;  // 1-based position in the cycle
    std::optional<std::string> edge;    // extra edge for conditions 1 and 2
    std::optional<VertexId> sink;       // sink for condition 3

    friend bool operator==(const Exit&, const Exit&) = default;
};

/// For tail ranges only the first tail sink is listed.
std::vector<Exit> cycle_exits(const Ultragraph& g, const Cycle& c);

struct ConditionL {
    bool holds = true;
    std::vector<Cycle> violations;
};

ConditionL condition_l(const Ultragraph& g);

}  // namespace ugkit
