#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ugkit {

/// A vertex is either a named explicit vertex or the tail vertex with a given
/// positive index. Tail vertices carry no name; the owning graph renders them.
struct VertexId {
    std::string name;
    std::uint64_t tail = 0;  // 0 for explicit vertices

    static VertexId named(std::string n) { return VertexId{std::move(n), 0}; }
    static VertexId tail_vertex(std::uint64_t index) { return VertexId{{}, index}; }

    bool is_tail() const noexcept { return tail != 0; }

    // Explicit vertices first (by name), then tail vertices by index.
    friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
        if (a.is_tail() != b.is_tail()) return a.is_tail() ? std::strong_ordering::greater
                                                            : std::strong_ordering::less;
        if (a.is_tail()) return a.tail <=> b.tail;
        return a.name.compare(b.name) <=> 0;
    }
    friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// Finite explicit part plus an optional cofinite tail {w_i : i >= tail_from}.
/// Always kept in normal form: no explicit tail vertex at or above the
/// threshold, and w_{T-1} is absorbed into the tail.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::set<VertexId> members, std::optional<std::uint64_t> tail_from = std::nullopt);

    static VertexSet of(std::initializer_list<VertexId> members) { return VertexSet(std::set<VertexId>(members)); }
    static VertexSet tail(std::uint64_t from) { return VertexSet({}, from); }

    const std::set<VertexId>& explicit_part() const noexcept { return members_; }
    const std::optional<std::uint64_t>& tail_from() const noexcept { return tail_from_; }

    bool empty() const noexcept { return members_.empty() && !tail_from_; }
    bool is_finite() const noexcept { return !tail_from_; }
    bool contains(const VertexId& v) const;
    bool subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    /// Members with tail index below `bound` plus all explicit named members.
    std::vector<VertexId> members_below(std::uint64_t bound) const;

    /// Largest tail index mentioned (explicit member or threshold), 0 if none.
    std::uint64_t max_tail_index() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Lexicographic on the sorted member sequence, tail token last; the empty set first.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

private:
    void normalize();

    std::set<VertexId> members_;
    std::optional<std::uint64_t> tail_from_;
};

enum class CombineOp { Union, Intersect };

VertexSet vs_combine(CombineOp op, const VertexSet& a, const VertexSet& b);
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);
VertexSet vs_difference(const VertexSet& a, const VertexSet& b);

}  // namespace ugkit
