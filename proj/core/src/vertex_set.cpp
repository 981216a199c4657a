#include "ugkit/vertex_set.hpp"

#include <algorithm>

namespace ugkit {

VertexSet::VertexSet(std::set<VertexId> members, std::optional<std::uint64_t> tail_from)
    : members_(std::move(members)), tail_from_(tail_from) {
    normalize();
}

void VertexSet::normalize() {
    if (!tail_from_) return;
    auto t = *tail_from_;
    std::erase_if(members_, [t](const VertexId& v) { return v.is_tail() && v.tail >= t; });
    while (t > 1) {
        auto it = members_.find(VertexId::tail_vertex(t - 1));
        if (it == members_.end()) break;
        members_.erase(it);
        --t;
    }
    tail_from_ = t;
}

bool VertexSet::contains(const VertexId& v) const {
    if (v.is_tail() && tail_from_ && v.tail >= *tail_from_) return true;
    return members_.count(v) != 0;
}

bool VertexSet::subset_of(const VertexSet& other) const {
    if (tail_from_ && (!other.tail_from_ || *other.tail_from_ > *tail_from_)) {
        // Tail indices [other.tail_from, tail_from) must be explicit members of other.
        if (!other.tail_from_) return false;
        for (auto i = *tail_from_; i < *other.tail_from_; ++i)
            if (!other.members_.count(VertexId::tail_vertex(i))) return false;
    }
    return std::all_of(members_.begin(), members_.end(), [&](const VertexId& v) { return other.contains(v); });
}

bool VertexSet::intersects(const VertexSet& other) const {
    if (tail_from_ && other.tail_from_) return true;
    for (const auto& v : members_)
        if (other.contains(v)) return true;
    for (const auto& v : other.members_)
        if (contains(v)) return true;
    return false;
}

std::vector<VertexId> VertexSet::members_below(std::uint64_t bound) const {
    std::vector<VertexId> out;
    for (const auto& v : members_)
        if (!v.is_tail() || v.tail < bound) out.push_back(v);
    if (tail_from_)
        for (auto i = *tail_from_; i < bound; ++i) out.push_back(VertexId::tail_vertex(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t VertexSet::max_tail_index() const {
    std::uint64_t m = tail_from_.value_or(0);
    for (const auto& v : members_) m = std::max(m, v.tail);
    return m;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    auto ia = a.members_.begin();
    auto ib = b.members_.begin();
    for (; ia != a.members_.end() && ib != b.members_.end(); ++ia, ++ib) {
        if (auto c = *ia <=> *ib; c != 0) return c;
    }
    bool a_more = ia != a.members_.end();
    bool b_more = ib != b.members_.end();
    // A remaining explicit element is smaller than a tail token; an exhausted sequence is smallest.
    if (a_more) return b.tail_from_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (b_more) return a.tail_from_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.tail_from_ && b.tail_from_) return *a.tail_from_ <=> *b.tail_from_;
    if (a.tail_from_) return std::strong_ordering::greater;
    if (b.tail_from_) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
    std::set<VertexId> m = a.explicit_part();
    m.insert(b.explicit_part().begin(), b.explicit_part().end());
    std::optional<std::uint64_t> t;
    if (a.tail_from() && b.tail_from()) t = std::min(*a.tail_from(), *b.tail_from());
    else if (a.tail_from()) t = a.tail_from();
    else t = b.tail_from();
    return VertexSet(std::move(m), t);
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
    std::set<VertexId> m;
    for (const auto& v : a.explicit_part())
        if (b.contains(v)) m.insert(v);
    for (const auto& v : b.explicit_part())
        if (a.contains(v)) m.insert(v);
    std::optional<std::uint64_t> t;
    if (a.tail_from() && b.tail_from()) t = std::max(*a.tail_from(), *b.tail_from());
    return VertexSet(std::move(m), t);
}

VertexSet vs_difference(const VertexSet& a, const VertexSet& b) {
    std::set<VertexId> m;
    for (const auto& v : a.explicit_part())
        if (!b.contains(v)) m.insert(v);
    std::optional<std::uint64_t> t;
    if (a.tail_from()) {
        if (b.tail_from()) {
            for (auto i = *a.tail_from(); i < *b.tail_from(); ++i) {
                auto w = VertexId::tail_vertex(i);
                if (!b.contains(w)) m.insert(w);
            }
        } else {
            std::uint64_t top = std::max(*a.tail_from(), b.max_tail_index() + 1);
            for (auto i = *a.tail_from(); i < top; ++i) {
                auto w = VertexId::tail_vertex(i);
                if (!b.contains(w)) m.insert(w);
            }
            t = top;
        }
    }
    return VertexSet(std::move(m), t);
}

VertexSet vs_combine(CombineOp op, const VertexSet& a, const VertexSet& b) {
    return op == CombineOp::Union ? vs_union(a, b) : vs_intersect(a, b);
}

}  // namespace ugkit
