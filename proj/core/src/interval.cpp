#include "ugkit/interval.hpp"

#include <algorithm>

#include "ugkit/error.hpp"

namespace ugkit {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw Error("degenerate interval [" + to_string(lo) + ", " + to_string(hi) + "]");
}

std::optional<Interval> overlap(const Interval& a, const Interval& b) {
    Rational lo = std::max(a.lo, b.lo);
    Rational hi = std::min(a.hi, b.hi);
    if (lo < hi) return Interval(lo, hi);
    return std::nullopt;
}

IntervalSet::IntervalSet(std::initializer_list<Interval> parts) : IntervalSet(std::vector<Interval>(parts)) {}

IntervalSet::IntervalSet(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (auto& p : parts) {
        if (!parts_.empty() && p.lo <= parts_.back().hi) {
            if (p.hi > parts_.back().hi) parts_.back().hi = p.hi;
        } else {
            parts_.push_back(std::move(p));
        }
    }
}

Rational IntervalSet::measure() const {
    Rational m = 0;
    for (const auto& p : parts_) m += p.length();
    return m;
}

bool IntervalSet::contains(const Rational& x) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.contains(x); });
}

std::optional<Interval> IntervalSet::hull() const {
    if (parts_.empty()) return std::nullopt;
    return Interval(parts_.front().lo, parts_.back().hi);
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < o.parts_.size()) {
        if (auto ov = overlap(parts_[i], o.parts_[j])) out.push_back(*ov);
        if (parts_[i].hi < o.parts_[j].hi) ++i;
        else ++j;
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::minus(const IntervalSet& o) const {
    std::vector<Interval> out;
    for (const auto& p : parts_) {
        Rational cur = p.lo;
        for (const auto& q : o.parts_) {
            if (q.hi <= cur) continue;
            if (q.lo >= p.hi) break;
            if (q.lo > cur) out.emplace_back(cur, q.lo);
            cur = std::max(cur, q.hi);
            if (cur >= p.hi) break;
        }
        if (cur < p.hi) out.emplace_back(cur, p.hi);
    }
    return IntervalSet(std::move(out));
}

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<AffinePiece> pieces, bool identity_elsewhere)
    : identity_elsewhere_(identity_elsewhere) {
    for (const auto& p : pieces)
        if (p.slope <= 0) throw Error("affine piece with nonpositive slope");
    std::sort(pieces.begin(), pieces.end(),
              [](const AffinePiece& a, const AffinePiece& b) { return a.dom.lo < b.dom.lo; });
    for (auto& p : pieces) {
        if (!pieces_.empty()) {
            auto& last = pieces_.back();
            if (p.dom.lo < last.dom.hi) throw Error("overlapping piece domains");
            if (p.dom.lo == last.dom.hi && p.slope == last.slope && p.offset == last.offset) {
                last.dom.hi = p.dom.hi;
                continue;
            }
        }
        pieces_.push_back(std::move(p));
    }
}

IntervalSet PiecewiseAffineMap::domain() const {
    std::vector<Interval> v;
    for (const auto& p : pieces_) v.push_back(p.dom);
    return IntervalSet(std::move(v));
}

IntervalSet PiecewiseAffineMap::image() const {
    std::vector<Interval> v;
    for (const auto& p : pieces_) v.push_back(p.image());
    return IntervalSet(std::move(v));
}

std::optional<Rational> PiecewiseAffineMap::apply(const Rational& x) const {
    for (const auto& p : pieces_)
        if (p.dom.contains(x)) return p.apply(x);
    if (identity_elsewhere_) return x;
    return std::nullopt;
}

std::optional<Rational> PiecewiseAffineMap::derivative(const Rational& x) const {
    for (const auto& p : pieces_)
        if (p.dom.contains(x)) return p.slope;
    if (identity_elsewhere_) return Rational(1);
    return std::nullopt;
}

bool PiecewiseAffineMap::images_disjoint() const {
    std::vector<Interval> im;
    for (const auto& p : pieces_) im.push_back(p.image());
    std::sort(im.begin(), im.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < im.size(); ++i)
        if (im[i].lo < im[i - 1].hi) return false;
    return true;
}

PiecewiseAffineMap PiecewiseAffineMap::inverse() const {
    if (!images_disjoint()) throw Error("map is not injective: piece images overlap");
    std::vector<AffinePiece> inv;
    inv.reserve(pieces_.size());
    for (const auto& p : pieces_) inv.push_back(p.inverse());
    return PiecewiseAffineMap(std::move(inv), identity_elsewhere_);
}

PiecewiseAffineMap PiecewiseAffineMap::compose(const PiecewiseAffineMap& inner) const {
    std::vector<AffinePiece> out;
    for (const auto& q : inner.pieces_) {
        const Interval im = q.image();
        for (const auto& p : pieces_) {
            auto ov = overlap(im, p.dom);
            if (!ov) continue;
            Interval dom(q.preimage(ov->lo), q.preimage(ov->hi));
            out.push_back(AffinePiece{dom, p.slope * q.slope, p.slope * q.offset + p.offset});
        }
    }
    return PiecewiseAffineMap(std::move(out));
}

PiecewiseAffineMap PiecewiseAffineMap::restrict_domain(const IntervalSet& window) const {
    std::vector<AffinePiece> out;
    for (const auto& p : pieces_)
        for (const auto& w : window.parts())
            if (auto ov = overlap(p.dom, w)) out.push_back(AffinePiece{*ov, p.slope, p.offset});
    return PiecewiseAffineMap(std::move(out));
}

}  // namespace ugkit
