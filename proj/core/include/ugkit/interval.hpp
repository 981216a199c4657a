#pragma once

#include <optional>
#include <vector>

#include "ugkit/rational.hpp"

namespace ugkit {

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h);

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Overlap of positive length, if any.
std::optional<Interval> overlap(const Interval& a, const Interval& b);

/// Finite union of closed intervals, kept as sorted maximal components.
/// Comparisons ignore sets of measure zero.
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(std::initializer_list<Interval> parts);
    explicit IntervalSet(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    Rational measure() const;
    bool contains(const Rational& x) const;
    std::optional<Interval> hull() const;

    IntervalSet unite(const IntervalSet& o) const;
    IntervalSet intersect(const IntervalSet& o) const;
    IntervalSet minus(const IntervalSet& o) const;
    bool subset_ae(const IntervalSet& o) const { return minus(o).empty(); }
    bool equal_ae(const IntervalSet& o) const { return subset_ae(o) && o.subset_ae(*this); }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> parts_;
};

/// x ↦ slope·x + offset on `dom`, with slope > 0.
struct AffinePiece {
    Interval dom;
    Rational slope;
    Rational offset;

    Rational apply(const Rational& x) const { return slope * x + offset; }
    Rational preimage(const Rational& y) const { return (y - offset) / slope; }
    Interval image() const { return Interval(apply(dom.lo), apply(dom.hi)); }
    AffinePiece inverse() const { return AffinePiece{image(), 1 / slope, -offset / slope}; }

    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Increasing affine pieces on pairwise almost-disjoint domains. Optionally
/// the identity on the complement of the piece domains.
class PiecewiseAffineMap {
public:
    PiecewiseAffineMap() = default;
    /// Sorts, merges adjacent pieces with equal coefficients, and rejects
    /// nonpositive slopes and overlapping domains.
    explicit PiecewiseAffineMap(std::vector<AffinePiece> pieces, bool identity_elsewhere = false);

    const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }
    bool identity_elsewhere() const noexcept { return identity_elsewhere_; }
    IntervalSet domain() const;
    IntervalSet image() const;

    /// Value at x; at a shared endpoint the left piece wins.
    std::optional<Rational> apply(const Rational& x) const;
    /// Slope at x (1 off the domain when identity_elsewhere).
    std::optional<Rational> derivative(const Rational& x) const;

    /// Throws if images overlap in positive measure.
    PiecewiseAffineMap inverse() const;
    /// (*this)∘inner on the part of inner's domain that lands in this domain.
    PiecewiseAffineMap compose(const PiecewiseAffineMap& inner) const;
    /// Pieces whose domain meets `window`, clipped to it. The result is partial.
    PiecewiseAffineMap restrict_domain(const IntervalSet& window) const;

    bool images_disjoint() const;

    friend bool operator==(const PiecewiseAffineMap&, const PiecewiseAffineMap&) = default;

private:
    std::vector<AffinePiece> pieces_;
    bool identity_elsewhere_ = false;
};

}  // namespace ugkit
