#include "ugkit/step_function.hpp"

#include <algorithm>
#include <cmath>

#include "ugkit/error.hpp"

namespace ugkit {

namespace {

std::vector<StepPiece> canonical(std::vector<StepPiece> pieces) {
    std::erase_if(pieces, [](const StepPiece& p) { return p.value == 0.0; });
    std::sort(pieces.begin(), pieces.end(), [](const StepPiece& a, const StepPiece& b) { return a.iv.lo < b.iv.lo; });
    std::vector<StepPiece> out;
    for (auto& p : pieces) {
        if (!out.empty() && out.back().iv.hi == p.iv.lo && out.back().value == p.value) {
            out.back().iv.hi = p.iv.hi;
            continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

// Applies op on the common refinement of a and b.
StepFunction combine(const StepFunction& a, const StepFunction& b, double (*op)(double, double)) {
    std::vector<Rational> cuts = a.breakpoints();
    auto bb = b.breakpoints();
    cuts.insert(cuts.end(), bb.begin(), bb.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<StepPiece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational mid = (cuts[i] + cuts[i + 1]) / 2;
        double v = op(a.value_at(mid), b.value_at(mid));
        if (v != 0.0) out.push_back(StepPiece{Interval(cuts[i], cuts[i + 1]), v});
    }
    return StepFunction(std::move(out));
}

}  // namespace

StepFunction::StepFunction(std::vector<StepPiece> pieces) {
    std::sort(pieces.begin(), pieces.end(), [](const StepPiece& a, const StepPiece& b) { return a.iv.lo < b.iv.lo; });
    for (std::size_t i = 1; i < pieces.size(); ++i)
        if (pieces[i].iv.lo < pieces[i - 1].iv.hi) throw Error("malformed step function: overlapping pieces");
    for (const auto& p : pieces)
        if (!std::isfinite(p.value)) throw Error("malformed step function: non-finite value");
    pieces_ = canonical(std::move(pieces));
}

StepFunction StepFunction::sum_of(const std::vector<StepPiece>& pieces) {
    std::vector<Rational> cuts;
    for (const auto& p : pieces) {
        cuts.push_back(p.iv.lo);
        cuts.push_back(p.iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<double> acc(cuts.empty() ? 0 : cuts.size() - 1, 0.0);
    for (const auto& p : pieces) {
        auto lo = std::lower_bound(cuts.begin(), cuts.end(), p.iv.lo) - cuts.begin();
        auto hi = std::lower_bound(cuts.begin(), cuts.end(), p.iv.hi) - cuts.begin();
        for (auto k = lo; k < hi; ++k) acc[static_cast<std::size_t>(k)] += p.value;
    }
    std::vector<StepPiece> out;
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (acc[k] != 0.0) out.push_back(StepPiece{Interval(cuts[k], cuts[k + 1]), acc[k]});
    return StepFunction(std::move(out));
}

StepFunction StepFunction::indicator(const IntervalSet& s, double value) {
    std::vector<StepPiece> out;
    for (const auto& p : s.parts()) out.push_back(StepPiece{p, value});
    return StepFunction(std::move(out));
}

IntervalSet StepFunction::support() const {
    std::vector<Interval> v;
    for (const auto& p : pieces_) v.push_back(p.iv);
    return IntervalSet(std::move(v));
}

std::vector<Rational> StepFunction::breakpoints() const {
    std::vector<Rational> out;
    for (const auto& p : pieces_) {
        if (out.empty() || out.back() != p.iv.lo) out.push_back(p.iv.lo);
        out.push_back(p.iv.hi);
    }
    return out;
}

double StepFunction::value_at(const Rational& x) const {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Rational& y, const StepPiece& p) { return y < p.iv.lo; });
    if (it == pieces_.begin()) return 0.0;
    --it;
    return (it->iv.lo < x && x < it->iv.hi) ? it->value : 0.0;
}

double StepFunction::integral() const {
    double s = 0.0;
    for (const auto& p : pieces_) s += p.value * to_double(p.iv.length());
    return s;
}

double StepFunction::norm1() const {
    double s = 0.0;
    for (const auto& p : pieces_) s += std::abs(p.value) * to_double(p.iv.length());
    return s;
}

double StepFunction::norm2() const {
    double s = 0.0;
    for (const auto& p : pieces_) s += p.value * p.value * to_double(p.iv.length());
    return std::sqrt(s);
}

StepFunction StepFunction::map_values(const std::function<double(double)>& fn) const {
    std::vector<StepPiece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back(StepPiece{p.iv, fn(p.value)});
    return StepFunction(std::move(out));
}

StepFunction StepFunction::restrict_to(const IntervalSet& s) const {
    std::vector<StepPiece> out;
    for (const auto& p : pieces_) {
        const auto clipped = IntervalSet{p.iv}.intersect(s);
        for (const auto& part : clipped.parts()) out.push_back(StepPiece{part, p.value});
    }
    return StepFunction(std::move(out));
}

StepFunction operator+(const StepFunction& a, const StepFunction& b) {
    return combine(a, b, [](double x, double y) { return x + y; });
}

StepFunction operator-(const StepFunction& a, const StepFunction& b) {
    return combine(a, b, [](double x, double y) { return x - y; });
}

StepFunction operator*(const StepFunction& a, const StepFunction& b) {
    return combine(a, b, [](double x, double y) { return x * y; });
}

double inner(const StepFunction& a, const StepFunction& b) {
    double s = 0.0;
    const auto prod = a * b;
    for (const auto& p : prod.pieces()) s += p.value * to_double(p.iv.length());
    return s;
}

}  // namespace ugkit
