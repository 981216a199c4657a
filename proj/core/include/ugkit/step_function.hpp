#pragma once

#include <functional>
#include <vector>

#include "ugkit/interval.hpp"

namespace ugkit {

struct StepPiece {
    Interval iv;
    double value = 0.0;

    friend bool operator==(const StepPiece&, const StepPiece&) = default;
};

/// Finitely many constant pieces on rational intervals, zero elsewhere.
/// Canonical form: sorted, touching equal-valued pieces merged, zeros dropped.
class StepFunction {
public:
    StepFunction() = default;
    /// Throws "malformed step function" when pieces overlap in positive measure.
    explicit StepFunction(std::vector<StepPiece> pieces);
    /// Overlapping pieces are added.
    static StepFunction sum_of(const std::vector<StepPiece>& pieces);
    static StepFunction indicator(const IntervalSet& s, double value = 1.0);

    const std::vector<StepPiece>& pieces() const noexcept { return pieces_; }
    bool is_zero() const noexcept { return pieces_.empty(); }
    IntervalSet support() const;
    std::vector<Rational> breakpoints() const;

    /// Value on the open piece containing x (0 off the support).
    double value_at(const Rational& x) const;
    double integral() const;
    double norm1() const;
    double norm2() const;

    StepFunction map_values(const std::function<double(double)>& fn) const;
    StepFunction restrict_to(const IntervalSet& s) const;
    StepFunction scaled(double c) const { return map_values([c](double v) { return c * v; }); }

    friend StepFunction operator+(const StepFunction& a, const StepFunction& b);
    friend StepFunction operator-(const StepFunction& a, const StepFunction& b);
    friend StepFunction operator*(const StepFunction& a, const StepFunction& b);
    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    std::vector<StepPiece> pieces_;
};

double inner(const StepFunction& a, const StepFunction& b);

}  // namespace ugkit
