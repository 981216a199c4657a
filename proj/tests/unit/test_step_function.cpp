#include <gtest/gtest.h>

#include <cmath>

#include "ugkit/error.hpp"
#include "ugkit/step_function.hpp"

using namespace ugkit;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }
Interval I(Rational a, Rational b) { return Interval(std::move(a), std::move(b)); }
StepPiece piece(Rational a, Rational b, double v) { return StepPiece{I(std::move(a), std::move(b)), v}; }

}  // namespace

TEST(StepFunction, CanonicalForm) {
    StepFunction f({piece(q(1), q(2), 3.0), piece(q(0), q(1), 3.0), piece(q(2), q(3), 0.0)});
    ASSERT_EQ(f.pieces().size(), 1u);
    EXPECT_EQ(f.pieces()[0], piece(q(0), q(2), 3.0));
    EXPECT_TRUE(StepFunction({piece(q(0), q(1), 0.0)}).is_zero());
}

TEST(StepFunction, RejectsOverlapsAndNonFinite) {
    try {
        StepFunction({piece(q(0), q(2), 1.0), piece(q(1), q(3), 1.0)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("malformed step function"), std::string::npos);
    }
    EXPECT_THROW(StepFunction({piece(q(0), q(1), std::nan(""))}), Error);
}

TEST(StepFunction, SumOfAddsOverlaps) {
    auto f = StepFunction::sum_of({piece(q(0), q(2), 1.0), piece(q(1), q(3), 2.0)});
    EXPECT_EQ(f.pieces(), (std::vector<StepPiece>{piece(q(0), q(1), 1.0), piece(q(1), q(2), 3.0), piece(q(2), q(3), 2.0)}));
}

TEST(StepFunction, Arithmetic) {
    StepFunction a({piece(q(0), q(2), 2.0)});
    StepFunction b({piece(q(1), q(3), 3.0)});
    EXPECT_EQ((a + b).pieces(), (std::vector<StepPiece>{piece(q(0), q(1), 2.0), piece(q(1), q(2), 5.0), piece(q(2), q(3), 3.0)}));
    EXPECT_EQ((a * b).pieces(), (std::vector<StepPiece>{piece(q(1), q(2), 6.0)}));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_DOUBLE_EQ(inner(a, b), 6.0);
    EXPECT_DOUBLE_EQ(a.integral(), 4.0);
    EXPECT_DOUBLE_EQ((a - b).norm1(), 2.0 + 1.0 + 3.0);
    EXPECT_DOUBLE_EQ(a.norm2(), std::sqrt(8.0));
}

TEST(StepFunction, ValueAtUsesOpenPieces) {
    StepFunction f({piece(q(0), q(1), 1.0), piece(q(1), q(2), 2.0)});
    EXPECT_EQ(f.value_at(q(1, 2)), 1.0);
    EXPECT_EQ(f.value_at(q(3, 2)), 2.0);
    EXPECT_EQ(f.value_at(q(5)), 0.0);
}

TEST(StepFunction, SupportRestrictAndBreakpoints) {
    StepFunction f({piece(q(0), q(1), 1.0), piece(q(2), q(3), -1.0)});
    EXPECT_EQ(f.support(), (IntervalSet{I(q(0), q(1)), I(q(2), q(3))}));
    auto r = f.restrict_to(IntervalSet{I(q(1, 2), q(5, 2))});
    EXPECT_EQ(r.pieces(), (std::vector<StepPiece>{piece(q(1, 2), q(1), 1.0), piece(q(2), q(5, 2), -1.0)}));
    EXPECT_EQ(f.breakpoints(), (std::vector<Rational>{q(0), q(1), q(2), q(3)}));
    EXPECT_EQ(StepFunction::indicator(IntervalSet{I(q(0), q(1))}, 2.0).pieces(),
              (std::vector<StepPiece>{piece(q(0), q(1), 2.0)}));
    EXPECT_EQ(f.scaled(2.0).pieces()[1].value, -2.0);
}
