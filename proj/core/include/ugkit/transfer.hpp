#pragma once

#include "ugkit/branching.hpp"
#include "ugkit/step_function.hpp"

namespace ugkit {

/// (P_F φ)(x) = Σ_{F(y)=x} φ(y)/F'(y).
StepFunction pf_direct(const PiecewiseAffineMap& F, const StepFunction& phi);

enum class PfMode { Squared, General };

/// Squared: Σ_e (π(s_e*)φ)^2, which is P_F(φ^2).
/// General: P_F(η) through η = η₁ - η₂ and the square roots of the parts.
/// The support of φ must lie in the union of the R_e.
StepFunction pf_via_rep(const IntervalBranchingSystem& bs, const StepFunction& phi, PfMode mode);

}  // namespace ugkit
