#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ugkit/branching.hpp"
#include "ugkit/discrete.hpp"
#include "ugkit/paths.hpp"
#include "ugkit/step_function.hpp"

namespace ugkit {

struct Generator {
    enum class Kind { S, SStar, P, SPath, SPathStar };

    Kind kind = Kind::P;
    std::string edge;
    VertexSet set;
    Path path;

    static Generator s(std::string e) { return {Kind::S, std::move(e), {}, {}}; }
    static Generator s_star(std::string e) { return {Kind::SStar, std::move(e), {}, {}}; }
    static Generator p(VertexSet a) { return {Kind::P, {}, std::move(a), {}}; }
    static Generator s_path(Path a) { return {Kind::SPath, {}, {}, std::move(a)}; }
    static Generator s_path_star(Path a) { return {Kind::SPathStar, {}, {}, std::move(a)}; }
};

/// π(s_e)φ = Φ_{f_e^{-1}}^{1/2}·φ∘f_e^{-1},  π(s_e*)φ = Φ_{f_e}^{1/2}·φ∘f_e,  π(p_A)φ = χ_{D_A}φ.
StepFunction rep_apply(const IntervalBranchingSystem& bs, const Generator& gen, const StepFunction& phi);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CkOptions {
    double tol = 1e-10;
    std::uint64_t seed = kDefaultSeed;
    std::size_t random_functions = 10;
};

struct RelationResult {
    int relation = 0;
    double max_deviation = 0.0;
    bool pass = true;
    std::string witness;
};

struct CkReport {
    std::vector<RelationResult> relations;  // relations 1..4
    std::size_t family_size = 0;
    bool exact = false;

    bool ok() const;
};

/// Indicators of the cells of the common breakpoint refinement plus seeded
/// random step functions on those cells. Cells abutting a tail accumulation
/// point are left out.
std::vector<StepFunction> ck_test_family(const IntervalBranchingSystem& bs, std::uint64_t seed,
                                         std::size_t random_functions);

CkReport verify_ck_relations(const IntervalBranchingSystem& bs, const CkOptions& opts = {});
CkReport verify_ck_relations(const DiscreteBranchingSystem& bs, const CkOptions& opts = {});

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Row and column k-1 stand for δ_k.
IntMatrix discrete_rep_matrix(const DiscreteBranchingSystem& bs, const Generator& gen, std::uint64_t N);

struct FaithfulnessResult {
    std::optional<std::set<std::uint64_t>> witness;
    std::uint64_t orbit_bound = 0;
};

/// Looks for x with f_α^n(x) != x for every n in fset.
FaithfulnessResult faithfulness_witness(const DiscreteBranchingSystem& bs, const Cycle& c,
                                        const std::set<std::uint64_t>& fset);

}  // namespace ugkit
