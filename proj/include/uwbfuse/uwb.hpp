#pragma once

#include "uwbfuse/common.hpp"
#include "uwbfuse/sim.hpp"

#include <span>

namespace uwbfuse::uwb {

struct PositionFix {
    double t = 0.0;
    Vec2 p = Vec2::Zero();
    double residual_rms = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct SolverOptions {
    double step_tolerance = 1e-6;  // m
    int max_iterations = 50;
    double damping = 1e-9;         // added to the normal-equations diagonal
};

inline double predicted_range(const Vec2& p, const Vec2& anchor) { return (p - anchor).norm(); }

/// Sum of squared range residuals at `p`; the quantity the solver minimizes.
double range_cost(const Vec2& p, const sim::RangeSet& ranges, std::span<const Vec2> anchors);

/// Gauss-Newton least-squares position from one epoch of ranges.
///
/// Throws InsufficientGeometryError for fewer than 3 ranges and
/// DegenerateGeometryError when the participating anchors are collinear or
/// coincident. Non-convergence is not an error: the fix comes back with
/// `converged == false` and the caller decides what to do with it.
PositionFix trilaterate(const sim::RangeSet& ranges, std::span<const Vec2> anchors, const Vec2& initial_guess,
                        const SolverOptions& options = {});

/// Centroid of the anchors referenced by `ranges`, the cold-start guess.
Vec2 anchor_centroid(const sim::RangeSet& ranges, std::span<const Vec2> anchors);

}  // namespace uwbfuse::uwb
