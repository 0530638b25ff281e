#pragma once

#include "uwbfuse/common.hpp"
#include "uwbfuse/sim.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace uwbfuse::metrics {

struct TimedPosition {
    double t = 0.0;
    Vec2 p = Vec2::Zero();
};

struct AlignedPair {
    double t = 0.0;
    Vec2 estimate = Vec2::Zero();
    Vec2 truth = Vec2::Zero();
    Visibility segment = Visibility::los;

    double error() const { return (estimate - truth).norm(); }
};

using AlignedTrajectory = std::vector<AlignedPair>;

/// Matches each estimate to the ground-truth sample with the nearest
/// timestamp. Estimates without a truth sample within `tolerance` seconds are
/// dropped. The default tolerance is half an IMU period.
AlignedTrajectory align(std::span<const TimedPosition> estimates, const sim::GroundTruth& gt,
                        std::span<const Visibility> segments, double tolerance);

struct SegmentStats {
    double mean = 0.0;
    double rmse = 0.0;
    double max = 0.0;
    std::size_t count = 0;
};

/// Box-plot statistics. Quartiles use linear interpolation between closest
/// ranks at position q * (n - 1); whiskers extend to the most extreme samples
/// within 1.5 IQR of the box.
struct Quartiles {
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double whisker_low = 0.0;
    double whisker_high = 0.0;
};

struct AteSummary {
    double mean = 0.0;
    double rmse = 0.0;
    double max = 0.0;
    std::size_t count = 0;
    std::vector<std::pair<double, double>> cdf;  // (error, cumulative fraction)
    std::map<std::string, SegmentStats> per_segment;
    Quartiles quartiles;
};

double ate_rmse(const AlignedTrajectory& traj);

AteSummary ate_summary(const AlignedTrajectory& traj);

/// Linear-interpolation quantile of an unsorted sample.
double quantile(std::vector<double> values, double q);

Quartiles box_stats(std::vector<double> values);

/// Centered moving average per axis; edges shrink the window symmetrically.
std::vector<TimedPosition> smooth_postprocess(std::span<const TimedPosition> positions, int window);

nlohmann::json to_json(const AteSummary& summary);
AteSummary summary_from_json(const nlohmann::json& doc);
void write_cdf_csv(std::ostream& os, const AteSummary& summary);
void write_box_csv(std::ostream& os, const AteSummary& summary);
std::vector<std::pair<double, double>> read_cdf_csv(std::istream& is);

}  // namespace uwbfuse::metrics
