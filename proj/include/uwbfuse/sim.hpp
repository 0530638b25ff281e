#pragma once

#include "uwbfuse/common.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace uwbfuse::sim {

// Simulation constants for the synthetic gait. These shape the data, they are
// not estimator parameters.
inline constexpr double kGaitAmplitude = 3.0;       // m/s^2 around gravity
inline constexpr double kNominalStepLength = 0.7;   // m
inline constexpr double kMaxTurnRate = kPi;         // rad/s at corners

struct Rect {
    Vec2 min = Vec2::Zero();
    Vec2 max = Vec2::Zero();

    bool contains(const Vec2& p) const {
        return p.x() >= min.x() && p.x() <= max.x() && p.y() >= min.y() && p.y() <= max.y();
    }
};

struct NoiseParams {
    double sigma_range_los = 0.0;
    double sigma_range_nlos = 0.0;
    double nlos_bias_mean = 0.0;
    double sigma_accel = 0.0;
    double gyro_bias = 0.0;
    double sigma_gyro = 0.0;
};

struct Scenario {
    std::string name = "scenario";
    std::vector<Vec2> anchors;
    std::vector<Rect> nlos_zones;
    std::vector<Vec2> waypoints;
    double walk_speed = 1.0;
    double imu_rate = 100.0;
    double uwb_rate = 10.0;
    double start_dwell = 0.0;  // seconds standing at the first waypoint
    double end_dwell = 0.0;    // seconds standing at the last waypoint
    double k_weinberg = 0.45;  // PDR calibration constant for this walker
    NoiseParams noise;
    std::uint64_t seed = 0;
};

/// Throws ConfigError naming the first violated invariant.
void validate(const Scenario& scenario);

/// Heading of the first non-degenerate polyline segment.
double initial_heading(const Scenario& scenario);

struct GroundTruth {
    std::vector<double> timestamps;
    std::vector<Vec2> positions;
    std::vector<double> headings;
    std::vector<double> heading_rates;
    std::vector<double> speeds;

    std::size_t size() const { return timestamps.size(); }
    bool empty() const { return timestamps.empty(); }
    double duration() const { return empty() ? 0.0 : timestamps.back() - timestamps.front(); }
    /// Linear interpolation of position, clamped to the covered interval.
    Vec2 position_at(double t) const;
};

struct ImuSample {
    double t = 0.0;
    double accel_vertical = 0.0;
    double gyro_z = 0.0;
};

struct RangeMeasurement {
    int anchor_index = 0;
    double range = 0.0;
    Visibility true_visibility = Visibility::los;  // ground-truth tag, never read by estimators
};

struct RangeSet {
    double t = 0.0;
    std::vector<RangeMeasurement> ranges;
};

GroundTruth build_trajectory(const Scenario& scenario);

Visibility label_visibility(const Scenario& scenario, const Vec2& position, int anchor_index);

/// Segment label used by the evaluation: NLOS when any anchor is obstructed.
Visibility segment_label(const Scenario& scenario, const Vec2& position);

/// Closed segment / closed axis-aligned rectangle intersection (slab test).
bool segment_intersects(const Vec2& a, const Vec2& b, const Rect& rect);

std::vector<RangeSet> synthesize_ranges(const Scenario& scenario, const GroundTruth& gt);

std::vector<ImuSample> synthesize_imu(const Scenario& scenario, const GroundTruth& gt);

/// Everything one simulated walk produces.
struct SimulatedRun {
    GroundTruth gt;
    std::vector<ImuSample> imu;
    std::vector<RangeSet> ranges;
};

SimulatedRun simulate(const Scenario& scenario);

/// Independent per-stream seed derived from the root seed (splitmix64).
std::uint64_t stream_seed(std::uint64_t root, std::uint64_t stream);

// JSON scenario documents (schema in README).
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);
Scenario load_scenario(const std::filesystem::path& path);

// CSV streams. Writers emit round-trip precision; readers accept their output.
void write_ground_truth_csv(std::ostream& os, const GroundTruth& gt, const Scenario& scenario);
void write_imu_csv(std::ostream& os, std::span<const ImuSample> imu);
void write_ranges_csv(std::ostream& os, std::span<const RangeSet> ranges);

struct GroundTruthTable {
    GroundTruth gt;
    std::vector<Visibility> segments;
};

GroundTruthTable read_ground_truth_csv(std::istream& is);
std::vector<ImuSample> read_imu_csv(std::istream& is);
std::vector<RangeSet> read_ranges_csv(std::istream& is);

}  // namespace uwbfuse::sim
