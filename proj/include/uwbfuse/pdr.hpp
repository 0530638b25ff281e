#pragma once

#include "uwbfuse/common.hpp"
#include "uwbfuse/sim.hpp"

#include <optional>
#include <span>
#include <vector>

namespace uwbfuse::pdr {

struct StepEvent {
    double t_peak = 0.0;
    double a_max = 0.0;
    double a_min = 0.0;
    double duration = 0.0;  // peak-to-peak spacing
};

struct PdrState {
    Vec2 p = Vec2::Zero();
    double theta = 0.0;
    double K_weinberg = 0.45;
    double t_last = 0.0;
};

struct StepDetectorConfig {
    double threshold_above_gravity = 1.0;  // m/s^2
    double refractory = 0.3;               // s between accepted peaks
};

/// Streaming peak detector over the vertical-acceleration channel.
///
/// A sample is accepted as a step when it is a local maximum above
/// gravity + threshold and at least `refractory` seconds after the previous
/// step. Detection lags by one sample because the right neighbour is needed.
/// a_max / a_min are the extrema of the window since the previous step.
class StepDetector {
public:
    explicit StepDetector(StepDetectorConfig config = {}) : config_(config) {}

    std::optional<StepEvent> push(const sim::ImuSample& sample);

private:
    StepDetectorConfig config_;
    std::optional<sim::ImuSample> prev_;
    std::optional<sim::ImuSample> cur_;
    std::optional<double> last_peak_t_;
    double window_start_t_ = 0.0;
    bool window_open_ = false;
    double window_max_ = 0.0;
    double window_min_ = 0.0;
};

std::vector<StepEvent> detect_steps(std::span<const sim::ImuSample> samples, StepDetectorConfig config = {});

/// Weinberg step length K * (a_max - a_min)^(1/4).
double weinberg_step_length(const StepEvent& step, double K);

/// Trapezoidal gyro integration over [t_from, t_to] added to theta_prev, wrapped.
double integrate_heading(double theta_prev, std::span<const sim::ImuSample> gyro, double t_from, double t_to);

/// Dead-reckoning position update p' = p + s (cos theta, sin theta).
PdrState pdr_update(const PdrState& state, double step_length, double theta);

/// One processed step of the streaming tracker.
struct PdrStep {
    StepEvent event;
    double length = 0.0;
    PdrState state;   // after the update
    Vec2 velocity;    // s / duration along the step heading
};

/// Sequential PDR engine: integrates heading every sample, detects steps and
/// applies the position update. Owns its state; one owner, no sharing.
class PdrTracker {
public:
    PdrTracker(const PdrState& initial, StepDetectorConfig config = {});

    std::optional<PdrStep> push(const sim::ImuSample& sample);

    const PdrState& state() const { return state_; }
    double heading() const { return heading_; }
    /// Velocity held from the most recent step; zero before the first step.
    const Vec2& velocity() const { return velocity_; }

private:
    PdrState state_;
    StepDetector detector_;
    std::optional<sim::ImuSample> last_sample_;
    double heading_;
    // Heading history for the one-sample detection lag.
    double heading_prev_sample_ = 0.0;
    Vec2 velocity_ = Vec2::Zero();
};

/// Runs the tracker over a full IMU stream and returns every step.
std::vector<PdrStep> run_pdr(std::span<const sim::ImuSample> imu, const PdrState& initial,
                             StepDetectorConfig config = {});

}  // namespace uwbfuse::pdr
