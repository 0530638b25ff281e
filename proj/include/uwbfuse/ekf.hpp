#pragma once

#include "uwbfuse/common.hpp"
#include "uwbfuse/gate.hpp"
#include "uwbfuse/pdr.hpp"
#include "uwbfuse/predictor.hpp"
#include "uwbfuse/sim.hpp"

#include <json.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace uwbfuse::ekf {

/// x = [px, py, vx, vy], P its covariance.
struct EkfState {
    double t = 0.0;
    Vec4 x = Vec4::Zero();
    Mat4 P = Mat4::Identity();

    Vec2 position() const { return x.head<2>(); }
    Vec2 velocity() const { return x.tail<2>(); }
};

struct FilterConfig {
    Mat2 R0 = 0.09 * Mat2::Identity();
    double q_accel = 0.5;  // m^2/s^3
    Mat4 P0 = Vec4(1.0, 1.0, 0.25, 0.25).asDiagonal();
    gate::GateConfig gate;
    predictor::Backend predictor_backend = predictor::Backend::constant_velocity;
    std::shared_ptr<const predictor::StudentModel> student;  // required for the student backend
    pdr::StepDetectorConfig step_detector;
    int init_max_epochs = 5;
};

void validate(const FilterConfig& config);

/// Parses a FilterConfig document. `base_dir` resolves a relative
/// `student_model` path.
FilterConfig filter_config_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
nlohmann::json to_json(const FilterConfig& config);

/// Constant-velocity propagation with the PDR velocity as control input.
EkfState predict_step(const EkfState& state, const Vec2& pdr_velocity, double dt, const FilterConfig& config);

/// Kalman position update with observation matrix [I2 0], Joseph form.
EkfState update_uwb(const EkfState& state, const Vec2& z, const Mat2& Rk);

enum class Mode { fixed, adaptive };

const char* to_string(Mode mode);

struct EpochDecision {
    double t = 0.0;
    Vec2 fix = Vec2::Zero();
    Vec2 prediction = Vec2::Zero();
    gate::ReliabilityDecision decision;
};

/// One output row per IMU sample once the filter is initialized.
struct StateRecord {
    double t = 0.0;
    EkfState state;
    bool updated = false;             // a UWB update was applied at this sample
    double h = 1.0;                   // scale used by that update
    std::optional<gate::ReliabilityDecision> decision;  // adaptive mode only
};

struct FilterRun {
    std::vector<StateRecord> states;
    std::vector<EpochDecision> decisions;
    int skipped_epochs = 0;  // epochs without a usable fix after initialization
};

struct FilterInputs {
    std::span<const sim::ImuSample> imu;
    std::span<const sim::RangeSet> ranges;
    std::span<const Vec2> anchors;
    double initial_heading = 0.0;
    double k_weinberg = 0.45;
};

/// The full online loop: PDR-driven prediction at IMU rate, trilateration,
/// next-position prediction from the fused history, reliability gating and
/// the scaled-covariance update at every UWB epoch. In fixed mode the gate is
/// bypassed and R_k = R0.
FilterRun run_filter(const FilterInputs& inputs, const FilterConfig& config, Mode mode);

}  // namespace uwbfuse::ekf
