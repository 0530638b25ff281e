#pragma once

#include "uwbfuse/common.hpp"

#include <json.hpp>

#include <deque>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace uwbfuse::predictor {

inline constexpr std::size_t kHistoryLength = 10;

struct HistoryEntry {
    double t = 0.0;
    Vec2 p = Vec2::Zero();
};

/// Bounded, time-ordered buffer of the most recent fused positions.
class PositionHistory {
public:
    explicit PositionHistory(std::size_t capacity = kHistoryLength);

    /// Appends, evicting the oldest entry once full. Time must not go backwards.
    void push(double t, const Vec2& p);

    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }
    bool full() const { return entries_.size() == capacity_; }
    bool empty() const { return entries_.empty(); }
    const HistoryEntry& operator[](std::size_t i) const { return entries_[i]; }
    const HistoryEntry& back() const { return entries_.back(); }

private:
    std::size_t capacity_;
    std::deque<HistoryEntry> entries_;
};

enum class Trend { decreasing = -1, stationary = 0, increasing = 1 };

struct TrendSummary {
    Trend x_trend = Trend::stationary;
    Trend y_trend = Trend::stationary;
};

const char* to_string(Trend t);

inline constexpr double kStationarySlope = 0.01;  // m per history step

/// Least-squares slope per axis over a full history, thresholded at 0.01 m/step.
TrendSummary compute_trend(const PositionHistory& history);

/// Extrapolates the last displacement. The upcoming interval defaults to the
/// last interval when `t_next` is not given.
Vec2 predict_constant_velocity(const PositionHistory& history, std::optional<double> t_next = std::nullopt);

enum class Activation { relu, linear };

struct DenseLayer {
    Eigen::MatrixXd weights;  // rows = outputs, cols = inputs
    Eigen::VectorXd bias;
    Activation activation = Activation::linear;
};

/// Feed-forward next-position regressor loaded from the student weight file.
///
/// The input is the flattened chronological history (x1, y1, ..., xL, yL),
/// followed by the trend codes (-1/0/+1 for x then y) when `uses_trend` is set,
/// normalized as (value - mean) / scale. The network output is mapped back to
/// meters with the mean/scale of the most recent history position (feature
/// indices 2L-2 and 2L-1). Immutable once constructed.
class StudentModel {
public:
    static constexpr int kFormatVersion = 1;

    StudentModel(std::vector<DenseLayer> layers, Eigen::VectorXd norm_mean, Eigen::VectorXd norm_scale,
                 bool uses_trend);

    static StudentModel from_json(const nlohmann::json& doc);
    static StudentModel load(const std::filesystem::path& path);
    nlohmann::json to_json() const;

    int input_dim() const { return static_cast<int>(norm_mean_.size()); }
    int output_dim() const { return 2; }
    bool uses_trend() const { return uses_trend_; }
    std::size_t history_length() const;
    const std::vector<DenseLayer>& layers() const { return layers_; }
    const Eigen::VectorXd& norm_mean() const { return norm_mean_; }
    const Eigen::VectorXd& norm_scale() const { return norm_scale_; }

    /// Raw network evaluation on an already-assembled (un-normalized) feature vector.
    Vec2 evaluate(const Eigen::VectorXd& features) const;

private:
    std::vector<DenseLayer> layers_;
    Eigen::VectorXd norm_mean_;
    Eigen::VectorXd norm_scale_;
    bool uses_trend_;
};

/// Builds the raw feature vector the student consumes.
Eigen::VectorXd student_features(const PositionHistory& history, const TrendSummary& trend, bool uses_trend);

Vec2 mlp_forward(const StudentModel& model, const PositionHistory& history, const TrendSummary& trend);

enum class Backend { constant_velocity, student };

Backend backend_from_string(const std::string& name);
const char* to_string(Backend b);

/// Next-position predictor with a selectable backend. The student backend
/// falls back to constant velocity until the history is full.
class Predictor {
public:
    Predictor() = default;
    explicit Predictor(std::shared_ptr<const StudentModel> model);

    Backend backend() const { return model_ ? Backend::student : Backend::constant_velocity; }

    Vec2 predict_next(const PositionHistory& history, std::optional<double> t_next = std::nullopt) const;

private:
    std::shared_ptr<const StudentModel> model_;
};

}  // namespace uwbfuse::predictor
