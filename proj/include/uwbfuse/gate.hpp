#pragma once

#include "uwbfuse/common.hpp"

#include <json.hpp>

#include <deque>
#include <optional>
#include <vector>

namespace uwbfuse::gate {

struct GateConfig {
    std::size_t window_len = 10;
    double alpha = 1.5;
    double beta = 3.0;
    double h_low = 1.0;
    double h_mid = 10.0;
    double h_high = 100.0;
    int persistence_n = 3;
    double mad_floor = 0.05;  // m
};

void validate(const GateConfig& config);
GateConfig gate_config_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const GateConfig& config);

/// Bounded FIFO of the most recent discrepancies.
class ErrorWindow {
public:
    explicit ErrorWindow(std::size_t capacity) : capacity_(capacity) {}

    void push(double delta);
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    std::size_t capacity() const { return capacity_; }
    std::vector<double> values() const { return {values_.begin(), values_.end()}; }

private:
    std::size_t capacity_;
    std::deque<double> values_;
};

enum class Tier { low, mid, high };

const char* to_string(Tier tier);

struct Thresholds {
    double median = 0.0;
    double mad = 0.0;  // after flooring
    double theta1 = 0.0;
    double theta2 = 0.0;
};

struct ReliabilityDecision {
    double delta = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    Tier tier = Tier::low;
    double h = 1.0;
    bool nlos_flag = false;
    int consecutive_exceed = 0;
};

inline double compute_delta(const Vec2& z, const Vec2& prediction) { return (z - prediction).norm(); }

/// Median of a sample; the mean of the two middle order statistics for even sizes.
double median(std::vector<double> values);

/// Median/MAD thresholds over the window. An empty window yields nullopt,
/// the warm-up signal (callers then use the low tier).
std::optional<Thresholds> robust_thresholds(const ErrorWindow& window, const GateConfig& config);

/// Tier selection with persistence: exceeding theta2 only escalates to high
/// after persistence_n consecutive exceedances, otherwise it counts as mid.
ReliabilityDecision classify(double delta, double theta1, double theta2, int consecutive_exceed_prev,
                             const GateConfig& config);

/// R_k = h * R0.
Mat2 scale_covariance(double h, const Mat2& R0);

/// Throws ConfigError unless R0 is symmetric positive definite.
void require_spd(const Mat2& R0, const char* name);

/// The per-epoch reliability gate: append, threshold, classify.
class ReliabilityGate {
public:
    explicit ReliabilityGate(GateConfig config);

    ReliabilityDecision step(double delta);

    const GateConfig& config() const { return config_; }
    const ErrorWindow& window() const { return window_; }

private:
    GateConfig config_;
    ErrorWindow window_;
    int consecutive_exceed_ = 0;
};

}  // namespace uwbfuse::gate
