#pragma once

#include "uwbfuse/ekf.hpp"
#include "uwbfuse/metrics.hpp"
#include "uwbfuse/sim.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace uwbfuse::harness {

enum class Pipeline { uwb, pdr, ekf_fixed, ekf_adaptive };

const char* to_string(Pipeline p);
Pipeline pipeline_from_string(const std::string& name);
std::vector<Pipeline> parse_pipeline_list(const std::string& csv);

enum class DatasetSource { gt, fused };

struct DatasetOptions {
    DatasetSource source = DatasetSource::gt;
    std::size_t history_length = 10;
    double train_ratio = 6.0 / 7.0;
    std::uint64_t split_seed = 0;
};

struct ExperimentConfig {
    sim::Scenario scenario;
    ekf::FilterConfig filter;
    std::vector<Pipeline> pipelines{Pipeline::uwb, Pipeline::pdr, Pipeline::ekf_fixed, Pipeline::ekf_adaptive};
    std::vector<std::uint64_t> seeds{0};
    std::filesystem::path output_dir = "out";
    std::optional<int> smoothing_window;
    DatasetOptions dataset;
};

void validate(const ExperimentConfig& config);

/// `base_dir` resolves relative scenario / model / output paths.
ExperimentConfig experiment_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment(const std::filesystem::path& path);

/// One row of an estimator trajectory; optional fields are blank in CSV.
struct TrajectoryRow {
    double t = 0.0;
    Vec2 p = Vec2::Zero();
    std::optional<Vec2> v;
    std::optional<std::string> tier;
    std::optional<double> h;
    std::optional<double> delta;
};

struct PipelineResult {
    Pipeline pipeline = Pipeline::uwb;
    std::uint64_t seed = 0;
    std::vector<TrajectoryRow> trajectory;
    std::vector<ekf::EpochDecision> decisions;  // ekf_adaptive only
    metrics::AteSummary summary;
};

/// Runs one pipeline on an already simulated walk.
PipelineResult run_pipeline(Pipeline pipeline, const sim::Scenario& scenario, const sim::SimulatedRun& run,
                            const ekf::FilterConfig& filter, std::optional<int> smoothing_window);

/// Scenario with the root seed replaced.
sim::Scenario with_seed(const sim::Scenario& scenario, std::uint64_t seed);

struct ExperimentResult {
    std::vector<PipelineResult> runs;  // ordered by seed, then pipeline order of the config
    nlohmann::json comparison;
};

/// Pure function of the per-run summaries: per-pipeline seed-averaged
/// mean / RMSE / max rows in the order the pipelines appear.
nlohmann::json comparison_table(const std::vector<PipelineResult>& runs);

/// Simulates every seed, runs every pipeline and, when `write_files` is set,
/// writes the per-run artifacts plus comparison.json under output_dir.
ExperimentResult run_experiment(const ExperimentConfig& config, bool write_files = true);

std::string run_name(Pipeline pipeline, std::uint64_t seed);

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRow>& rows);
std::vector<TrajectoryRow> read_trajectory_csv(std::istream& is);
void write_decisions_csv(std::ostream& os, const std::vector<ekf::EpochDecision>& decisions);

struct DecisionRow {
    double t = 0.0;
    double delta = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    std::string tier;
    double h = 1.0;
    bool nlos_flag = false;
};
std::vector<DecisionRow> read_decisions_csv(std::istream& is);

// --- dataset export -----------------------------------------------------------

struct DatasetRecord {
    std::vector<Vec2> history;
    Vec2 target = Vec2::Zero();
    bool train = true;
};

/// Sliding windows of `history_length` positions plus the next one. Tracks
/// shorter than history_length + 1 are skipped and reported in `warnings`.
std::vector<DatasetRecord> sliding_windows(const std::vector<std::vector<Vec2>>& tracks, std::size_t history_length,
                                           std::vector<std::string>& warnings);

/// Marks round(N * train_ratio) records as train using a seeded permutation.
void assign_split(std::vector<DatasetRecord>& records, double train_ratio, std::uint64_t split_seed);

struct DatasetExport {
    std::vector<DatasetRecord> records;
    std::vector<std::string> warnings;
};

DatasetExport export_dataset(const ExperimentConfig& config);

void write_dataset_csv(std::ostream& os, const std::vector<DatasetRecord>& records, std::size_t history_length);
std::vector<DatasetRecord> read_dataset_csv(std::istream& is, std::size_t history_length);

}  // namespace uwbfuse::harness
