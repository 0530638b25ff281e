#pragma once

#include "uwbfuse/common.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace uwbfuse::io {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

double parse_double(std::string_view text);

std::vector<std::string> split_csv_line(std::string_view line);

/// Reads a CSV stream, checks the header matches `expected_header` and returns
/// the data rows split into fields.
std::vector<std::vector<std::string>> read_csv_rows(std::istream& is, std::string_view expected_header);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

// Typed accessors that raise ConfigError naming the offending field.
double get_number(const nlohmann::json& obj, const std::string& key);
double get_number_or(const nlohmann::json& obj, const std::string& key, double fallback);
Vec2 to_vec2(const nlohmann::json& value, const std::string& field);
Mat2 to_mat2(const nlohmann::json& value, const std::string& field);
Mat4 to_mat4(const nlohmann::json& value, const std::string& field);
nlohmann::json from_vec2(const Vec2& v);
nlohmann::json from_matrix(const Eigen::MatrixXd& m);

}  // namespace uwbfuse::io
