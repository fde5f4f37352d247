#pragma once

#include "xtalk/analysis.hpp"

#include <string>
#include <vector>

namespace xtalk {

inline constexpr const char* kFormatVersion = "xtalk-output v1";

// 17-significant-digit decimal rendering (round-trip exact, deterministic).
std::string format_real(double x);

// CSV emitters. Every document starts with the format version line and the
// resolved config echo as `#` comments, then the header row; `\n` endings.
std::string scan_csv(const std::vector<SweepRecord>& records,
                     const std::string& config_json);
std::string sweep_csv(const std::vector<SweepRecord>& records,
                      const std::string& config_json);
std::string coin_csv(const std::vector<double>& lambda_deg,
                     const std::vector<double>& p1_ideal,
                     const std::vector<double>& p1_attacked,
                     const std::string& config_json);

// Complex matrix as nested [re, im] pairs for JSON payloads.
std::string matrix_json(const CMat& m);

struct Dataset {
  Eigen::MatrixXd features;  // n x 4
  Eigen::VectorXd labels;    // +-1
};

// Strict CSV ingestion: header `f1,f2,f3,f4,label`, numeric cells, labels
// in {-1, 1}; errors name the offending row. Row order preserved.
Dataset load_dataset(const std::string& path);

enum class SvgKind { Line, Heatmap };

// Minimal standalone SVG: axes, tick labels, and either one polyline
// through (swept_value, y) points or a square heatmap of the record values
// (y = influence_norm when present, else theta). Byte-deterministic.
std::string render_svg(const std::vector<SweepRecord>& records, SvgKind kind,
                       const std::string& title,
                       const std::string& config_json);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace xtalk
