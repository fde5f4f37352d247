#include "xtalk/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace xtalk {

namespace {

std::string format_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string format_px(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string csv_preamble(const std::string& config_json) {
  std::string s;
  s += std::string("# ") + kFormatVersion + "\n";
  s += "# config " + config_json + "\n";
  return s;
}

std::pair<std::string, std::string> split_config_id(const std::string& id) {
  const auto pos = id.find('-');
  if (pos == std::string::npos) return {id, ""};
  return {id.substr(0, pos), id.substr(pos + 1)};
}

double record_y(const SweepRecord& r) {
  if (r.influence_norm) return *r.influence_norm;
  if (r.theta) return *r.theta;
  return 0.0;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string scan_csv(const std::vector<SweepRecord>& records,
                     const std::string& config_json) {
  std::string s = csv_preamble(config_json);
  s += "coupling,shape,influence_norm\n";
  for (const SweepRecord& r : records) {
    const auto [coupling, shape] = split_config_id(r.config_id);
    s += coupling + "," + shape + "," +
         format_real(r.influence_norm.value_or(0.0)) + "\n";
  }
  return s;
}

std::string sweep_csv(const std::vector<SweepRecord>& records,
                      const std::string& config_json) {
  std::string s = csv_preamble(config_json);
  s += "swept_name,swept_value,theta,loss,converged\n";
  for (const SweepRecord& r : records) {
    s += r.swept_name + "," + format_real(r.swept_value) + ",";
    s += (r.theta ? format_real(*r.theta) : std::string()) + ",";
    s += (r.loss ? format_real(*r.loss) : std::string()) + ",";
    s += r.converged ? "1" : "0";
    s += "\n";
  }
  return s;
}

std::string coin_csv(const std::vector<double>& lambda_deg,
                     const std::vector<double>& p1_ideal,
                     const std::vector<double>& p1_attacked,
                     const std::string& config_json) {
  std::string s = csv_preamble(config_json);
  s += "lambda_deg,p1_ideal,p1_attacked\n";
  for (std::size_t i = 0; i < lambda_deg.size(); ++i)
    s += format_real(lambda_deg[i]) + "," + format_real(p1_ideal[i]) + "," +
         format_real(p1_attacked[i]) + "\n";
  return s;
}

std::string matrix_json(const CMat& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += "[" + format_real(m(i, j).real()) + "," +
           format_real(m(i, j).imag()) + "]";
    }
    s += "]";
  }
  s += "]";
  return s;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("load_dataset: cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    throw ValidationError("load_dataset: empty file " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "f1,f2,f3,f4,label")
    throw ValidationError("load_dataset: bad header in " + path +
                          " (expected f1,f2,f3,f4,label)");

  std::vector<std::array<double, 5>> rows;
  int row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::array<double, 5> vals{};
    std::istringstream ls(line);
    std::string cell;
    for (int k = 0; k < 5; ++k) {
      if (!std::getline(ls, cell, ','))
        throw ValidationError("load_dataset: row " + std::to_string(row_no) +
                              " has fewer than 5 cells");
      std::size_t used = 0;
      try {
        vals[k] = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size() || cell.empty())
        throw ValidationError("load_dataset: row " + std::to_string(row_no) +
                              " has a non-numeric cell: \"" + cell + "\"");
    }
    if (std::getline(ls, cell, ','))
      throw ValidationError("load_dataset: row " + std::to_string(row_no) +
                            " has more than 5 cells");
    if (vals[4] != 1.0 && vals[4] != -1.0)
      throw ValidationError("load_dataset: row " + std::to_string(row_no) +
                            " label must be -1 or 1");
    rows.push_back(vals);
  }
  if (rows.empty())
    throw ValidationError("load_dataset: no data rows in " + path);

  Dataset d;
  d.features.resize(static_cast<Eigen::Index>(rows.size()), 4);
  d.labels.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < 4; ++j) d.features(i, j) = rows[i][j];
    d.labels(i) = rows[i][4];
  }
  return d;
}

std::string render_svg(const std::vector<SweepRecord>& records, SvgKind kind,
                       const std::string& title,
                       const std::string& config_json) {
  if (records.empty()) throw ValidationError("render_svg: no records");

  constexpr double kW = 640, kH = 480;
  constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;
  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
       "height=\"480\" viewBox=\"0 0 640 480\">\n";
  s += std::string("<!-- ") + kFormatVersion + " -->\n";
  s += "<!-- config " + config_json + " -->\n";
  s += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"14\">" + title + "</text>\n";

  if (kind == SvgKind::Heatmap) {
    const int side =
        static_cast<int>(std::lround(std::sqrt(double(records.size()))));
    if (side * side != static_cast<int>(records.size()))
      throw ValidationError("render_svg: heatmap needs a square record count");
    double lo = record_y(records[0]), hi = lo;
    for (const SweepRecord& r : records) {
      lo = std::min(lo, record_y(r));
      hi = std::max(hi, record_y(r));
    }
    const double span = (hi > lo) ? hi - lo : 1.0;
    const double cw = pw / side, chh = ph / side;
    for (int i = 0; i < static_cast<int>(records.size()); ++i) {
      const int row = i / side, col = i % side;
      const double v = (record_y(records[i]) - lo) / span;
      const int g = 255 - static_cast<int>(std::lround(v * 255.0));
      s += "<rect x=\"" + format_px(kLeft + col * cw) + "\" y=\"" +
           format_px(kTop + row * chh) + "\" width=\"" + format_px(cw) +
           "\" height=\"" + format_px(chh) + "\" fill=\"rgb(" +
           std::to_string(g) + "," + std::to_string(g) + "," +
           std::to_string(g) + ")\"/>\n";
    }
    s += "</svg>\n";
    return s;
  }

  double xlo = records[0].swept_value, xhi = xlo;
  double ylo = record_y(records[0]), yhi = ylo;
  for (const SweepRecord& r : records) {
    xlo = std::min(xlo, r.swept_value);
    xhi = std::max(xhi, r.swept_value);
    ylo = std::min(ylo, record_y(r));
    yhi = std::max(yhi, record_y(r));
  }
  if (xhi <= xlo) xhi = xlo + 1.0;
  if (yhi <= ylo) yhi = ylo + 1.0;

  const auto px = [&](double x) {
    return kLeft + (x - xlo) / (xhi - xlo) * pw;
  };
  const auto py = [&](double y) {
    return kTop + ph - (y - ylo) / (yhi - ylo) * ph;
  };

  s += "<line x1=\"" + format_px(kLeft) + "\" y1=\"" + format_px(kTop + ph) +
       "\" x2=\"" + format_px(kLeft + pw) + "\" y2=\"" + format_px(kTop + ph) +
       "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + format_px(kLeft) + "\" y1=\"" + format_px(kTop) +
       "\" x2=\"" + format_px(kLeft) + "\" y2=\"" + format_px(kTop + ph) +
       "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double fx = xlo + (xhi - xlo) * k / 4.0;
    const double fy = ylo + (yhi - ylo) * k / 4.0;
    s += "<text x=\"" + format_px(px(fx)) + "\" y=\"" +
         format_px(kTop + ph + 18) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"10\">" + format_short(fx) + "</text>\n";
    s += "<text x=\"" + format_px(kLeft - 6) + "\" y=\"" +
         format_px(py(fy) + 3) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"10\">" + format_short(fy) + "</text>\n";
  }

  s += "<polyline fill=\"none\" stroke=\"#1f6fb0\" stroke-width=\"1.5\" "
       "points=\"";
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) s += " ";
    s += format_px(px(records[i].swept_value)) + "," +
         format_px(py(record_y(records[i])));
  }
  s += "\"/>\n</svg>\n";
  return s;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  out << content;
  if (!out) throw ValidationError("write failed: " + path);
}

}  // namespace xtalk
