#include "simplexflows/io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace simplexflows {

using nlohmann::json;

namespace {

json points_to_json(const Matrix& pts) {
  json out = json::array();
  for (Index j = 0; j < pts.cols(); ++j) {
    json point = json::array();
    for (Index i = 0; i < pts.rows(); ++i) point.push_back(pts(i, j));
    out.push_back(std::move(point));
  }
  return out;
}

Matrix points_from_json(const json& arr, Index n) {
  if (!arr.is_array() || arr.empty())
    throw DomainError("io: \"points\" must be a nonempty array");
  Matrix pts(n, static_cast<Index>(arr.size()));
  for (Index j = 0; j < pts.cols(); ++j) {
    const json& point = arr[j];
    if (!point.is_array() || static_cast<Index>(point.size()) != n)
      throw DomainError("io: each point must have n coordinates");
    for (Index i = 0; i < n; ++i) pts(i, j) = point[i].get<double>();
  }
  return pts;
}

}  // namespace

Configuration parse_configuration(const std::string& json_text) {
  const json doc = json::parse(json_text);
  const std::string kind_text = doc.at("kind").get<std::string>();
  if (kind_text != "K" && kind_text != "L")
    throw DomainError("io: \"kind\" must be \"K\" or \"L\"");
  const int n = doc.at("n").get<int>();
  const ComplexKind kind = kind_text == "K" ? ComplexKind::K : ComplexKind::L;
  return Configuration(kind, points_from_json(doc.at("points"), n));
}

Configuration read_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io: cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_configuration(buffer.str());
}

std::string configuration_json(const Configuration& config) {
  json doc;
  doc["kind"] = config.kind() == ComplexKind::K ? "K" : "L";
  doc["n"] = config.dimension();
  doc["points"] = points_to_json(config.points());
  return doc.dump();
}

void write_configuration(const Configuration& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("io: cannot open " + path);
  out << configuration_json(config) << '\n';
}

void write_trajectory_jsonl(const Trajectory& trajectory, std::ostream& out) {
  for (size_t k = 0; k < trajectory.times.size(); ++k) {
    json record;
    record["t"] = trajectory.times[k];
    record["points"] = points_to_json(trajectory.frames[k]);
    out << record.dump() << '\n';
  }
}

void write_trajectory_jsonl(const Trajectory& trajectory, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("io: cannot open " + path);
  write_trajectory_jsonl(trajectory, out);
}

Trajectory read_trajectory_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io: cannot open " + path);
  Trajectory traj;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json record = json::parse(line);
    const json& pts = record.at("points");
    const Index n = static_cast<Index>(pts.at(0).size());
    traj.push(record.at("t").get<double>(), points_from_json(pts, n));
  }
  return traj;
}

void write_trajectory_obj(const Trajectory& trajectory, const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  for (size_t k = 0; k < trajectory.frames.size(); ++k) {
    const Matrix& pts = trajectory.frames[k];
    if (pts.rows() != 3)
      throw DimensionError("io: OBJ frames are only emitted for n = 3");
    std::ostringstream name;
    name << "frame_" << std::setw(4) << std::setfill('0') << k << ".obj";
    std::ofstream out(fs::path(directory) / name.str());
    out << std::setprecision(17);
    for (Index j = 0; j < pts.cols(); ++j)
      out << "v " << pts(0, j) << ' ' << pts(1, j) << ' ' << pts(2, j) << '\n';
    for (Index a = 0; a < pts.cols(); ++a)
      for (Index b = a + 1; b < pts.cols(); ++b)
        out << "l " << a + 1 << ' ' << b + 1 << '\n';
  }
}

}  // namespace simplexflows
