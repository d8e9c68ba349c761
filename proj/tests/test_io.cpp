#include <doctest.h>

#include <filesystem>

#include "simplexflows/io.hpp"
#include "simplexflows/sampling.hpp"

using namespace simplexflows;

TEST_SUITE_BEGIN("io");

TEST_CASE("configuration json round trip") {
  Rng rng(111);
  const Configuration config = random_k_configuration(3, rng);
  const std::string text = configuration_json(config);
  const Configuration back = parse_configuration(text);
  CHECK(back.kind() == ComplexKind::K);
  CHECK(config_distance(back.points(), config.points()) == 0.0);
  // Serialization is deterministic.
  CHECK(configuration_json(back) == text);
}

TEST_CASE("configuration parsing validates its input") {
  CHECK_THROWS(parse_configuration(R"({"kind":"Q","n":3,"points":[[0,0,0]]})"));
  CHECK_THROWS(parse_configuration(R"({"kind":"K","n":3,"points":[[0,0]]})"));
}

TEST_CASE("trajectory jsonl round trip") {
  Rng rng(112);
  const auto dir = std::filesystem::temp_directory_path() / "simplexflows_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "traj.jsonl").string();

  Trajectory traj;
  for (int k = 0; k < 5; ++k)
    traj.push(k / 4.0, random_gaussian(3, 4, rng));
  write_trajectory_jsonl(traj, path);
  const Trajectory back = read_trajectory_jsonl(path);
  REQUIRE(back.times.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(back.times[k] == traj.times[k]);
    CHECK(config_distance(back.frames[k], traj.frames[k]) == 0.0);
  }
}

TEST_CASE("obj frames for three dimensions") {
  Rng rng(113);
  const auto dir = std::filesystem::temp_directory_path() / "simplexflows_obj_test";
  std::filesystem::remove_all(dir);
  Trajectory traj;
  traj.push(0.0, random_gaussian(3, 5, rng));
  traj.push(1.0, random_gaussian(3, 5, rng));
  write_trajectory_obj(traj, dir.string());
  CHECK(std::filesystem::exists(dir / "frame_0000.obj"));
  CHECK(std::filesystem::exists(dir / "frame_0001.obj"));
}

TEST_SUITE_END();
