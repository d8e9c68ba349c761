// Command-line surface: classification, regularization, retractions, the
// inradius flow, group verification and frame emission.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "simplexflows/bimedian.hpp"
#include "simplexflows/group.hpp"
#include "simplexflows/io.hpp"
#include "simplexflows/lowdin.hpp"
#include "simplexflows/radon.hpp"
#include "simplexflows/retract_k.hpp"
#include "simplexflows/retract_l.hpp"
#include "simplexflows/selfcheck.hpp"
#include "simplexflows/solid_angle.hpp"

namespace sf = simplexflows;

namespace {

struct RunConfig {
  std::string input_path;
  std::string output_path;
  int samples = 64;
  uint64_t seed = 2024;
  double tol_geom = sf::Tolerances{}.geom;
  double tol_rank = sf::Tolerances{}.rank;
  bool literal_scale = false;
  int stage = 0;
  std::string mode = "simplex";
  std::string obj_dir;
  std::string word, on;
};

sf::Tolerances tolerances(const RunConfig& run) {
  sf::Tolerances tol;
  tol.geom = run.tol_geom;
  tol.rank = run.tol_rank;
  return tol;
}

std::string class_description(const sf::DegeneracyClass& cls) {
  switch (cls.kind) {
    case sf::DegeneracyKind::NonDegenerate:
      return "NonDegenerate";
    case sf::DegeneracyKind::Hyperplane:
      return "Hyperplane(apex=" + std::to_string(cls.vertex) + ")";
    case sf::DegeneracyKind::Interior:
      return "Interior(vertex=" + std::to_string(cls.vertex) + ")";
    case sf::DegeneracyKind::EdgeFace:
      return "EdgeFace(edge=" + std::to_string(cls.edge.first) + "," +
             std::to_string(cls.edge.second) + ")";
    case sf::DegeneracyKind::Boundary:
      return "Boundary(vertex=" + std::to_string(cls.vertex) + ")";
  }
  return "?";
}

int run_classify(const RunConfig& run) {
  const sf::Configuration config = sf::read_configuration(run.input_path);
  const sf::DegeneracyClass cls = sf::classify(config, tolerances(run));
  std::cout.precision(17);
  std::cout << "kind: " << (config.kind() == sf::ComplexKind::K ? "K" : "L") << '\n';
  std::cout << "class: " << class_description(cls) << '\n';
  std::cout << "margin: " << cls.margin << '\n';
  if (config.kind() == sf::ComplexKind::K) {
    const sf::Simplex simplex(config.points());
    const auto gsa = sf::greatest_solid_angle(simplex, tolerances(run));
    std::cout << "alpha: " << gsa.value << (gsa.degenerate ? " (= V)" : "") << '\n';
    const double v = sf::half_sphere_volume(config.dimension());
    if (gsa.value >= 0.5 * v)
      std::cout << "eta: " << sf::wide_face_damping_from_alpha(
                                  gsa.value, config.dimension(), true)
                << '\n';
  }
  return 0;
}

void emit(const sf::Trajectory& traj, const RunConfig& run) {
  if (!run.output_path.empty()) sf::write_trajectory_jsonl(traj, run.output_path);
  if (!run.obj_dir.empty()) sf::write_trajectory_obj(traj, run.obj_dir);
  if (run.output_path.empty() && run.obj_dir.empty())
    sf::write_trajectory_jsonl(traj, std::cout);
}

int run_regularize(const RunConfig& run) {
  const sf::Configuration config = sf::read_configuration(run.input_path);
  sf::Trajectory traj;
  const int samples = run.samples;
  if (run.mode == "flow") {
    sf::FlowOptions opts;
    opts.record_every = 1;
    const sf::FlowResult result = sf::inradius_flow(sf::Simplex(config.points()), opts);
    traj = result.trajectory;
    if (!result.converged) {
      emit(traj, run);
      std::cerr << "flow did not converge; final potential "
                << result.final_potential << '\n';
      return 3;
    }
  } else {
    for (int k = 0; k < samples; ++k) {
      const double t = static_cast<double>(k) / (samples - 1);
      if (run.mode == "bimedian") {
        traj.push(t, sf::regularize_bimedian(sf::Simplex(config.points()), t).points());
      } else if (run.mode == "lowdin") {
        const sf::Simplex s(config.points());
        sf::Matrix pts = s.points();
        pts.rightCols(config.dimension()) =
            (sf::lowdin_path(s.basis(0), t).colwise() + sf::Vector(pts.col(0))).eval();
        traj.push(t, pts);
      } else {  // simplex regularization
        const sf::LabeledSimplexPath path(config.points());
        traj.push(t, (path.at(t).colwise() + config.barycenter()).eval());
      }
    }
  }
  emit(traj, run);
  return 0;
}

int run_retract_k(const RunConfig& run) {
  const sf::Configuration config = sf::read_configuration(run.input_path);
  sf::RetractOptions opts;
  opts.literal_scale = run.literal_scale;
  opts.tol = tolerances(run);
  const sf::Trajectory traj =
      sf::retract_k_trajectory(config, run.samples, opts, true);
  emit(traj, run);
  return 0;
}

int run_retract_l(const RunConfig& run) {
  const sf::Configuration config = sf::read_configuration(run.input_path);
  sf::RetractOptions opts;
  opts.literal_scale = run.literal_scale;
  opts.tol = tolerances(run);
  const sf::Trajectory traj =
      sf::retract_l_trajectory(config, run.samples, opts, true, run.stage);
  emit(traj, run);
  return 0;
}

int run_group_verify() {
  const sf::VerificationReport report = sf::verify_group_suite();
  for (const auto& item : report.items) {
    std::cout << (item.pass ? "PASS" : "FAIL") << "  " << item.name;
    if (!item.detail.empty() && !item.pass) std::cout << "  [" << item.detail << "]";
    std::cout << '\n';
  }
  std::cout << (report.all_pass() ? "all relations verified"
                                  : "verification FAILED")
            << '\n';
  return report.all_pass() ? 0 : 2;
}

int run_group_act(const RunConfig& run) {
  const sf::GroupWord word = sf::GroupWord::parse(run.word);
  const sf::FreeWord target = sf::FreeWord::parse(run.on);
  const sf::GroupWord y_form = word.alphabet() == sf::WordAlphabet::Y
                                   ? word
                                   : sf::translate_to_y(word);
  std::cout << sf::apply_word(y_form, target).str() << '\n';
  return 0;
}

int run_selfcheck(const RunConfig& run) {
  sf::SelfcheckOptions opts;
  opts.seed = run.seed;
  const auto results = sf::run_selfcheck(opts);
  std::cout << sf::format_selfcheck(results);
  for (const auto& r : results)
    if (!r.pass) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplexflows: equivariant simplex regularization, retractions "
               "of skeleton configuration spaces onto pyramids, and motion "
               "group verification"};
  app.require_subcommand(1);
  RunConfig run;

  auto add_io = [&run](CLI::App* cmd, bool needs_input = true) {
    auto* in = cmd->add_option("--in", run.input_path, "input configuration JSON");
    if (needs_input) in->required();
    cmd->add_option("--out", run.output_path, "output trajectory JSONL");
    cmd->add_option("--samples", run.samples, "number of time samples")
        ->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--seed", run.seed, "seed for randomized suites");
    cmd->add_option("--tol-geom", run.tol_geom, "geometric membership tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-rank", run.tol_rank, "relative rank tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--literal-scale", run.literal_scale,
                  "use the literal perpendicular-scale reading");
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify a configuration");
  add_io(classify_cmd);

  auto* regularize_cmd =
      app.add_subcommand("regularize", "regularization trajectories");
  add_io(regularize_cmd);
  regularize_cmd
      ->add_option("--mode", run.mode, "lowdin | simplex | bimedian | flow")
      ->check(CLI::IsMember({"lowdin", "simplex", "bimedian", "flow"}));
  regularize_cmd->add_option("--obj-dir", run.obj_dir, "OBJ frame directory (n=3)");

  auto* retract_k_cmd =
      app.add_subcommand("retract-k", "retract a kind-K configuration");
  add_io(retract_k_cmd);
  retract_k_cmd->add_option("--obj-dir", run.obj_dir, "OBJ frame directory (n=3)");

  auto* retract_l_cmd =
      app.add_subcommand("retract-l", "retract a kind-L configuration");
  add_io(retract_l_cmd);
  retract_l_cmd->add_option("--stage", run.stage, "isolate a stage (1, 2 or 3)")
      ->check(CLI::Range(0, 3));
  retract_l_cmd->add_option("--obj-dir", run.obj_dir, "OBJ frame directory (n=3)");

  auto* group_cmd = app.add_subcommand("group", "motion group verification");
  auto* verify_cmd = group_cmd->add_subcommand("verify", "verify all relations");
  auto* act_cmd = group_cmd->add_subcommand("act", "act on a free-group word");
  act_cmd->add_option("--word", run.word, "group word, e.g. \"y1 y2^-1\"")->required();
  act_cmd->add_option("--on", run.on, "free-group word, e.g. \"a2\"")->required();
  group_cmd->require_subcommand(1);

  auto* selfcheck_cmd =
      app.add_subcommand("selfcheck", "run the full property suite");
  selfcheck_cmd->add_option("--seed", run.seed, "seed for randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(run);
    if (regularize_cmd->parsed()) return run_regularize(run);
    if (retract_k_cmd->parsed()) return run_retract_k(run);
    if (retract_l_cmd->parsed()) return run_retract_l(run);
    if (group_cmd->parsed())
      return verify_cmd->parsed() ? run_group_verify() : run_group_act(run);
    if (selfcheck_cmd->parsed()) return run_selfcheck(run);
  } catch (const sf::EmbeddingViolated& e) {
    std::cerr << "embedding violated at t = " << e.t << ": " << e.what() << '\n';
    return 2;
  } catch (const sf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
