#pragma once
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kinetic/diagnostics.hpp"
#include "kinetic/expansion.hpp"
#include "kinetic/kinetic_solver.hpp"

namespace kin {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Task { Milne, Convergence, Identities };

struct EvolutionConfig {
  bool enabled = false;
  double t_final = 0.5;
  double dt = 0.02;
  double ramp_tau = 0.2;  // wall data scaled by 1 - exp(-(t / ramp_tau)^2)
  bool well_prepared = true;
  int fluid_substeps = 4;
};

struct GateConfig {
  double min_slope = 1.4;
  double min_r2 = 0.98;
  double max_xnorm_ratio = 2.0;
  double conservation_factor = 10.0;  // times tol_kin
  double cross_factor = 5.0;          // times tol_kin
  double fluid_invariant = 1e-9;
  double scaling_spread = 3.0;  // max / min of each eps-rescaled source norm
  double min_flux_rate = 0.8;   // fitted order of the layer flux defect
};

struct ScenarioConfig {
  std::string name, description;
  Task task = Task::Convergence;
  unsigned seed = 1;
  GridSpec grid;
  CollisionOptions collision;
  MilneMesh milne;
  LayerOptions layer;
  BoundaryFamily data;
  int fluid_intervals = 200;
  double cells_per_eps = 20.0;
  std::vector<double> eps{0.1, 0.05, 0.025};
  EvolutionConfig evolution;
  bool remainder = true;
  KineticOptions kinetic;  // log pointer is never read from config
  GateConfig gates;
  int probe_samples = 500;
  std::string output_dir = "out";
};

// unknown keys and type mismatches are errors naming the field; syntax errors name the line
ScenarioConfig parse_config(const std::string& text, const std::string& source = "<config>");
ScenarioConfig load_config(const std::string& path);
nlohmann::json to_json(const ScenarioConfig& c);
std::string config_hash(const ScenarioConfig& c);

struct Preset {
  std::string name, description;
  ScenarioConfig config;
};
const std::vector<Preset>& presets();  // fixed order
const Preset& find_preset(const std::string& name);

// everything that does not depend on eps
struct Context {
  ScenarioConfig cfg;
  std::shared_ptr<const CollisionOperator> op;
  std::shared_ptr<const MilneSolver> milne;
  TransportCoefficients coef;
  std::array<Vec, 2> face, lab;  // wall data in face and lab frames
  WallMatching match;
  const VelocityGrid& grid() const { return *op->grid; }
};
Context make_context(const ScenarioConfig& cfg);

struct SteadyPoint {
  double eps = 0.0;
  KineticMesh mesh;
  FluidState first;
  SecondOrderState second;
  ExpansionBundle bundle;
  RemainderData data;
  KineticSolution full;
  std::optional<KineticSolution> rem;
  double error = 0.0;        // || mu^-1/2 F - mu^1/2 - eps f1 ||
  double error_layer = 0.0;  // same minus the layer and eps^2 f2: eps ||R||
  double cross = 0.0;        // || R from the remainder solve - (g - a) ||
  double flux_defect = 0.0;
  double s1 = 0.0, h = 0.0, s5 = 0.0;
  double min_F = 0.0;
  NormReport xnorm;
  ConservationReport cons;
};
SteadyPoint run_steady_point(const Context& ctx, double eps);

struct UnsteadyPoint {
  double eps = 0.0;
  KineticMesh mesh;
  FluidHistory fluid;
  KineticSolution full;
  std::optional<KineticSolution> rem;
  double error = 0.0, error_layer = 0.0, cross = 0.0;
  double max_conservation = 0.0;
  double fluid_invariant = 0.0;
  NormReport xnorm;
};
double ramp(const EvolutionConfig& e, double t);
UnsteadyPoint run_unsteady_point(const Context& ctx, double eps);

}  // namespace kin
