#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "kinetic/scenario.hpp"

namespace kin {

// one acceptance gate; criterion is the number in the acceptance list (0 = auxiliary)
struct Gate {
  std::string name;
  int criterion = 0;
  bool pass = false;
  double value = 0.0, threshold = 0.0;
  std::string detail;
};

struct RunOptions {
  std::string output_dir;    // overrides cfg.output_dir when non-empty
  int threads = 1;           // eps points run concurrently up to this many
  bool write_artifacts = true;
  std::ostream* progress = nullptr;  // short human-readable lines
};

struct RunReport {
  std::string config_hash;
  std::vector<Gate> gates;
  nlohmann::json summary;
  bool passed() const;
};

// Milne -> fluid -> expansion -> kinetic solves -> diagnostics, per cfg.task
RunReport run_scenario(const ScenarioConfig& cfg, const RunOptions& opt = {});

}  // namespace kin
