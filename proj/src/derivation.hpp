#pragma once

// Replayable derivation traces: each step records an operation id, its
// inputs and its output.  Replaying a trace re-executes every computable
// step and demands bit-identical outputs; steps tagged "data" are the
// geometric inputs the engine takes on record.

#include <string>
#include <vector>

#include <json.hpp>

#include "hg_ring.hpp"

namespace trig5 {

struct Step {
  std::string op;
  nlohmann::json inputs;
  nlohmann::json output;
  std::string ref;  // where the step comes from, in the tool's own vocabulary
};

struct Derivation {
  std::string id;
  std::vector<Step> steps;
  nlohmann::json final_value;

  void add(const std::string& op, nlohmann::json inputs, nlohmann::json output,
           const std::string& ref) {
    steps.push_back(Step{op, std::move(inputs), std::move(output), ref});
  }
};

nlohmann::json derivation_to_json(const Derivation& d);

}  // namespace trig5
