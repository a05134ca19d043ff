#include "derivation.hpp"

namespace trig5 {

nlohmann::json derivation_to_json(const Derivation& d) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : d.steps)
    steps.push_back({{"op", s.op}, {"inputs", s.inputs}, {"output", s.output}, {"ref", s.ref}});
  return nlohmann::json{{"id", d.id}, {"steps", steps}, {"final", d.final_value}};
}

}  // namespace trig5
