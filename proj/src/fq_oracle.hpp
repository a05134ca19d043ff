#pragma once

// Brute-force point counts over small prime fields, checked against the
// Euler specializations of the symbolic polynomials.

#include <string>
#include <vector>

#include "hg_ring.hpp"

namespace trig5::fq {

struct CountResult {
  std::string space;
  int q;
  long long count;      // exact enumeration
  long long predicted;  // Euler specialization at q
  bool match;
};

// Ftilde2, Ftilde3, M05, YL, PGL3, Ztilde (odd q only), Grass(1,3), Grass(2,3)
std::vector<std::string> space_ids();
bool space_defined_at(const std::string& name, int q);

CountResult count_space(const std::string& name, int q);
std::vector<CountResult> compare_euler(const std::vector<std::string>& names,
                                       const std::vector<int>& qs);

// the polynomial whose Euler specialization predicts the count
HGPoly predicted_poly(const std::string& name);

}  // namespace trig5::fq
