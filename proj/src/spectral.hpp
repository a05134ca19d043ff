#pragma once

// The main page of the discriminant resolution, the duality / division /
// C*-bundle pipeline it feeds, and the point-count identity that closes the
// loop.

#include <map>
#include <string>
#include <vector>

#include "column_engine.hpp"
#include "hg_ring.hpp"

namespace trig5::ss {

struct MainTable {
  // (column index 1..10, row q) -> weight -> multiplicity; degree = p + q
  std::map<std::pair<long, long>, std::map<long, long long>> cells;
  HGPoly total;  // Borel-Moore polynomial of the discriminant
};

// place every column at its index and check all cells against the pinned
// main page (23 classes, top class Q(17)@34)
MainTable assemble_main_table();

struct Verdict {
  std::string name;
  bool ok;
  std::string detail;
};

struct PipelineResult {
  HGPoly sigma;        // BM of the discriminant
  HGPoly x;            // cohomology of the complement
  HGPoly x_mod_gl2;    // after dividing out H^*(GL(2,C))
  HGPoly t5;           // cohomology of the moduli space
  HGPoly t5_with_hyp;  // moduli of trigonal-or-hyperelliptic curves
  WangResult wang;
  CountPoly wennink_predicted;  // q^11 + q^10 - q^8 + 1
  CountPoly wennink_computed;
  long dim_v = 18;
  std::vector<Verdict> verdicts;
  bool all_ok = false;
};

PipelineResult run_pipeline();

struct WenninkCheck {
  CountPoly computed;
  CountPoly expected;
  bool match;
  long dim_v;
};
WenninkCheck wennink_check();

HGPoly theorem_poly();      // 1 + Lt^2 + L^3 t^5 + L^11 t^12
HGPoly corollary_poly();    // 1 + Lt^2 + L^2 t^4 + L^3 t^5 + L^11 t^12
HGPoly x_mod_gl2_poly();    // the six-term quotient polynomial
CountPoly wennink_poly();   // q^11 + q^10 - q^8 + 1

}  // namespace trig5::ss
