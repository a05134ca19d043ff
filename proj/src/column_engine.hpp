#pragma once

// Borel-Moore polynomials of the discriminant columns A..M, the combined
// column I+J, and the triviality derivations for the remaining singular
// configurations 42..59.

#include <map>
#include <string>
#include <vector>

#include "config_blocks.hpp"
#include "derivation.hpp"
#include "hg_ring.hpp"

namespace trig5::columns {

struct ColumnSpec {
  std::string id;
  long index;      // 1-based position in the main page (A=1 .. M=10)
  long d;          // complex dimension of the vector-bundle factor
  long m;          // dimension of the open simplex factor
  std::string base_desc;
};

const std::vector<ColumnSpec>& column_specs();
const ColumnSpec& column_spec(const std::string& id);

// untwisted or twisted base polynomial of one of the simple columns A..H
HGPoly column_base(const std::string& id);

HGPoly column_simple(const std::string& id, Derivation* trace = nullptr);
HGPoly column_IJ(Derivation* trace = nullptr);
HGPoly column_L(Derivation* trace = nullptr);
HGPoly column_M(Derivation* trace = nullptr);

// dispatch over "A".."H", "IJ", "L", "M"
HGPoly column_value(const std::string& id, Derivation* trace = nullptr);
std::vector<std::string> column_ids();

// the cone page: main-page columns unshifted by their vector-bundle factor
struct ConePage {
  // (column index, row) -> weight -> multiplicity
  std::map<std::pair<long, long>, std::map<long, long long>> cells;
  std::vector<std::string> cancelled;
  HGPoly result;
};
ConePage cone_page();

// first-quadrant solve of a fibration over the projective plane with the
// recorded differentials asserted to be isomorphisms
struct FibrationKill {
  long p, q, weight;  // source cell; target is (p-2, q+1), same weight
};
HGPoly solve_p2_fibration(const HGPoly& total, const std::vector<FibrationKill>& kills);

// two-row page cancellation used by the appendix derivations: every entry
// must die along one of the recorded differentials
struct PageEntry {
  long p, q, weight;
  long long mult;
};
void cancel_page(std::vector<PageEntry> entries, const std::vector<FibrationKill>& kills);

// reduction of one recorded configuration to the trivial polynomial;
// 47 and 48 route through the I+J derivation, 55 is the nontrivial column L
Derivation appendix_check(int config);
std::vector<int> appendix_configs();  // the fifteen appendix reductions

// re-execute every computable step of a trace; true iff all outputs match
bool replay(const Derivation& d);

}  // namespace trig5::columns
