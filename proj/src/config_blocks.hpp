#pragma once

// The lemma library: twisted and untwisted Borel-Moore polynomials of the
// configuration spaces the discriminant columns consume.  Everything here is
// either computed from cell decompositions or taken as recorded data and
// re-verified arithmetically.

#include <string>
#include <vector>

#include "derivation.hpp"
#include "group_rep.hpp"
#include "hg_ring.hpp"

namespace trig5::blocks {

// one Tate class with parity labels under named involutions
struct SignedClass {
  long weight;
  long degree;
  std::map<std::string, int> parity;  // involution name -> +1 / -1
};

using CellComplexSpec = std::vector<long>;  // affine cell dimensions

// Twisted BM polynomial of the unordered k-point configurations of a
// disjoint union of affine cells: at most one point per cell survives, so
// the result is the size-k subset sum of Q(n_i)@2n_i factors.
HGPoly bm_cell_config(const CellComplexSpec& cells, long k);

// Twisted BM polynomial of B(P^N, k): Grassmannian G(k, C^{N+1}) homology
// shifted by k(k-1) and twisted by k(k-1)/2; zero when k > N+1.
HGPoly bm_B_proj_twisted(long n, long k);

// Twisted BM of B(C*, k): Q@k and Q(1)@(k+1), with the parity of the
// tau -> 1/tau involution attached (even degree +, odd degree -).
std::vector<SignedClass> bm_B_cstar_twisted(long k);

// total minus removed along the localization sequence; classes the
// subtraction leaves negative move up one degree, and a move that lands on
// an occupied slot is refused as an ambiguous extension
HGPoly bm_strata_subtract(const HGPoly& total, const HGPoly& removed,
                          std::vector<std::string>* moved = nullptr);

// Gaussian binomial [n choose k]_q
CountPoly gaussian_binomial(long n, long k);
// ordinary (untwisted) BM polynomial of G(k, C^n)
HGPoly bm_grassmannian(long k, long n);

HGPoly bm_point();
HGPoly bm_affine(long n);        // C^n
HGPoly bm_p1();                  // P^1
HGPoly bm_p2_minus_point();      // P^2 minus a point
HGPoly bm_line_minus_points(long k);  // C minus k points

// generic configurations in P^2 minus a point reuse the unordered values
// for k = 2, 3; anything else is refused
HGPoly btilde_p2_twisted(long k);

// recorded proof inputs of the two ordered-configuration computations
HGPoly ftilde2_total_data();
HGPoly ftilde2_removed_data();
HGPoly ftilde3_total_data();
std::vector<HGPoly> ftilde3_removed_pieces_data();
// assembled results: F~(P^2 - pt, 2) and F~(P^2 - pt, 3)
HGPoly bm_ftilde2(Derivation* trace = nullptr);
HGPoly bm_ftilde3(Derivation* trace = nullptr);

struct M05Line {
  long degree;
  long weight;
  rep::VirtualCharacter s5;  // class as an S5 local system
  rep::VirtualCharacter d4;  // restricted along S5 <- S4 <- D4
};
// the three equivariant BM classes of the 5-marked genus-0 moduli space,
// written as D4 virtual characters
std::vector<M05Line> bm_M05_as_D4(Derivation* trace = nullptr);
// dimension-weighted untwisted polynomial (for point counting)
HGPoly bm_M05_poly();

HGPoly bm_PGL3(Derivation* trace = nullptr);
HGPoly cohom_PGL3();  // exterior algebra on degree 3, 5 generators
HGPoly cohom_GL2();   // exterior algebra on degree 1, 3 generators

struct ZtildeFiber {
  HGPoly full;                 // Q(2)@4 + 4Q(1)@3 + 3Q@2
  std::vector<SignedClass> involution_table;  // parities of i, j, k
  HGPoly constant_part;        // surviving class driving the constant row
  HGPoly local_system_part;    // surviving class driving the twisted row
};
// the conic-pair fiber: C^2 minus four C* lines and a point, with the
// recorded i, j, k parities, selected i-invariant and k-anti-invariant
ZtildeFiber bm_Ztilde_fiber(Derivation* trace = nullptr);

std::vector<SignedClass> involution_table_data();

}  // namespace trig5::blocks
