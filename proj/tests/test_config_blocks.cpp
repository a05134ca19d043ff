#include <doctest.h>

#include <random>

#include "config_blocks.hpp"
#include "helpers.hpp"

using namespace trig5;
using namespace trig5::blocks;
using testutil::bm;

TEST_CASE("cell configurations") {
  CHECK(bm_cell_config({2, 1}, 2) == bm({{3, 6, 1}}));
  CHECK(bm_cell_config({2, 1}, 3).is_zero());
  CHECK(bm_cell_config({1}, 1) == bm({{1, 2, 1}}));

  // one affine cell with two or more points carries nothing
  for (long n = 0; n <= 5; ++n)
    for (long k = 2; k <= 4; ++k) CHECK(bm_cell_config({n}, k).is_zero());
}

TEST_CASE("cell configuration euler values are elementary symmetric sums") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> ncells(1, 5);
  std::uniform_int_distribution<int> dim(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    CellComplexSpec cells;
    int r = ncells(rng);
    for (int i = 0; i < r; ++i) cells.push_back(dim(rng));
    for (long k = 1; k <= r + 1; ++k) {
      CountPoly got = euler_specialize(bm_cell_config(cells, k));
      // e_k(q^{n_1}, ..., q^{n_r}) by direct expansion
      CountPoly expect;
      std::vector<size_t> idx(k);
      if (k <= r) {
        for (long i = 0; i < k; ++i) idx[i] = i;
        while (true) {
          long s = 0;
          for (long i = 0; i < k; ++i) s += cells[idx[i]];
          expect.add_term(s, 1);
          long i = k - 1;
          while (i >= 0 && idx[i] == static_cast<size_t>(r - k + i)) --i;
          if (i < 0) break;
          ++idx[i];
          for (long j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("projective configurations through the grassmannian") {
  CHECK(bm_B_proj_twisted(1, 2) == bm({{1, 2, 1}}));
  CHECK(bm_B_proj_twisted(1, 3).is_zero());
  CHECK(bm_B_proj_twisted(2, 1) == bm({{0, 0, 1}, {1, 2, 1}, {2, 4, 1}}));

  // multiplicities are palindromic in the grading
  for (long n = 1; n <= 4; ++n)
    for (long k = 1; k <= n + 1; ++k) {
      CountPoly gb = gaussian_binomial(n + 1, k);
      if (gb.is_zero()) continue;
      long lo = gb.coeffs().begin()->first, hi = gb.coeffs().rbegin()->first;
      for (const auto& [e, c] : gb.coeffs()) CHECK(c == gb.coeff(lo + hi - e));
    }
  CHECK(gaussian_binomial(3, 1) ==
        cp_add(CountPoly::constant(1),
               cp_add(CountPoly::monomial(1, 1), CountPoly::monomial(2, 1))));
}

TEST_CASE("torus configurations carry inversion parities") {
  auto k1 = bm_B_cstar_twisted(1);
  REQUIRE(k1.size() == 2);
  CHECK(k1[0].weight == 0);
  CHECK(k1[0].degree == 1);
  CHECK(k1[0].parity.at("tau") == -1);
  CHECK(k1[1].weight == 1);
  CHECK(k1[1].degree == 2);
  CHECK(k1[1].parity.at("tau") == +1);

  auto k2 = bm_B_cstar_twisted(2);
  CHECK(k2[0].parity.at("tau") == +1);
  CHECK(k2[1].parity.at("tau") == -1);

  HGPoly p(Kind::BM);
  for (const auto& c : k1) p.add_term(c.weight, c.degree, 1);
  CHECK(euler_specialize(p) ==
        cp_add(CountPoly::monomial(1, 1), CountPoly::constant(-1)));
}

TEST_CASE("strata subtraction") {
  CHECK(bm_ftilde2() == bm({{4, 8, 1}, {3, 6, 1}}));
  CHECK(bm_ftilde3() == bm({{6, 12, 1}, {5, 11, 1}, {4, 9, 1}, {3, 8, 1}}));

  HGPoly p = bm({{2, 4, 1}, {0, 1, 3}});
  CHECK(bm_strata_subtract(p, HGPoly::zero(Kind::BM)) == p);

  // removing four lines through the origin and the origin itself from the
  // plane in one step is ambiguous: the moved point class collides
  HGPoly removed(Kind::BM);
  removed.add_term(1, 2, 4);
  removed.add_term(0, 1, 4);
  removed.add_term(0, 0, 1);
  CHECK_THROWS_AS(bm_strata_subtract(bm_affine(2), removed), Error);
  try {
    bm_strata_subtract(bm_affine(2), removed);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ambiguous);
  }
}

TEST_CASE("line minus points and the plane blocks") {
  CHECK(bm_line_minus_points(1) == bm({{1, 2, 1}, {0, 1, 1}}));
  CHECK(bm_line_minus_points(3) == bm({{1, 2, 1}, {0, 1, 3}}));
  CHECK(bm_p1() == bm({{1, 2, 1}, {0, 0, 1}}));
  CHECK(bm_p2_minus_point() == bm({{2, 4, 1}, {1, 2, 1}}));
  CHECK(btilde_p2_twisted(2) == bm_cell_config({2, 1}, 2));
  CHECK(btilde_p2_twisted(3).is_zero());
  CHECK_THROWS_AS(btilde_p2_twisted(1), Error);
}

TEST_CASE("marked moduli classes over the dihedral group") {
  auto lines = bm_M05_as_D4();
  REQUIRE(lines.size() == 3);
  using rep::VirtualCharacter;
  CHECK(lines[0].degree == 4);
  CHECK(lines[0].weight == 2);
  CHECK(lines[0].d4 == VirtualCharacter::of("D4", {{"psi1", 1}}));
  CHECK(lines[1].degree == 3);
  CHECK(lines[1].d4 ==
        VirtualCharacter::of("D4", {{"psi1", 1}, {"psi3", 1}, {"psi4", 1}, {"chi", 1}}));
  CHECK(lines[2].degree == 2);
  CHECK(lines[2].d4 == VirtualCharacter::of("D4", {{"psi2", 1}, {"psi3", 1}, {"chi", 2}}));

  CHECK(lines[0].d4.dimension() == 1);
  CHECK(lines[1].d4.dimension() == 5);
  CHECK(lines[2].d4.dimension() == 6);

  // the psi2 part lives in degree 2 only
  CHECK(rep::isotypic_multiplicity(lines[0].d4, "psi2") == 0);
  CHECK(rep::isotypic_multiplicity(lines[1].d4, "psi2") == 0);
  CHECK(rep::isotypic_multiplicity(lines[2].d4, "psi2") == 1);

  CountPoly euler = euler_specialize(bm_M05_poly());
  CountPoly expect;  // q^2 - 5q + 6
  expect.add_term(2, 1);
  expect.add_term(1, -5);
  expect.add_term(0, 6);
  CHECK(euler == expect);
}

TEST_CASE("the frame group block") {
  CHECK(bm_PGL3() == bm({{8, 16, 1}, {6, 13, 1}, {5, 11, 1}, {3, 8, 1}}));
  CountPoly e = euler_specialize(bm_PGL3());
  CountPoly expect;  // q^8 - q^6 - q^5 + q^3
  expect.add_term(8, 1);
  expect.add_term(6, -1);
  expect.add_term(5, -1);
  expect.add_term(3, 1);
  CHECK(e == expect);
  CHECK(e.evaluate(2) == 168);
}

TEST_CASE("the conic-pair fiber") {
  ZtildeFiber f = bm_Ztilde_fiber();
  CHECK(f.full == bm({{2, 4, 1}, {1, 3, 4}, {0, 2, 3}}));
  CHECK(f.constant_part == bm({{1, 3, 1}}));
  CHECK(f.local_system_part == bm({{0, 2, 1}}));
  CHECK(f.involution_table.size() == 8);

  CountPoly e = euler_specialize(f.full);
  CountPoly expect;  // q^2 - 4q + 3
  expect.add_term(2, 1);
  expect.add_term(1, -4);
  expect.add_term(0, 3);
  CHECK(e == expect);
}
