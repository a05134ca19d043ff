#include "config_blocks.hpp"

#include <algorithm>

namespace trig5::blocks {

HGPoly bm_cell_config(const CellComplexSpec& cells, long k) {
  if (k < 1) throw Error(Errc::domain, "bm_cell_config: k must be >= 1");
  for (long n : cells)
    if (n < 0) throw Error(Errc::domain, "bm_cell_config: negative cell dimension");
  // two points in one affine cell kill the twisted homology, so a subset of
  // cells receives one point each
  HGPoly r = HGPoly::zero(Kind::BM);
  const size_t m = cells.size();
  if (k > static_cast<long>(m)) return r;
  std::vector<size_t> idx(k);
  for (long i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    long wsum = 0;
    for (long i = 0; i < k; ++i) wsum += cells[idx[i]];
    r.add_term(wsum, 2 * wsum, 1);
    long i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (long j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    // unreachable cell overflow guarded by the loop bound above
  }
  return r;
}

CountPoly gaussian_binomial(long n, long k) {
  if (k < 0 || k > n) return CountPoly();
  // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q
  std::vector<std::vector<CountPoly>> gb(n + 1, std::vector<CountPoly>(k + 1));
  for (long i = 0; i <= n; ++i) gb[i][0] = CountPoly::constant(1);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= std::min(i, k); ++j) {
      CountPoly t = (j == i) ? CountPoly() : cp_mul(CountPoly::monomial(j, 1), gb[i - 1][j]);
      gb[i][j] = (j <= i - 1) ? cp_add(gb[i - 1][j - 1], t) : gb[i - 1][j - 1];
    }
  return gb[n][k];
}

HGPoly bm_grassmannian(long k, long n) {
  CountPoly gb = gaussian_binomial(n, k);
  HGPoly r = HGPoly::zero(Kind::BM);
  for (const auto& [j, c] : gb.coeffs()) r.add_term(j, 2 * j, c);
  return r;
}

HGPoly bm_B_proj_twisted(long n, long k) {
  if (n < 0 || k < 1) throw Error(Errc::domain, "bm_B_proj_twisted: need N >= 0, k >= 1");
  if (k > n + 1) return HGPoly::zero(Kind::BM);
  const long shift = k * (k - 1);
  HGPoly r = HGPoly::zero(Kind::BM);
  CountPoly gb = gaussian_binomial(n + 1, k);
  for (const auto& [j, c] : gb.coeffs()) r.add_term(j + shift / 2, 2 * j + shift, c);
  return r;
}

std::vector<SignedClass> bm_B_cstar_twisted(long k) {
  if (k < 1) throw Error(Errc::domain, "bm_B_cstar_twisted: k must be >= 1");
  auto parity = [](long degree) { return degree % 2 == 0 ? +1 : -1; };
  return {SignedClass{0, k, {{"tau", parity(k)}}},
          SignedClass{1, k + 1, {{"tau", parity(k + 1)}}}};
}

HGPoly bm_strata_subtract(const HGPoly& total, const HGPoly& removed,
                          std::vector<std::string>* moved) {
  if (total.kind() != Kind::BM || removed.kind() != Kind::BM)
    throw Error(Errc::kind_mismatch, "bm_strata_subtract: both inputs must be Borel-Moore");
  HGPoly diff = hg_sub(total, removed);
  HGPoly r = HGPoly::zero(Kind::BM);
  std::vector<std::string> collisions;
  for (const auto& [key, m] : diff.terms()) {
    auto [d, w] = key;
    if (m > 0) {
      r.add_term(w, d, m);
    } else {
      // unmatched removed classes re-enter one degree up via the boundary map
      if (diff.mult(w, d + 1) != 0)
        collisions.push_back("Q(" + std::to_string(w) + ")@" + std::to_string(d) + " -> @" +
                             std::to_string(d + 1));
      r.add_term(w, d + 1, -m);
      if (moved)
        moved->push_back(std::to_string(-m) + "*Q(" + std::to_string(w) + ")@" +
                         std::to_string(d) + "->" + std::to_string(d + 1));
    }
  }
  if (!collisions.empty()) {
    std::string msg = "bm_strata_subtract: ambiguous extension, colliding slots:";
    for (const auto& c : collisions) msg += " " + c;
    throw Error(Errc::ambiguous, msg);
  }
  return r;
}

HGPoly bm_point() { return HGPoly::term(Kind::BM, 0, 0, 1); }

HGPoly bm_affine(long n) { return HGPoly::term(Kind::BM, n, 2 * n, 1); }

HGPoly bm_p1() {
  HGPoly p = bm_point();
  p.add_term(1, 2, 1);
  return p;
}

HGPoly bm_p2_minus_point() {
  // cells C^2 and C
  HGPoly p = bm_affine(2);
  p.add_term(1, 2, 1);
  return p;
}

HGPoly bm_line_minus_points(long k) {
  return bm_strata_subtract(bm_affine(1), hg_scale(bm_point(), k));
}

HGPoly btilde_p2_twisted(long k) {
  if (k != 2 && k != 3)
    throw Error(Errc::domain,
                "btilde_p2_twisted: only k = 2, 3 carry the recorded identification");
  return bm_cell_config({2, 1}, k);
}

HGPoly ftilde2_total_data() {
  // ordered pairs in P^2 minus a point
  HGPoly p(Kind::BM);
  p.add_term(4, 8, 1);
  p.add_term(3, 6, 2);
  p.add_term(1, 3, 1);
  return p;
}

HGPoly ftilde2_removed_data() {
  // pairs on one line of the ruling: F(C,2)-bundle over P^1
  HGPoly p(Kind::BM);
  p.add_term(3, 6, 1);
  p.add_term(1, 3, 1);
  return p;
}

HGPoly ftilde3_total_data() {
  HGPoly p(Kind::BM);
  p.add_term(6, 12, 1);
  p.add_term(5, 10, 3);
  p.add_term(3, 7, 5);
  p.add_term(2, 5, 1);
  p.add_term(1, 4, 2);
  return p;
}

std::vector<HGPoly> ftilde3_removed_pieces_data() {
  HGPoly collinear_off_ruling(Kind::BM);  // triples on a line avoiding the center
  collinear_off_ruling.add_term(5, 10, 1);
  collinear_off_ruling.add_term(3, 7, 1);
  HGPoly collinear_on_ruling(Kind::BM);  // triples on one line of the ruling
  collinear_on_ruling.add_term(4, 8, 1);
  collinear_on_ruling.add_term(3, 7, 2);
  collinear_on_ruling.add_term(2, 5, 1);
  collinear_on_ruling.add_term(1, 4, 2);
  HGPoly two_on_ruling(Kind::BM);  // exactly two points share a ruling line
  two_on_ruling.add_term(5, 10, 3);
  two_on_ruling.add_term(3, 7, 3);
  return {collinear_off_ruling, collinear_on_ruling, two_on_ruling};
}

HGPoly bm_ftilde2(Derivation* trace) {
  HGPoly total = ftilde2_total_data();
  HGPoly removed = ftilde2_removed_data();
  std::vector<std::string> moved;
  HGPoly r = bm_strata_subtract(total, removed, &moved);
  if (trace) {
    trace->add("data", {{"name", "ordered pairs, center removed"}}, hg_to_json(total),
               "lemma 2.4 input");
    trace->add("data", {{"name", "pairs sharing a ruling line"}}, hg_to_json(removed),
               "lemma 2.4 input");
    trace->add("bm_strata_subtract", {{"total", hg_to_json(total)}, {"removed", hg_to_json(removed)}},
               hg_to_json(r), "lemma 2.4");
  }
  return r;
}

HGPoly bm_ftilde3(Derivation* trace) {
  HGPoly total = ftilde3_total_data();
  auto pieces = ftilde3_removed_pieces_data();
  HGPoly removed = HGPoly::zero(Kind::BM);
  for (const auto& p : pieces) removed = hg_add(removed, p);
  std::vector<std::string> moved;
  HGPoly r = bm_strata_subtract(total, removed, &moved);
  if (trace) {
    trace->add("data", {{"name", "ordered triples, center removed"}}, hg_to_json(total),
               "lemma 2.5 input");
    trace->add("data", {{"name", "degenerate triples, three disjoint pieces"}},
               nlohmann::json{hg_to_json(pieces[0]), hg_to_json(pieces[1]), hg_to_json(pieces[2])},
               "lemma 2.5 input");
    trace->add("bm_strata_subtract", {{"total", hg_to_json(total)}, {"removed", hg_to_json(removed)}},
               hg_to_json(r), "lemma 2.5");
  }
  return r;
}

std::vector<M05Line> bm_M05_as_D4(Derivation* trace) {
  using rep::VirtualCharacter;
  std::vector<M05Line> lines;
  lines.push_back({4, 2, VirtualCharacter::of("S5", {{"S_5", 1}}), {}});
  lines.push_back({3, 1, VirtualCharacter::of("S5", {{"S_{3,2}", 1}}), {}});
  lines.push_back({2, 0, VirtualCharacter::of("S5", {{"S_{3,1^2}", 1}}), {}});
  for (auto& line : lines) {
    VirtualCharacter s4 = rep::restrict_character(line.s5, "S4->S5");
    line.d4 = rep::restrict_character(s4, "D4->S4");
    if (line.d4.dimension() != line.s5.dimension())
      throw Error(Errc::mismatch, "bm_M05_as_D4: restriction changed the dimension");
    if (trace) {
      trace->add("restrict_chain",
                 {{"character", rep::vchar_to_json(line.s5)}, {"degree", line.degree}},
                 rep::vchar_to_json(line.d4), "branching rules, D4 in S4 in S5");
    }
  }
  return lines;
}

HGPoly bm_M05_poly() {
  HGPoly p(Kind::BM);
  for (const auto& line : bm_M05_as_D4()) p.add_term(line.weight, line.degree, line.d4.dimension());
  return p;
}

HGPoly cohom_PGL3() {
  HGPoly a = HGPoly::one(Kind::Cohom);
  a.add_term(-2, 3, 1);
  HGPoly b = HGPoly::one(Kind::Cohom);
  b.add_term(-3, 5, 1);
  return hg_mul(a, b);
}

HGPoly cohom_GL2() {
  HGPoly a = HGPoly::one(Kind::Cohom);
  a.add_term(-1, 1, 1);
  HGPoly b = HGPoly::one(Kind::Cohom);
  b.add_term(-2, 3, 1);
  return hg_mul(a, b);
}

HGPoly bm_PGL3(Derivation* trace) {
  HGPoly cohom = cohom_PGL3();
  HGPoly r = cohomology_to_bm(cohom, 8);
  if (trace) {
    trace->add("data", {{"name", "exterior algebra on degree 3 and 5 generators"}},
               hg_to_json(cohom), "cohomology of PGL(3,C)");
    trace->add("cohomology_to_bm", {{"poly", hg_to_json(cohom)}, {"n", 8}}, hg_to_json(r),
               "duality, complex dimension 8");
  }
  return r;
}

std::vector<SignedClass> involution_table_data() {
  // parities of the involutions i (swap the conics), j (swap the tangency
  // points), k (swap one conic's intersection pair)
  return {
      SignedClass{2, 4, {{"i", +1}, {"j", +1}, {"k", +1}}},
      SignedClass{1, 3, {{"i", +1}, {"j", +1}, {"k", +1}}},
      SignedClass{1, 3, {{"i", +1}, {"j", +1}, {"k", -1}}},
      SignedClass{1, 3, {{"i", +1}, {"j", -1}, {"k", +1}}},
      SignedClass{1, 3, {{"i", -1}, {"j", -1}, {"k", +1}}},
      SignedClass{0, 2, {{"i", +1}, {"j", -1}, {"k", +1}}},
      SignedClass{0, 2, {{"i", +1}, {"j", -1}, {"k", -1}}},
      SignedClass{0, 2, {{"i", -1}, {"j", +1}, {"k", +1}}},
  };
}

static nlohmann::json signed_classes_json(const std::vector<SignedClass>& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cs) {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [name, sgn] : c.parity) p[name] = sgn;
    arr.push_back({{"weight", c.weight}, {"degree", c.degree}, {"parity", p}});
  }
  return arr;
}

ZtildeFiber bm_Ztilde_fiber(Derivation* trace) {
  // (t, s) with t nonzero and s outside {0, t, -t}; splitting off t gives
  // C* times a line minus three points
  HGPoly cstar = bm_line_minus_points(1);
  HGPoly line3 = bm_line_minus_points(3);
  HGPoly full = hg_mul(cstar, line3);

  auto table = involution_table_data();
  // the recorded parities must label exactly the classes of the polynomial
  HGPoly labelled(Kind::BM);
  for (const auto& c : table) labelled.add_term(c.weight, c.degree, 1);
  if (labelled != full)
    throw Error(Errc::mismatch, "bm_Ztilde_fiber: involution table does not match the polynomial");

  ZtildeFiber out{full, table, HGPoly::zero(Kind::BM), HGPoly::zero(Kind::BM)};
  for (const auto& c : table) {
    if (c.parity.at("i") != +1 || c.parity.at("k") != -1) continue;
    if (c.degree == 3 && c.parity.at("j") == +1)
      out.constant_part.add_term(c.weight, c.degree, 1);
    else if (c.degree == 2 && c.parity.at("j") == -1)
      out.local_system_part.add_term(c.weight, c.degree, 1);
    else
      throw Error(Errc::mismatch, "bm_Ztilde_fiber: selected class outside degrees {2,3}");
  }
  if (out.constant_part.class_count() != 1 || out.local_system_part.class_count() != 1)
    throw Error(Errc::mismatch, "bm_Ztilde_fiber: selection must leave one class per row");

  if (trace) {
    trace->add("bm_strata_subtract", {{"total", hg_to_json(bm_affine(1))}, {"removed", hg_to_json(bm_point())}},
               hg_to_json(cstar), "C minus one point");
    trace->add("bm_strata_subtract",
               {{"total", hg_to_json(bm_affine(1))}, {"removed", hg_to_json(hg_scale(bm_point(), 3))}},
               hg_to_json(line3), "C minus three points");
    trace->add("hg_mul", {{"a", hg_to_json(cstar)}, {"b", hg_to_json(line3)}}, hg_to_json(full),
               "product splitting of the conic-pair fiber");
    trace->add("data", {{"name", "involution parities"}}, signed_classes_json(table), "table 1");
    trace->add("select_parities", {{"require", {{"i", +1}, {"k", -1}}}},
               nlohmann::json{{"constant_row", hg_to_json(out.constant_part)},
                              {"local_system_row", hg_to_json(out.local_system_part)}},
               "invariant under conic swap, anti-invariant under pair swap");
  }
  return out;
}

}  // namespace trig5::blocks
