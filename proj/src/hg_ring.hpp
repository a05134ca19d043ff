#pragma once

// Exact arithmetic on graded polynomials of Tate classes Q(w) placed in
// integer (co)homological degrees, plus the duality / division / two-row
// solve transforms the discriminant pipeline needs.  A term (w, d, m)
// renders as m*L^-w t^d; Borel-Moore polynomials carry w >= 0 in practice,
// cohomological ones w <= 0 (so Q(-11) in degree 12 prints L^11 t^12).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace trig5 {

enum class Kind { BM, Cohom };

enum class Errc {
  usage,          // unknown id / malformed request
  kind_mismatch,  // BM vs cohomological confusion
  domain,         // precondition violated
  remainder,      // inexact division (Leray-Hirsch red flag)
  ambiguous,      // extension/solve not determined by the data
  mismatch        // verification against pinned data failed
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* kind_name(Kind k);

class HGPoly {
 public:
  // key is (degree, weight) so iteration order matches the (d, w) sort the
  // JSON interface pins down
  using TermMap = std::map<std::pair<long, long>, long long>;

  HGPoly() : kind_(Kind::BM) {}
  explicit HGPoly(Kind k) : kind_(k) {}

  static HGPoly zero(Kind k) { return HGPoly(k); }
  static HGPoly term(Kind k, long w, long d, long long m = 1);
  static HGPoly one(Kind k) { return term(k, 0, 0, 1); }

  Kind kind() const { return kind_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool nonneg() const;
  // classes counted with multiplicity
  long long class_count() const;
  long long mult(long w, long d) const;
  void add_term(long w, long d, long long m);
  long min_degree() const;  // 0 on the zero polynomial
  long max_degree() const;

  bool operator==(const HGPoly& o) const { return kind_ == o.kind_ && terms_ == o.terms_; }
  bool operator!=(const HGPoly& o) const { return !(*this == o); }

 private:
  Kind kind_;
  TermMap terms_;
};

// Integer polynomial in q; the target of the Euler specialization.
class CountPoly {
 public:
  CountPoly() = default;
  static CountPoly monomial(long exp, long long c);
  static CountPoly constant(long long c) { return monomial(0, c); }

  const std::map<long, long long>& coeffs() const { return coeff_; }
  void add_term(long exp, long long c);
  bool is_zero() const { return coeff_.empty(); }
  long long coeff(long exp) const;
  // exact evaluation; all exponents must be nonnegative
  long long evaluate(long long q) const;

  bool operator==(const CountPoly& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const CountPoly& o) const { return !(*this == o); }

 private:
  std::map<long, long long> coeff_;
};

CountPoly cp_add(const CountPoly& a, const CountPoly& b);
CountPoly cp_mul(const CountPoly& a, const CountPoly& b);

HGPoly hg_add(const HGPoly& a, const HGPoly& b);
HGPoly hg_neg(const HGPoly& a);
HGPoly hg_sub(const HGPoly& a, const HGPoly& b);
HGPoly hg_mul(const HGPoly& a, const HGPoly& b);
HGPoly hg_scale(const HGPoly& a, long long c);
// every term (w, d) moves to (w + dw, d + dd)
HGPoly hg_shift(const HGPoly& p, long dw, long dd);

// Poincare duality for a smooth space of complex dimension n:
// cohomological Q(w) in degree d becomes BM Q(n + w) in degree 2n - d.
HGPoly cohomology_to_bm(const HGPoly& p, long n);
HGPoly bm_to_cohomology(const HGPoly& p, long n);

// sum of m * (-1)^d * q^w over all terms; requires BM kind
CountPoly euler_specialize(const HGPoly& p);

// BM homology of a closed subvariety of C^N to unreduced cohomology of the
// complement: Q(w)@d -> Q(w-N)@(2N-1-d), augmented with the constant 1.
// Applied to a cohomological polynomial it inverts itself.
HGPoly alexander_dual(const HGPoly& p, long n);

// quotient with zero remainder, eliminating from the minimal degree upward;
// the divisor's minimal-degree term must be the constant 1
HGPoly exact_div(const HGPoly& p, const HGPoly& d);

struct WangKill {
  std::pair<long, long> fiber_pos;  // (p, 1) on the two-row page
  std::pair<long, long> base_pos;   // (p + 2, 0)
  long weight;                      // common weight of the cancelled pair

  bool operator==(const WangKill& o) const {
    return fiber_pos == o.fiber_pos && base_pos == o.base_pos && weight == o.weight;
  }
};

struct WangResult {
  HGPoly base;
  std::vector<WangKill> killed;
};

// Deterministic degree-by-degree solve of the two-row page of an orbifold
// C*-bundle with fiber polynomial 1 + Lt.  Differentials are introduced only
// where the total forces them; a slot that mixes surviving and dying classes
// of one bidegree is refused as ambiguous.
WangResult wang_solve_cstar(const HGPoly& total);

nlohmann::json hg_to_json(const HGPoly& p);
HGPoly hg_from_json(const nlohmann::json& j);
std::string hg_pretty(const HGPoly& p);
nlohmann::json cp_to_json(const CountPoly& p);
std::string cp_pretty(const CountPoly& p);

}  // namespace trig5
