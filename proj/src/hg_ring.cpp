#include "hg_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace trig5 {

const char* kind_name(Kind k) { return k == Kind::BM ? "BM" : "COHOM"; }

static void require_same_kind(const HGPoly& a, const HGPoly& b, const char* op) {
  if (a.kind() != b.kind())
    throw Error(Errc::kind_mismatch, std::string(op) + ": mixing " + kind_name(a.kind()) +
                                         " and " + kind_name(b.kind()) + " polynomials");
}

HGPoly HGPoly::term(Kind k, long w, long d, long long m) {
  HGPoly p(k);
  p.add_term(w, d, m);
  return p;
}

bool HGPoly::nonneg() const {
  for (const auto& [k, m] : terms_)
    if (m < 0) return false;
  return true;
}

long long HGPoly::class_count() const {
  long long n = 0;
  for (const auto& [k, m] : terms_) n += (m < 0 ? -m : m);
  return n;
}

long long HGPoly::mult(long w, long d) const {
  auto it = terms_.find({d, w});
  return it == terms_.end() ? 0 : it->second;
}

void HGPoly::add_term(long w, long d, long long m) {
  if (m == 0) return;
  auto key = std::make_pair(d, w);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, m);
  } else {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
}

long HGPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }
long HGPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }

CountPoly CountPoly::monomial(long exp, long long c) {
  CountPoly p;
  p.add_term(exp, c);
  return p;
}

void CountPoly::add_term(long exp, long long c) {
  if (c == 0) return;
  auto it = coeff_.find(exp);
  if (it == coeff_.end()) {
    coeff_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) coeff_.erase(it);
  }
}

long long CountPoly::coeff(long exp) const {
  auto it = coeff_.find(exp);
  return it == coeff_.end() ? 0 : it->second;
}

long long CountPoly::evaluate(long long q) const {
  long long total = 0;
  for (const auto& [e, c] : coeff_) {
    if (e < 0) throw Error(Errc::domain, "evaluate: negative exponent in count polynomial");
    long long p = 1;
    for (long i = 0; i < e; ++i) p *= q;
    total += c * p;
  }
  return total;
}

CountPoly cp_add(const CountPoly& a, const CountPoly& b) {
  CountPoly r = a;
  for (const auto& [e, c] : b.coeffs()) r.add_term(e, c);
  return r;
}

CountPoly cp_mul(const CountPoly& a, const CountPoly& b) {
  CountPoly r;
  for (const auto& [ea, ca] : a.coeffs())
    for (const auto& [eb, cb] : b.coeffs()) r.add_term(ea + eb, ca * cb);
  return r;
}

HGPoly hg_add(const HGPoly& a, const HGPoly& b) {
  require_same_kind(a, b, "hg_add");
  HGPoly r = a;
  for (const auto& [k, m] : b.terms()) r.add_term(k.second, k.first, m);
  return r;
}

HGPoly hg_neg(const HGPoly& a) { return hg_scale(a, -1); }

HGPoly hg_sub(const HGPoly& a, const HGPoly& b) { return hg_add(a, hg_neg(b)); }

HGPoly hg_scale(const HGPoly& a, long long c) {
  HGPoly r(a.kind());
  for (const auto& [k, m] : a.terms()) r.add_term(k.second, k.first, m * c);
  return r;
}

HGPoly hg_mul(const HGPoly& a, const HGPoly& b) {
  require_same_kind(a, b, "hg_mul");
  HGPoly r(a.kind());
  for (const auto& [ka, ma] : a.terms())
    for (const auto& [kb, mb] : b.terms())
      r.add_term(ka.second + kb.second, ka.first + kb.first, ma * mb);
  return r;
}

HGPoly hg_shift(const HGPoly& p, long dw, long dd) {
  HGPoly r(p.kind());
  for (const auto& [k, m] : p.terms()) r.add_term(k.second + dw, k.first + dd, m);
  return r;
}

HGPoly cohomology_to_bm(const HGPoly& p, long n) {
  if (p.kind() != Kind::Cohom)
    throw Error(Errc::kind_mismatch, "cohomology_to_bm: input must be cohomological");
  HGPoly r(Kind::BM);
  for (const auto& [k, m] : p.terms()) r.add_term(n + k.second, 2 * n - k.first, m);
  return r;
}

HGPoly bm_to_cohomology(const HGPoly& p, long n) {
  if (p.kind() != Kind::BM)
    throw Error(Errc::kind_mismatch, "bm_to_cohomology: input must be Borel-Moore");
  HGPoly r(Kind::Cohom);
  for (const auto& [k, m] : p.terms()) r.add_term(k.second - n, 2 * n - k.first, m);
  return r;
}

CountPoly euler_specialize(const HGPoly& p) {
  if (p.kind() != Kind::BM)
    throw Error(Errc::kind_mismatch, "euler_specialize: input must be Borel-Moore");
  CountPoly r;
  for (const auto& [k, m] : p.terms()) r.add_term(k.second, (k.first % 2 == 0) ? m : -m);
  return r;
}

HGPoly alexander_dual(const HGPoly& p, long n) {
  if (p.kind() == Kind::BM) {
    HGPoly r(Kind::Cohom);
    for (const auto& [k, m] : p.terms()) {
      long d = 2 * n - 1 - k.first;
      if (d < 1)
        throw Error(Errc::domain, "alexander_dual: class Q(" + std::to_string(k.second) + ")@" +
                                      std::to_string(k.first) +
                                      " would land in cohomological degree " + std::to_string(d));
      r.add_term(k.second - n, d, m);
    }
    r.add_term(0, 0, 1);
    return r;
  }
  // inverse direction: strip the unit constant, send reduced cohomology back
  if (p.mult(0, 0) < 1)
    throw Error(Errc::domain, "alexander_dual: cohomological input lacks the unit constant term");
  HGPoly r(Kind::BM);
  for (const auto& [k, m] : p.terms()) {
    long long mm = m;
    if (k.first == 0) {
      if (k.second != 0 || m != 1)
        throw Error(Errc::domain, "alexander_dual: degree-0 part must be exactly the constant 1");
      continue;
    }
    r.add_term(k.second + n, 2 * n - 1 - k.first, mm);
  }
  return r;
}

HGPoly exact_div(const HGPoly& p, const HGPoly& d) {
  require_same_kind(p, d, "exact_div");
  if (d.is_zero()) throw Error(Errc::domain, "exact_div: zero divisor");
  // the minimal-degree term of the divisor must be the constant 1
  auto lead = d.terms().begin();
  if (lead->first != std::make_pair(0L, 0L) || lead->second != 1)
    throw Error(Errc::domain, "exact_div: divisor must have minimal term 1");
  if (std::next(lead) != d.terms().end() && std::next(lead)->first.first < 1)
    throw Error(Errc::domain, "exact_div: divisor must have a unique minimal-degree term");
  if (p.is_zero()) return HGPoly::zero(p.kind());

  const long dcap = p.max_degree() - d.max_degree();
  HGPoly q(p.kind());
  HGPoly r = p;
  while (!r.is_zero()) {
    auto [key, m] = *r.terms().begin();
    auto [deg, w] = key;
    if (deg > dcap)
      throw Error(Errc::remainder, "exact_div: nonzero remainder, first stuck term " +
                                       std::to_string(m) + "*Q(" + std::to_string(w) + ")@" +
                                       std::to_string(deg));
    q.add_term(w, deg, m);
    for (const auto& [kd, md] : d.terms()) r.add_term(w + kd.second, deg + kd.first, -m * md);
  }
  return q;
}

WangResult wang_solve_cstar(const HGPoly& total) {
  if (total.kind() != Kind::Cohom)
    throw Error(Errc::kind_mismatch, "wang_solve_cstar: total must be cohomological");
  if (!total.nonneg())
    throw Error(Errc::domain, "wang_solve_cstar: total has a negative multiplicity");

  const long horizon = total.max_degree() + 2;
  HGPoly base(Kind::Cohom);
  // kills[{p, w}] = differentials from E(p,1) into E(p+2,0), all of weight w
  std::map<std::pair<long, long>, long long> kills;
  std::vector<std::string> collisions;

  for (long n = 0; n <= horizon; ++n) {
    std::set<long> weights;
    for (const auto& [k, m] : total.terms())
      if (k.first == n) weights.insert(k.second);
    for (const auto& [k, m] : base.terms())
      if (k.first == n - 1) weights.insert(k.second - 1);
    for (const auto& [k, c] : kills)
      if (k.first == n - 2) weights.insert(k.second);

    for (long w : weights) {
      const long long t = total.mult(w, n);
      const long long fiber = base.mult(w + 1, n - 1);
      auto it = kills.find({n - 2, w});
      const long long incoming = it == kills.end() ? 0 : it->second;
      if (t >= fiber) {
        if (t > fiber && fiber > 0)
          collisions.push_back("(" + std::to_string(n) + ", Q(" + std::to_string(w) + "))");
        base.add_term(w, n, (t - fiber) + incoming);
      } else {
        if (t > 0)
          collisions.push_back("(" + std::to_string(n) + ", Q(" + std::to_string(w) + "))");
        kills[{n - 1, w}] = fiber - t;
        base.add_term(w, n, incoming);
      }
    }
  }

  if (!collisions.empty()) {
    std::string msg = "wang_solve_cstar: ambiguous solve, colliding bidegrees:";
    for (const auto& c : collisions) msg += " " + c;
    throw Error(Errc::ambiguous, msg);
  }

  // reconstruction: base*(1 + Lt) minus the killed pairs must equal the total
  HGPoly fiber_poly = HGPoly::one(Kind::Cohom);
  fiber_poly.add_term(-1, 1, 1);
  HGPoly rebuilt = hg_mul(base, fiber_poly);
  for (const auto& [k, c] : kills) {
    rebuilt.add_term(k.second, k.first + 1, -c);
    rebuilt.add_term(k.second, k.first + 2, -c);
  }
  if (rebuilt != total)
    throw Error(Errc::domain, "wang_solve_cstar: no nonnegative solution reconstructs the total");
  if (!base.nonneg())
    throw Error(Errc::domain, "wang_solve_cstar: solved base has a negative multiplicity");

  WangResult res{base, {}};
  for (const auto& [k, c] : kills)
    for (long long i = 0; i < c; ++i)
      res.killed.push_back(WangKill{{k.first, 1}, {k.first + 2, 0}, k.second});
  return res;
}

nlohmann::json hg_to_json(const HGPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, m] : p.terms())
    terms.push_back({{"weight", k.second}, {"degree", k.first}, {"mult", m}});
  return nlohmann::json{{"kind", kind_name(p.kind())}, {"terms", terms}, {"pretty", hg_pretty(p)}};
}

HGPoly hg_from_json(const nlohmann::json& j) {
  Kind k = j.at("kind").get<std::string>() == "BM" ? Kind::BM : Kind::Cohom;
  HGPoly p(k);
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("weight").get<long>(), t.at("degree").get<long>(),
               t.at("mult").get<long long>());
  return p;
}

// one monomial, coefficient sign handled by the caller
static std::string term_string(long w, long d, long long abs_m) {
  std::string s;
  long lexp = -w;  // Q(w) prints as L^-w
  if (lexp != 0) {
    s += "L";
    if (lexp != 1) s += "^" + std::to_string(lexp);
  }
  if (d != 0) {
    if (!s.empty()) s += " ";
    s += "t";
    if (d != 1) s += "^" + std::to_string(d);
  }
  if (s.empty()) return std::to_string(abs_m);
  if (abs_m != 1) return std::to_string(abs_m) + " " + s;
  return s;
}

std::string hg_pretty(const HGPoly& p) {
  if (p.is_zero()) return "0";
  // descending degree, then descending L-exponent, the layout the tables use
  std::vector<std::pair<std::pair<long, long>, long long>> items(p.terms().begin(),
                                                                 p.terms().end());
  std::reverse(items.begin(), items.end());
  std::string s;
  bool first = true;
  for (const auto& [k, m] : items) {
    long long a = m < 0 ? -m : m;
    if (first) {
      if (m < 0) s += "-";
      first = false;
    } else {
      s += m < 0 ? " - " : " + ";
    }
    s += term_string(k.second, k.first, a);
  }
  return s;
}

nlohmann::json cp_to_json(const CountPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    terms.push_back({{"exp", it->first}, {"coeff", it->second}});
  return nlohmann::json{{"terms", terms}, {"pretty", cp_pretty(p)}};
}

std::string cp_pretty(const CountPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    auto [e, c] = *it;
    long long a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono;
    if (a != 1 || e == 0) mono = std::to_string(a);
    if (e != 0) {
      mono += "q";
      if (e != 1) mono += "^" + std::to_string(e);
    }
    s += mono;
  }
  return s;
}

}  // namespace trig5
