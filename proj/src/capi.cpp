#include "trig5/trig5.h"

#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "fq_oracle.hpp"
#include "hg_ring.hpp"
#include "render.hpp"

using namespace trig5;

struct t5_poly {
  HGPoly value;
};

namespace {

thread_local std::string g_last_error;

t5_status status_of(Errc c) {
  switch (c) {
    case Errc::usage: return T5_ERR_USAGE;
    case Errc::kind_mismatch: return T5_ERR_KIND;
    case Errc::domain: return T5_ERR_DOMAIN;
    case Errc::remainder: return T5_ERR_REMAINDER;
    case Errc::ambiguous: return T5_ERR_AMBIGUOUS;
    case Errc::mismatch: return T5_ERR_MISMATCH;
  }
  return T5_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
t5_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return T5_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return T5_ERR_INTERNAL;
  }
}

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

t5_poly* t5_poly_new(int bm_kind) {
  return new t5_poly{HGPoly::zero(bm_kind ? Kind::BM : Kind::Cohom)};
}

t5_poly* t5_poly_clone(const t5_poly* p) { return p ? new t5_poly{p->value} : nullptr; }

void t5_poly_free(t5_poly* p) { delete p; }

t5_status t5_poly_add_term(t5_poly* p, long weight, long degree, long long mult) {
  if (!p) return T5_ERR_USAGE;
  return guarded([&] { p->value.add_term(weight, degree, mult); });
}

int t5_poly_equal(const t5_poly* a, const t5_poly* b) {
  if (!a || !b) return 0;
  return a->value == b->value ? 1 : 0;
}

long long t5_poly_class_count(const t5_poly* p) { return p ? p->value.class_count() : 0; }

#define T5_BINOP(name, expr)                                              \
  t5_status name(const t5_poly* a, const t5_poly* b, t5_poly** out) {     \
    if (!a || !b || !out) return T5_ERR_USAGE;                            \
    return guarded([&] { *out = new t5_poly{expr(a->value, b->value)}; }); \
  }

T5_BINOP(t5_poly_add, hg_add)
T5_BINOP(t5_poly_mul, hg_mul)
T5_BINOP(t5_poly_exact_div, exact_div)
#undef T5_BINOP

t5_status t5_poly_shift(const t5_poly* p, long dw, long dd, t5_poly** out) {
  if (!p || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = new t5_poly{hg_shift(p->value, dw, dd)}; });
}

t5_status t5_poly_cohomology_to_bm(const t5_poly* p, long n, t5_poly** out) {
  if (!p || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = new t5_poly{cohomology_to_bm(p->value, n)}; });
}

t5_status t5_poly_bm_to_cohomology(const t5_poly* p, long n, t5_poly** out) {
  if (!p || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = new t5_poly{bm_to_cohomology(p->value, n)}; });
}

t5_status t5_poly_alexander_dual(const t5_poly* p, long n, t5_poly** out) {
  if (!p || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = new t5_poly{alexander_dual(p->value, n)}; });
}

t5_status t5_poly_wang_solve(const t5_poly* total, t5_poly** base, char** killed_json) {
  if (!total || !base) return T5_ERR_USAGE;
  return guarded([&] {
    WangResult r = wang_solve_cstar(total->value);
    *base = new t5_poly{r.base};
    if (killed_json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& k : r.killed)
        arr.push_back({{"fiber", {k.fiber_pos.first, k.fiber_pos.second}},
                       {"base", {k.base_pos.first, k.base_pos.second}},
                       {"weight", k.weight}});
      *killed_json = dup_string(arr.dump());
    }
  });
}

t5_status t5_poly_euler(const t5_poly* p, char** out) {
  if (!p || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = dup_string(cp_to_json(euler_specialize(p->value)).dump()); });
}

t5_status t5_poly_render(const t5_poly* p, const char* format, char** out) {
  if (!p || !format || !out) return T5_ERR_USAGE;
  return guarded([&] {
    std::string f = format;
    if (f == "json")
      *out = dup_string(hg_to_json(p->value).dump());
    else if (f == "pretty")
      *out = dup_string(hg_pretty(p->value));
    else
      throw Error(Errc::usage, "t5_poly_render: format must be json or pretty");
  });
}

t5_status t5_lemma(const char* id, const char* format, char** out) {
  if (!id || !format || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = dup_string(render::lemma_report(id, format)); });
}

t5_status t5_column(const char* id, const char* format, char** out) {
  if (!id || !format || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = dup_string(render::column_report(id, format)); });
}

t5_status t5_table(const char* id, const char* format, char** out) {
  if (!id || !format || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = dup_string(render::table_report(id, format)); });
}

t5_status t5_pipeline(const char* format, char** out, int* all_ok) {
  if (!format || !out) return T5_ERR_USAGE;
  return guarded([&] {
    bool ok = false;
    *out = dup_string(render::pipeline_report(format, &ok));
    if (all_ok) *all_ok = ok ? 1 : 0;
  });
}

t5_status t5_appendix(int config, const char* format, char** out) {
  if (!format || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = dup_string(render::appendix_report(config, format)); });
}

t5_status t5_verify(const char* spaces_csv, const char* qs_csv, const char* format, char** out,
                    int* all_match) {
  if (!format || !out) return T5_ERR_USAGE;
  return guarded([&] {
    std::vector<std::string> spaces = split_csv(spaces_csv);
    if (spaces.empty()) spaces = fq::space_ids();
    std::vector<int> qs;
    for (const auto& s : split_csv(qs_csv)) {
      try {
        qs.push_back(std::stoi(s));
      } catch (...) {
        throw Error(Errc::usage, "bad q value '" + s + "'");
      }
    }
    if (qs.empty()) qs = {2, 3, 5, 7};
    bool ok = false;
    *out = dup_string(render::verify_report(spaces, qs, format, &ok));
    if (all_match) *all_match = ok ? 1 : 0;
  });
}

t5_status t5_explain(const char* id, const char* format, char** out) {
  if (!id || !format || !out) return T5_ERR_USAGE;
  return guarded([&] { *out = dup_string(render::explain_report(id, format)); });
}

void t5_string_free(char* s) { delete[] s; }

const char* t5_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
