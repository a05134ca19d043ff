#include <doctest.h>

#include <string>

#include <json.hpp>

#include "trig5/trig5.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  t5_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("c api: polynomial handles") {
  t5_poly* a = t5_poly_new(T5_KIND_BM);
  REQUIRE(a);
  CHECK(t5_poly_add_term(a, 1, 2, 1) == T5_OK);
  CHECK(t5_poly_add_term(a, 0, 1, 1) == T5_OK);

  t5_poly* b = t5_poly_clone(a);
  CHECK(t5_poly_equal(a, b) == 1);

  t5_poly* sum = nullptr;
  REQUIRE(t5_poly_add(a, b, &sum) == T5_OK);
  CHECK(t5_poly_class_count(sum) == 4);

  t5_poly* prod = nullptr;
  REQUIRE(t5_poly_mul(a, b, &prod) == T5_OK);

  char* euler = nullptr;
  REQUIRE(t5_poly_euler(a, &euler) == T5_OK);
  CHECK(take(euler).find("q - 1") != std::string::npos);

  char* pretty = nullptr;
  REQUIRE(t5_poly_render(a, "pretty", &pretty) == T5_OK);
  CHECK(take(pretty) == "L^-1 t^2 + t");

  // kind confusion surfaces as a status code
  t5_poly* c = t5_poly_new(T5_KIND_COHOM);
  t5_poly_add_term(c, 0, 0, 1);
  t5_poly* bad = nullptr;
  CHECK(t5_poly_add(a, c, &bad) == T5_ERR_KIND);
  CHECK(std::string(t5_last_error()).find("hg_add") != std::string::npos);

  t5_poly_free(a);
  t5_poly_free(b);
  t5_poly_free(c);
  t5_poly_free(sum);
  t5_poly_free(prod);
}

TEST_CASE("c api: duality, division, wang") {
  // P(X/GL2) entered termwise
  t5_poly* quotient = t5_poly_new(T5_KIND_COHOM);
  for (auto [w, d] : {std::pair{0L, 0L}, {-2L, 3L}, {-3L, 5L}, {-4L, 6L}, {-11L, 12L}, {-12L, 13L}})
    t5_poly_add_term(quotient, w, d, 1);

  t5_poly* gl2 = t5_poly_new(T5_KIND_COHOM);
  for (auto [w, d] : {std::pair{0L, 0L}, {-1L, 1L}, {-2L, 3L}, {-3L, 4L}})
    t5_poly_add_term(gl2, w, d, 1);

  t5_poly* x = nullptr;
  REQUIRE(t5_poly_mul(quotient, gl2, &x) == T5_OK);
  t5_poly* back = nullptr;
  REQUIRE(t5_poly_exact_div(x, gl2, &back) == T5_OK);
  CHECK(t5_poly_equal(back, quotient) == 1);

  t5_poly* base = nullptr;
  char* killed = nullptr;
  REQUIRE(t5_poly_wang_solve(quotient, &base, &killed) == T5_OK);
  char* pretty = nullptr;
  REQUIRE(t5_poly_render(base, "pretty", &pretty) == T5_OK);
  CHECK(take(pretty) == "L^11 t^12 + L^3 t^5 + L t^2 + 1");
  auto killed_json = nlohmann::json::parse(take(killed));
  REQUIRE(killed_json.size() == 1);
  CHECK(killed_json[0]["fiber"] == nlohmann::json({0, 1}));
  CHECK(killed_json[0]["base"] == nlohmann::json({2, 0}));

  // inexact division is a distinct status
  t5_poly* off = t5_poly_new(T5_KIND_COHOM);
  t5_poly_add_term(off, 0, 0, 1);
  t5_poly_add_term(off, -1, 2, 1);
  t5_poly* fiber = t5_poly_new(T5_KIND_COHOM);
  t5_poly_add_term(fiber, 0, 0, 1);
  t5_poly_add_term(fiber, -1, 1, 1);
  t5_poly* q = nullptr;
  CHECK(t5_poly_exact_div(off, fiber, &q) == T5_ERR_REMAINDER);

  t5_poly_free(quotient);
  t5_poly_free(gl2);
  t5_poly_free(x);
  t5_poly_free(back);
  t5_poly_free(base);
  t5_poly_free(off);
  t5_poly_free(fiber);
}

TEST_CASE("c api: reports") {
  char* out = nullptr;
  REQUIRE(t5_lemma("2.4", "pretty", &out) == T5_OK);
  CHECK(take(out) == "L^-4 t^8 + L^-3 t^6\n");

  CHECK(t5_lemma("9.9", "pretty", &out) == T5_ERR_USAGE);

  int ok = 0;
  REQUIRE(t5_pipeline("json", &out, &ok) == T5_OK);
  CHECK(ok == 1);
  auto doc = nlohmann::json::parse(take(out));
  auto t5_terms = doc["results"]["T5"]["terms"];
  nlohmann::json expected = nlohmann::json::array(
      {{{"weight", 0}, {"degree", 0}, {"mult", 1}},
       {{"weight", -1}, {"degree", 2}, {"mult", 1}},
       {{"weight", -3}, {"degree", 5}, {"mult", 1}},
       {{"weight", -11}, {"degree", 12}, {"mult", 1}}});
  CHECK(t5_terms == expected);
  CHECK(doc["verdicts"]["theorem"] == true);

  REQUIRE(t5_appendix(58, "json", &out) == T5_OK);
  auto ap = nlohmann::json::parse(take(out));
  CHECK(ap["results"]["value"]["terms"].empty());

  CHECK(t5_appendix(55, "json", &out) == T5_ERR_USAGE);

  int match = 0;
  REQUIRE(t5_verify("M05,PGL3", "2,3", "json", &out, &match) == T5_OK);
  CHECK(match == 1);
  auto ver = nlohmann::json::parse(take(out));
  CHECK(ver["results"]["rows"].size() == 4);

  REQUIRE(t5_explain("58", "json", &out) == T5_OK);
  take(out);
}

TEST_CASE("c api: identical calls produce identical bytes") {
  char* a = nullptr;
  char* b = nullptr;
  int ok = 0;
  REQUIRE(t5_pipeline("json", &a, &ok) == T5_OK);
  REQUIRE(t5_pipeline("json", &b, &ok) == T5_OK);
  CHECK(take(a) == take(b));

  REQUIRE(t5_table("3", "markdown", &a) == T5_OK);
  REQUIRE(t5_table("3", "markdown", &b) == T5_OK);
  CHECK(take(a) == take(b));
}
