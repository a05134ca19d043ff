#pragma once

#include <random>
#include <vector>

#include "hg_ring.hpp"

namespace testutil {

using trig5::HGPoly;
using trig5::Kind;

struct T {
  long w, d;
  long long m;
};

inline HGPoly make(Kind k, std::initializer_list<T> ts) {
  HGPoly p(k);
  for (const auto& t : ts) p.add_term(t.w, t.d, t.m);
  return p;
}

inline HGPoly bm(std::initializer_list<T> ts) { return make(Kind::BM, ts); }
inline HGPoly cohom(std::initializer_list<T> ts) { return make(Kind::Cohom, ts); }

// small random polynomials with multiplicities in [-9, 9], |w|, |d| <= 20
inline HGPoly random_poly(std::mt19937& rng, Kind k, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coord(-20, 20);
  std::uniform_int_distribution<int> mult(-9, 9);
  HGPoly p(k);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(coord(rng), coord(rng), mult(rng));
  return p;
}

// divisor with unit constant term and positive-degree tail
inline HGPoly random_divisor(std::mt19937& rng, Kind k) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_int_distribution<int> wt(-5, 5);
  std::uniform_int_distribution<int> mult(-3, 3);
  HGPoly p = HGPoly::one(k);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(wt(rng), deg(rng), mult(rng));
  return p;
}

}  // namespace testutil
