#include "fq_oracle.hpp"

#include <array>
#include <algorithm>

#include "config_blocks.hpp"

namespace trig5::fq {

namespace {

void require_prime(int q) {
  if (q != 2 && q != 3 && q != 5 && q != 7)
    throw Error(Errc::domain, "q must be one of the primes 2, 3, 5, 7");
}

using P2Point = std::array<int, 3>;

// normalized representatives: [1,a,b], [0,1,b], [0,0,1]
std::vector<P2Point> p2_points(int q) {
  std::vector<P2Point> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
  pts.push_back({0, 0, 1});
  return pts;
}

P2Point cross(const P2Point& u, const P2Point& v, int q) {
  auto m = [&](long long x) { return static_cast<int>(((x % q) + q) % q); };
  return {m(static_cast<long long>(u[1]) * v[2] - static_cast<long long>(u[2]) * v[1]),
          m(static_cast<long long>(u[2]) * v[0] - static_cast<long long>(u[0]) * v[2]),
          m(static_cast<long long>(u[0]) * v[1] - static_cast<long long>(u[1]) * v[0])};
}

bool on_line(const P2Point& pt, const P2Point& line, int q) {
  long long s = static_cast<long long>(pt[0]) * line[0] + static_cast<long long>(pt[1]) * line[1] +
                static_cast<long long>(pt[2]) * line[2];
  return s % q == 0;
}

// ordered k-tuples of points away from the center, pairwise on distinct
// lines through it, non-collinear when k = 3
long long count_ftilde(int q, int k) {
  const P2Point center{0, 0, 1};
  auto pts = p2_points(q);
  std::vector<P2Point> away;
  for (const auto& p : pts)
    if (p != center) away.push_back(p);
  long long count = 0;
  for (const auto& a : away) {
    P2Point la = cross(center, a, q);
    for (const auto& b : away) {
      if (on_line(b, la, q)) continue;  // same ruling line (covers b == a)
      if (k == 2) {
        ++count;
        continue;
      }
      P2Point lb = cross(center, b, q);
      P2Point lab = cross(a, b, q);
      for (const auto& c : away) {
        if (on_line(c, la, q) || on_line(c, lb, q)) continue;
        if (on_line(c, lab, q)) continue;
        ++count;
      }
    }
  }
  return count;
}

long long count_m05(int q) {
  long long count = 0;
  for (int t1 = 0; t1 < q; ++t1) {
    if (t1 == 0 || t1 == 1) continue;
    for (int t2 = 0; t2 < q; ++t2) {
      if (t2 == 0 || t2 == 1 || t2 == t1) continue;
      ++count;
    }
  }
  return count;
}

long long count_yl(int q) {
  // the plane minus the six lines through four points in general position
  const std::vector<P2Point> frame = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  std::vector<P2Point> lines;
  for (size_t i = 0; i < frame.size(); ++i)
    for (size_t j = i + 1; j < frame.size(); ++j) lines.push_back(cross(frame[i], frame[j], q));
  long long count = 0;
  for (const auto& p : p2_points(q)) {
    bool hit = false;
    for (const auto& l : lines)
      if (on_line(p, l, q)) {
        hit = true;
        break;
      }
    if (!hit) ++count;
  }
  return count;
}

long long count_pgl3(int q) {
  long long invertible = 0;
  // iterate every 3x3 matrix; the first row sweeps the inner loop over
  // precomputed minors of the last two rows
  for (int d = 0; d < q; ++d)
    for (int e = 0; e < q; ++e)
      for (int f = 0; f < q; ++f)
        for (int g = 0; g < q; ++g)
          for (int h = 0; h < q; ++h)
            for (int i = 0; i < q; ++i) {
              const int m1 = ((e * i - f * h) % q + q) % q;
              const int m2 = ((d * i - f * g) % q + q) % q;
              const int m3 = ((d * h - e * g) % q + q) % q;
              for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b)
                  for (int c = 0; c < q; ++c)
                    if ((a * m1 - b * m2 + c * m3) % q != 0) ++invertible;
            }
  if (invertible % (q - 1) != 0)
    throw Error(Errc::mismatch, "count_pgl3: scalar classes do not divide evenly");
  return invertible / (q - 1);
}

long long count_ztilde(int q) {
  long long count = 0;
  for (int t = 1; t < q; ++t)
    for (int s = 1; s < q; ++s) {
      if (s == t || (s + t) % q == 0) continue;
      ++count;
    }
  return count;
}

long long count_grass(int k, int n, int q) {
  if (n != 3 || (k != 1 && k != 2))
    throw Error(Errc::usage, "count_grass: only Grass(1,3) and Grass(2,3) are registered");
  const int total = q * q * q;
  auto nonzero = [&](int v) { return v != 0; };
  if (k == 1) {
    // normalized spanning vectors: first nonzero coordinate equal to 1
    long long count = 0;
    for (int v = 1; v < total; ++v) {
      int x = v / (q * q), y = (v / q) % q, z = v % q;
      int lead = nonzero(x) ? x : (nonzero(y) ? y : z);
      if (lead == 1) ++count;
    }
    return count;
  }
  // ordered independent pairs, then divide by the bases of a plane
  long long pairs = 0;
  for (int v = 1; v < total; ++v)
    for (int w = 1; w < total; ++w) {
      int vx = v / (q * q), vy = (v / q) % q, vz = v % q;
      int wx = w / (q * q), wy = (w / q) % q, wz = w % q;
      // dependent iff all 2x2 minors vanish
      int d1 = ((vx * wy - vy * wx) % q + q) % q;
      int d2 = ((vx * wz - vz * wx) % q + q) % q;
      int d3 = ((vy * wz - vz * wy) % q + q) % q;
      if (d1 || d2 || d3) ++pairs;
    }
  long long bases = static_cast<long long>(q * q - 1) * (q * q - q);
  if (pairs % bases != 0)
    throw Error(Errc::mismatch, "count_grass: basis classes do not divide evenly");
  return pairs / bases;
}

}  // namespace

std::vector<std::string> space_ids() {
  return {"Ftilde2", "Ftilde3", "M05", "YL", "PGL3", "Ztilde", "Grass(1,3)", "Grass(2,3)"};
}

bool space_defined_at(const std::string& name, int q) {
  if (name == "Ztilde") return q % 2 == 1;  // s = -t collapses onto s = t
  return true;
}

HGPoly predicted_poly(const std::string& name) {
  if (name == "Ftilde2") return blocks::bm_ftilde2();
  if (name == "Ftilde3") return blocks::bm_ftilde3();
  if (name == "M05" || name == "YL") return blocks::bm_M05_poly();
  if (name == "PGL3") return blocks::bm_PGL3();
  if (name == "Ztilde") return blocks::bm_Ztilde_fiber().full;
  if (name == "Grass(1,3)") return blocks::bm_grassmannian(1, 3);
  if (name == "Grass(2,3)") return blocks::bm_grassmannian(2, 3);
  throw Error(Errc::usage, "unknown space '" + name +
                               "' (valid: Ftilde2 Ftilde3 M05 YL PGL3 Ztilde Grass(1,3) Grass(2,3))");
}

CountResult count_space(const std::string& name, int q) {
  require_prime(q);
  if (!space_defined_at(name, q))
    throw Error(Errc::domain, name + " requires odd q");
  long long count;
  if (name == "Ftilde2")
    count = count_ftilde(q, 2);
  else if (name == "Ftilde3")
    count = count_ftilde(q, 3);
  else if (name == "M05")
    count = count_m05(q);
  else if (name == "YL")
    count = count_yl(q);
  else if (name == "PGL3")
    count = count_pgl3(q);
  else if (name == "Ztilde")
    count = count_ztilde(q);
  else if (name == "Grass(1,3)")
    count = count_grass(1, 3, q);
  else if (name == "Grass(2,3)")
    count = count_grass(2, 3, q);
  else
    throw Error(Errc::usage, "unknown space '" + name + "'");
  long long predicted = euler_specialize(predicted_poly(name)).evaluate(q);
  return CountResult{name, q, count, predicted, count == predicted};
}

std::vector<CountResult> compare_euler(const std::vector<std::string>& names,
                                       const std::vector<int>& qs) {
  std::vector<CountResult> out;
  for (const auto& name : names)
    for (int q : qs) {
      if (!space_defined_at(name, q)) continue;
      out.push_back(count_space(name, q));
    }
  return out;
}

}  // namespace trig5::fq
