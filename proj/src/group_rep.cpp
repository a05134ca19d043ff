#include "group_rep.hpp"

#include <algorithm>
#include <numeric>

namespace trig5::rep {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(n);
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i) p.img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  return p;
}

Perm Perm::compose(const Perm& other) const {
  Perm r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[i] = img[other.img[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int>(i);
  return r;
}

int Perm::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<bool> seen(img.size(), false);
  std::vector<int> type;
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

int Group::class_of(const Perm& g) const {
  if (!elements.empty()) {
    // explicit conjugacy search inside the stored element list
    for (size_t ci = 0; ci < classes.size(); ++ci)
      for (const auto& h : elements)
        if (h.compose(classes[ci].rep).compose(h.inverse()) == g) return static_cast<int>(ci);
    throw Error(Errc::domain, id + ": element outside the group");
  }
  auto type = g.cycle_type();
  for (size_t ci = 0; ci < classes.size(); ++ci)
    if (classes[ci].rep.cycle_type() == type) return static_cast<int>(ci);
  throw Error(Errc::domain, id + ": no class with the given cycle type");
}

const Irrep& Group::irrep(const std::string& name) const {
  std::string n = name;
  auto al = alias.find(n);
  if (al != alias.end()) n = al->second;
  for (const auto& ir : irreps)
    if (ir.name == n) return ir;
  throw Error(Errc::usage, id + ": unknown irreducible '" + name + "'");
}

bool Group::has_irrep(const std::string& name) const {
  std::string n = name;
  auto al = alias.find(n);
  if (al != alias.end()) n = al->second;
  for (const auto& ir : irreps)
    if (ir.name == n) return true;
  return false;
}

static Group make_s2() {
  Group g;
  g.id = "S2";
  g.order = 2;
  g.full_table = true;
  g.classes = {{"e", Perm::identity(2), 1}, {"(12)", Perm::from_cycles(2, {{1, 2}}), 1}};
  g.irreps = {{"triv", 1, {1, 1}}, {"sign", 1, {1, -1}}};
  return g;
}

static Group make_s3() {
  Group g;
  g.id = "S3";
  g.order = 6;
  g.full_table = true;
  g.classes = {{"e", Perm::identity(3), 1},
               {"(12)", Perm::from_cycles(3, {{1, 2}}), 3},
               {"(123)", Perm::from_cycles(3, {{1, 2, 3}}), 2}};
  g.irreps = {{"triv", 1, {1, 1, 1}}, {"sign", 1, {1, -1, 1}}, {"S_{2,1}", 2, {2, 0, -1}}};
  return g;
}

static Group make_s4() {
  Group g;
  g.id = "S4";
  g.order = 24;
  g.full_table = true;
  g.classes = {{"e", Perm::identity(4), 1},
               {"(12)", Perm::from_cycles(4, {{1, 2}}), 6},
               {"(12)(34)", Perm::from_cycles(4, {{1, 2}, {3, 4}}), 3},
               {"(123)", Perm::from_cycles(4, {{1, 2, 3}}), 8},
               {"(1234)", Perm::from_cycles(4, {{1, 2, 3, 4}}), 6}};
  g.irreps = {{"S_4", 1, {1, 1, 1, 1, 1}},
              {"sign", 1, {1, -1, 1, 1, -1}},
              {"S_{2,2}", 2, {2, 0, 2, -1, 0}},
              {"S_{3,1}", 3, {3, 1, -1, 0, -1}},
              {"S_{2,1^2}", 3, {3, -1, -1, 0, 1}}};
  g.alias = {{"triv", "S_4"}};
  return g;
}

static Group make_s5() {
  Group g;
  g.id = "S5";
  g.order = 120;
  g.full_table = false;  // only the rows the computation needs
  g.classes = {{"e", Perm::identity(5), 1},
               {"(12)", Perm::from_cycles(5, {{1, 2}}), 10},
               {"(12)(34)", Perm::from_cycles(5, {{1, 2}, {3, 4}}), 15},
               {"(123)", Perm::from_cycles(5, {{1, 2, 3}}), 20},
               {"(123)(45)", Perm::from_cycles(5, {{1, 2, 3}, {4, 5}}), 20},
               {"(1234)", Perm::from_cycles(5, {{1, 2, 3, 4}}), 30},
               {"(12345)", Perm::from_cycles(5, {{1, 2, 3, 4, 5}}), 24}};
  g.irreps = {{"S_5", 1, {1, 1, 1, 1, 1, 1, 1}},
              {"S_{3,2}", 5, {5, 1, 1, -1, 1, -1, 0}},
              {"S_{3,1^2}", 6, {6, 0, -2, 0, 0, 0, 1}}};
  g.alias = {{"triv", "S_5"}};
  return g;
}

static Group make_d4() {
  Group g;
  g.id = "D4";
  g.order = 8;
  g.full_table = true;
  // the 8-element subgroup of S4 generated by (1 3 2 4) and (1 2); class
  // representatives follow the table column order e, (12)(34), (1324), (12),
  // (13)(24)
  Perm r = Perm::from_cycles(4, {{1, 3, 2, 4}});
  Perm s = Perm::from_cycles(4, {{1, 2}});
  g.classes = {{"e", Perm::identity(4), 1},
               {"(12)(34)", r.compose(r), 1},
               {"(1324)", r, 2},
               {"(12)", s, 2},
               {"(13)(24)", Perm::from_cycles(4, {{1, 3}, {2, 4}}), 2}};
  g.irreps = {{"psi1", 1, {1, 1, 1, 1, 1}},
              {"psi2", 1, {1, 1, 1, -1, -1}},
              {"psi3", 1, {1, 1, -1, 1, -1}},
              {"psi4", 1, {1, 1, -1, -1, 1}},
              {"chi", 2, {2, -2, 0, 0, 0}}};
  g.alias = {{"rho1", "psi2"}, {"rho2", "psi3"}, {"rho3", "psi4"}, {"triv", "psi1"}};
  Perm e = Perm::identity(4);
  Perm cur = e;
  for (int i = 0; i < 4; ++i) {
    g.elements.push_back(cur);
    g.elements.push_back(cur.compose(s));
    cur = cur.compose(r);
  }
  return g;
}

const Group& group(const std::string& id) {
  static const Group s2 = make_s2();
  static const Group s3 = make_s3();
  static const Group s4 = make_s4();
  static const Group s5 = make_s5();
  static const Group d4 = make_d4();
  if (id == "S2") return s2;
  if (id == "S3") return s3;
  if (id == "S4") return s4;
  if (id == "S5") return s5;
  if (id == "D4") return d4;
  throw Error(Errc::usage, "unknown group '" + id + "' (valid: S2 S3 S4 S5 D4)");
}

std::vector<std::string> group_ids() { return {"S2", "S3", "S4", "S5", "D4"}; }

VirtualCharacter VirtualCharacter::of(
    const std::string& group_id, std::initializer_list<std::pair<std::string, long long>> ms) {
  VirtualCharacter v;
  v.group_id = group_id;
  const Group& g = group(group_id);
  for (const auto& [name, m] : ms) {
    if (m == 0) continue;
    v.mult[g.irrep(name).name] += m;
  }
  return v;
}

long long VirtualCharacter::dimension() const {
  const Group& g = group(group_id);
  long long d = 0;
  for (const auto& [name, m] : mult) d += m * g.irrep(name).dim;
  return d;
}

long long VirtualCharacter::value_at(int class_index) const {
  const Group& g = group(group_id);
  long long v = 0;
  for (const auto& [name, m] : mult) v += m * g.irrep(name).values[class_index];
  return v;
}

VirtualCharacter VirtualCharacter::plus(const VirtualCharacter& other) const {
  if (group_id != other.group_id)
    throw Error(Errc::domain, "virtual characters over different groups");
  VirtualCharacter v = *this;
  for (const auto& [name, m] : other.mult) {
    v.mult[name] += m;
    if (v.mult[name] == 0) v.mult.erase(name);
  }
  return v;
}

static Perm extend_fixing_last(const Perm& p) {
  Perm q = p;
  q.img.push_back(static_cast<int>(q.img.size()));
  return q;
}

static Perm embed_identity(const Perm& p) { return p; }

const Embedding& embedding(const std::string& id) {
  static const std::vector<Embedding> table = {
      {"S4->S5", "S4", "S5", &extend_fixing_last},
      {"S3->S4", "S3", "S4", &extend_fixing_last},
      {"S2->S3", "S2", "S3", &extend_fixing_last},
      {"D4->S4", "D4", "S4", &embed_identity},
      {"D4->S5", "D4", "S5", &extend_fixing_last},
  };
  for (const auto& e : table)
    if (e.id == id) return e;
  throw Error(Errc::usage, "unknown embedding '" + id +
                               "' (valid: S4->S5 S3->S4 S2->S3 D4->S4 D4->S5)");
}

std::vector<std::string> embedding_ids() {
  return {"S4->S5", "S3->S4", "S2->S3", "D4->S4", "D4->S5"};
}

VirtualCharacter restrict_character(const VirtualCharacter& v, const std::string& embedding_id) {
  const Embedding& e = embedding(embedding_id);
  if (v.group_id != e.super)
    throw Error(Errc::domain, "restrict_character: character lives over " + v.group_id +
                                  ", embedding expects " + e.super);
  const Group& sub = group(e.sub);
  const Group& super = group(e.super);

  std::vector<long long> values(sub.classes.size());
  for (size_t ci = 0; ci < sub.classes.size(); ++ci)
    values[ci] = v.value_at(super.class_of(e.map(sub.classes[ci].rep)));

  VirtualCharacter out;
  out.group_id = e.sub;
  for (const auto& ir : sub.irreps) {
    long long num = 0;
    for (size_t ci = 0; ci < sub.classes.size(); ++ci)
      num += sub.classes[ci].size * values[ci] * ir.values[ci];
    if (num % sub.order != 0)
      throw Error(Errc::mismatch, "restrict_character: non-integer multiplicity of " + ir.name +
                                      " (corrupt table or wrong embedding)");
    long long m = num / sub.order;
    if (m != 0) out.mult[ir.name] = m;
  }
  return out;
}

long long isotypic_multiplicity(const VirtualCharacter& v, const std::string& irrep_name) {
  const Group& g = group(v.group_id);
  const Irrep& ir = g.irrep(irrep_name);
  long long num = 0;
  for (size_t ci = 0; ci < g.classes.size(); ++ci)
    num += g.classes[ci].size * v.value_at(static_cast<int>(ci)) * ir.values[ci];
  if (num % g.order != 0)
    throw Error(Errc::mismatch, "isotypic_multiplicity: non-integer inner product");
  return num / g.order;
}

Perm marked_action_rotation() {
  // (E1 E3 E2 E4) on the square, the quarter turn also swaps the lines r, s
  // and with them the tangent points A, B; P and M stay put
  return Perm::from_cycles(8, {{1, 3, 2, 4}, {5, 6}});
}

Perm marked_action_reflection() {
  // (E1 E2) swaps the two points on one line and moves nothing else
  return Perm::from_cycles(8, {{1, 2}});
}

std::string sign_local_system(const Perm& rot_image, const Perm& refl_image) {
  if (rot_image.size() != 8 || refl_image.size() != 8)
    throw Error(Errc::domain, "sign_local_system: images must act on 8 labelled points");
  const Perm id8 = Perm::identity(8);
  const Perm r = rot_image, s = refl_image;
  const Perm r2 = r.compose(r);
  // the assignment extends to the whole group iff the relations hold
  if (!(r2.compose(r2) == id8) || !(s.compose(s) == id8) ||
      !(s.compose(r).compose(s) == r.inverse()))
    throw Error(Errc::domain, "sign_local_system: images do not satisfy the D4 relations");
  std::vector<Perm> elems;
  Perm cur = id8;
  for (int i = 0; i < 4; ++i) {
    elems.push_back(cur);
    elems.push_back(cur.compose(s));
    cur = cur.compose(r);
  }

  const Group& d4 = group("D4");
  Perm ar = Perm::from_cycles(4, {{1, 3, 2, 4}});
  Perm as = Perm::from_cycles(4, {{1, 2}});
  std::vector<long long> chi(d4.classes.size(), 0);
  std::vector<long long> seen(d4.classes.size(), 0);
  Perm acur = Perm::identity(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      Perm abstract = j ? acur.compose(as) : acur;
      Perm image = j ? elems[2 * i + 1] : elems[2 * i];
      int ci = d4.class_of(abstract);
      long long sg = image.sign();
      if (seen[ci] && chi[ci] != sg)
        throw Error(Errc::mismatch, "sign_local_system: signs are not a class function");
      chi[ci] = sg;
      seen[ci] = 1;
    }
    acur = acur.compose(ar);
  }
  for (const auto& ir : d4.irreps) {
    if (ir.dim != 1) continue;
    if (std::equal(chi.begin(), chi.end(), ir.values.begin())) return ir.name;
  }
  throw Error(Errc::mismatch, "sign_local_system: character matches no 1-dimensional irreducible");
}

nlohmann::json table_to_json(const Group& g) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : g.classes) classes.push_back({{"name", c.name}, {"size", c.size}});
  nlohmann::json irreps = nlohmann::json::array();
  for (const auto& ir : g.irreps)
    irreps.push_back({{"name", ir.name}, {"dim", ir.dim}, {"values", ir.values}});
  nlohmann::json aliases = nlohmann::json::object();
  for (const auto& [a, b] : g.alias) aliases[a] = b;
  return nlohmann::json{{"group", g.id},
                        {"order", g.order},
                        {"full_table", g.full_table},
                        {"classes", classes},
                        {"irreps", irreps},
                        {"aliases", aliases}};
}

nlohmann::json vchar_to_json(const VirtualCharacter& v) {
  nlohmann::json mults = nlohmann::json::object();
  for (const auto& [name, m] : v.mult) mults[name] = m;
  return nlohmann::json{{"group", v.group_id}, {"mult", mults}, {"dim", v.dimension()}};
}

VirtualCharacter vchar_from_json(const nlohmann::json& j) {
  VirtualCharacter v;
  v.group_id = j.at("group").get<std::string>();
  const Group& g = group(v.group_id);
  for (const auto& [name, m] : j.at("mult").items()) {
    long long mm = m.get<long long>();
    if (mm != 0) v.mult[g.irrep(name).name] += mm;
  }
  return v;
}

}  // namespace trig5::rep
