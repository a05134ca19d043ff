#pragma once

// Rational character tables for S2, S3, S4, D4 and the three S5 rows the
// moduli computation consumes, with restriction along registered subgroup
// embeddings and exact isotypic extraction.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hg_ring.hpp"

namespace trig5::rep {

// permutation on {0, ..., n-1}; img[i] is the image of i
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  // cycles given in 1-based labels, e.g. {{1,3,2,4}} for (1 3 2 4)
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  int size() const { return static_cast<int>(img.size()); }
  Perm compose(const Perm& other) const;  // this after other
  Perm inverse() const;
  int sign() const;
  std::vector<int> cycle_type() const;  // descending part lengths
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

struct ConjClass {
  std::string name;
  Perm rep;
  long size;
};

struct Irrep {
  std::string name;
  long dim;
  std::vector<long long> values;  // aligned with the class list
};

struct Group {
  std::string id;
  long order;
  std::vector<ConjClass> classes;
  std::vector<Irrep> irreps;
  bool full_table;                           // the S5 table is partial
  std::map<std::string, std::string> alias;  // e.g. rho1 -> psi2
  std::vector<Perm> elements;                // populated for D4 only

  int class_of(const Perm& g) const;
  const Irrep& irrep(const std::string& name) const;
  bool has_irrep(const std::string& name) const;
};

const Group& group(const std::string& id);  // S2, S3, S4, S5, D4
std::vector<std::string> group_ids();

struct VirtualCharacter {
  std::string group_id;
  std::map<std::string, long long> mult;  // irrep name -> multiplicity

  static VirtualCharacter of(const std::string& group_id,
                             std::initializer_list<std::pair<std::string, long long>> ms);
  long long dimension() const;
  long long value_at(int class_index) const;
  VirtualCharacter plus(const VirtualCharacter& other) const;
  bool operator==(const VirtualCharacter& o) const {
    return group_id == o.group_id && mult == o.mult;
  }
};

struct Embedding {
  std::string id;  // "S4->S5" etc.
  std::string sub, super;
  Perm (*map)(const Perm&);
};

const Embedding& embedding(const std::string& id);
std::vector<std::string> embedding_ids();

// pull the character back along the embedding and re-expand it in the
// subgroup's irreducibles; multiplicities must come out integral
VirtualCharacter restrict_character(const VirtualCharacter& v, const std::string& embedding_id);

// class-size-weighted inner product with one irreducible
long long isotypic_multiplicity(const VirtualCharacter& v, const std::string& irrep_name);

// Signs of a D4 action on 8 labelled points, matched against the table of
// 1-dimensional characters.  Input: images of the generators (1 3 2 4) and
// (1 2) as permutations of the 8 points.
std::string sign_local_system(const Perm& rot_image, const Perm& refl_image);

// the action on {E1,E2,E3,E4,A,B,P,M} induced by the square of intersection
// points: quarter turn swaps the two lines (hence A,B), reflections likewise
Perm marked_action_rotation();
Perm marked_action_reflection();

nlohmann::json table_to_json(const Group& g);
nlohmann::json vchar_to_json(const VirtualCharacter& v);
VirtualCharacter vchar_from_json(const nlohmann::json& j);

}  // namespace trig5::rep
