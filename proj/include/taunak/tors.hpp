#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taunak/smc.hpp"
#include "taunak/tau_tilt.hpp"

namespace taunak {

struct HasseArrow {
  int from = 0, to = 0;  // torsion(to) ⊂ torsion(from)
  Indec label;
  SignedIndec at;  // summand of vertices[from] that was mutated
};

// Lattice of torsion classes, one vertex per support τ-tilting pair.
struct TorsLattice {
  Nakayama alg;
  std::vector<TauRigidPair> vertices;
  std::vector<IndecSet> torsion;  // Fac of the module part
  std::vector<HasseArrow> arrows;
  std::vector<std::vector<int>> out, in;  // arrow indices
  int top = 0, bottom = 0;

  int size() const { return static_cast<int>(vertices.size()); }
  int index_of(const TauRigidPair& p) const;
  int index_of_torsion(const IndecSet& t) const;
  bool leq(int a, int b) const;  // torsion(a) ⊆ torsion(b)
  int meet(int a, int b) const;
  int join(int a, int b) const;
};

TorsLattice build_lattice(const Nakayama& alg);
const TorsLattice& build_lattice_cached(const Nakayama& alg);

// Brick in Fac(from) with Hom(to-modules, B) = 0; the label by torsion theory.
std::optional<Indec> label_by_torsion_pair(const TorsLattice& lat, const HasseArrow& a);

SemibrickPair x_of(const TorsLattice& lat, int v);

struct Polygon {
  int top = 0, bottom = 0;
  std::vector<Indec> side1, side2;  // labels read from top to bottom
};

std::vector<Polygon> polygons(const TorsLattice& lat);

// Directed paths top -> bottom as arrow index sequences.
std::vector<std::vector<int>> maximal_paths(const TorsLattice& lat);
std::vector<std::vector<Indec>> maximal_green_sequences(const TorsLattice& lat);
std::vector<Indec> labels_of(const TorsLattice& lat, const std::vector<int>& path);

struct IntervalIso {
  WideSub j;
  int lower = 0, upper = 0;             // in the ambient lattice
  std::map<int, int> to_j;              // ambient vertex -> vertex of the lattice of j.local
  bool bijective = false;
  bool order_preserving = false;
  bool label_preserving = false;
};

// Interval [Fac N, ⊥(τN) ∩ Q^⊥] of lat onto tors J(u).
IntervalIso interval_iso(const TorsLattice& lat, const TauRigidPair& u);

std::string lattice_dot(const TorsLattice& lat);

}  // namespace taunak
