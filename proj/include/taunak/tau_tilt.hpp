#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taunak/serial.hpp"
#include "taunak/smc.hpp"

namespace taunak {

// M ⊔ P[1].
struct TauRigidPair {
  std::vector<Indec> modules;
  std::vector<Indec> shifted;
  friend auto operator<=>(const TauRigidPair&, const TauRigidPair&) = default;
  int rank() const { return static_cast<int>(modules.size() + shifted.size()); }
  std::vector<SignedIndec> members() const;
  bool contains(const SignedIndec& x) const;
};

TauRigidPair canonical(TauRigidPair p);
TauRigidPair pair_from(const std::vector<SignedIndec>& xs);
std::string format_pair(const TauRigidPair& p);

using IndecSet = std::vector<Indec>;  // sorted

bool self_rigid(const Nakayama& alg, const SignedIndec& x);
bool compatible(const Nakayama& alg, const SignedIndec& x, const SignedIndec& y);
// Throws std::invalid_argument when a shifted entry is not projective.
Check is_tau_rigid(const Nakayama& alg, const TauRigidPair& u);
bool is_stt(const Nakayama& alg, const TauRigidPair& u);

std::vector<SignedIndec> rigid_objects(const Nakayama& alg);
IndecSet fac(const Nakayama& alg, const std::vector<Indec>& modules);
IndecSet perpendicular_category(const Nakayama& alg, const TauRigidPair& u);  // ⊥(τM) ∩ P^⊥
std::vector<Indec> bongartz_complement(const Nakayama& alg, const TauRigidPair& u);

struct Mutation {
  TauRigidPair result;
  SignedIndec replaced;
  SignedIndec replacement;
  bool left = false;
};
Mutation mutate_stt(const Nakayama& alg, const TauRigidPair& t, const SignedIndec& at);

struct ExchangeEdge {
  int from = 0, to = 0;
  SignedIndec at, replacement;
  bool left = false;
};

struct ExchangeGraph {
  std::vector<TauRigidPair> vertices;
  std::vector<ExchangeEdge> edges;
  int index_of(const TauRigidPair& p) const;
};

ExchangeGraph all_stt(const Nakayama& alg);
const ExchangeGraph& all_stt_cached(const Nakayama& alg);
// Brute-force oracle: all τ-rigid pairs (including the empty one).
std::vector<TauRigidPair> all_tau_rigid(const Nakayama& alg);

// A wide subcategory Filt(simples) together with its re-presentation as a
// Nakayama algebra; dict[v-1] is the brick corresponding to local vertex v.
struct WideSub {
  std::vector<Indec> simples;
  Nakayama local;
  std::vector<Indec> dict;
  int rank() const { return static_cast<int>(simples.size()); }
  friend bool operator==(const WideSub& a, const WideSub& b) { return a.simples == b.simples; }
  friend bool operator<(const WideSub& a, const WideSub& b) { return a.simples < b.simples; }
};

WideSub wide_as_algebra(const Nakayama& alg, std::vector<Indec> semibrick);
WideSub whole_category(const Nakayama& alg);
Indec realize(const Nakayama& alg, const WideSub& w, Indec local);
std::optional<Indec> localize(const Nakayama& alg, const WideSub& w, Indec x);
SignedIndec realize(const Nakayama& alg, const WideSub& w, const SignedIndec& local);
std::optional<SignedIndec> localize(const Nakayama& alg, const WideSub& w, const SignedIndec& x);
TauRigidPair localize(const Nakayama& alg, const WideSub& w, const TauRigidPair& u);
TauRigidPair realize(const Nakayama& alg, const WideSub& w, const TauRigidPair& u);
IndecSet members(const Nakayama& alg, const WideSub& w);
// Oracle: indecomposables filtered by the semibrick, by greedy segmentation.
IndecSet filt_closure(const Nakayama& alg, const std::vector<Indec>& semibrick);

// Simples of (M⊔P)^⊥ ∩ ⊥(τM), computed directly in alg.
std::vector<Indec> jasso_simples(const Nakayama& alg, const TauRigidPair& u);
// u is given in the coordinates of alg (relative to w).
WideSub jasso(const Nakayama& alg, const WideSub& w, const TauRigidPair& u);

// E-bijection for an ordered decomposition u; x relative to w.
// The result is relative to jasso(alg, w, u).
SignedIndec e_bijection(const Nakayama& alg, const WideSub& w, const std::vector<SignedIndec>& u,
                        const SignedIndec& x);
TauRigidPair e_bijection(const Nakayama& alg, const WideSub& w, const std::vector<SignedIndec>& u,
                         const TauRigidPair& x);
// Lattice characterization: intersection of the reductions of all
// support τ-tilting completions of u ⊔ x.
SignedIndec e_bijection_by_lattice(const Nakayama& alg, const WideSub& w, const TauRigidPair& u,
                                   const SignedIndec& x);
// Preimage scan.
std::optional<SignedIndec> e_inverse(const Nakayama& alg, const WideSub& w, const TauRigidPair& u,
                                     const SignedIndec& y);

struct ExceptionalEntry {
  SignedIndec object;
  WideSub ambient;
};
using ExceptionalSequence = std::vector<ExceptionalEntry>;

ExceptionalSequence psi(const Nakayama& alg, const WideSub& w, const std::vector<SignedIndec>& ordered);
std::optional<std::vector<SignedIndec>> psi_inverse(const Nakayama& alg, const WideSub& w,
                                                    const ExceptionalSequence& seq);

}  // namespace taunak
