#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taunak/tau_tilt.hpp"
#include "taunak/tors.hpp"

namespace taunak {

// [U]: source -> J(U); payload in the coordinates of the ambient algebra.
struct MorphW {
  std::vector<Indec> source;  // simples of the source wide subcategory
  TauRigidPair payload;
  int rank() const { return payload.rank(); }
  friend auto operator<=>(const MorphW&, const MorphW&) = default;
};

std::string format_morphism(const MorphW& f);

struct FactorizationCube {
  MorphW base;
  std::vector<SignedIndec> order;
  std::vector<std::vector<Indec>> vertex;  // indexed by subset bitmask
  bool injective = false;
  int k() const { return static_cast<int>(order.size()); }
};

class ClusterCategory {
 public:
  explicit ClusterCategory(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  const Nakayama& algebra() const { return alg_; }
  const std::vector<WideSub>& objects() const { return objects_; }
  const WideSub& object(const std::vector<Indec>& simples) const;
  bool has_object(const std::vector<Indec>& simples) const;
  const WideSub& top() const { return object(whole_category(alg_).simples); }

  std::vector<Indec> target(const MorphW& f) const;
  MorphW identity(const WideSub& w) const { return {w.simples, {}}; }
  // Every morphism out of w, identity included.
  std::vector<MorphW> morphisms_from(const WideSub& w) const;
  std::vector<MorphW> all_morphisms() const;
  std::vector<MorphW> morphisms_of_rank(int k) const;

  // [U ⊔ x] restricted: E-image of x in J(u) relative to the source of u.
  SignedIndec e_map(const std::vector<Indec>& source, const std::vector<SignedIndec>& u,
                    const SignedIndec& x) const;
  // g after f.
  MorphW compose(const MorphW& f, const MorphW& g) const;

  FactorizationCube factorization_cube(const MorphW& f) const;
  // Morphism from vertex s to vertex t (s ⊂ t) of the cube.
  MorphW cube_edge(const FactorizationCube& c, unsigned s, unsigned t) const;
  std::vector<MorphW> first_factors(const MorphW& f) const;
  std::vector<MorphW> last_factors(const MorphW& f) const;
  // br^{-1} of a morphism into 0 from a rank-1 wide subcategory.
  SignedIndec br_inverse(const MorphW& last) const;
  // Number of maximal chains of rank-1 factors, found by search over all
  // morphisms rather than from the cube.
  int count_maximal_chains(const MorphW& f) const;
  // Factorizations f = g∘h found by search over all morphisms.
  int count_factorizations(const MorphW& f) const;

 private:
  AlgebraSpec spec_;
  Nakayama alg_;
  std::vector<WideSub> objects_;
  std::map<std::vector<Indec>, int> index_;
  mutable std::map<MorphW, std::vector<Indec>> target_cache_;
  mutable std::map<std::vector<Indec>, std::vector<MorphW>> from_cache_;
};

struct CubicalReport {
  bool rank_additive = true;
  bool cube_shape = true;
  bool embedding = true;
  bool first_factors = true;
  bool last_factors = true;
  bool associative = true;
  long composable_pairs = 0;
  std::string violation;
  bool ok() const { return rank_additive && cube_shape && embedding && first_factors && last_factors && associative; }
};

// exhaustive=false skips the brute-force factorization search and the
// associativity sweep over triples.
CubicalReport check_cubical(const ClusterCategory& cat, bool exhaustive = true);

struct LinkReport {
  std::vector<Indec> vertex;
  int link_vertices = 0;
  int simplices = 0;
  bool simplicial = true;  // closed under faces, no repeated or degenerate simplices
  bool flag = true;
  bool forward_sphere = true;
  std::string detail;
  bool ok() const { return simplicial && flag && forward_sphere; }
};

struct CubeComplex {
  std::vector<int> cubes_by_rank;
  std::vector<int> cells_by_rank;
  std::vector<LinkReport> links;
  bool flag() const;
};

CubeComplex build_cube_complex(const ClusterCategory& cat, int workers = 1);
std::string complex_dot(const ClusterCategory& cat);

}  // namespace taunak
