#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taunak/arcs.hpp"
#include "taunak/serial.hpp"

namespace taunak {

// S_p ⊔ S_n[1].
struct SemibrickPair {
  std::vector<Indec> positive;
  std::vector<Indec> negative;
  friend auto operator<=>(const SemibrickPair&, const SemibrickPair&) = default;
  size_t size() const { return positive.size() + negative.size(); }
  std::vector<SignedIndec> signed_members() const;
};

SemibrickPair canonical(SemibrickPair p);
SemibrickPair pair_of(const ArcPattern& p);
ArcPattern pattern_of(const SemibrickPair& p);
std::string format_pair(const SemibrickPair& p);

struct Check {
  bool ok = true;
  std::string reason;
  std::optional<Indec> x, y;
  explicit operator bool() const { return ok; }
};

Check is_semibrick(const Nakayama& alg, const std::vector<Indec>& s);
Check is_semibrick_pair(const Nakayama& alg, const SemibrickPair& p);
Check is_mutation_compatible(const Nakayama& alg, const SemibrickPair& p);

struct Completion {
  bool completable = false;
  std::optional<SemibrickPair> completion;
  Check obstruction;
};

// Extension search over admissible arc patterns. The result is compared with
// mutation compatibility by the tests, not assumed.
Completion is_completable(const AlgebraSpec& spec, const SemibrickPair& p);
// Brute force: containment in some enumerated maximal pattern.
bool completable_by_containment(const std::vector<ArcPattern>& maximal, const SemibrickPair& p);

struct SmcVerdict {
  bool by_maximality = false;
  bool by_rank = false;  // |S_p|+|S_n| = n and mutation compatible
  bool agree() const { return by_maximality == by_rank; }
  bool value() const { return by_maximality && by_rank; }
};
SmcVerdict is_2smc(const AlgebraSpec& spec, const SemibrickPair& p);

std::vector<SemibrickPair> all_smc(const AlgebraSpec& spec, int workers = 1);

// Left mutation at s in S_p by arc arithmetic.
SemibrickPair mutate_smc(const AlgebraSpec& spec, const SemibrickPair& x, Indec s);
// Inverse lookup of left mutation over the given set.
std::optional<SemibrickPair> right_mutate_smc(const AlgebraSpec& spec, const SemibrickPair& x, Indec s,
                                              const std::vector<SemibrickPair>& all);

}  // namespace taunak
