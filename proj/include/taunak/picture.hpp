#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taunak/category.hpp"
#include "taunak/tors.hpp"

namespace taunak {

// X_S^{±1}, or the coset symbol g_T when coset >= 0.
struct Letter {
  Indec brick;
  int exponent = 1;
  int coset = -1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};
using GroupWord = std::vector<Letter>;

GroupWord word_of(const std::vector<Indec>& labels);
GroupWord inverse(const GroupWord& w);
std::string format_word(const GroupWord& w);

enum class Style { polygon, path, mgs, coset };
const char* to_string(Style s);
Style parse_style(const std::string& s);

struct Relation {
  GroupWord lhs, rhs;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

struct Presentation {
  Style style = Style::polygon;
  std::vector<Indec> generators;
  int cosets = 0;  // g_0 .. g_{cosets-1}, indexed by lattice vertex
  std::vector<Relation> relations;
};

Presentation presentation(const TorsLattice& lat, Style style);
std::string format_presentation(const Presentation& p);

// Element of the brick algebra: unit coefficient plus brick coefficients.
struct BrickElement {
  long unit = 0;
  std::map<Indec, long> coef;
  friend bool operator==(const BrickElement&, const BrickElement&) = default;
};

BrickElement brick_one();
BrickElement brick_basis(Indec s);
BrickElement operator+(BrickElement a, const BrickElement& b);
BrickElement operator-(BrickElement a, const BrickElement& b);
std::string format_element(const BrickElement& x);

// S*T on basis bricks, from arc endpoints and lengths.
std::optional<Indec> brick_product(const AlgebraSpec& spec, Indec s, Indec t);
// Same product from modules: S ⊔ T a semibrick and a brick extension T ↪ B ↠ S.
std::optional<Indec> brick_product_by_modules(const Nakayama& alg, Indec s, Indec t);
BrickElement brick_mul(const AlgebraSpec& spec, const BrickElement& x, const BrickElement& y);

// Coset letters are evaluated through `cosets` when given.
BrickElement phi(const AlgebraSpec& spec, const GroupWord& w,
                 const std::vector<BrickElement>* cosets = nullptr);

struct PictureReport {
  bool relations = true;
  bool generators = true;
  bool path_invariant = true;
  bool cosets_distinct = true;
  int relations_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return relations && generators && path_invariant && cosets_distinct; }
};

PictureReport verify_presentation(const AlgebraSpec& spec, int workers = 1);

// F[U]: label word of a directed path Fac M -> 0 in tors of the source.
GroupWord group_functor(const ClusterCategory& cat, const MorphW& f);

}  // namespace taunak
