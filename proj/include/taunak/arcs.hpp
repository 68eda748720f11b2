#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taunak/serial.hpp"

namespace taunak {

// Boundary arc from s(a) of length l(a), ending at t(a) = (s(a)+l(a))_n.
struct Arc {
  int source = 1;
  int length = 1;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class Color { green, red };

struct ColoredArc {
  Arc arc;
  Color color = Color::green;
  friend auto operator<=>(const ColoredArc&, const ColoredArc&) = default;
};

struct ArcPattern {
  std::vector<Arc> green;
  std::vector<Arc> red;
  friend auto operator<=>(const ArcPattern&, const ArcPattern&) = default;
  size_t size() const { return green.size() + red.size(); }
  std::vector<ColoredArc> colored() const;
};

ArcPattern canonical(ArcPattern p);
ArcPattern pattern_of(const std::vector<ColoredArc>& arcs);

int target(const AlgebraSpec& spec, Arc a);
bool is_loop(const AlgebraSpec& spec, Arc a);
bool is_arc(const AlgebraSpec& spec, Arc a);
inline Indec module_of(Arc a) { return {a.source, a.length}; }
inline Arc arc_of(Indec brick) { return {brick.top, brick.len}; }

std::vector<Arc> arcs(const AlgebraSpec& spec);

enum class CaseTag { La, Lb, Lc, Ld, Sa, Sb, Sc, Sd, Se, Sf, Sg };
const char* to_string(CaseTag t);

// What a case statement asserts about Hom between the two modules.
enum class HomExpect { unspecified, zero, nonzero, has_epi, has_mono };

struct Intersection {
  CaseTag tag = CaseTag::Sa;
  // Ordered as in the case statement (e.g. the loop first in L-cases,
  // t(first) = s(second) in S-b).
  Arc first, second;
  int interior_crossings = 0;
  std::optional<Arc> counterclockwise;
  HomExpect hom12 = HomExpect::unspecified;  // Hom(M(first), M(second))
  HomExpect hom21 = HomExpect::unspecified;
  // S-f: exactly one direction is nonzero and it has no mono or epi.
  bool one_sided_proper = false;
  std::optional<bool> ext12;  // Ext(M(first), M(second)) != 0
  std::optional<bool> ext21;
};

int interior_crossings(const AlgebraSpec& spec, Arc a1, Arc a2);
Intersection classify_intersection(const AlgebraSpec& spec, Arc a1, Arc a2);

struct Admissibility {
  bool ok = true;
  char condition = 0;  // 'a', 'b', 'c', or 'x' for a malformed pattern
  ColoredArc x, y;
  std::string detail;
};

Admissibility is_admissible(const AlgebraSpec& spec, const ArcPattern& p);
bool compatible(const AlgebraSpec& spec, const ColoredArc& x, const ColoredArc& y);

std::vector<ArcPattern> enumerate_maximal_patterns(const AlgebraSpec& spec, int workers = 1);
// Greedy single-arc extension of an admissible pattern to a maximal one.
std::optional<ArcPattern> extend_to_maximal(const AlgebraSpec& spec, const ArcPattern& p);
bool is_maximal(const AlgebraSpec& spec, const ArcPattern& p);

ArcPattern rotate(const AlgebraSpec& spec, const ArcPattern& p, int k);
bool rotation_invariant(const AlgebraSpec& spec, int k);

struct PathStep {
  Arc arc;
  bool reverse = false;
};

struct PathResult {
  std::optional<Indec> module;
  std::string failure;  // "endpoint mismatch" or "not a brick length"
  int signed_length = 0;
};

PathResult compose_path(const AlgebraSpec& spec, const std::vector<PathStep>& steps);
bool is_proper_path(const AlgebraSpec& spec, const std::vector<PathStep>& steps);

std::string pattern_tikz(const AlgebraSpec& spec, const ArcPattern& p);
std::string pattern_svg(const AlgebraSpec& spec, const ArcPattern& p);

}  // namespace taunak
