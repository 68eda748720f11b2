#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taunak {

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Connected Nakayama algebra: n vertices, kupisch[i-1] = Loewy length of P_i.
struct AlgebraSpec {
  int n = 0;
  std::vector<int> kupisch;

  int l(int i) const { return kupisch[i - 1]; }
  bool linear() const { return kupisch.back() == 1; }
  std::string name() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
  friend auto operator<=>(const AlgebraSpec&, const AlgebraSpec&) = default;
};

AlgebraSpec validate_spec(int n, const std::vector<int>& kupisch);

// i_n: the representative of i in [1, n].
inline int cyc(int i, int n) { return ((i - 1) % n + n) % n + 1; }

// x in [i, j]_n, the cyclic interval read counterclockwise from i to j.
bool in_cyclic_interval(int x, int i, int j, int n);

// M(top, len).
struct Indec {
  int top = 1;
  int len = 1;
  friend auto operator<=>(const Indec&, const Indec&) = default;
};

struct SignedIndec {
  Indec base;
  bool shifted = false;
  friend auto operator<=>(const SignedIndec&, const SignedIndec&) = default;
};

enum class HomKind { none, iso, mono, epi, proper };
const char* to_string(HomKind k);

// A basic Nakayama algebra given as a disjoint union of connected specs.
// Vertices are numbered 1..size() globally, component by component.
class Nakayama {
 public:
  Nakayama() = default;
  explicit Nakayama(AlgebraSpec spec);
  explicit Nakayama(std::vector<AlgebraSpec> components);

  int size() const { return static_cast<int>(comp_of_.size()); }
  const std::vector<AlgebraSpec>& components() const { return comps_; }
  bool connected() const { return comps_.size() == 1; }
  const AlgebraSpec& spec() const;

  int component(int v) const { return comp_of_[v - 1]; }
  int component_size(int v) const { return comps_[component(v)].n; }
  int loewy(int v) const { return loewy_[v - 1]; }
  // v + k, cyclically inside the component of v.
  int shift(int v, int k) const;

  bool valid(Indec x) const;
  bool same_component(Indec x, Indec y) const { return component(x.top) == component(y.top); }
  std::vector<int> factors(Indec x) const;
  int socle(Indec x) const { return shift(x.top, x.len - 1); }

  std::vector<Indec> indecomposables() const;
  std::vector<Indec> bricks() const;
  std::vector<Indec> projectives() const;
  std::vector<SignedIndec> signed_indecomposables() const;
  Indec projective(int v) const { return {v, loewy(v)}; }

  bool is_brick(Indec x) const { return x.len <= component_size(x.top); }
  bool is_projective(Indec x) const { return x.len == loewy(x.top); }
  bool is_injective(Indec x) const;

  std::optional<Indec> tau(Indec x) const;
  std::optional<Indec> tau_inverse(Indec x) const;
  std::optional<Indec> syzygy(Indec x) const;

  // Lengths t of the common windows: quotient M(i,t) of x equal to the
  // length-t submodule of y. Each window is one basis map x -> y.
  std::vector<int> windows(Indec x, Indec y) const;
  int hom_dim(Indec x, Indec y) const;
  HomKind hom_kind(Indec x, Indec y) const;
  int ext_dim(Indec x, Indec y) const;

  // Largest image length of a non-isomorphism x -> y (0 if none).
  int max_radical_window(Indec x, Indec y) const;

  friend bool operator==(const Nakayama& a, const Nakayama& b) { return a.comps_ == b.comps_; }
  friend bool operator<(const Nakayama& a, const Nakayama& b) { return a.comps_ < b.comps_; }

 private:
  std::vector<AlgebraSpec> comps_;
  std::vector<int> comp_of_;
  std::vector<int> offset_;
  std::vector<int> loewy_;
};

std::string format_indec(Indec x);
std::string format_signed(const SignedIndec& x);
Indec parse_indec(const std::string& s);
SignedIndec parse_signed(const std::string& s);

}  // namespace taunak
