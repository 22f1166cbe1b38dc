#pragma once

#include "catkern/catspec.hpp"
#include "catkern/structures.hpp"

#include <functional>

namespace catkern {

// ---- element-level finite-set calculus --------------------------------------
//
// Canonical encodings, shared by the materialized category and the lazy
// monad instances: elements are naturals, pairs use the lexicographic index
// x * |Y| + y, functions use little-endian base-|cod| numerals.

struct SetFn {
  int dom = 0, cod = 0;
  std::vector<std::int32_t> tab; // size dom, values < cod
  friend auto operator<=>(const SetFn&, const SetFn&) = default;
  int operator()(int x) const { return tab[x]; }
};

SetFn set_id(int n);
SetFn set_compose(const SetFn& g, const SetFn& f);
SetFn set_const(int dom, int cod, int value);

inline int pair_index(int x, int y, int ny) { return x * ny + y; }

SetFn fn_pi1(int nx, int ny);
SetFn fn_pi2(int nx, int ny);
SetFn fn_pair(const SetFn& f, const SetFn& g); // <f,g> : dom -> cod_f * cod_g
SetFn fn_times(const SetFn& f, const SetFn& g);
SetFn fn_swap(int nx, int ny);
SetFn fn_assoc(int a, int b, int c);     // (a*b)*c -> a*(b*c)
SetFn fn_assoc_inv(int a, int b, int c);
SetFn fn_delta(int n);
SetFn fn_bang(int n); // n -> 1

long long exp_size(int base, int result); // result^base
int fn_numeral(const SetFn& f);           // numeral of f within result^base
SetFn fn_from_numeral(long long idx, int base, int result);
SetFn fn_ev(int base, int result); // (result^base * base) -> result
SetFn fn_curry(const SetFn& g, int c, int base);   // g : c*base -> r  =>  c -> r^base
SetFn fn_uncurry(const SetFn& f, int base, int result); // f : c -> r^base => c*base -> r

/// A subset of {0..ambient-1} renumbered as {0..k-1} with its inclusion.
struct Carved {
  int size = 0;
  std::vector<std::int32_t> member; // sorted
  SetFn incl;
  int index_of(int ambient_element) const; // -1 if absent
};
Carved carve(int ambient, std::vector<std::int32_t> members);

// ---- monoids and set monads ---------------------------------------------------

struct Monoid {
  std::string name;
  int size = 1;
  int unit = 0;
  std::vector<std::int32_t> mul; // row-major a*size+b
  int at(int a, int b) const { return mul[a * size + b]; }
  bool valid() const;
  bool abelian() const;
};

Monoid trivial_monoid();
Monoid cyclic2();
Monoid left_zero3(); // unit plus two left-absorbing elements; not abelian
std::optional<Monoid> parse_monoid(const std::string& name);

/// Element-level monad tables over finite sets: carrier map, functor action,
/// unit, multiplication and tensorial left strength, all by formula.
struct SetMonad {
  enum class Kind { Maybe, Writer };
  Kind kind = Kind::Maybe;
  Monoid monoid; // Writer payload
  std::string name;

  int T(int n) const;
  SetFn map(const SetFn& f) const; // T f
  SetFn eta(int n) const;          // A -> TA
  SetFn mu(int n) const;           // T^2 A -> TA
  SetFn lst(int a, int b) const;   // A x TB -> T(A x B)
  SetFn rst(int a, int b) const;   // TA x B -> T(A x B), swap-derived
};

SetMonad maybe_monad();
SetMonad writer_monad(Monoid m);

// ---- materialized finite-sets category ---------------------------------------

/// The full category of canonical sets {0..k-1}, k <= max_size, with every
/// function as a morphism, plus the chosen (partial) cartesian structure,
/// pullbacks and equalizers. Absent witnesses reflect genuine absence in the
/// bounded fragment, certified by element counting.
class FinSetInstance {
public:
  int max_size = 0;
  CatPtr cat;
  std::vector<int> obj_size; // per ObjId
  CartesianStructure structure;

  ObjId obj_of(int size) const;
  MorId mor_of(const SetFn& f) const;
  const SetFn& fn(MorId m) const { return (*fns_)[m]; }

  const PullbackChooser& pullbacks() const;
  /// Chosen equalizer (agreement subset); equalizers always exist here.
  const EqualizerWitness& equalizer(MorId f, MorId g) const;

  /// Dependent-product object hook for the slice machinery: for f : B -> A
  /// and a slice object arrow v : Y -> B, the arrow (Pi_f Y) -> A built from
  /// fiberwise sections, or nullopt when its carrier exceeds the bound.
  std::optional<MorId> dep_prod_object(MorId f, MorId v) const;

private:
  friend FinSetInstance finset(int, double);
  class Pullbacks;
  std::shared_ptr<const std::vector<SetFn>> fns_; // per MorId
  std::shared_ptr<Pullbacks> pullbacks_;
  mutable std::map<std::pair<MorId, MorId>, EqualizerWitness> eqCache_;
};

/// Builds and fully validates the instance. Throws BoundExceeded when the
/// morphism count passes the cap.
FinSetInstance finset(int n, double morphism_cap = 2e5);

// ---- the zoo -------------------------------------------------------------------

struct ZooEntry {
  std::string name;
  CatPtr cat;
  std::vector<std::pair<std::string, std::string>> annotations;
};

struct AnnotationCheck {
  std::string key, expected, actual;
  bool ok = false;
};

/// Loads every .catspec in dir (sorted by filename) and verifies annotations.
std::vector<ZooEntry> load_zoo(const std::string& dir);
std::vector<AnnotationCheck> verify_annotations(const ZooEntry& e);

/// The predicate fibration over a finset instance: objects are pairs of a set
/// and a subset, morphisms are functions mapping the subset into the subset.
/// The projection to the underlying sets is a split fibration with a generic
/// object carried by the two-element set.
FunctorData subset_fibration(const FinSetInstance& inst);

} // namespace catkern
