#pragma once

#include "catkern/instances.hpp"

namespace catkern {

struct Algebra {
  int carrier = 0;
  SetFn action; // T carrier -> carrier
  friend auto operator<=>(const Algebra&, const Algebra&) = default;
};

/// Action laws: action . eta = id and action . mu = action . T action.
bool is_algebra(const SetMonad& m, const Algebra& a);

/// Every action table on carriers 0..max_carrier, filtered by the laws.
std::vector<Algebra> enumerate_algebras(const SetMonad& m, int max_carrier);

/// Homomorphism square: f . a.action = b.action . T f.
bool is_algebra_hom(const SetMonad& m, const Algebra& a, const Algebra& b, const SetFn& f);

long count_algebra_homs(const SetMonad& m, const Algebra& a, const Algebra& b);

/// Kleisli lifting of f : A -> T B, as mu_B . T f : T A -> T B.
SetFn klift(const SetMonad& m, const SetFn& f, int b);

/// Materialized Kleisli fragment on objects 0..max_obj. Hom(A,B) enumerates
/// every function A -> T B; identity is eta, composition is klift(g) . f.
struct KleisliCategory {
  CatPtr cat;
  std::vector<int> obj_size;
  std::vector<SetFn> mor_fn;
};
KleisliCategory kleisli_category(const SetMonad& m, int max_obj);

/// The algebras on carriers up to the bound with all homomorphisms between
/// them, materialized and validated as a category.
struct EMCategory {
  CatPtr cat;
  std::vector<Algebra> algebras; // per object id
  std::vector<SetFn> hom_fn;     // per morphism id
  std::optional<ObjId> object_of(const Algebra& a) const;
};
EMCategory em_category(const SetMonad& m, int max_carrier);

struct EmTerminalResult {
  Algebra algebra; // (1, bang)
  bool is_object = false;
  bool unique_hom_from_every_algebra = false; // scanned over the EM fragment
};
EmTerminalResult em_terminal(const SetMonad& m, const EMCategory& em);

struct EmProductResult {
  Algebra product; // carrier a*b, action (f_A x f_B) . <T pi1, T pi2>
  SetFn pi1, pi2;
  bool action_is_algebra = false;
  bool projections_are_homs = false;
  bool pairings_are_homs = false; // <f,g> for every cone from the EM fragment
  bool pairings_unique = false;
  bool delta_is_hom = false; // for a == b agreeing carriers, plus the general square
};
EmProductResult em_product(const SetMonad& m, const EMCategory& em, const Algebra& a,
                           const Algebra& b);

/// Homomorphism-in-the-right-argument square for f : B x A -> C.
bool ahom_check(const SetMonad& m, int b, const Algebra& a, const Algebra& c,
                const SetFn& f);

/// Every f : (c x A) -> B satisfying the square.
std::vector<SetFn> enumerate_ahom(const SetMonad& m, int c, const Algebra& a,
                                  const Algebra& b);

struct InternalExponentResult {
  Algebra algebra; // carrier base => a, strength-induced action
  bool action_laws = false;
  bool ev_swap_in_ahom = false; // ev . s lies in AHom(base x this, a)
};
InternalExponentResult internal_exponent(const SetMonad& m, int base, const Algebra& a);

/// The equalizer-carved object A -o B representing AHom(- x A, B).
struct ExternalExponent {
  SetMonad monad;
  Algebra a, b;
  Carved carved; // subset of the function space a.carrier => b.carrier
  int object() const { return carved.size; }
  const SetFn& incl() const { return carved.incl; }

  SetFn theta(const SetFn& f, int c) const; // f in AHom(C x A, B) |-> C -> (A -o B)
  SetFn omega(const SetFn& g) const; // g : C -> (A -o B)  |-> C x A -> B
  bool ev_lolli_in_ahom() const;     // ev . (incl x id) in AHom((A -o B) x A, B)
};
ExternalExponent external_exponent(const SetMonad& m, const Algebra& a, const Algebra& b);

struct ThetaOmegaReport {
  long ahom_count = 0;
  long hom_count = 0;
  bool counts_equal = false;
  bool mutually_inverse = false;
};
ThetaOmegaReport verify_theta_omega(const ExternalExponent& ee, int c);

struct ConjectureProbe {
  int c = 0;
  long lhs = 0; // |Hom(C, A -o B)|
  long rhs = 0; // |Hom_EM(A, C =>* B)|
  bool equal = false;
};
ConjectureProbe conjecture_probe(const SetMonad& m, int c, const Algebra& a,
                                 const Algebra& b);

} // namespace catkern
