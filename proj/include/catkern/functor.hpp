#pragma once

#include "catkern/category.hpp"

namespace catkern {

/// Object and morphism maps between two finite categories.
struct FunctorData {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> obj_map; // indexed by source object
  std::vector<MorId> mor_map; // indexed by source morphism

  ObjId on_obj(ObjId a) const { return obj_map[a]; }
  MorId on_mor(MorId f) const { return mor_map[f]; }
};

FunctorData identity_functor(CatPtr c);
FunctorData compose_functors(const FunctorData& g, const FunctorData& f); // g after f

/// Strict functor laws: endpoint preservation, identities, composites.
/// Returns a description of the first broken law, if any.
std::optional<std::string> functor_violation(const FunctorData& f);
inline bool is_functor(const FunctorData& f) { return !functor_violation(f); }

/// Pseudo-functor check: identity and composition laws hold up to isomorphism
/// of arrows (an iso square around the two morphisms) when up_to_iso is set,
/// strictly otherwise.
bool check_pseudo_functor(const FunctorData& f, bool up_to_iso);

struct NatTransData {
  FunctorData f; // component source
  FunctorData g; // component target
  std::vector<MorId> components; // indexed by source object, live in target

  MorId at(ObjId a) const { return components[a]; }
};

NatTransData identity_nat(const FunctorData& f);

bool check_natural(const NatTransData& alpha);
bool is_natural_iso(const NatTransData& alpha);

/// Pointwise composition of natural transformations (beta after alpha).
NatTransData vcompose_nat(const NatTransData& beta, const NatTransData& alpha);

/// Whiskering: (F . alpha) and (alpha . F).
NatTransData whisker_left(const FunctorData& f, const NatTransData& alpha);
NatTransData whisker_right(const NatTransData& alpha, const FunctorData& f);

/// left -| right with unit : id => right.left and counit : left.right => id.
struct AdjunctionData {
  FunctorData left;  // D -> C
  FunctorData right; // C -> D
  NatTransData unit;
  NatTransData counit;
};

/// Both triangle identities, componentwise:
///   (eps left) . (left unit) = id_left  and  (right eps) . (unit right) = id_right.
bool check_adjunction(const AdjunctionData& adj);

/// Hom-set bijection route: |Hom(L D, C)| = |Hom(D, R C)| for all D, C, with
/// the transpose map k |-> R k . unit_D a bijection. Independent oracle for
/// check_adjunction on bounded instances.
bool check_adjunction_homwise(const AdjunctionData& adj);

/// Exhaustive search for a natural isomorphism between two parallel functors.
std::optional<NatTransData> find_natural_iso(const FunctorData& f, const FunctorData& g);

/// Exhaustive search for an isomorphism of categories (object bijection +
/// morphism bijection preserving all structure). Intended for small instances.
std::optional<FunctorData> find_category_iso(CatPtr a, CatPtr b);

/// Injective structure-preserving embedding search (subcategory test).
bool is_subcategory(CatPtr b, CatPtr c);

} // namespace catkern
