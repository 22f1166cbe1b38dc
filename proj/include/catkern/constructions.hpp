#pragma once

#include "catkern/functor.hpp"

namespace catkern {

/// Opposite category plus the morphism correspondence (same indices by
/// construction of the canonical renaming: "op_" prefixed names).
struct OppositeCategory {
  CatPtr cat;
  std::vector<MorId> to_op;   // base morphism -> opposite morphism
  std::vector<MorId> from_op; // opposite morphism -> base morphism
  std::vector<ObjId> obj_to_op;
  std::vector<ObjId> obj_from_op;
};

OppositeCategory opposite(CatPtr c);

struct ArrowCategory {
  CatPtr cat;
  CatPtr base;
  std::vector<MorId> obj_arrow;                 // arrow-cat object -> base morphism
  std::vector<std::pair<MorId, MorId>> mor_sq;  // arrow-cat morphism -> (g, u)
  FunctorData dom_functor() const;
  FunctorData cod_functor() const;
};

ArrowCategory arrow_category(CatPtr c);

struct SliceCategory {
  CatPtr cat;
  CatPtr base;
  ObjId base_obj;
  std::vector<MorId> obj_arrow; // slice object -> base morphism into base_obj
  std::vector<MorId> mor_under; // slice morphism -> underlying base morphism
  std::optional<ObjId> object_of(MorId base_arrow) const;
  std::optional<MorId> morphism_of(ObjId src, ObjId dst, MorId underlying) const;
};

SliceCategory slice_category(CatPtr c, ObjId a);
SliceCategory coslice_category(CatPtr c, ObjId a); // obj_arrow holds arrows out of a

struct ProductCategory {
  CatPtr cat;
  CatPtr left, right;
  std::vector<std::pair<ObjId, ObjId>> obj_pair;
  std::vector<std::pair<MorId, MorId>> mor_pair;
  ObjId object_of(ObjId l, ObjId r) const;
  MorId morphism_of(MorId l, MorId r) const;
  FunctorData proj1() const;
  FunctorData proj2() const;
};

ProductCategory product_category(CatPtr c, CatPtr d);

/// All functors c -> d and all natural transformations between them.
/// Throws BoundExceeded when the candidate estimate passes the bound.
struct FunctorCategory {
  CatPtr cat;
  std::vector<FunctorData> objs;
  std::vector<NatTransData> mors;
};

FunctorCategory functor_category(CatPtr c, CatPtr d, double bound = 1e6);

/// Comma category (g down f) for g : A -> C, f : B -> C.
struct CommaCategory {
  CatPtr cat;
  std::vector<std::tuple<ObjId, ObjId, MorId>> obj_data; // (A-obj, B-obj, GA -> FB)
  std::vector<std::pair<MorId, MorId>> mor_data;         // (A-mor, B-mor)
};

CommaCategory comma_category(const FunctorData& g, const FunctorData& f);

} // namespace catkern
