#pragma once

#include "catkern/analysis.hpp"
#include "catkern/structures.hpp"

namespace catkern {

class NotAFibration : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct FibreCategory {
  ObjId base_obj = kNoObj;
  CatPtr cat;
  std::vector<ObjId> objs; // fibre object -> total-category object
  std::vector<MorId> mors; // fibre morphism -> total-category morphism
  FunctorData inclusion;   // fibre -> total
  std::optional<ObjId> from_total_obj(ObjId e) const;
  std::optional<MorId> from_total_mor(MorId f) const;
};

struct Cleavage {
  // (base morphism u, object Y over cod u) -> chosen cartesian lifting into Y
  std::map<std::pair<MorId, ObjId>, MorId> lifting;
  bool split = false;
  MorId at(MorId u, ObjId y) const { return lifting.at({u, y}); }
};

struct GenericObjectReport {
  ObjId object = kNoObj;
  ObjId omega = kNoObj; // its image in the base
  bool weak_generic = false, generic = false, strong_generic = false,
       split_generic = false;
};

/// Cached fibration machinery around a validated functor U : E -> B.
class FibrationContext {
public:
  explicit FibrationContext(FunctorData u);

  const FunctorData& functor() const { return u_; }
  CatPtr total() const { return u_.source; }
  CatPtr base() const { return u_.target; }

  bool is_fibration() const;
  bool is_opfibration() const;
  bool is_bifibration() const { return is_fibration() && is_opfibration(); }

  /// Canonical least cartesian lifting per (u, Y); throws NotAFibration.
  const Cleavage& cleavage() const;
  /// Dual choice of opcartesian liftings; throws NotAFibration.
  const Cleavage& opcleavage() const;

  const FibreCategory& fibre(ObjId x) const;

  /// Reindexing along a base morphism u : I -> J, as a functor E_J -> E_I.
  const FunctorData& reindex(MorId u) const;
  /// Opreindexing along u : I -> J, as a functor E_I -> E_J.
  const FunctorData& opreindex(MorId u) const;

  /// Every morphism of E factors as (cartesian lifting) . (vertical).
  bool vertical_cartesian_factorization() const;

private:
  FunctorData u_;
  mutable std::optional<bool> isFib_, isOpfib_;
  mutable std::optional<Cleavage> cleavage_, opcleavage_;
  mutable std::map<ObjId, std::unique_ptr<FibreCategory>> fibres_;
  mutable std::map<MorId, std::unique_ptr<FunctorData>> reindex_, opreindex_;
};

struct FibredStructureReport {
  bool fibred_terminal = false;       // terminals in every fibre, preserved on the nose
  bool fibred_product = false;        // fibrewise products, preserved up to iso
  bool fibred_exponent = false;       // fibrewise exponentials, preserved up to iso
  long preservation_checks = 0;
  std::string detail;
};

FibredStructureReport fibred_structure(const FibrationContext& fib);

std::vector<GenericObjectReport> generic_objects(const FibrationContext& fib);

struct FaithfulPreorderReport {
  bool faithful = false;
  bool partial_order = false; // every fibre a preorder
  bool agree = false;
};

FaithfulPreorderReport check_faithful_preorder_lemma(const FibrationContext& fib);

struct FibrationProductsReport {
  bool base_has_pullbacks = false;
  bool base_has_products = false; // all pairs within the instance
  bool has_product_adjoints = false;        // right adjoint for every reindexing
  bool has_simple_product_adjoints = false; // along available product projections
  bool has_simple_omega_product = false;    // along projections of products with Omega
  bool beck_chevalley_checked = false;      // the side condition is not evaluated
  std::optional<ObjId> omega;
  long adjoint_searches = 0;
  long skipped_missing_structure = 0;
};

FibrationProductsReport fibration_products(const FibrationContext& fib);

struct FibrationProfile {
  bool fibration = false, opfibration = false, bifibration = false;
  bool cloven = false, split = false;
  bool faithful = false, partial_order = false;
  bool polymorphic = false; // generic object + fibred finite product + products in base
  FibredStructureReport fibred;
  std::vector<GenericObjectReport> generics;
  FaithfulPreorderReport lemma;
};

FibrationProfile fibration_profile(const FibrationContext& fib);

} // namespace catkern
