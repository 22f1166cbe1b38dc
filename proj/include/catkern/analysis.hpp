#pragma once

#include "catkern/functor.hpp"

namespace catkern {

struct MorphismProfile {
  bool epi = false, mono = false, bimorphism = false;
  bool retraction = false, section = false, iso = false;
  bool endo = false, automorphism = false;
  std::optional<MorId> inverse;
};

/// Every flag by full quantification over the category's morphisms.
MorphismProfile classify_morphism(const FinCategory& c, MorId f);

struct ObjectProfile {
  bool terminal = false, initial = false, strict_initial = false, zero = false;
  std::vector<MorId> bang_into;  // per object B: the unique B -> A when terminal
  std::vector<MorId> bang_outof; // per object B: the unique A -> B when initial
};

ObjectProfile classify_object(const FinCategory& c, ObjId a);

struct FunctorProfile {
  bool full = false, faithful = false, fully_faithful = false, endofunctor = false;
};

FunctorProfile functor_profile(const FunctorData& f);

/// Report for "f lies over u / is (op)cartesian over u" relative to U.
struct CartesianityReport {
  MorId f = kNoMor;
  MorId u = kNoMor;
  bool over_u = false;
  bool cartesian_over_u = false;
  bool opcartesian_over_u = false;
  bool cartesian = false; // over U f itself
  bool vertical = false;
  // first violating test (z, g, w) with its mediator count, when not cartesian
  struct Violation {
    ObjId z;
    MorId g;
    MorId w;
    int mediators; // 0 or >= 2
  };
  std::optional<Violation> violation;
};

/// Def-literal check: existence and uniqueness of the mediator for every
/// (Z, g, w) with U g = u . w (dually for opcartesian).
CartesianityReport cartesianity(const FunctorData& u_functor, MorId f, MorId u);

bool is_cartesian_over(const FunctorData& u_functor, MorId f, MorId u);
bool is_opcartesian_over(const FunctorData& u_functor, MorId f, MorId u);

/// The unique mediator h with U h = w and f . h = g, when f is cartesian.
std::optional<MorId> cartesian_mediator(const FunctorData& u_functor, MorId f, MorId g,
                                        MorId w);
std::optional<MorId> opcartesian_mediator(const FunctorData& u_functor, MorId f, MorId g,
                                          MorId w);

struct CategoryProfile {
  bool discrete = false, preorder = false, pointed = false, well_pointed = false;
};

CategoryProfile category_profile(const FinCategory& c);

} // namespace catkern
