#include <doctest.h>

#include "catkern/constructions.hpp"
#include "catkern/fibration.hpp"
#include "catkern/instances.hpp"
#include "catkern/slice.hpp"
#include "test_helpers.hpp"

using namespace catkern;

TEST_CASE("identity functor is a split bifibration") {
  auto c = test::walking_arrow();
  FibrationContext fib(identity_functor(c));
  CHECK(fib.is_fibration());
  CHECK(fib.is_opfibration());
  CHECK(fib.is_bifibration());
  CHECK(fib.cleavage().split);
  CHECK(fib.vertical_cartesian_factorization());
  // fibres of the identity are single-object discrete categories
  for (ObjId x = 0; x < c->object_count(); ++x) {
    CHECK(fib.fibre(x).cat->object_count() == 1);
    CHECK(fib.fibre(x).cat->morphism_count() == 1);
  }
  auto lemma = check_faithful_preorder_lemma(fib);
  CHECK(lemma.agree);
  CHECK(lemma.faithful == lemma.partial_order);
}

TEST_CASE("the functor to 1 from the walking arrow is a preorder fibration") {
  auto c = test::walking_arrow();
  auto one = test::cat_one();
  FunctorData u{c, one, std::vector<ObjId>(c->object_count(), 0),
                std::vector<MorId>(c->morphism_count(), 0)};
  FibrationContext fib(u);
  CHECK(fib.is_fibration());
  auto lemma = check_faithful_preorder_lemma(fib);
  CHECK(lemma.faithful);
  CHECK(lemma.partial_order);
  CHECK(lemma.agree);
}

TEST_CASE("codomain functor on finset(1) arrows is a fibration") {
  auto inst = finset(1);
  auto ar = arrow_category(inst.cat);
  FibrationContext fib(ar.cod_functor());
  CHECK(fib.is_fibration());
  CHECK(fib.vertical_cartesian_factorization());
  auto lemma = check_faithful_preorder_lemma(fib);
  CHECK(lemma.agree);
}

TEST_CASE("codomain functor on finset(2) arrows is not a fibration") {
  // the cospan of the two collapse maps 2 -> 1 needs a 4-element apex
  auto inst = finset(2);
  auto ar = arrow_category(inst.cat);
  FibrationContext fib(ar.cod_functor());
  CHECK_FALSE(fib.is_fibration());
  // pinpoint: u = bang2 over Y = [bang2] admits no cartesian lifting
  MorId bang2 = inst.mor_of(fn_bang(2));
  ObjId y = *ar.cat->object_by_name("[" + inst.cat->morphism_name(bang2) + "]");
  const FunctorData& U = ar.cod_functor();
  bool any = false;
  for (ObjId x = 0; x < ar.cat->object_count() && !any; ++x)
    for (MorId f : ar.cat->hom(x, y))
      if (U.mor_map[f] == bang2 && is_cartesian_over(U, f, bang2)) any = true;
  CHECK_FALSE(any);
}

TEST_CASE("codomain fibration fibres are isomorphic to slices") {
  auto inst = finset(2);
  auto ar = arrow_category(inst.cat);
  FibrationContext fib(ar.cod_functor());
  for (ObjId z = 0; z < inst.cat->object_count(); ++z) {
    auto sl = slice_category(inst.cat, z);
    CHECK(find_category_iso(fib.fibre(z).cat, sl.cat).has_value());
  }
}

TEST_CASE("reindexing along liftable maps agrees with the slice pullback functor") {
  auto inst = finset(1); // all pullbacks exist, cod is a genuine fibration
  auto ar = arrow_category(inst.cat);
  FibrationContext fib(ar.cod_functor());
  SliceWorld world(inst.cat, &inst.pullbacks(),
                   [&inst](MorId f, MorId v) { return inst.dep_prod_object(f, v); });
  for (MorId u = 0; u < inst.cat->morphism_count(); ++u) {
    const FunctorData& re = fib.reindex(u);
    auto pf = world.pullback_functor(u);
    REQUIRE(pf.has_value());
    // transport the reindexing through the fibre/slice isomorphisms
    ObjId i = inst.cat->dom(u), j = inst.cat->cod(u);
    auto isoJ = find_category_iso(world.over(j).slice.cat, fib.fibre(j).cat);
    auto isoI = find_category_iso(fib.fibre(i).cat, world.over(i).slice.cat);
    REQUIRE(isoJ.has_value());
    REQUIRE(isoI.has_value());
    FunctorData lhs = compose_functors(*isoI, compose_functors(re, *isoJ));
    auto iso = find_natural_iso(lhs, *pf);
    CHECK(iso.has_value());
  }
}

TEST_CASE("subset fibration is split and has a generic object with omega = 2") {
  auto inst = finset(2);
  FibrationContext fib(subset_fibration(inst));
  CHECK(fib.is_fibration());
  CHECK(fib.cleavage().split);
  auto gens = generic_objects(fib);
  bool foundGeneric = false;
  for (const auto& g : gens) {
    if (g.generic && inst.obj_size[g.omega] == 2 &&
        fib.total()->object_name(g.object) == "p2_01") {
      foundGeneric = true;
      CHECK(g.weak_generic);
      CHECK(g.split_generic);
      CHECK_FALSE(g.strong_generic);
    }
  }
  CHECK(foundGeneric);
  auto lemma = check_faithful_preorder_lemma(fib);
  CHECK(lemma.agree);
  CHECK(lemma.partial_order); // at most one map between predicate pairs
}

TEST_CASE("codomain fibration on finset(1): no strong generic object") {
  auto inst = finset(1);
  auto ar = arrow_category(inst.cat);
  FibrationContext fib(ar.cod_functor());
  for (const auto& g : generic_objects(fib)) CHECK_FALSE(g.strong_generic);
}

TEST_CASE("fibred structure of the codomain fibration on finset(1)") {
  auto inst = finset(1);
  auto ar = arrow_category(inst.cat);
  FibrationContext fib(ar.cod_functor());
  auto r = fibred_structure(fib);
  CHECK(r.fibred_terminal);
  CHECK(r.fibred_product);
  CHECK(r.preservation_checks > 0);
}

TEST_CASE("fibration products report on the identity fibration") {
  auto c = test::walking_arrow();
  FibrationContext fib(identity_functor(c));
  auto r = fibration_products(fib);
  CHECK(r.base_has_pullbacks);
  CHECK(r.has_product_adjoints);        // reindexing between trivial fibres
  CHECK(r.has_simple_product_adjoints);
  CHECK_FALSE(r.beck_chevalley_checked); // deliberately not evaluated
}

TEST_CASE("simple product adjoints for the subset fibration on finset(2)") {
  auto inst = finset(2);
  FibrationContext fib(subset_fibration(inst));
  auto r = fibration_products(fib);
  CHECK_FALSE(r.base_has_pullbacks); // finset(2) lacks the 2,1-collapse cospan
  CHECK(r.has_simple_product_adjoints);
  CHECK(r.skipped_missing_structure > 0); // the 2x2 projection is unavailable
  REQUIRE(r.omega.has_value());
  CHECK(inst.obj_size[*r.omega] == 2);
  CHECK(r.has_simple_omega_product);
}

TEST_CASE("opreindexing along the codomain opfibration is post-composition") {
  auto inst = finset(1);
  auto ar = arrow_category(inst.cat);
  FibrationContext fib(ar.cod_functor());
  CHECK(fib.is_opfibration()); // opcartesian liftings are post-compositions
  SliceWorld world(inst.cat, &inst.pullbacks());
  for (MorId u = 0; u < inst.cat->morphism_count(); ++u) {
    const FunctorData& ore = fib.opreindex(u);
    FunctorData sigma = world.composition_functor(u);
    ObjId i = inst.cat->dom(u), j = inst.cat->cod(u);
    auto isoI = find_category_iso(world.over(i).slice.cat, fib.fibre(i).cat);
    auto isoJ = find_category_iso(fib.fibre(j).cat, world.over(j).slice.cat);
    REQUIRE(isoI.has_value());
    REQUIRE(isoJ.has_value());
    FunctorData lhs = compose_functors(*isoJ, compose_functors(ore, *isoI));
    auto iso = find_natural_iso(lhs, sigma);
    CHECK(iso.has_value());
  }
}
