#include <doctest.h>

#include "catkern/analysis.hpp"
#include "catkern/instances.hpp"

using namespace catkern;

TEST_CASE("set calculus basics") {
  SetFn f{2, 3, {1, 2}};
  SetFn g{3, 2, {0, 0, 1}};
  auto gf = set_compose(g, f);
  CHECK(gf.tab == std::vector<std::int32_t>{0, 1});
  CHECK(fn_numeral(fn_from_numeral(7, 2, 3)) == 7);
  auto ev = fn_ev(2, 2);
  // numeral u encodes {0 |-> u%2, 1 |-> u/2}
  CHECK(ev.tab[pair_index(2, 0, 2)] == 0);
  CHECK(ev.tab[pair_index(2, 1, 2)] == 1); // function 2 = [0,1] = identity
  auto curried = fn_curry(fn_ev(2, 2), 4, 2);
  for (int u = 0; u < 4; ++u) CHECK(curried.tab[u] == u); // curry(ev) = id
}

TEST_CASE("finset(2) counts") {
  auto inst = finset(2);
  CHECK(inst.cat->object_count() == 3);
  CHECK(inst.cat->morphism_count() == 11);
  ObjId two = inst.obj_of(2);
  CHECK(inst.cat->hom(two, two).size() == 4);
  CHECK(validate_category(*inst.cat) == std::nullopt);
}

TEST_CASE("finset(2): mono = injective, epi = surjective") {
  auto inst = finset(2);
  for (MorId m = 0; m < inst.cat->morphism_count(); ++m) {
    const SetFn& f = inst.fn(m);
    bool inj = true;
    for (int i = 0; i < f.dom; ++i)
      for (int j = i + 1; j < f.dom; ++j)
        if (f.tab[i] == f.tab[j]) inj = false;
    std::vector<bool> hit(f.cod, false);
    for (int i = 0; i < f.dom; ++i) hit[f.tab[i]] = true;
    bool surj = true;
    for (int v = 0; v < f.cod; ++v)
      if (!hit[v]) surj = false;
    auto p = classify_morphism(*inst.cat, m);
    CHECK(p.mono == inj);
    CHECK(p.epi == surj);
  }
}

TEST_CASE("finset structure: products and exponentials within bound") {
  auto inst = finset(2);
  const auto& s = inst.structure;
  CHECK(s.terminal.has_value());
  CHECK(s.terminal->object == inst.obj_of(1));
  CHECK(s.product(inst.obj_of(1), inst.obj_of(2)) != nullptr);
  CHECK(s.product(inst.obj_of(2), inst.obj_of(2)) == nullptr); // apex 4 > 2
  CHECK_FALSE(s.has_finite_products);
  // 2 => 2 needs carrier 4: absent, recorded by flag
  CHECK(s.exponential(inst.obj_of(2), inst.obj_of(2)) == nullptr);
  CHECK_FALSE(s.is_ccc);
}

TEST_CASE("finset(1) is a CCC and generic search agrees") {
  auto inst = finset(1);
  CHECK(inst.structure.is_ccc);
  auto generic = choose_cartesian_structure(inst.cat);
  CHECK(generic.is_ccc);
  CHECK(generic.terminal->object == inst.structure.terminal->object);
}

TEST_CASE("finset pullbacks: diagonal and disjoint points") {
  auto inst = finset(2);
  // pullback of id2 along id2: the diagonal, apex of size 2
  MorId id2 = inst.cat->identity(inst.obj_of(2));
  const PullbackWitness* w = inst.pullbacks().pullback(id2, id2);
  REQUIRE(w != nullptr);
  CHECK(inst.obj_size[w->apex] == 2);
  // two distinct constants 1 -> 2: empty apex
  MorId c0 = inst.mor_of(set_const(1, 2, 0));
  MorId c1 = inst.mor_of(set_const(1, 2, 1));
  const PullbackWitness* w2 = inst.pullbacks().pullback(c0, c1);
  REQUIRE(w2 != nullptr);
  CHECK(inst.obj_size[w2->apex] == 0);
  // bang against bang from 2: apex would be 4 > 2, genuinely absent
  MorId bang2 = inst.mor_of(fn_bang(2));
  CHECK(inst.pullbacks().pullback(bang2, bang2) == nullptr);
  CHECK_FALSE(choose_pullback(*inst.cat, bang2, bang2).has_value()); // oracle agrees
}

TEST_CASE("finset pullback apex cardinality equals the agreement count") {
  auto inst = finset(3);
  int checked = 0;
  for (MorId f1 = 0; f1 < inst.cat->morphism_count(); ++f1)
    for (MorId f2 = 0; f2 < inst.cat->morphism_count(); ++f2) {
      if (inst.cat->cod(f1) != inst.cat->cod(f2)) continue;
      const SetFn& a = inst.fn(f1);
      const SetFn& b = inst.fn(f2);
      int agree = 0;
      for (int x = 0; x < a.dom; ++x)
        for (int y = 0; y < b.dom; ++y)
          if (a.tab[x] == b.tab[y]) ++agree;
      if (agree > 3) continue;
      const PullbackWitness* w = inst.pullbacks().pullback(f1, f2);
      REQUIRE(w != nullptr);
      CHECK(inst.obj_size[w->apex] == agree);
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("finset equalizers: identity/swap and agreement subsets") {
  auto inst = finset(2);
  ObjId two = inst.obj_of(2);
  MorId id2 = inst.cat->identity(two);
  MorId swap = inst.mor_of(SetFn{2, 2, {1, 0}});
  const auto& e1 = inst.equalizer(id2, id2);
  CHECK(inst.obj_size[e1.object] == 2);
  const auto& e2 = inst.equalizer(id2, swap);
  CHECK(inst.obj_size[e2.object] == 0); // no fixed points
}

TEST_CASE("empty set is strict initial in finset") {
  auto inst = finset(2);
  auto p = classify_object(*inst.cat, inst.obj_of(0));
  CHECK(p.initial);
  CHECK(p.strict_initial);
  CHECK_FALSE(p.terminal);
  auto p1 = classify_object(*inst.cat, inst.obj_of(1));
  CHECK(p1.terminal);
}

TEST_CASE("finset is well-pointed but not pointed") {
  auto inst = finset(2);
  auto prof = category_profile(*inst.cat);
  CHECK(prof.well_pointed);
  CHECK_FALSE(prof.pointed);
}

TEST_CASE("monoids validate") {
  CHECK(trivial_monoid().valid());
  CHECK(cyclic2().valid());
  CHECK(cyclic2().abelian());
  CHECK(left_zero3().valid());
  CHECK_FALSE(left_zero3().abelian());
}

TEST_CASE("maybe monad tables") {
  auto m = maybe_monad();
  CHECK(m.T(3) == 4);
  // eta injects, mu collapses the two bottoms
  auto mu = m.mu(2);
  CHECK(mu.tab == std::vector<std::int32_t>{0, 1, 2, 2});
  // m2: mu . T eta = id
  for (int n = 0; n <= 3; ++n) {
    CHECK(set_compose(m.mu(n), m.map(m.eta(n))) == set_id(m.T(n)));
    CHECK(set_compose(m.mu(n), m.eta(m.T(n))) == set_id(m.T(n)));
  }
}

TEST_CASE("writer monad multiplies monoid components") {
  auto m = writer_monad(cyclic2());
  CHECK(m.T(3) == 6);
  auto mu = m.mu(1); // (w1,(w2,x)) |-> (w1w2, x)
  CHECK(mu.tab[pair_index(1, pair_index(1, 0, 1), 2)] == pair_index(0, 0, 1));
  for (int n = 0; n <= 3; ++n) {
    CHECK(set_compose(m.mu(n), m.map(m.eta(n))) == set_id(m.T(n)));
    CHECK(set_compose(m.mu(n), m.eta(m.T(n))) == set_id(m.T(n)));
  }
}

TEST_CASE("dependent product objects by fiberwise sections") {
  auto inst = finset(3);
  // f : 2 -> 1; object (X, h : X -> 2) with fibers (2,1): sections = 2
  MorId f = inst.mor_of(fn_bang(2));
  MorId h = inst.mor_of(SetFn{3, 2, {0, 0, 1}});
  auto pi = inst.dep_prod_object(f, h);
  REQUIRE(pi.has_value());
  CHECK(inst.obj_size[inst.cat->dom(*pi)] == 2);
  // fibers (3,0): no sections
  MorId h2 = inst.mor_of(SetFn{3, 2, {0, 0, 0}});
  auto pi2 = inst.dep_prod_object(f, h2);
  REQUIRE(pi2.has_value());
  CHECK(inst.obj_size[inst.cat->dom(*pi2)] == 0);
  // f : 1 -> 2 picking 0, v : 2 -> 1: |Y| sections over point 0, empty product over 1
  MorId f12 = inst.mor_of(set_const(1, 2, 0));
  MorId v = inst.mor_of(fn_bang(2));
  auto pi3 = inst.dep_prod_object(f12, v);
  REQUIRE(pi3.has_value());
  CHECK(inst.obj_size[inst.cat->dom(*pi3)] == 3); // 2 over the hit point + 1 over the miss
}

TEST_CASE("zoo loads and all annotations verify") {
  auto zoo = load_zoo(std::string(CATKERN_DATA_DIR) + "/zoo");
  CHECK(zoo.size() >= 8);
  for (const auto& e : zoo) {
    auto checks = verify_annotations(e);
    for (const auto& c : checks) {
      INFO(e.name, ": ", c.key, " expected=", c.expected, " actual=", c.actual);
      CHECK(c.ok);
    }
  }
}
