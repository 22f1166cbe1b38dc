#include "catkern/functor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace catkern {

FunctorData identity_functor(CatPtr c) {
  FunctorData f{c, c, {}, {}};
  f.obj_map.resize(c->object_count());
  std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
  f.mor_map.resize(c->morphism_count());
  std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
  return f;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  FunctorData h{f.source, g.target, {}, {}};
  h.obj_map.reserve(f.obj_map.size());
  for (ObjId a : f.obj_map) h.obj_map.push_back(g.obj_map[a]);
  h.mor_map.reserve(f.mor_map.size());
  for (MorId m : f.mor_map) h.mor_map.push_back(g.mor_map[m]);
  return h;
}

std::optional<std::string> functor_violation(const FunctorData& f) {
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  if (static_cast<int>(f.obj_map.size()) != s.object_count() ||
      static_cast<int>(f.mor_map.size()) != s.morphism_count())
    return "object/morphism map has wrong size";
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    MorId fm = f.mor_map[m];
    if (t.dom(fm) != f.obj_map[s.dom(m)] || t.cod(fm) != f.obj_map[s.cod(m)])
      return "endpoints not preserved at " + s.morphism_name(m);
  }
  for (ObjId a = 0; a < s.object_count(); ++a)
    if (f.mor_map[s.identity(a)] != t.identity(f.obj_map[a]))
      return "identity not preserved at " + s.object_name(a);
  for (MorId m = 0; m < s.morphism_count(); ++m)
    for (MorId n = 0; n < s.morphism_count(); ++n) {
      if (!s.composable(n, m)) continue;
      if (f.mor_map[s.compose(n, m)] != t.compose(f.mor_map[n], f.mor_map[m]))
        return "composition not preserved at " + s.morphism_name(n) + " . " +
               s.morphism_name(m);
    }
  return std::nullopt;
}

namespace {

bool is_iso_in(const FinCategory& c, MorId f, MorId* inverse = nullptr) {
  for (MorId g : c.hom(c.cod(f), c.dom(f)))
    if (c.compose(f, g) == c.identity(c.cod(f)) && c.compose(g, f) == c.identity(c.dom(f))) {
      if (inverse) *inverse = g;
      return true;
    }
  return false;
}

// Arrow-category isomorphism between parallel morphisms: isos u, v with
// v . a = b . u.
bool arrows_isomorphic(const FinCategory& c, MorId a, MorId b) {
  if (a == b) return true;
  for (MorId u : c.hom(c.dom(a), c.dom(b))) {
    if (!is_iso_in(c, u)) continue;
    for (MorId v : c.hom(c.cod(a), c.cod(b))) {
      if (!is_iso_in(c, v)) continue;
      if (c.compose(v, a) == c.compose(b, u)) return true;
    }
  }
  return false;
}

} // namespace

bool check_pseudo_functor(const FunctorData& f, bool up_to_iso) {
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    MorId fm = f.mor_map[m];
    if (t.dom(fm) != f.obj_map[s.dom(m)] || t.cod(fm) != f.obj_map[s.cod(m)]) return false;
  }
  auto law = [&](MorId got, MorId want) {
    return up_to_iso ? arrows_isomorphic(t, got, want) : got == want;
  };
  for (ObjId a = 0; a < s.object_count(); ++a)
    if (!law(f.mor_map[s.identity(a)], t.identity(f.obj_map[a]))) return false;
  for (MorId m = 0; m < s.morphism_count(); ++m)
    for (MorId n = 0; n < s.morphism_count(); ++n) {
      if (!s.composable(n, m)) continue;
      if (!law(f.mor_map[s.compose(n, m)], t.compose(f.mor_map[n], f.mor_map[m])))
        return false;
    }
  return true;
}

NatTransData identity_nat(const FunctorData& f) {
  NatTransData a{f, f, {}};
  a.components.reserve(f.obj_map.size());
  for (ObjId o : f.obj_map) a.components.push_back(f.target->identity(o));
  return a;
}

bool check_natural(const NatTransData& alpha) {
  const FinCategory& s = *alpha.f.source;
  const FinCategory& t = *alpha.f.target;
  if (alpha.f.source != alpha.g.source || alpha.f.target != alpha.g.target) return false;
  if (static_cast<int>(alpha.components.size()) != s.object_count()) return false;
  for (ObjId a = 0; a < s.object_count(); ++a) {
    MorId c = alpha.components[a];
    if (t.dom(c) != alpha.f.obj_map[a] || t.cod(c) != alpha.g.obj_map[a]) return false;
  }
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    ObjId a = s.dom(m), b = s.cod(m);
    if (t.compose(alpha.components[b], alpha.f.mor_map[m]) !=
        t.compose(alpha.g.mor_map[m], alpha.components[a]))
      return false;
  }
  return true;
}

bool is_natural_iso(const NatTransData& alpha) {
  if (!check_natural(alpha)) return false;
  const FinCategory& t = *alpha.f.target;
  for (MorId c : alpha.components)
    if (!is_iso_in(t, c)) return false;
  return true;
}

NatTransData vcompose_nat(const NatTransData& beta, const NatTransData& alpha) {
  NatTransData r{alpha.f, beta.g, {}};
  const FinCategory& t = *alpha.f.target;
  r.components.reserve(alpha.components.size());
  for (std::size_t a = 0; a < alpha.components.size(); ++a)
    r.components.push_back(t.compose(beta.components[a], alpha.components[a]));
  return r;
}

NatTransData whisker_left(const FunctorData& f, const NatTransData& alpha) {
  NatTransData r{compose_functors(f, alpha.f), compose_functors(f, alpha.g), {}};
  r.components.reserve(alpha.components.size());
  for (MorId c : alpha.components) r.components.push_back(f.mor_map[c]);
  return r;
}

NatTransData whisker_right(const NatTransData& alpha, const FunctorData& f) {
  NatTransData r{compose_functors(alpha.f, f), compose_functors(alpha.g, f), {}};
  r.components.reserve(f.obj_map.size());
  for (ObjId a : f.obj_map) r.components.push_back(alpha.components[a]);
  return r;
}

bool check_adjunction(const AdjunctionData& adj) {
  const FunctorData& l = adj.left;
  const FunctorData& r = adj.right;
  if (!is_functor(l) || !is_functor(r)) return false;
  if (!check_natural(adj.unit) || !check_natural(adj.counit)) return false;
  const FinCategory& c = *l.target; // counit lives here
  const FinCategory& d = *l.source; // unit lives here
  // (eps L) . (L eta) = id_L
  for (ObjId a = 0; a < d.object_count(); ++a) {
    MorId leta = l.mor_map[adj.unit.components[a]];
    MorId epsl = adj.counit.components[l.obj_map[a]];
    if (c.compose(epsl, leta) != c.identity(l.obj_map[a])) return false;
  }
  // (R eps) . (eta R) = id_R
  for (ObjId x = 0; x < c.object_count(); ++x) {
    MorId etar = adj.unit.components[r.obj_map[x]];
    MorId reps = r.mor_map[adj.counit.components[x]];
    if (d.compose(reps, etar) != d.identity(r.obj_map[x])) return false;
  }
  return true;
}

bool check_adjunction_homwise(const AdjunctionData& adj) {
  const FunctorData& l = adj.left;
  const FunctorData& r = adj.right;
  const FinCategory& c = *l.target;
  const FinCategory& d = *l.source;
  for (ObjId a = 0; a < d.object_count(); ++a)
    for (ObjId x = 0; x < c.object_count(); ++x) {
      const auto& up = c.hom(l.obj_map[a], x);
      const auto& down = d.hom(a, r.obj_map[x]);
      if (up.size() != down.size()) return false;
      // transpose k |-> R k . eta_a must be a bijection onto Hom(a, R x)
      std::vector<MorId> image;
      for (MorId k : up) {
        MorId t = d.compose(r.mor_map[k], adj.unit.components[a]);
        image.push_back(t);
      }
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
      std::vector<MorId> want(down.begin(), down.end());
      std::sort(want.begin(), want.end());
      if (image != want) return false;
    }
  return true;
}

std::optional<NatTransData> find_natural_iso(const FunctorData& f, const FunctorData& g) {
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  const int nO = s.object_count();
  // candidate iso components per object
  std::vector<std::vector<MorId>> cands(nO);
  for (ObjId a = 0; a < nO; ++a) {
    for (MorId m : t.hom(f.obj_map[a], g.obj_map[a]))
      if (is_iso_in(t, m)) cands[a].push_back(m);
    if (cands[a].empty()) return std::nullopt;
  }
  NatTransData alpha{f, g, std::vector<MorId>(nO, kNoMor)};
  std::function<bool(int)> go = [&](int a) -> bool {
    if (a == nO) return check_natural(alpha);
    for (MorId m : cands[a]) {
      alpha.components[a] = m;
      bool ok = true;
      // prune with naturality squares among already-fixed objects
      for (MorId e = 0; e < s.morphism_count() && ok; ++e) {
        ObjId x = s.dom(e), y = s.cod(e);
        if (x > a || y > a) continue;
        if (t.compose(alpha.components[y], f.mor_map[e]) !=
            t.compose(g.mor_map[e], alpha.components[x]))
          ok = false;
      }
      if (ok && go(a + 1)) return true;
    }
    return false;
  };
  if (go(0)) return alpha;
  return std::nullopt;
}

namespace {

// Backtracking embedding search; iso == true demands bijectivity.
std::optional<FunctorData> find_embedding(CatPtr a, CatPtr b, bool iso) {
  const FinCategory& A = *a;
  const FinCategory& B = *b;
  if (iso && (A.object_count() != B.object_count() ||
              A.morphism_count() != B.morphism_count()))
    return std::nullopt;
  if (A.object_count() > B.object_count() || A.morphism_count() > B.morphism_count())
    return std::nullopt;

  FunctorData f{a, b, std::vector<ObjId>(A.object_count(), kNoObj),
                std::vector<MorId>(A.morphism_count(), kNoMor)};
  std::vector<bool> objUsed(B.object_count(), false);

  // Assign objects, then morphisms hom-set by hom-set.
  std::function<bool(int)> assignMors;
  std::function<bool(int)> assignObjs = [&](int i) -> bool {
    if (i == A.object_count()) return assignMors(0);
    for (ObjId t = 0; t < B.object_count(); ++t) {
      if (objUsed[t]) continue;
      if (iso) {
        // cheap invariant: endo-hom sizes must match
        if (B.hom(t, t).size() != A.hom(i, i).size()) continue;
      } else if (B.hom(t, t).size() < A.hom(i, i).size()) {
        continue;
      }
      objUsed[t] = true;
      f.obj_map[i] = t;
      if (assignObjs(i + 1)) return true;
      objUsed[t] = false;
    }
    return false;
  };

  std::vector<bool> morUsed(B.morphism_count(), false);
  assignMors = [&](int m) -> bool {
    if (m == A.morphism_count()) {
      if (iso) {
        for (bool u : morUsed)
          if (!u) return false;
      }
      return !functor_violation(f);
    }
    ObjId td = f.obj_map[A.dom(m)], tc = f.obj_map[A.cod(m)];
    for (MorId t : B.hom(td, tc)) {
      if (morUsed[t]) continue;
      if (A.is_identity(m) != B.is_identity(t)) continue;
      morUsed[t] = true;
      f.mor_map[m] = t;
      bool ok = true;
      // check compositions among assigned morphisms
      for (MorId n = 0; n <= m && ok; ++n) {
        if (f.mor_map[n] == kNoMor) continue;
        if (A.composable(n, m)) {
          MorId nm = A.compose(n, m);
          if (nm <= m && f.mor_map[nm] != kNoMor &&
              B.compose(f.mor_map[n], f.mor_map[m]) != f.mor_map[nm])
            ok = false;
          if (nm > m && B.compose(f.mor_map[n], f.mor_map[m]) == kNoMor) ok = false;
        }
        if (ok && A.composable(m, n)) {
          MorId mn = A.compose(m, n);
          if (mn <= m && f.mor_map[mn] != kNoMor &&
              B.compose(f.mor_map[m], f.mor_map[n]) != f.mor_map[mn])
            ok = false;
        }
      }
      if (ok && assignMors(m + 1)) return true;
      morUsed[t] = false;
      f.mor_map[m] = kNoMor;
    }
    return false;
  };

  if (assignObjs(0)) return f;
  return std::nullopt;
}

} // namespace

std::optional<FunctorData> find_category_iso(CatPtr a, CatPtr b) {
  return find_embedding(a, b, true);
}

bool is_subcategory(CatPtr b, CatPtr c) { return find_embedding(b, c, false).has_value(); }

} // namespace catkern
