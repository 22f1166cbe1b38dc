#include "catkern/analysis.hpp"

namespace catkern {

MorphismProfile classify_morphism(const FinCategory& c, MorId f) {
  MorphismProfile p;
  const ObjId x = c.dom(f), y = c.cod(f);
  p.endo = (x == y);

  p.epi = true;
  for (ObjId z = 0; z < c.object_count() && p.epi; ++z) {
    const auto& hs = c.hom(y, z);
    for (std::size_t i = 0; i < hs.size() && p.epi; ++i)
      for (std::size_t j = i + 1; j < hs.size() && p.epi; ++j)
        if (c.compose(hs[i], f) == c.compose(hs[j], f)) p.epi = false;
  }
  p.mono = true;
  for (ObjId z = 0; z < c.object_count() && p.mono; ++z) {
    const auto& hs = c.hom(z, x);
    for (std::size_t i = 0; i < hs.size() && p.mono; ++i)
      for (std::size_t j = i + 1; j < hs.size() && p.mono; ++j)
        if (c.compose(f, hs[i]) == c.compose(f, hs[j])) p.mono = false;
  }
  p.bimorphism = p.epi && p.mono;

  for (MorId g : c.hom(y, x)) {
    if (c.compose(f, g) == c.identity(y)) p.retraction = true;
    if (c.compose(g, f) == c.identity(x)) p.section = true;
    if (c.compose(f, g) == c.identity(y) && c.compose(g, f) == c.identity(x)) {
      p.iso = true;
      if (!p.inverse) p.inverse = g;
    }
  }
  p.automorphism = p.iso && p.endo;
  return p;
}

ObjectProfile classify_object(const FinCategory& c, ObjId a) {
  ObjectProfile p;
  p.terminal = true;
  p.initial = true;
  p.bang_into.assign(c.object_count(), kNoMor);
  p.bang_outof.assign(c.object_count(), kNoMor);
  for (ObjId b = 0; b < c.object_count(); ++b) {
    const auto& in = c.hom(b, a);
    if (in.size() == 1) p.bang_into[b] = in[0];
    else p.terminal = false;
    const auto& out = c.hom(a, b);
    if (out.size() == 1) p.bang_outof[b] = out[0];
    else p.initial = false;
  }
  if (!p.terminal) p.bang_into.clear();
  if (!p.initial) p.bang_outof.clear();
  if (p.initial) {
    p.strict_initial = true;
    for (ObjId b = 0; b < c.object_count() && p.strict_initial; ++b)
      for (MorId f : c.hom(b, a))
        if (!classify_morphism(c, f).iso) p.strict_initial = false;
  }
  p.zero = p.terminal && p.initial;
  return p;
}

FunctorProfile functor_profile(const FunctorData& f) {
  FunctorProfile p;
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  p.endofunctor = (f.source == f.target);
  p.full = true;
  p.faithful = true;
  for (ObjId a = 0; a < s.object_count(); ++a)
    for (ObjId b = 0; b < s.object_count(); ++b) {
      const auto& hs = s.hom(a, b);
      for (MorId g : t.hom(f.obj_map[a], f.obj_map[b])) {
        bool hit = false;
        for (MorId h : hs)
          if (f.mor_map[h] == g) hit = true;
        if (!hit) p.full = false;
      }
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
          if (f.mor_map[hs[i]] == f.mor_map[hs[j]]) p.faithful = false;
    }
  p.fully_faithful = p.full && p.faithful;
  return p;
}

namespace {

// Count mediators h : Z -> X with U h = w and f . h = g.
int count_cart_mediators(const FunctorData& U, MorId f, MorId g, MorId w, MorId* found) {
  const FinCategory& e = *U.source;
  int n = 0;
  for (MorId h : e.hom(e.dom(g), e.dom(f)))
    if (U.mor_map[h] == w && e.compose(f, h) == g) {
      if (found && n == 0) *found = h;
      ++n;
    }
  return n;
}

int count_opcart_mediators(const FunctorData& U, MorId f, MorId g, MorId w, MorId* found) {
  const FinCategory& e = *U.source;
  int n = 0;
  for (MorId h : e.hom(e.cod(f), e.cod(g)))
    if (U.mor_map[h] == w && e.compose(h, f) == g) {
      if (found && n == 0) *found = h;
      ++n;
    }
  return n;
}

} // namespace

CartesianityReport cartesianity(const FunctorData& U, MorId f, MorId u) {
  CartesianityReport r;
  r.f = f;
  r.u = u;
  const FinCategory& e = *U.source;
  const FinCategory& b = *U.target;
  r.over_u = (U.mor_map[f] == u);
  r.vertical = (U.mor_map[f] == b.identity(U.obj_map[e.dom(f)]));

  auto cart_over = [&](MorId uu, CartesianityReport::Violation* viol) {
    if (U.mor_map[f] != uu) return false;
    ObjId i = b.dom(uu);
    for (ObjId z = 0; z < e.object_count(); ++z)
      for (MorId g : e.hom(z, e.cod(f)))
        for (MorId w : b.hom(U.obj_map[z], i)) {
          if (U.mor_map[g] != b.compose(uu, w)) continue;
          int n = count_cart_mediators(U, f, g, w, nullptr);
          if (n != 1) {
            if (viol) *viol = {z, g, w, n};
            return false;
          }
        }
    return true;
  };
  auto opcart_over = [&](MorId uu, CartesianityReport::Violation* viol) {
    if (U.mor_map[f] != uu) return false;
    ObjId j = b.cod(uu);
    for (ObjId z = 0; z < e.object_count(); ++z)
      for (MorId g : e.hom(e.dom(f), z))
        for (MorId w : b.hom(j, U.obj_map[z])) {
          if (U.mor_map[g] != b.compose(w, uu)) continue;
          int n = count_opcart_mediators(U, f, g, w, nullptr);
          if (n != 1) {
            if (viol) *viol = {z, g, w, n};
            return false;
          }
        }
    return true;
  };

  CartesianityReport::Violation v{};
  r.cartesian_over_u = cart_over(u, &v);
  if (!r.cartesian_over_u && r.over_u) r.violation = v;
  r.opcartesian_over_u = opcart_over(u, nullptr);
  r.cartesian = cart_over(U.mor_map[f], nullptr);
  return r;
}

bool is_cartesian_over(const FunctorData& U, MorId f, MorId u) {
  return cartesianity(U, f, u).cartesian_over_u;
}

bool is_opcartesian_over(const FunctorData& U, MorId f, MorId u) {
  return cartesianity(U, f, u).opcartesian_over_u;
}

std::optional<MorId> cartesian_mediator(const FunctorData& U, MorId f, MorId g, MorId w) {
  MorId h = kNoMor;
  if (count_cart_mediators(U, f, g, w, &h) == 1) return h;
  return std::nullopt;
}

std::optional<MorId> opcartesian_mediator(const FunctorData& U, MorId f, MorId g, MorId w) {
  MorId h = kNoMor;
  if (count_opcart_mediators(U, f, g, w, &h) == 1) return h;
  return std::nullopt;
}

CategoryProfile category_profile(const FinCategory& c) {
  CategoryProfile p;
  p.discrete = true;
  for (MorId f = 0; f < c.morphism_count(); ++f)
    if (!c.is_identity(f)) p.discrete = false;
  p.preorder = true;
  for (ObjId a = 0; a < c.object_count() && p.preorder; ++a)
    for (ObjId b = 0; b < c.object_count(); ++b)
      if (c.hom(a, b).size() > 1) {
        p.preorder = false;
        break;
      }
  for (ObjId a = 0; a < c.object_count() && !p.pointed; ++a)
    if (classify_object(c, a).zero) p.pointed = true;

  std::optional<ObjId> terminal;
  for (ObjId a = 0; a < c.object_count(); ++a)
    if (classify_object(c, a).terminal) {
      terminal = a;
      break;
    }
  if (terminal) {
    p.well_pointed = true;
    for (ObjId a = 0; a < c.object_count() && p.well_pointed; ++a)
      for (ObjId b = 0; b < c.object_count() && p.well_pointed; ++b) {
        const auto& hs = c.hom(a, b);
        for (std::size_t i = 0; i < hs.size() && p.well_pointed; ++i)
          for (std::size_t j = i + 1; j < hs.size() && p.well_pointed; ++j) {
            bool separated = false;
            for (MorId pt : c.hom(*terminal, a))
              if (c.compose(hs[i], pt) != c.compose(hs[j], pt)) separated = true;
            if (!separated) p.well_pointed = false;
          }
      }
  }
  return p;
}

} // namespace catkern
