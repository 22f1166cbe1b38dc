#include "catkern/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace catkern {

OppositeCategory opposite(CatPtr c) {
  CategoryBuilder b;
  for (ObjId a = 0; a < c->object_count(); ++a) b.add_object(c->object_name(a));
  for (MorId f = 0; f < c->morphism_count(); ++f)
    b.add_morphism(c->morphism_name(f), c->cod(f), c->dom(f));
  for (ObjId a = 0; a < c->object_count(); ++a) b.set_identity(a, c->identity(a));
  for (MorId g = 0; g < c->morphism_count(); ++g)
    for (MorId f = 0; f < c->morphism_count(); ++f)
      if (c->composable(g, f)) b.set_composite(f, g, c->compose(g, f)); // reversed
  OppositeCategory out;
  out.cat = b.build();
  // same names, so index correspondence is by name lookup
  out.to_op.resize(c->morphism_count());
  out.from_op.resize(c->morphism_count());
  for (MorId f = 0; f < c->morphism_count(); ++f) {
    MorId g = *out.cat->morphism_by_name(c->morphism_name(f));
    out.to_op[f] = g;
    out.from_op[g] = f;
  }
  out.obj_to_op.resize(c->object_count());
  out.obj_from_op.resize(c->object_count());
  for (ObjId a = 0; a < c->object_count(); ++a) {
    ObjId x = *out.cat->object_by_name(c->object_name(a));
    out.obj_to_op[a] = x;
    out.obj_from_op[x] = a;
  }
  return out;
}

namespace {

std::string pad_index(std::size_t i, std::size_t total) {
  std::size_t width = 1;
  for (std::size_t t = total; t >= 10; t /= 10) ++width;
  std::string s = std::to_string(i);
  return std::string(width - std::min(width, s.size()), '0') + s;
}

} // namespace

ArrowCategory arrow_category(CatPtr c) {
  ArrowCategory out;
  out.base = c;
  CategoryBuilder b;
  const int nM = c->morphism_count();
  std::vector<ObjId> objOf(nM);
  for (MorId f = 0; f < nM; ++f) objOf[f] = b.add_object("[" + c->morphism_name(f) + "]");

  struct Sq {
    MorId f1, f2, g, u;
  };
  std::vector<Sq> squares;
  std::map<std::tuple<MorId, MorId, MorId, MorId>, MorId> sqId;
  for (MorId f1 = 0; f1 < nM; ++f1)
    for (MorId f2 = 0; f2 < nM; ++f2)
      for (MorId g : c->hom(c->dom(f1), c->dom(f2)))
        for (MorId u : c->hom(c->cod(f1), c->cod(f2)))
          if (c->compose(f2, g) == c->compose(u, f1)) {
            MorId m = b.add_morphism("(" + c->morphism_name(g) + "," + c->morphism_name(u) +
                                         "):" + c->morphism_name(f1) + ">" +
                                         c->morphism_name(f2),
                                     objOf[f1], objOf[f2]);
            sqId[{f1, f2, g, u}] = m;
            squares.push_back({f1, f2, g, u});
          }
  for (MorId f = 0; f < nM; ++f)
    b.set_identity(objOf[f], sqId.at({f, f, c->identity(c->dom(f)), c->identity(c->cod(f))}));
  for (std::size_t j = 0; j < squares.size(); ++j)
    for (std::size_t i = 0; i < squares.size(); ++i) {
      const Sq& s1 = squares[i];
      const Sq& s2 = squares[j];
      if (s1.f2 != s2.f1) continue;
      MorId g = c->compose(s2.g, s1.g), u = c->compose(s2.u, s1.u);
      b.set_composite(sqId.at({s2.f1, s2.f2, s2.g, s2.u}), sqId.at({s1.f1, s1.f2, s1.g, s1.u}),
                      sqId.at({s1.f1, s2.f2, g, u}));
    }
  out.cat = b.build();
  out.obj_arrow.resize(nM);
  for (MorId f = 0; f < nM; ++f)
    out.obj_arrow[*out.cat->object_by_name("[" + c->morphism_name(f) + "]")] = f;
  out.mor_sq.resize(out.cat->morphism_count());
  for (const Sq& s : squares) {
    MorId m = *out.cat->morphism_by_name("(" + c->morphism_name(s.g) + "," +
                                         c->morphism_name(s.u) + "):" + c->morphism_name(s.f1) +
                                         ">" + c->morphism_name(s.f2));
    out.mor_sq[m] = {s.g, s.u};
  }
  return out;
}

FunctorData ArrowCategory::dom_functor() const {
  FunctorData f{cat, base, {}, {}};
  f.obj_map.reserve(obj_arrow.size());
  for (MorId a : obj_arrow) f.obj_map.push_back(base->dom(a));
  f.mor_map.reserve(mor_sq.size());
  for (auto [g, u] : mor_sq) {
    (void)u;
    f.mor_map.push_back(g);
  }
  return f;
}

FunctorData ArrowCategory::cod_functor() const {
  FunctorData f{cat, base, {}, {}};
  f.obj_map.reserve(obj_arrow.size());
  for (MorId a : obj_arrow) f.obj_map.push_back(base->cod(a));
  f.mor_map.reserve(mor_sq.size());
  for (auto [g, u] : mor_sq) {
    (void)g;
    f.mor_map.push_back(u);
  }
  return f;
}

namespace {

SliceCategory slice_impl(CatPtr c, ObjId a, bool co) {
  if (a < 0 || a >= c->object_count()) throw std::runtime_error("UnknownObject");
  SliceCategory out;
  out.base = c;
  out.base_obj = a;
  CategoryBuilder b;
  std::map<MorId, ObjId> objOf;
  for (MorId f = 0; f < c->morphism_count(); ++f)
    if ((co ? c->dom(f) : c->cod(f)) == a)
      objOf[f] = b.add_object("(" + c->morphism_name(f) + ")");

  // morphism h : (X,fX) -> (Y,fY) with fY.h = fX  (dually h.fX' = fY' for coslice)
  struct Tri {
    MorId src, dst, h;
  };
  std::vector<Tri> tris;
  std::map<std::tuple<MorId, MorId, MorId>, MorId> triId;
  for (auto [fx, ox] : objOf)
    for (auto [fy, oy] : objOf) {
      const auto& hs = co ? c->hom(c->cod(fx), c->cod(fy)) : c->hom(c->dom(fx), c->dom(fy));
      for (MorId h : hs) {
        bool commutes = co ? (c->compose(h, fx) == fy) : (c->compose(fy, h) == fx);
        if (!commutes) continue;
        MorId m = b.add_morphism(c->morphism_name(h) + ":" + c->morphism_name(fx) + ">" +
                                     c->morphism_name(fy),
                                 ox, oy);
        triId[{fx, fy, h}] = m;
        tris.push_back({fx, fy, h});
      }
    }
  for (auto [f, o] : objOf)
    b.set_identity(o, triId.at({f, f, c->identity(co ? c->cod(f) : c->dom(f))}));
  for (const Tri& t2 : tris)
    for (const Tri& t1 : tris) {
      if (t1.dst != t2.src) continue;
      b.set_composite(triId.at({t2.src, t2.dst, t2.h}), triId.at({t1.src, t1.dst, t1.h}),
                      triId.at({t1.src, t2.dst, c->compose(t2.h, t1.h)}));
    }
  out.cat = b.build();
  out.obj_arrow.resize(objOf.size());
  for (auto [f, o] : objOf) {
    (void)o;
    out.obj_arrow[*out.cat->object_by_name("(" + c->morphism_name(f) + ")")] = f;
  }
  out.mor_under.resize(out.cat->morphism_count());
  for (const Tri& t : tris) {
    MorId m = *out.cat->morphism_by_name(c->morphism_name(t.h) + ":" + c->morphism_name(t.src) +
                                         ">" + c->morphism_name(t.dst));
    out.mor_under[m] = t.h;
  }
  return out;
}

} // namespace

SliceCategory slice_category(CatPtr c, ObjId a) { return slice_impl(c, a, false); }
SliceCategory coslice_category(CatPtr c, ObjId a) { return slice_impl(c, a, true); }

std::optional<ObjId> SliceCategory::object_of(MorId base_arrow) const {
  for (std::size_t i = 0; i < obj_arrow.size(); ++i)
    if (obj_arrow[i] == base_arrow) return static_cast<ObjId>(i);
  return std::nullopt;
}

std::optional<MorId> SliceCategory::morphism_of(ObjId src, ObjId dst, MorId underlying) const {
  for (MorId m : cat->hom(src, dst))
    if (mor_under[m] == underlying) return m;
  return std::nullopt;
}

ProductCategory product_category(CatPtr c, CatPtr d) {
  ProductCategory out;
  out.left = c;
  out.right = d;
  CategoryBuilder b;
  for (ObjId x = 0; x < c->object_count(); ++x)
    for (ObjId y = 0; y < d->object_count(); ++y) {
      b.add_object("<" + c->object_name(x) + "," + d->object_name(y) + ">");
      out.obj_pair.emplace_back(x, y);
    }
  for (MorId f = 0; f < c->morphism_count(); ++f)
    for (MorId g = 0; g < d->morphism_count(); ++g) {
      ObjId dm = out.object_of(c->dom(f), d->dom(g));
      ObjId cm = out.object_of(c->cod(f), d->cod(g));
      (void)dm;
      (void)cm;
      b.add_morphism("<" + c->morphism_name(f) + "," + d->morphism_name(g) + ">",
                     b.object("<" + c->object_name(c->dom(f)) + "," +
                              d->object_name(d->dom(g)) + ">"),
                     b.object("<" + c->object_name(c->cod(f)) + "," +
                              d->object_name(d->cod(g)) + ">"));
    }
  for (ObjId x = 0; x < c->object_count(); ++x)
    for (ObjId y = 0; y < d->object_count(); ++y)
      b.set_identity(b.object("<" + c->object_name(x) + "," + d->object_name(y) + ">"),
                     b.morphism("<" + c->morphism_name(c->identity(x)) + "," +
                                d->morphism_name(d->identity(y)) + ">"));
  for (MorId f2 = 0; f2 < c->morphism_count(); ++f2)
    for (MorId g2 = 0; g2 < d->morphism_count(); ++g2)
      for (MorId f1 = 0; f1 < c->morphism_count(); ++f1)
        for (MorId g1 = 0; g1 < d->morphism_count(); ++g1) {
          if (!c->composable(f2, f1) || !d->composable(g2, g1)) continue;
          b.set_composite(
              b.morphism("<" + c->morphism_name(f2) + "," + d->morphism_name(g2) + ">"),
              b.morphism("<" + c->morphism_name(f1) + "," + d->morphism_name(g1) + ">"),
              b.morphism("<" + c->morphism_name(c->compose(f2, f1)) + "," +
                         d->morphism_name(d->compose(g2, g1)) + ">"));
        }
  out.cat = b.build();
  // rebuild index maps against canonical ids
  out.obj_pair.assign(out.cat->object_count(), {});
  for (ObjId x = 0; x < c->object_count(); ++x)
    for (ObjId y = 0; y < d->object_count(); ++y)
      out.obj_pair[*out.cat->object_by_name("<" + c->object_name(x) + "," +
                                            d->object_name(y) + ">")] = {x, y};
  out.mor_pair.assign(out.cat->morphism_count(), {});
  for (MorId f = 0; f < c->morphism_count(); ++f)
    for (MorId g = 0; g < d->morphism_count(); ++g)
      out.mor_pair[*out.cat->morphism_by_name("<" + c->morphism_name(f) + "," +
                                              d->morphism_name(g) + ">")] = {f, g};
  return out;
}

ObjId ProductCategory::object_of(ObjId l, ObjId r) const {
  return *cat->object_by_name("<" + left->object_name(l) + "," + right->object_name(r) + ">");
}

MorId ProductCategory::morphism_of(MorId l, MorId r) const {
  return *cat->morphism_by_name("<" + left->morphism_name(l) + "," + right->morphism_name(r) +
                                ">");
}

FunctorData ProductCategory::proj1() const {
  FunctorData f{cat, left, {}, {}};
  for (auto [x, y] : obj_pair) {
    (void)y;
    f.obj_map.push_back(x);
  }
  for (auto [m, n] : mor_pair) {
    (void)n;
    f.mor_map.push_back(m);
  }
  return f;
}

FunctorData ProductCategory::proj2() const {
  FunctorData f{cat, right, {}, {}};
  for (auto [x, y] : obj_pair) {
    (void)x;
    f.obj_map.push_back(y);
  }
  for (auto [m, n] : mor_pair) {
    (void)m;
    f.mor_map.push_back(n);
  }
  return f;
}

FunctorCategory functor_category(CatPtr c, CatPtr d, double bound) {
  // estimate: object assignments times per-morphism hom choices
  double estimate = 1.0;
  for (ObjId a = 0; a < c->object_count(); ++a) {
    (void)a;
    estimate *= std::max(1, d->object_count());
    if (estimate > bound) throw BoundExceeded(estimate, "functor category too large");
  }
  std::size_t maxHom = 0;
  for (ObjId a = 0; a < d->object_count(); ++a)
    for (ObjId b = 0; b < d->object_count(); ++b)
      maxHom = std::max(maxHom, d->hom(a, b).size());
  for (MorId m = 0; m < c->morphism_count(); ++m) {
    if (c->is_identity(m)) continue;
    estimate *= std::max<std::size_t>(1, maxHom);
    if (estimate > bound) throw BoundExceeded(estimate, "functor category too large");
  }

  FunctorCategory out;
  // enumerate functors by backtracking
  FunctorData f{c, d, std::vector<ObjId>(c->object_count(), kNoObj),
                std::vector<MorId>(c->morphism_count(), kNoMor)};
  std::function<void(int)> mors;
  std::function<void(int)> objs = [&](int i) {
    if (i == c->object_count()) {
      mors(0);
      return;
    }
    for (ObjId t = 0; t < d->object_count(); ++t) {
      f.obj_map[i] = t;
      objs(i + 1);
    }
    f.obj_map[i] = kNoObj;
  };
  mors = [&](int m) {
    if (m == c->morphism_count()) {
      if (!functor_violation(f)) out.objs.push_back(f);
      return;
    }
    if (c->is_identity(m)) {
      f.mor_map[m] = d->identity(f.obj_map[c->dom(m)]);
      mors(m + 1);
      f.mor_map[m] = kNoMor;
      return;
    }
    for (MorId t : d->hom(f.obj_map[c->dom(m)], f.obj_map[c->cod(m)])) {
      f.mor_map[m] = t;
      bool ok = true;
      for (MorId n = 0; n <= m && ok; ++n) {
        if (f.mor_map[n] == kNoMor) continue;
        if (c->composable(n, m)) {
          MorId nm = c->compose(n, m);
          if (nm <= m && f.mor_map[nm] != kNoMor &&
              d->compose(f.mor_map[n], f.mor_map[m]) != f.mor_map[nm])
            ok = false;
        }
        if (ok && c->composable(m, n)) {
          MorId mn = c->compose(m, n);
          if (mn <= m && f.mor_map[mn] != kNoMor &&
              d->compose(f.mor_map[m], f.mor_map[n]) != f.mor_map[mn])
            ok = false;
        }
      }
      if (ok) mors(m + 1);
      f.mor_map[m] = kNoMor;
    }
  };
  objs(0);

  CategoryBuilder b;
  for (std::size_t i = 0; i < out.objs.size(); ++i)
    b.add_object("F" + pad_index(i, out.objs.size()));

  // natural transformations between each ordered pair
  std::vector<std::tuple<int, int, std::vector<MorId>>> nats;
  for (std::size_t i = 0; i < out.objs.size(); ++i)
    for (std::size_t j = 0; j < out.objs.size(); ++j) {
      NatTransData alpha{out.objs[i], out.objs[j],
                         std::vector<MorId>(c->object_count(), kNoMor)};
      std::function<void(int)> go = [&](int a) {
        if (a == c->object_count()) {
          if (check_natural(alpha)) nats.emplace_back(i, j, alpha.components);
          return;
        }
        for (MorId m :
             d->hom(out.objs[i].obj_map[a], out.objs[j].obj_map[a])) {
          alpha.components[a] = m;
          go(a + 1);
        }
        alpha.components[a] = kNoMor;
      };
      go(0);
    }
  std::map<std::tuple<int, int, std::vector<MorId>>, MorId> natId;
  for (std::size_t k = 0; k < nats.size(); ++k) {
    auto& [i, j, comps] = nats[k];
    natId[nats[k]] = b.add_morphism("a" + pad_index(k, nats.size()), static_cast<ObjId>(i),
                                    static_cast<ObjId>(j));
    out.mors.push_back({out.objs[i], out.objs[j], comps});
  }
  for (std::size_t i = 0; i < out.objs.size(); ++i) {
    std::vector<MorId> idc;
    for (ObjId a = 0; a < c->object_count(); ++a)
      idc.push_back(d->identity(out.objs[i].obj_map[a]));
    b.set_identity(static_cast<ObjId>(i), natId.at({(int)i, (int)i, idc}));
  }
  for (const auto& n2 : nats)
    for (const auto& n1 : nats) {
      if (std::get<1>(n1) != std::get<0>(n2)) continue;
      std::vector<MorId> comps;
      for (ObjId a = 0; a < c->object_count(); ++a)
        comps.push_back(d->compose(std::get<2>(n2)[a], std::get<2>(n1)[a]));
      b.set_composite(natId.at(n2), natId.at(n1),
                      natId.at({std::get<0>(n1), std::get<1>(n2), comps}));
    }
  out.cat = b.build();
  return out;
}

CommaCategory comma_category(const FunctorData& g, const FunctorData& f) {
  if (g.target != f.target) throw std::runtime_error("comma: functors must share target");
  CatPtr A = g.source, B = f.source, C = g.target;
  CommaCategory out;
  CategoryBuilder b;
  std::map<std::tuple<ObjId, ObjId, MorId>, ObjId> objId;
  for (ObjId x = 0; x < A->object_count(); ++x)
    for (ObjId y = 0; y < B->object_count(); ++y)
      for (MorId m : C->hom(g.obj_map[x], f.obj_map[y])) {
        ObjId o = b.add_object("(" + A->object_name(x) + "," + B->object_name(y) + "," +
                               C->morphism_name(m) + ")");
        objId[{x, y, m}] = o;
        out.obj_data.emplace_back(x, y, m);
      }
  struct CM {
    ObjId src, dst;
    MorId ga, fb;
  };
  std::vector<CM> cms;
  std::map<std::tuple<ObjId, ObjId, MorId, MorId>, MorId> morId;
  for (auto& [k1, o1] : objId)
    for (auto& [k2, o2] : objId) {
      auto [x1, y1, m1] = k1;
      auto [x2, y2, m2] = k2;
      for (MorId p : A->hom(x1, x2))
        for (MorId q : B->hom(y1, y2))
          if (C->compose(m2, g.mor_map[p]) == C->compose(f.mor_map[q], m1)) {
            MorId mm = b.add_morphism("(" + A->morphism_name(p) + "," + B->morphism_name(q) +
                                          "):" + std::to_string(o1) + ">" + std::to_string(o2),
                                      o1, o2);
            morId[{o1, o2, p, q}] = mm;
            cms.push_back({o1, o2, p, q});
          }
    }
  for (auto& [k, o] : objId) {
    auto [x, y, m] = k;
    (void)m;
    b.set_identity(o, morId.at({o, o, A->identity(x), B->identity(y)}));
  }
  for (const CM& c2 : cms)
    for (const CM& c1 : cms) {
      if (c1.dst != c2.src) continue;
      b.set_composite(morId.at({c2.src, c2.dst, c2.ga, c2.fb}),
                      morId.at({c1.src, c1.dst, c1.ga, c1.fb}),
                      morId.at({c1.src, c2.dst, A->compose(c2.ga, c1.ga),
                                B->compose(c2.fb, c1.fb)}));
    }
  out.cat = b.build();
  out.mor_data.resize(out.cat->morphism_count());
  // indices shifted by canonical sort; rebuild via names
  out.obj_data.clear();
  out.obj_data.resize(out.cat->object_count());
  for (auto& [k, o] : objId) {
    auto [x, y, m] = k;
    ObjId canon = *out.cat->object_by_name("(" + A->object_name(x) + "," + B->object_name(y) +
                                           "," + C->morphism_name(m) + ")");
    out.obj_data[canon] = {x, y, m};
  }
  for (const CM& c1 : cms) {
    MorId canon = *out.cat->morphism_by_name(
        "(" + A->morphism_name(c1.ga) + "," + B->morphism_name(c1.fb) + "):" +
        std::to_string(c1.src) + ">" + std::to_string(c1.dst));
    out.mor_data[canon] = {c1.ga, c1.fb};
  }
  return out;
}

} // namespace catkern
