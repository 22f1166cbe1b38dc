#include "catkern/fibration.hpp"

#include <algorithm>

namespace catkern {

namespace {

// least cartesian lifting of u at y, if any
std::optional<MorId> find_cartesian_lift(const FunctorData& U, MorId u, ObjId y) {
  const FinCategory& e = *U.source;
  for (ObjId x = 0; x < e.object_count(); ++x)
    for (MorId f : e.hom(x, y)) {
      if (U.mor_map[f] != u) continue;
      if (is_cartesian_over(U, f, u)) return f;
    }
  return std::nullopt;
}

std::optional<MorId> find_opcartesian_lift(const FunctorData& U, MorId u, ObjId x) {
  const FinCategory& e = *U.source;
  for (ObjId y = 0; y < e.object_count(); ++y)
    for (MorId f : e.hom(x, y)) {
      if (U.mor_map[f] != u) continue;
      if (is_opcartesian_over(U, f, u)) return f;
    }
  return std::nullopt;
}

} // namespace

std::optional<ObjId> FibreCategory::from_total_obj(ObjId e) const {
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (objs[i] == e) return static_cast<ObjId>(i);
  return std::nullopt;
}

std::optional<MorId> FibreCategory::from_total_mor(MorId f) const {
  for (std::size_t i = 0; i < mors.size(); ++i)
    if (mors[i] == f) return static_cast<MorId>(i);
  return std::nullopt;
}

FibrationContext::FibrationContext(FunctorData u) : u_(std::move(u)) {
  if (auto v = functor_violation(u_))
    throw std::invalid_argument("fibration context needs a functor: " + *v);
}

bool FibrationContext::is_fibration() const {
  if (!isFib_) {
    bool ok = true;
    const FinCategory& e = *u_.source;
    const FinCategory& b = *u_.target;
    for (ObjId y = 0; y < e.object_count() && ok; ++y) {
      ObjId uy = u_.obj_map[y];
      for (ObjId i = 0; i < b.object_count() && ok; ++i)
        for (MorId u : b.hom(i, uy))
          if (!find_cartesian_lift(u_, u, y)) {
            ok = false;
            break;
          }
    }
    isFib_ = ok;
  }
  return *isFib_;
}

bool FibrationContext::is_opfibration() const {
  if (!isOpfib_) {
    bool ok = true;
    const FinCategory& e = *u_.source;
    const FinCategory& b = *u_.target;
    for (ObjId x = 0; x < e.object_count() && ok; ++x) {
      ObjId ux = u_.obj_map[x];
      for (ObjId j = 0; j < b.object_count() && ok; ++j)
        for (MorId u : b.hom(ux, j))
          if (!find_opcartesian_lift(u_, u, x)) {
            ok = false;
            break;
          }
    }
    isOpfib_ = ok;
  }
  return *isOpfib_;
}

const Cleavage& FibrationContext::cleavage() const {
  if (cleavage_) return *cleavage_;
  if (!is_fibration()) throw NotAFibration("not a fibration");
  Cleavage cl;
  const FinCategory& e = *u_.source;
  const FinCategory& b = *u_.target;
  for (ObjId y = 0; y < e.object_count(); ++y) {
    ObjId uy = u_.obj_map[y];
    for (ObjId i = 0; i < b.object_count(); ++i)
      for (MorId u : b.hom(i, uy)) cl.lifting[{u, y}] = *find_cartesian_lift(u_, u, y);
  }
  cleavage_ = std::move(cl);
  // split: id* = id and (v.u)* = u*.v* as functor equalities
  bool split = true;
  for (ObjId j = 0; j < b.object_count() && split; ++j) {
    const FunctorData& r = reindex(b.identity(j));
    if (r.obj_map != identity_functor(fibre(j).cat).obj_map ||
        r.mor_map != identity_functor(fibre(j).cat).mor_map)
      split = false;
  }
  for (MorId u = 0; u < b.morphism_count() && split; ++u)
    for (MorId v = 0; v < b.morphism_count() && split; ++v) {
      if (!b.composable(v, u)) continue;
      const FunctorData& lhs = reindex(b.compose(v, u));
      FunctorData rhs = compose_functors(reindex(u), reindex(v));
      if (lhs.obj_map != rhs.obj_map || lhs.mor_map != rhs.mor_map) split = false;
    }
  cleavage_->split = split;
  return *cleavage_;
}

const Cleavage& FibrationContext::opcleavage() const {
  if (opcleavage_) return *opcleavage_;
  if (!is_opfibration()) throw NotAFibration("not an opfibration");
  Cleavage cl;
  const FinCategory& e = *u_.source;
  const FinCategory& b = *u_.target;
  for (ObjId x = 0; x < e.object_count(); ++x) {
    ObjId ux = u_.obj_map[x];
    for (ObjId j = 0; j < b.object_count(); ++j)
      for (MorId u : b.hom(ux, j)) cl.lifting[{u, x}] = *find_opcartesian_lift(u_, u, x);
  }
  cl.split = false; // computed on demand for the reindexing direction only
  opcleavage_ = std::move(cl);
  return *opcleavage_;
}

const FibreCategory& FibrationContext::fibre(ObjId x) const {
  auto it = fibres_.find(x);
  if (it != fibres_.end()) return *it->second;
  const FinCategory& e = *u_.source;
  const FinCategory& b = *u_.target;
  auto fc = std::make_unique<FibreCategory>();
  fc->base_obj = x;
  CategoryBuilder bld;
  for (ObjId o = 0; o < e.object_count(); ++o)
    if (u_.obj_map[o] == x) {
      bld.add_object(e.object_name(o));
      fc->objs.push_back(o);
    }
  MorId idx = b.identity(x);
  for (MorId m = 0; m < e.morphism_count(); ++m)
    if (u_.mor_map[m] == idx && u_.obj_map[e.dom(m)] == x) {
      bld.add_morphism(e.morphism_name(m), bld.object(e.object_name(e.dom(m))),
                       bld.object(e.object_name(e.cod(m))));
      fc->mors.push_back(m);
    }
  for (ObjId o : fc->objs)
    bld.set_identity(bld.object(e.object_name(o)), bld.morphism(e.morphism_name(e.identity(o))));
  for (MorId m : fc->mors)
    for (MorId n : fc->mors) {
      if (!e.composable(n, m)) continue;
      bld.set_composite(bld.morphism(e.morphism_name(n)), bld.morphism(e.morphism_name(m)),
                        bld.morphism(e.morphism_name(e.compose(n, m))));
    }
  fc->cat = bld.build();
  // remap index vectors to the canonical ids
  std::vector<ObjId> objs(fc->cat->object_count());
  for (ObjId o : fc->objs) objs[*fc->cat->object_by_name(e.object_name(o))] = o;
  fc->objs = std::move(objs);
  std::vector<MorId> mors(fc->cat->morphism_count());
  for (MorId m : fc->mors) mors[*fc->cat->morphism_by_name(e.morphism_name(m))] = m;
  fc->mors = std::move(mors);
  fc->inclusion = FunctorData{fc->cat, u_.source, fc->objs, fc->mors};
  if (auto v = functor_violation(fc->inclusion))
    throw std::logic_error("fibre inclusion invalid: " + *v);
  return *fibres_.emplace(x, std::move(fc)).first->second;
}

const FunctorData& FibrationContext::reindex(MorId u) const {
  auto it = reindex_.find(u);
  if (it != reindex_.end()) return *it->second;
  const Cleavage& cl = cleavage_ ? *cleavage_ : cleavage(); // may recurse once
  const FinCategory& e = *u_.source;
  const FinCategory& b = *u_.target;
  const FibreCategory& fj = fibre(b.cod(u));
  const FibreCategory& fi = fibre(b.dom(u));
  auto fd = std::make_unique<FunctorData>();
  fd->source = fj.cat;
  fd->target = fi.cat;
  fd->obj_map.resize(fj.cat->object_count());
  for (ObjId o = 0; o < fj.cat->object_count(); ++o) {
    MorId lift = cl.at(u, fj.objs[o]);
    fd->obj_map[o] = *fi.from_total_obj(e.dom(lift));
  }
  fd->mor_map.resize(fj.cat->morphism_count());
  for (MorId m = 0; m < fj.cat->morphism_count(); ++m) {
    ObjId src = fj.cat->dom(m), dst = fj.cat->cod(m);
    MorId liftSrc = cl.at(u, fj.objs[src]);
    MorId liftDst = cl.at(u, fj.objs[dst]);
    auto h = cartesian_mediator(u_, liftDst, e.compose(fj.mors[m], liftSrc),
                                b.identity(b.dom(u)));
    if (!h) throw std::logic_error("reindex: no mediator");
    fd->mor_map[m] = *fi.from_total_mor(*h);
  }
  if (auto v = functor_violation(*fd)) throw std::logic_error("reindex invalid: " + *v);
  return *reindex_.emplace(u, std::move(fd)).first->second;
}

const FunctorData& FibrationContext::opreindex(MorId u) const {
  auto it = opreindex_.find(u);
  if (it != opreindex_.end()) return *it->second;
  const Cleavage& cl = opcleavage();
  const FinCategory& e = *u_.source;
  const FinCategory& b = *u_.target;
  const FibreCategory& fi = fibre(b.dom(u));
  const FibreCategory& fj = fibre(b.cod(u));
  auto fd = std::make_unique<FunctorData>();
  fd->source = fi.cat;
  fd->target = fj.cat;
  fd->obj_map.resize(fi.cat->object_count());
  for (ObjId o = 0; o < fi.cat->object_count(); ++o) {
    MorId lift = cl.at(u, fi.objs[o]);
    fd->obj_map[o] = *fj.from_total_obj(e.cod(lift));
  }
  fd->mor_map.resize(fi.cat->morphism_count());
  for (MorId m = 0; m < fi.cat->morphism_count(); ++m) {
    ObjId src = fi.cat->dom(m), dst = fi.cat->cod(m);
    MorId liftSrc = cl.at(u, fi.objs[src]);
    MorId liftDst = cl.at(u, fi.objs[dst]);
    auto h = opcartesian_mediator(u_, liftSrc, e.compose(liftDst, fi.mors[m]),
                                  b.identity(b.cod(u)));
    if (!h) throw std::logic_error("opreindex: no mediator");
    fd->mor_map[m] = *fj.from_total_mor(*h);
  }
  if (auto v = functor_violation(*fd)) throw std::logic_error("opreindex invalid: " + *v);
  return *opreindex_.emplace(u, std::move(fd)).first->second;
}

bool FibrationContext::vertical_cartesian_factorization() const {
  const Cleavage& cl = cleavage();
  const FinCategory& e = *u_.source;
  const FinCategory& b = *u_.target;
  for (MorId g = 0; g < e.morphism_count(); ++g) {
    MorId lift = cl.at(u_.mor_map[g], e.cod(g));
    auto h = cartesian_mediator(u_, lift, g, b.identity(b.dom(u_.mor_map[g])));
    if (!h) return false;
    if (e.compose(lift, *h) != g) return false;
    // h vertical by construction (over the identity)
  }
  return true;
}

FibredStructureReport fibred_structure(const FibrationContext& fib) {
  FibredStructureReport r;
  const FinCategory& b = *fib.base();
  // fibre structures
  std::map<ObjId, CartesianStructure> structs;
  bool allTerm = true, allProd = true, allExp = true;
  for (ObjId x = 0; x < b.object_count(); ++x) {
    structs.emplace(x, choose_cartesian_structure(fib.fibre(x).cat));
    const auto& s = structs.at(x);
    if (!s.terminal) allTerm = false;
    if (!s.has_finite_products) allProd = false;
    bool exps = true;
    for (ObjId a = 0; a < fib.fibre(x).cat->object_count(); ++a)
      for (ObjId c = 0; c < fib.fibre(x).cat->object_count(); ++c)
        if (!s.exponential(a, c)) exps = false;
    if (!exps) allExp = false;
  }
  r.fibred_terminal = allTerm;
  r.fibred_product = allProd;
  r.fibred_exponent = allExp;

  auto iso_in_fibre = [&](const FibreCategory& f, ObjId a, ObjId c) {
    for (MorId m : f.cat->hom(a, c))
      if (classify_morphism(*f.cat, m).iso) return true;
    return a == c;
  };

  for (MorId u = 0; u < b.morphism_count(); ++u) {
    ObjId i = b.dom(u), j = b.cod(u);
    const FibreCategory& fj = fib.fibre(j);
    const FibreCategory& fi = fib.fibre(i);
    const FunctorData& re = fib.reindex(u);
    if (r.fibred_terminal) {
      // preservation on the nose
      ObjId tj = structs.at(j).terminal->object;
      ObjId ti = structs.at(i).terminal->object;
      ++r.preservation_checks;
      if (re.obj_map[tj] != ti) {
        r.fibred_terminal = false;
        r.detail = "terminal not preserved along " + b.morphism_name(u);
      }
    }
    if (r.fibred_product) {
      for (ObjId a = 0; a < fj.cat->object_count(); ++a)
        for (ObjId c = 0; c < fj.cat->object_count(); ++c) {
          const ProductWitness* pj = structs.at(j).product(a, c);
          const ProductWitness* pi =
              structs.at(i).product(re.obj_map[a], re.obj_map[c]);
          if (!pj || !pi) continue;
          ++r.preservation_checks;
          if (!iso_in_fibre(fi, re.obj_map[pj->apex], pi->apex)) {
            r.fibred_product = false;
            r.detail = "product not preserved along " + b.morphism_name(u);
          }
        }
    }
    if (r.fibred_exponent) {
      for (ObjId a = 0; a < fj.cat->object_count(); ++a)
        for (ObjId c = 0; c < fj.cat->object_count(); ++c) {
          const ExponentialWitness* ej = structs.at(j).exponential(a, c);
          const ExponentialWitness* ei =
              structs.at(i).exponential(re.obj_map[a], re.obj_map[c]);
          if (!ej || !ei) continue;
          ++r.preservation_checks;
          if (!iso_in_fibre(fi, re.obj_map[ej->object], ei->object)) {
            r.fibred_exponent = false;
            r.detail = "exponent not preserved along " + b.morphism_name(u);
          }
        }
    }
  }
  return r;
}

std::vector<GenericObjectReport> generic_objects(const FibrationContext& fib) {
  std::vector<GenericObjectReport> out;
  const FunctorData& U = fib.functor();
  const FinCategory& e = *U.source;
  const FinCategory& b = *U.target;
  bool split = false;
  bool isfib = fib.is_fibration();
  if (isfib) split = fib.cleavage().split;

  for (ObjId x = 0; x < e.object_count(); ++x) {
    GenericObjectReport r;
    r.object = x;
    r.omega = U.obj_map[x];
    r.weak_generic = true;
    r.generic = true;
    r.strong_generic = true;
    for (ObjId y = 0; y < e.object_count(); ++y) {
      bool anyCart = false;
      int cartBaseCount = 0;
      for (MorId u : b.hom(U.obj_map[y], r.omega)) {
        bool found = false;
        for (MorId f : e.hom(y, x))
          if (U.mor_map[f] == u && is_cartesian_over(U, f, u)) found = true;
        if (found) {
          anyCart = true;
          ++cartBaseCount;
        }
      }
      if (!anyCart) r.weak_generic = false;
      if (cartBaseCount != 1) r.generic = false;
      const auto& hom = e.hom(y, x);
      if (hom.size() != 1 || !cartesianity(U, hom.empty() ? kNoMor : hom[0],
                                           hom.empty() ? kNoMor : U.mor_map[hom[0]])
                                  .cartesian)
        r.strong_generic = false;
    }
    if (split) {
      // theta_I(u) = dom of the chosen lifting; bijection + compatibility
      r.split_generic = true;
      const Cleavage& cl = fib.cleavage();
      for (ObjId i = 0; i < b.object_count() && r.split_generic; ++i) {
        const FibreCategory& fi = fib.fibre(i);
        std::vector<ObjId> image;
        for (MorId u : b.hom(i, r.omega))
          image.push_back(*fi.from_total_obj(e.dom(cl.at(u, x))));
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end() ||
            static_cast<int>(image.size()) != fi.cat->object_count())
          r.split_generic = false;
      }
      // theta_J(u . v) = v*(theta_I u) for v : J -> I, u : I -> Omega
      for (ObjId i = 0; i < b.object_count() && r.split_generic; ++i)
        for (MorId u : b.hom(i, r.omega))
          for (ObjId j = 0; j < b.object_count() && r.split_generic; ++j)
            for (MorId v : b.hom(j, i)) {
              ObjId lhs = e.dom(cl.at(b.compose(u, v), x));
              ObjId thetaIu = e.dom(cl.at(u, x));
              ObjId rhs = e.dom(cl.at(v, thetaIu));
              if (lhs != rhs) r.split_generic = false;
            }
    }
    if (r.weak_generic || r.generic || r.strong_generic || r.split_generic)
      out.push_back(r);
  }
  return out;
}

FaithfulPreorderReport check_faithful_preorder_lemma(const FibrationContext& fib) {
  FaithfulPreorderReport r;
  r.faithful = functor_profile(fib.functor()).faithful;
  r.partial_order = true;
  const FinCategory& b = *fib.base();
  for (ObjId x = 0; x < b.object_count(); ++x)
    if (!category_profile(*fib.fibre(x).cat).preorder) r.partial_order = false;
  r.agree = (r.faithful == r.partial_order);
  return r;
}

namespace {

// right adjoint existence for a functor f : C -> D by universal-arrow search
bool has_right_adjoint(const FunctorData& f) {
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  for (ObjId v = 0; v < d.object_count(); ++v) {
    bool found = false;
    for (ObjId p = 0; p < c.object_count() && !found; ++p)
      for (MorId eps : d.hom(f.obj_map[p], v)) {
        bool ok = true;
        for (ObjId w = 0; w < c.object_count() && ok; ++w)
          for (MorId k : d.hom(f.obj_map[w], v)) {
            int n = 0;
            for (MorId l : c.hom(w, p))
              if (d.compose(eps, f.mor_map[l]) == k) ++n;
            if (n != 1) {
              ok = false;
              break;
            }
          }
        if (ok) {
          found = true;
          break;
        }
      }
    if (!found) return false;
  }
  return true;
}

} // namespace

FibrationProductsReport fibration_products(const FibrationContext& fib) {
  FibrationProductsReport r;
  const FinCategory& b = *fib.base();

  r.base_has_pullbacks = true;
  for (MorId f1 = 0; f1 < b.morphism_count() && r.base_has_pullbacks; ++f1)
    for (MorId f2 = 0; f2 < b.morphism_count(); ++f2)
      if (b.cod(f1) == b.cod(f2) && !choose_pullback(b, f1, f2)) {
        r.base_has_pullbacks = false;
        break;
      }

  auto baseStruct = choose_cartesian_structure(fib.base());
  r.base_has_products = baseStruct.has_finite_products;

  if (r.base_has_pullbacks) {
    r.has_product_adjoints = true;
    for (MorId u = 0; u < b.morphism_count() && r.has_product_adjoints; ++u) {
      ++r.adjoint_searches;
      if (!has_right_adjoint(fib.reindex(u))) r.has_product_adjoints = false;
    }
  }

  // projections of available products
  r.has_simple_product_adjoints = true;
  for (ObjId i = 0; i < b.object_count(); ++i)
    for (ObjId j = 0; j < b.object_count(); ++j) {
      const ProductWitness* p = baseStruct.product(i, j);
      if (!p) {
        ++r.skipped_missing_structure;
        continue;
      }
      ++r.adjoint_searches;
      if (!has_right_adjoint(fib.reindex(p->pi1))) r.has_simple_product_adjoints = false;
    }

  auto gens = generic_objects(fib);
  for (const auto& g : gens)
    if (g.generic) {
      r.omega = g.omega;
      break;
    }
  if (r.omega) {
    r.has_simple_omega_product = true;
    for (ObjId i = 0; i < b.object_count(); ++i) {
      const ProductWitness* p = baseStruct.product(i, *r.omega);
      if (!p) {
        ++r.skipped_missing_structure;
        continue;
      }
      ++r.adjoint_searches;
      if (!has_right_adjoint(fib.reindex(p->pi1))) r.has_simple_omega_product = false;
    }
  }
  return r;
}

FibrationProfile fibration_profile(const FibrationContext& fib) {
  FibrationProfile p;
  p.fibration = fib.is_fibration();
  p.opfibration = fib.is_opfibration();
  p.bifibration = p.fibration && p.opfibration;
  p.cloven = p.fibration; // a canonical cleavage is always constructed
  if (p.fibration) {
    p.split = fib.cleavage().split;
    p.fibred = fibred_structure(fib);
    p.lemma = check_faithful_preorder_lemma(fib);
    p.partial_order = p.lemma.partial_order;
  }
  p.faithful = functor_profile(fib.functor()).faithful;
  p.generics = generic_objects(fib);
  bool hasGeneric = false;
  for (const auto& g : p.generics)
    if (g.generic) hasGeneric = true;
  bool baseProducts = choose_cartesian_structure(fib.base()).has_finite_products;
  p.polymorphic = hasGeneric && p.fibred.fibred_product && p.fibred.fibred_terminal &&
                  baseProducts;
  return p;
}

} // namespace catkern
