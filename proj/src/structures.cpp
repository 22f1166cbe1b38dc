#include "catkern/structures.hpp"

#include "catkern/analysis.hpp"
#include "catkern/constructions.hpp"

#include <algorithm>

namespace catkern {

// ---- verification ----------------------------------------------------------

bool verify_product(const FinCategory& c, ProductWitness& w) {
  if (c.dom(w.pi1) != w.apex || c.cod(w.pi1) != w.left) return false;
  if (c.dom(w.pi2) != w.apex || c.cod(w.pi2) != w.right) return false;
  w.mediator.clear();
  for (ObjId d = 0; d < c.object_count(); ++d)
    for (MorId f1 : c.hom(d, w.left))
      for (MorId f2 : c.hom(d, w.right)) {
        MorId found = kNoMor;
        int n = 0;
        for (MorId v : c.hom(d, w.apex))
          if (c.compose(w.pi1, v) == f1 && c.compose(w.pi2, v) == f2) {
            found = v;
            ++n;
          }
        if (n != 1) return false;
        w.mediator[{f1, f2}] = found;
      }
  return true;
}

bool verify_pullback(const FinCategory& c, PullbackWitness& w) {
  if (c.cod(w.f1) != c.cod(w.f2)) return false;
  if (c.dom(w.p1) != w.apex || c.cod(w.p1) != c.dom(w.f1)) return false;
  if (c.dom(w.p2) != w.apex || c.cod(w.p2) != c.dom(w.f2)) return false;
  if (c.compose(w.f1, w.p1) != c.compose(w.f2, w.p2)) return false;
  w.mediator.clear();
  for (ObjId d = 0; d < c.object_count(); ++d)
    for (MorId g1 : c.hom(d, c.dom(w.f1)))
      for (MorId g2 : c.hom(d, c.dom(w.f2))) {
        if (c.compose(w.f1, g1) != c.compose(w.f2, g2)) continue;
        MorId found = kNoMor;
        int n = 0;
        for (MorId v : c.hom(d, w.apex))
          if (c.compose(w.p1, v) == g1 && c.compose(w.p2, v) == g2) {
            found = v;
            ++n;
          }
        if (n != 1) return false;
        w.mediator[{g1, g2}] = found;
      }
  return true;
}

bool verify_equalizer(const FinCategory& c, EqualizerWitness& w) {
  if (c.dom(w.f) != c.dom(w.g) || c.cod(w.f) != c.cod(w.g)) return false;
  if (c.dom(w.arrow) != w.object || c.cod(w.arrow) != c.dom(w.f)) return false;
  if (c.compose(w.f, w.arrow) != c.compose(w.g, w.arrow)) return false;
  w.mediator.clear();
  for (ObjId z = 0; z < c.object_count(); ++z)
    for (MorId m : c.hom(z, c.dom(w.f))) {
      if (c.compose(w.f, m) != c.compose(w.g, m)) continue;
      MorId found = kNoMor;
      int n = 0;
      for (MorId u : c.hom(z, w.object))
        if (c.compose(w.arrow, u) == m) {
          found = u;
          ++n;
        }
      if (n != 1) return false;
      w.mediator[m] = found;
    }
  return true;
}

bool verify_exponential(const FinCategory& c, const ProductProvider& prods,
                        ExponentialWitness& w) {
  const ProductWitness* dom = prods.product(w.object, w.base);
  if (!dom) return false;
  if (c.dom(w.eval) != dom->apex || c.cod(w.eval) != w.result) return false;
  w.transpose.clear();
  for (ObjId z = 0; z < c.object_count(); ++z) {
    const ProductWitness* zp = prods.product(z, w.base);
    if (!zp) continue; // no cones from z exist without the product
    for (MorId g : c.hom(zp->apex, w.result)) {
      MorId found = kNoMor;
      int n = 0;
      for (MorId u : c.hom(z, w.object)) {
        // u x id : z x base -> object x base
        MorId ux = dom->pairing(c.compose(u, zp->pi1), zp->pi2);
        if (ux == kNoMor) continue;
        if (c.compose(w.eval, ux) == g) {
          found = u;
          ++n;
        }
      }
      if (n != 1) return false;
      w.transpose[{z, g}] = found;
    }
  }
  return true;
}

// ---- searches ----------------------------------------------------------------

std::vector<ObjId> find_terminals(const FinCategory& c) {
  std::vector<ObjId> out;
  for (ObjId a = 0; a < c.object_count(); ++a)
    if (classify_object(c, a).terminal) out.push_back(a);
  return out;
}

std::vector<ObjId> find_initials(const FinCategory& c) {
  std::vector<ObjId> out;
  for (ObjId a = 0; a < c.object_count(); ++a)
    if (classify_object(c, a).initial) out.push_back(a);
  return out;
}

std::optional<TerminalWitness> choose_terminal(const FinCategory& c) {
  auto ts = find_terminals(c);
  if (ts.empty()) return std::nullopt;
  TerminalWitness w;
  w.object = ts.front();
  w.bang = classify_object(c, w.object).bang_into;
  return w;
}

std::optional<InitialWitness> choose_initial(const FinCategory& c) {
  auto is = find_initials(c);
  if (is.empty()) return std::nullopt;
  InitialWitness w;
  w.object = is.front();
  w.bang = classify_object(c, w.object).bang_outof;
  return w;
}

std::vector<ProductWitness> find_products(const FinCategory& c, ObjId a, ObjId b) {
  std::vector<ProductWitness> out;
  for (ObjId apex = 0; apex < c.object_count(); ++apex)
    for (MorId p1 : c.hom(apex, a))
      for (MorId p2 : c.hom(apex, b)) {
        ProductWitness w;
        w.left = a;
        w.right = b;
        w.apex = apex;
        w.pi1 = p1;
        w.pi2 = p2;
        if (verify_product(c, w)) out.push_back(std::move(w));
      }
  return out;
}

std::optional<ProductWitness> choose_product(const FinCategory& c, ObjId a, ObjId b) {
  for (ObjId apex = 0; apex < c.object_count(); ++apex)
    for (MorId p1 : c.hom(apex, a))
      for (MorId p2 : c.hom(apex, b)) {
        ProductWitness w;
        w.left = a;
        w.right = b;
        w.apex = apex;
        w.pi1 = p1;
        w.pi2 = p2;
        if (verify_product(c, w)) return w;
      }
  return std::nullopt;
}

std::vector<PullbackWitness> find_pullbacks(const FinCategory& c, MorId f1, MorId f2) {
  std::vector<PullbackWitness> out;
  if (c.cod(f1) != c.cod(f2)) return out;
  for (ObjId apex = 0; apex < c.object_count(); ++apex)
    for (MorId p1 : c.hom(apex, c.dom(f1)))
      for (MorId p2 : c.hom(apex, c.dom(f2))) {
        PullbackWitness w;
        w.f1 = f1;
        w.f2 = f2;
        w.apex = apex;
        w.p1 = p1;
        w.p2 = p2;
        if (verify_pullback(c, w)) out.push_back(std::move(w));
      }
  return out;
}

std::optional<PullbackWitness> choose_pullback(const FinCategory& c, MorId f1, MorId f2) {
  if (c.cod(f1) != c.cod(f2)) return std::nullopt;
  for (ObjId apex = 0; apex < c.object_count(); ++apex)
    for (MorId p1 : c.hom(apex, c.dom(f1)))
      for (MorId p2 : c.hom(apex, c.dom(f2))) {
        PullbackWitness w;
        w.f1 = f1;
        w.f2 = f2;
        w.apex = apex;
        w.p1 = p1;
        w.p2 = p2;
        if (verify_pullback(c, w)) return w;
      }
  return std::nullopt;
}

const PullbackWitness* GenericPullbackChooser::pullback(MorId f1, MorId f2) const {
  auto it = cache_.find({f1, f2});
  if (it == cache_.end())
    it = cache_.emplace(std::make_pair(f1, f2), choose_pullback(*cat_, f1, f2)).first;
  return it->second ? &*it->second : nullptr;
}

std::vector<PushoutWitness> find_pushouts(const FinCategory& c, MorId f1, MorId f2) {
  std::vector<PushoutWitness> out;
  if (c.dom(f1) != c.dom(f2)) return out;
  // dualize: pushout here = pullback in the opposite category, mapped back
  auto opc = opposite(std::make_shared<FinCategory>(c)); // local copy for shared_ptr
  auto pbs = find_pullbacks(*opc.cat, opc.to_op[f1], opc.to_op[f2]);
  for (const auto& pb : pbs) {
    PushoutWitness w;
    w.f1 = f1;
    w.f2 = f2;
    w.apex = opc.obj_from_op[pb.apex];
    w.i1 = opc.from_op[pb.p1];
    w.i2 = opc.from_op[pb.p2];
    for (const auto& [cone, v] : pb.mediator)
      w.mediator[{opc.from_op[cone.first], opc.from_op[cone.second]}] = opc.from_op[v];
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<EqualizerWitness> find_equalizers(const FinCategory& c, MorId f, MorId g) {
  std::vector<EqualizerWitness> out;
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g)) return out;
  for (ObjId e = 0; e < c.object_count(); ++e)
    for (MorId arr : c.hom(e, c.dom(f))) {
      EqualizerWitness w;
      w.f = f;
      w.g = g;
      w.object = e;
      w.arrow = arr;
      if (verify_equalizer(c, w)) out.push_back(std::move(w));
    }
  return out;
}

std::optional<EqualizerWitness> choose_equalizer(const FinCategory& c, MorId f, MorId g) {
  auto all = find_equalizers(c, f, g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<ExponentialWitness> find_exponentials(const FinCategory& c,
                                                  const ProductProvider& prods, ObjId a2,
                                                  ObjId a1) {
  std::vector<ExponentialWitness> out;
  for (ObjId b = 0; b < c.object_count(); ++b) {
    const ProductWitness* p = prods.product(b, a2);
    if (!p) continue;
    for (MorId ev : c.hom(p->apex, a1)) {
      ExponentialWitness w;
      w.base = a2;
      w.result = a1;
      w.object = b;
      w.eval = ev;
      if (verify_exponential(c, prods, w)) out.push_back(std::move(w));
    }
  }
  return out;
}

// ---- cartesian structure ------------------------------------------------------

const ProductWitness* CartesianStructure::product(ObjId a, ObjId b) const {
  auto it = products.find({a, b});
  return it == products.end() ? nullptr : &it->second;
}

const ExponentialWitness* CartesianStructure::exponential(ObjId a2, ObjId a1) const {
  auto it = exponentials.find({a2, a1});
  return it == exponentials.end() ? nullptr : &it->second;
}

ObjId CartesianStructure::prod_obj(ObjId a, ObjId b) const {
  const ProductWitness* p = product(a, b);
  return p ? p->apex : kNoObj;
}

MorId CartesianStructure::pi1(ObjId a, ObjId b) const {
  const ProductWitness* p = product(a, b);
  return p ? p->pi1 : kNoMor;
}

MorId CartesianStructure::pi2(ObjId a, ObjId b) const {
  const ProductWitness* p = product(a, b);
  return p ? p->pi2 : kNoMor;
}

MorId CartesianStructure::pair(MorId f, MorId g) const {
  if (f == kNoMor || g == kNoMor) return kNoMor;
  if (cat->dom(f) != cat->dom(g)) return kNoMor;
  const ProductWitness* p = product(cat->cod(f), cat->cod(g));
  return p ? p->pairing(f, g) : kNoMor;
}

MorId CartesianStructure::times(MorId f, MorId g) const {
  if (f == kNoMor || g == kNoMor) return kNoMor;
  const ProductWitness* src = product(cat->dom(f), cat->dom(g));
  if (!src) return kNoMor;
  return pair(cat->compose(f, src->pi1), cat->compose(g, src->pi2));
}

MorId CartesianStructure::delta(ObjId a) const {
  return pair(cat->identity(a), cat->identity(a));
}

MorId CartesianStructure::swap(ObjId a, ObjId b) const {
  const ProductWitness* p = product(a, b);
  if (!p) return kNoMor;
  return pair(p->pi2, p->pi1);
}

MorId CartesianStructure::assoc(ObjId a, ObjId b, ObjId c) const {
  const ProductWitness* ab = product(a, b);
  const ProductWitness* abc = ab ? product(ab->apex, c) : nullptr;
  const ProductWitness* bc = product(b, c);
  if (!ab || !abc || !bc || !product(a, bc->apex)) return kNoMor;
  MorId p1p1 = cat->compose(ab->pi1, abc->pi1);
  MorId inner = times(ab->pi2, cat->identity(c)); // (AxB)xC -> BxC
  return pair(p1p1, inner);
}

MorId CartesianStructure::assoc_inv(ObjId a, ObjId b, ObjId c) const {
  const ProductWitness* bc = product(b, c);
  const ProductWitness* abc = bc ? product(a, bc->apex) : nullptr;
  const ProductWitness* ab = product(a, b);
  if (!bc || !abc || !ab || !product(ab->apex, c)) return kNoMor;
  MorId outer = times(cat->identity(a), bc->pi1); // Ax(BxC) -> AxB
  MorId p2p2 = cat->compose(bc->pi2, abc->pi2);
  return pair(outer, p2p2);
}

MorId CartesianStructure::bang(ObjId a) const {
  return terminal ? terminal->bang[a] : kNoMor;
}

MorId CartesianStructure::ev(ObjId a2, ObjId a1) const {
  const ExponentialWitness* e = exponential(a2, a1);
  return e ? e->eval : kNoMor;
}

MorId CartesianStructure::lambda(ObjId c, ObjId a2, ObjId a1, MorId g) const {
  const ExponentialWitness* e = exponential(a2, a1);
  if (!e || g == kNoMor) return kNoMor;
  auto it = e->transpose.find({c, g});
  return it == e->transpose.end() ? kNoMor : it->second;
}

MorId CartesianStructure::lambda_inv(ObjId a2, ObjId a1, MorId f) const {
  const ExponentialWitness* e = exponential(a2, a1);
  if (!e || f == kNoMor) return kNoMor;
  MorId fx = times(f, cat->identity(a2));
  if (fx == kNoMor) return kNoMor;
  return cat->compose(e->eval, fx);
}

CartesianStructure choose_cartesian_structure(CatPtr c) {
  CartesianStructure s;
  s.cat = c;
  s.terminal = choose_terminal(*c);
  bool allProds = true;
  for (ObjId a = 0; a < c->object_count(); ++a)
    for (ObjId b = 0; b < c->object_count(); ++b) {
      auto w = choose_product(*c, a, b);
      if (w) s.products.emplace(std::make_pair(a, b), std::move(*w));
      else allProds = false;
    }
  s.has_finite_products = allProds && s.terminal.has_value();
  bool allExps = true;
  for (ObjId a2 = 0; a2 < c->object_count(); ++a2)
    for (ObjId a1 = 0; a1 < c->object_count(); ++a1) {
      auto ws = find_exponentials(*c, s, a2, a1);
      if (!ws.empty()) s.exponentials.emplace(std::make_pair(a2, a1), std::move(ws.front()));
      else allExps = false;
    }
  s.is_ccc = s.has_finite_products && allExps;
  return s;
}

// ---- monoidal -----------------------------------------------------------------

ObjId MonoidalStructure::tensor(ObjId a, ObjId b) const {
  auto it = obj_tensor.find({a, b});
  return it == obj_tensor.end() ? kNoObj : it->second;
}

MorId MonoidalStructure::tensor_mor(MorId f, MorId g) const {
  auto it = mor_tensor.find({f, g});
  return it == mor_tensor.end() ? kNoMor : it->second;
}

MonoidalStructure induced_monoidal(const CartesianStructure& s) {
  MonoidalStructure m;
  m.cat = s.cat;
  const FinCategory& c = *s.cat;
  if (s.terminal) m.unit = s.terminal->object;
  for (const auto& [key, w] : s.products) m.obj_tensor[key] = w.apex;
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g = 0; g < c.morphism_count(); ++g) {
      MorId t = s.times(f, g);
      if (t != kNoMor) m.mor_tensor[{f, g}] = t;
    }
  for (ObjId a = 0; a < c.object_count(); ++a)
    for (ObjId b = 0; b < c.object_count(); ++b) {
      MorId sw = s.swap(a, b);
      if (sw != kNoMor) m.symmetry[{a, b}] = sw;
      for (ObjId d = 0; d < c.object_count(); ++d) {
        MorId al = s.assoc(a, b, d);
        if (al != kNoMor) m.associator[{a, b, d}] = al;
        MorId ali = s.assoc_inv(a, b, d);
        if (ali != kNoMor) m.associator_inv[{a, b, d}] = ali;
      }
    }
  if (s.terminal) {
    for (ObjId a = 0; a < c.object_count(); ++a) {
      if (const ProductWitness* p = s.product(m.unit, a)) m.left_unitor[a] = p->pi2;
      if (const ProductWitness* p = s.product(a, m.unit)) m.right_unitor[a] = p->pi1;
    }
  }
  return m;
}

namespace {

bool is_iso(const FinCategory& c, MorId f) {
  for (MorId g : c.hom(c.cod(f), c.dom(f)))
    if (c.compose(f, g) == c.identity(c.cod(f)) && c.compose(g, f) == c.identity(c.dom(f)))
      return true;
  return false;
}

} // namespace

MonoidalReport validate_monoidal(const MonoidalStructure& m) {
  MonoidalReport rep;
  const FinCategory& c = *m.cat;
  auto check = [&](const std::string& label) -> MonoidalCheck& {
    rep.checks.push_back({label, true, 0, ""});
    return rep.checks.back();
  };

  { // bifunctoriality: identities and composition
    auto& k = check("tensor-identities");
    for (const auto& [key, ab] : m.obj_tensor) {
      MorId t = m.tensor_mor(c.identity(key.first), c.identity(key.second));
      if (t == kNoMor) continue;
      ++k.checked;
      if (t != c.identity(ab)) {
        k.pass = false;
        k.counterexample = c.object_name(key.first) + "," + c.object_name(key.second);
        break;
      }
    }
    auto& k2 = check("tensor-composition");
    for (const auto& [fg, t1] : m.mor_tensor) {
      auto [f1, g1] = fg;
      for (const auto& [fg2, t2] : m.mor_tensor) {
        auto [f2, g2] = fg2;
        if (!c.composable(f2, f1) || !c.composable(g2, g1)) continue;
        MorId lhs = m.tensor_mor(c.compose(f2, f1), c.compose(g2, g1));
        if (lhs == kNoMor) continue;
        ++k2.checked;
        if (lhs != c.compose(t2, t1)) {
          k2.pass = false;
          k2.counterexample = c.morphism_name(f1) + "," + c.morphism_name(g1) + ";" +
                              c.morphism_name(f2) + "," + c.morphism_name(g2);
          break;
        }
      }
      if (!k2.pass) break;
    }
  }

  { // structure maps are isos
    auto& k = check("structure-isos");
    for (const auto& [key, a] : m.associator) {
      (void)key;
      ++k.checked;
      if (!is_iso(c, a)) {
        k.pass = false;
        break;
      }
    }
    for (const auto& [key, l] : m.left_unitor) {
      (void)key;
      ++k.checked;
      if (!is_iso(c, l)) {
        k.pass = false;
        break;
      }
    }
    for (const auto& [key, r] : m.right_unitor) {
      (void)key;
      ++k.checked;
      if (!is_iso(c, r)) {
        k.pass = false;
        break;
      }
    }
  }

  { // naturality of the associator
    auto& k = check("associator-naturality");
    for (const auto& [key, al] : m.associator) {
      auto [a, b, d] = key;
      for (MorId f : c.morphisms()) {
        if (c.dom(f) != a) continue;
        for (MorId g : c.morphisms()) {
          if (c.dom(g) != b) continue;
          for (MorId h : c.morphisms()) {
            if (c.dom(h) != d) continue;
            auto it2 = m.associator.find({c.cod(f), c.cod(g), c.cod(h)});
            if (it2 == m.associator.end()) continue;
            MorId fg = m.tensor_mor(f, g);
            MorId gh = m.tensor_mor(g, h);
            if (fg == kNoMor || gh == kNoMor) continue;
            MorId lhs_in = m.tensor_mor(fg, h);
            MorId rhs_in = m.tensor_mor(f, gh);
            if (lhs_in == kNoMor || rhs_in == kNoMor) continue;
            ++k.checked;
            if (c.compose(it2->second, lhs_in) != c.compose(rhs_in, al)) {
              k.pass = false;
              k.counterexample = c.morphism_name(f) + "," + c.morphism_name(g) + "," +
                                 c.morphism_name(h);
            }
            if (!k.pass) break;
          }
          if (!k.pass) break;
        }
        if (!k.pass) break;
      }
      if (!k.pass) break;
    }
  }

  { // pentagon
    auto& k = check("pentagon");
    for (ObjId a = 0; a < c.object_count() && k.pass; ++a)
      for (ObjId b = 0; b < c.object_count() && k.pass; ++b)
        for (ObjId d = 0; d < c.object_count() && k.pass; ++d)
          for (ObjId e = 0; e < c.object_count() && k.pass; ++e) {
            ObjId ab = m.tensor(a, b);
            ObjId de = m.tensor(d, e);
            ObjId bd = m.tensor(b, d);
            if (ab == kNoObj || de == kNoObj || bd == kNoObj) continue;
            auto find = [&](ObjId x, ObjId y, ObjId z) -> MorId {
              auto it = m.associator.find({x, y, z});
              return it == m.associator.end() ? kNoMor : it->second;
            };
            MorId a1 = find(a, b, d);   // (ab)d -> a(bd)
            MorId a2 = find(a, bd, e);  // (a(bd))e -> a((bd)e)
            MorId a3 = find(b, d, e);   // (bd)e -> b(de)
            MorId a4 = find(ab, d, e);  // ((ab)d)e -> (ab)(de)
            MorId a5 = find(a, b, de);  // (ab)(de) -> a(b(de))
            if (a1 == kNoMor || a2 == kNoMor || a3 == kNoMor || a4 == kNoMor || a5 == kNoMor)
              continue;
            MorId top = m.tensor_mor(a1, c.identity(e));
            MorId bot = m.tensor_mor(c.identity(a), a3);
            if (top == kNoMor || bot == kNoMor) continue;
            ++k.checked;
            MorId route1 = c.compose(bot, c.compose(a2, top));
            MorId route2 = c.compose(a5, a4);
            if (route1 != route2) {
              k.pass = false;
              k.counterexample = c.object_name(a) + "," + c.object_name(b) + "," +
                                 c.object_name(d) + "," + c.object_name(e);
            }
          }
  }

  { // triangle
    auto& k = check("triangle");
    if (m.unit != kNoObj)
      for (ObjId a = 0; a < c.object_count() && k.pass; ++a)
        for (ObjId b = 0; b < c.object_count() && k.pass; ++b) {
          auto al = m.associator.find({a, m.unit, b});
          auto rho = m.right_unitor.find(a);
          auto lam = m.left_unitor.find(b);
          if (al == m.associator.end() || rho == m.right_unitor.end() ||
              lam == m.left_unitor.end())
            continue;
          MorId left = m.tensor_mor(rho->second, c.identity(b));
          MorId right = m.tensor_mor(c.identity(a), lam->second);
          if (left == kNoMor || right == kNoMor) continue;
          ++k.checked;
          if (c.compose(right, al->second) != left) {
            k.pass = false;
            k.counterexample = c.object_name(a) + "," + c.object_name(b);
          }
        }
  }

  rep.symmetric = !m.symmetry.empty();
  if (rep.symmetric) {
    auto& k = check("symmetry-unitors");
    if (m.unit != kNoObj)
      for (ObjId a = 0; a < c.object_count() && k.pass; ++a) {
        auto s = m.symmetry.find({a, m.unit});
        auto rho = m.right_unitor.find(a);
        auto lam = m.left_unitor.find(a);
        if (s == m.symmetry.end() || rho == m.right_unitor.end() || lam == m.left_unitor.end())
          continue;
        ++k.checked;
        if (c.compose(lam->second, s->second) != rho->second) {
          k.pass = false;
          k.counterexample = c.object_name(a);
        }
      }
    auto& k2 = check("symmetry-involution");
    for (const auto& [key, s1] : m.symmetry) {
      auto s2 = m.symmetry.find({key.second, key.first});
      if (s2 == m.symmetry.end()) continue;
      ++k2.checked;
      ObjId ab = m.tensor(key.first, key.second);
      if (c.compose(s2->second, s1) != c.identity(ab)) {
        k2.pass = false;
        k2.counterexample = c.object_name(key.first) + "," + c.object_name(key.second);
        break;
      }
    }
    auto& k3 = check("symmetry-hexagon");
    for (const auto& [key, al1] : m.associator) {
      auto [a, b, d] = key;
      // s_{a,b(x)d} and alpha_{b,d,a}: (a(x)b)(x)d -> b(x)(d(x)a) both ways
      ObjId bd = m.tensor(b, d);
      if (bd == kNoObj) continue;
      auto s_a_bd = m.symmetry.find({a, bd});
      auto al2 = m.associator.find({b, d, a});
      auto s_ab = m.symmetry.find({a, b});
      auto al3 = m.associator.find({b, a, d});
      auto s_ad = m.symmetry.find({a, d});
      if (s_a_bd == m.symmetry.end() || al2 == m.associator.end() ||
          s_ab == m.symmetry.end() || al3 == m.associator.end() || s_ad == m.symmetry.end())
        continue;
      MorId left1 = m.tensor_mor(s_ab->second, c.identity(d));
      MorId right1 = m.tensor_mor(c.identity(b), s_ad->second);
      if (left1 == kNoMor || right1 == kNoMor) continue;
      ++k3.checked;
      MorId route1 = c.compose(al2->second, c.compose(s_a_bd->second, al1));
      MorId route2 = c.compose(right1, c.compose(al3->second, left1));
      if (route1 != route2) {
        k3.pass = false;
        k3.counterexample = c.object_name(a) + "," + c.object_name(b) + "," +
                            c.object_name(d);
        break;
      }
    }
  }

  // strict: associator and unitors are identities
  rep.strict = true;
  for (const auto& [key, a] : m.associator) {
    (void)key;
    if (!c.is_identity(a)) rep.strict = false;
  }
  for (const auto& [key, l] : m.left_unitor) {
    (void)key;
    if (!c.is_identity(l)) rep.strict = false;
  }
  for (const auto& [key, r] : m.right_unitor) {
    (void)key;
    if (!c.is_identity(r)) rep.strict = false;
  }
  if (m.associator.empty() && m.left_unitor.empty()) rep.strict = false;

  // closed: every (_ (x) B) has a right adjoint, by universal-arrow search.
  // Only meaningful when the tensor is total.
  bool total = true;
  for (ObjId a = 0; a < c.object_count(); ++a)
    for (ObjId b = 0; b < c.object_count(); ++b)
      if (m.tensor(a, b) == kNoObj) total = false;
  rep.closed = total;
  if (total) {
    for (ObjId b = 0; b < c.object_count() && rep.closed; ++b)
      for (ObjId a = 0; a < c.object_count() && rep.closed; ++a) {
        // find (R, eps : R (x) b -> a) with unique factorization
        bool found = false;
        for (ObjId r = 0; r < c.object_count() && !found; ++r)
          for (MorId eps : c.hom(m.tensor(r, b), a)) {
            bool ok = true;
            for (ObjId w = 0; w < c.object_count() && ok; ++w)
              for (MorId k : c.hom(m.tensor(w, b), a)) {
                int n = 0;
                for (MorId l : c.hom(w, r)) {
                  MorId lb = m.tensor_mor(l, c.identity(b));
                  if (lb != kNoMor && c.compose(eps, lb) == k) ++n;
                }
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
        if (!found) rep.closed = false;
      }
  }

  return rep;
}

} // namespace catkern
