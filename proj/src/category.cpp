#include "catkern/category.hpp"

#include <algorithm>
#include <numeric>

namespace catkern {

std::string_view axiom_name(Axiom a) {
  switch (a) {
  case Axiom::DanglingId: return "DanglingId";
  case Axiom::MissingComposite: return "MissingComposite";
  case Axiom::BadComposite: return "BadComposite";
  case Axiom::NonAssociative: return "NonAssociative";
  case Axiom::BrokenUnit: return "BrokenUnit";
  }
  return "?";
}

std::optional<ObjId> FinCategory::object_by_name(std::string_view n) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), n);
  if (it != objects_.end() && *it == n)
    return static_cast<ObjId>(it - objects_.begin());
  return std::nullopt;
}

std::optional<MorId> FinCategory::morphism_by_name(std::string_view n) const {
  auto it = std::lower_bound(morphisms_.begin(), morphisms_.end(), n,
                             [](const MorData& m, std::string_view s) { return m.name < s; });
  if (it != morphisms_.end() && it->name == n)
    return static_cast<MorId>(it - morphisms_.begin());
  return std::nullopt;
}

std::vector<ObjId> FinCategory::objects() const {
  std::vector<ObjId> v(objects_.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<MorId> FinCategory::morphisms() const {
  std::vector<MorId> v(morphisms_.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

ObjId CategoryBuilder::add_object(std::string name) {
  if (objIndex_.count(name))
    throw BuildError({Axiom::DanglingId, {name}, "duplicate object"},
                     "duplicate object name: " + name);
  ObjId id = static_cast<ObjId>(objects_.size());
  objIndex_.emplace(name, id);
  objects_.push_back(std::move(name));
  return id;
}

MorId CategoryBuilder::add_morphism(std::string name, ObjId dom, ObjId cod) {
  if (morIndex_.count(name))
    throw BuildError({Axiom::DanglingId, {name}, "duplicate morphism"},
                     "duplicate morphism name: " + name);
  MorId id = static_cast<MorId>(morphisms_.size());
  morIndex_.emplace(name, id);
  morphisms_.push_back({std::move(name), dom, cod});
  return id;
}

void CategoryBuilder::set_identity(ObjId a, MorId f) { identities_.emplace_back(a, f); }

void CategoryBuilder::set_composite(MorId g, MorId f, MorId gf) {
  composites_.push_back({g, f, gf});
}

ObjId CategoryBuilder::object(std::string_view name) const {
  auto it = objIndex_.find(name);
  return it == objIndex_.end() ? kNoObj : it->second;
}

MorId CategoryBuilder::morphism(std::string_view name) const {
  auto it = morIndex_.find(name);
  return it == morIndex_.end() ? kNoMor : it->second;
}

CatPtr CategoryBuilder::build() const {
  auto cat = std::make_shared<FinCategory>();
  const std::size_t nO = objects_.size(), nM = morphisms_.size();

  // Canonical ids: sort both tables lexicographically and remap.
  std::vector<ObjId> objOrder(nO);
  std::iota(objOrder.begin(), objOrder.end(), 0);
  std::sort(objOrder.begin(), objOrder.end(),
            [&](ObjId a, ObjId b) { return objects_[a] < objects_[b]; });
  std::vector<ObjId> objRemap(nO);
  for (std::size_t i = 0; i < nO; ++i) objRemap[objOrder[i]] = static_cast<ObjId>(i);

  std::vector<MorId> morOrder(nM);
  std::iota(morOrder.begin(), morOrder.end(), 0);
  std::sort(morOrder.begin(), morOrder.end(),
            [&](MorId a, MorId b) { return morphisms_[a].name < morphisms_[b].name; });
  std::vector<MorId> morRemap(nM);
  for (std::size_t i = 0; i < nM; ++i) morRemap[morOrder[i]] = static_cast<MorId>(i);

  cat->objects_.resize(nO);
  for (std::size_t i = 0; i < nO; ++i) cat->objects_[i] = objects_[objOrder[i]];
  cat->morphisms_.resize(nM);
  for (std::size_t i = 0; i < nM; ++i) {
    const MorData& m = morphisms_[morOrder[i]];
    cat->morphisms_[i] = {m.name, objRemap[m.dom], objRemap[m.cod]};
  }

  cat->identity_.assign(nO, kNoMor);
  for (auto [a, f] : identities_) cat->identity_[objRemap[a]] = morRemap[f];

  cat->table_.assign(nM * nM, kNoMor);
  for (const auto& c : composites_) {
    MorId g = morRemap[c[0]], f = morRemap[c[1]], gf = morRemap[c[2]];
    cat->table_[static_cast<std::size_t>(g) * nM + f] = gf;
  }

  cat->hom_.assign(nO * nO, {});
  for (std::size_t f = 0; f < nM; ++f) {
    const MorData& m = cat->morphisms_[f];
    cat->hom_[static_cast<std::size_t>(m.dom) * nO + m.cod].push_back(static_cast<MorId>(f));
  }

  if (auto v = validate_category(*cat))
    throw BuildError(*v, std::string(axiom_name(v->kind)) + ": " + v->detail);
  return cat;
}

std::optional<AxiomViolation> validate_category(const FinCategory& c) {
  const int nO = c.object_count(), nM = c.morphism_count();

  for (ObjId a = 0; a < nO; ++a) {
    MorId i = c.identity(a);
    if (i == kNoMor)
      return AxiomViolation{Axiom::DanglingId, {c.object_name(a)},
                            "object " + c.object_name(a) + " has no identity"};
    if (c.dom(i) != a || c.cod(i) != a)
      return AxiomViolation{Axiom::DanglingId, {c.object_name(a), c.morphism_name(i)},
                            "identity of " + c.object_name(a) + " has wrong endpoints"};
  }

  // Composition total on composable pairs, undefined otherwise, endpoints right.
  for (MorId g = 0; g < nM; ++g)
    for (MorId f = 0; f < nM; ++f) {
      MorId gf = c.compose(g, f);
      if (c.composable(g, f)) {
        if (gf == kNoMor)
          return AxiomViolation{Axiom::MissingComposite,
                                {c.morphism_name(g), c.morphism_name(f)},
                                c.morphism_name(g) + " . " + c.morphism_name(f) +
                                    " is undefined"};
        if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
          return AxiomViolation{Axiom::BadComposite,
                                {c.morphism_name(g), c.morphism_name(f), c.morphism_name(gf)},
                                "composite has wrong endpoints"};
      } else if (gf != kNoMor) {
        return AxiomViolation{Axiom::BadComposite,
                              {c.morphism_name(g), c.morphism_name(f)},
                              "composite defined on a non-composable pair"};
      }
    }

  for (MorId f = 0; f < nM; ++f) {
    MorId idd = c.identity(c.dom(f)), idc = c.identity(c.cod(f));
    if (c.compose(f, idd) != f || c.compose(idc, f) != f)
      return AxiomViolation{Axiom::BrokenUnit, {c.morphism_name(f)},
                            "unit law fails at " + c.morphism_name(f)};
  }

  std::vector<std::vector<MorId>> outgoing(nO);
  for (MorId f = 0; f < nM; ++f) outgoing[c.dom(f)].push_back(f);

  for (MorId f = 0; f < nM; ++f)
    for (MorId g : outgoing[c.cod(f)]) {
      MorId gf = c.compose(g, f);
      for (MorId h : outgoing[c.cod(g)]) {
        MorId hg = c.compose(h, g);
        if (c.compose(h, gf) != c.compose(hg, f))
          return AxiomViolation{
              Axiom::NonAssociative,
              {c.morphism_name(f), c.morphism_name(g), c.morphism_name(h)},
              "h.(g.f) != (h.g).f for f=" + c.morphism_name(f) + " g=" + c.morphism_name(g) +
                  " h=" + c.morphism_name(h)};
      }
    }

  return std::nullopt;
}

} // namespace catkern
