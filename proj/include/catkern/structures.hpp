#pragma once

#include "catkern/functor.hpp"

#include <map>

namespace catkern {

struct TerminalWitness {
  ObjId object = kNoObj;
  std::vector<MorId> bang; // unique B -> object, per object B
};

struct InitialWitness {
  ObjId object = kNoObj;
  std::vector<MorId> bang; // unique object -> B, per object B
};

struct ProductWitness {
  ObjId left = kNoObj, right = kNoObj, apex = kNoObj;
  MorId pi1 = kNoMor, pi2 = kNoMor;
  std::map<std::pair<MorId, MorId>, MorId> mediator; // (f1 : D->left, f2 : D->right) -> v
  MorId pairing(MorId f1, MorId f2) const {
    auto it = mediator.find({f1, f2});
    return it == mediator.end() ? kNoMor : it->second;
  }
};

struct PullbackWitness {
  MorId f1 = kNoMor, f2 = kNoMor; // cospan with common codomain
  ObjId apex = kNoObj;
  MorId p1 = kNoMor, p2 = kNoMor; // p1 : apex -> dom f1, p2 : apex -> dom f2
  std::map<std::pair<MorId, MorId>, MorId> mediator;
  MorId mediate(MorId g1, MorId g2) const {
    auto it = mediator.find({g1, g2});
    return it == mediator.end() ? kNoMor : it->second;
  }
};

struct PushoutWitness {
  MorId f1 = kNoMor, f2 = kNoMor; // span with common domain
  ObjId apex = kNoObj;
  MorId i1 = kNoMor, i2 = kNoMor;
  std::map<std::pair<MorId, MorId>, MorId> mediator;
};

struct EqualizerWitness {
  MorId f = kNoMor, g = kNoMor; // parallel pair A -> B
  ObjId object = kNoObj;
  MorId arrow = kNoMor; // object -> A
  std::map<MorId, MorId> mediator; // fork m : Z -> A with fm = gm  ->  u : Z -> object
};

struct ExponentialWitness {
  ObjId base = kNoObj;   // A2
  ObjId result = kNoObj; // A1
  ObjId object = kNoObj; // A2 => A1
  MorId eval = kNoMor;   // (object x A2) -> A1, over the provider's product
  // (cone tip C, g : (C x A2) -> A1)  ->  lambda g : C -> object.
  // Keyed by the tip as well: distinct tips can share a product apex.
  std::map<std::pair<ObjId, MorId>, MorId> transpose;
};

/// Supplies a chosen product witness per ordered pair, or null when absent.
class ProductProvider {
public:
  virtual ~ProductProvider() = default;
  virtual const ProductWitness* product(ObjId a, ObjId b) const = 0;
};

class PullbackChooser {
public:
  virtual ~PullbackChooser() = default;
  /// Chosen pullback of the cospan (f1, f2), cod f1 = cod f2; null when absent.
  virtual const PullbackWitness* pullback(MorId f1, MorId f2) const = 0;
};

/// Least verified witness found by exhaustive search, cached per cospan.
class GenericPullbackChooser : public PullbackChooser {
public:
  explicit GenericPullbackChooser(CatPtr c) : cat_(std::move(c)) {}
  const PullbackWitness* pullback(MorId f1, MorId f2) const override;

private:
  CatPtr cat_;
  mutable std::map<std::pair<MorId, MorId>, std::optional<PullbackWitness>> cache_;
};

// ---- witness verification (fills mediator tables) ------------------------

bool verify_product(const FinCategory& c, ProductWitness& w);
bool verify_pullback(const FinCategory& c, PullbackWitness& w);
bool verify_equalizer(const FinCategory& c, EqualizerWitness& w);
/// Exponential verification relative to chosen products: needs product(object, base)
/// for eval's domain and quantifies cones over every C with product(C, base) chosen.
bool verify_exponential(const FinCategory& c, const ProductProvider& prods,
                        ExponentialWitness& w);

// ---- exhaustive searches ---------------------------------------------------

std::vector<ObjId> find_terminals(const FinCategory& c);
std::vector<ObjId> find_initials(const FinCategory& c);
std::optional<TerminalWitness> choose_terminal(const FinCategory& c);
std::optional<InitialWitness> choose_initial(const FinCategory& c);

std::vector<ProductWitness> find_products(const FinCategory& c, ObjId a, ObjId b);
std::optional<ProductWitness> choose_product(const FinCategory& c, ObjId a, ObjId b);

std::vector<PullbackWitness> find_pullbacks(const FinCategory& c, MorId f1, MorId f2);
std::optional<PullbackWitness> choose_pullback(const FinCategory& c, MorId f1, MorId f2);

std::vector<PushoutWitness> find_pushouts(const FinCategory& c, MorId f1, MorId f2);

std::vector<EqualizerWitness> find_equalizers(const FinCategory& c, MorId f, MorId g);
std::optional<EqualizerWitness> choose_equalizer(const FinCategory& c, MorId f, MorId g);

std::vector<ExponentialWitness> find_exponentials(const FinCategory& c,
                                                  const ProductProvider& prods, ObjId a2,
                                                  ObjId a1);

// ---- cartesian structure ---------------------------------------------------

/// Chosen terminal/product/exponential witnesses with the derived morphism
/// calculus. Products and exponentials may be partial on bounded fragments;
/// accessors return kNoMor when the needed structure is absent.
struct CartesianStructure : ProductProvider {
  CatPtr cat;
  std::optional<TerminalWitness> terminal;
  std::map<std::pair<ObjId, ObjId>, ProductWitness> products;
  std::map<std::pair<ObjId, ObjId>, ExponentialWitness> exponentials; // key (a2, a1)
  bool has_finite_products = false; // all pairs + terminal
  bool is_ccc = false;

  const ProductWitness* product(ObjId a, ObjId b) const override;
  const ExponentialWitness* exponential(ObjId a2, ObjId a1) const;

  ObjId prod_obj(ObjId a, ObjId b) const;
  MorId pi1(ObjId a, ObjId b) const;
  MorId pi2(ObjId a, ObjId b) const;
  MorId pair(MorId f, MorId g) const;            // <f,g>
  MorId times(MorId f, MorId g) const;           // f x g
  MorId delta(ObjId a) const;                    // <id,id>
  MorId swap(ObjId a, ObjId b) const;            // <pi2,pi1>
  MorId assoc(ObjId a, ObjId b, ObjId c) const;  // (AxB)xC -> Ax(BxC)
  MorId assoc_inv(ObjId a, ObjId b, ObjId c) const;
  MorId bang(ObjId a) const;                     // a -> 1
  MorId ev(ObjId a2, ObjId a1) const;
  MorId lambda(ObjId c, ObjId a2, ObjId a1, MorId g) const; // transpose of g : c x a2 -> a1
  MorId lambda_inv(ObjId a2, ObjId a1, MorId f) const;      // ev . (f x id)
};

/// Least witnesses for terminal/products/exponentials found by search; flags
/// reflect which structure exists. Search cost is acceptable on bounded
/// instances (the intended users are the zoo and small generated categories).
CartesianStructure choose_cartesian_structure(CatPtr c);

// ---- monoidal structure ----------------------------------------------------

/// Explicit (possibly partial on bounded fragments) monoidal data.
struct MonoidalStructure {
  CatPtr cat;
  ObjId unit = kNoObj;
  std::map<std::pair<ObjId, ObjId>, ObjId> obj_tensor;
  std::map<std::pair<MorId, MorId>, MorId> mor_tensor;
  std::map<std::tuple<ObjId, ObjId, ObjId>, MorId> associator;
  std::map<std::tuple<ObjId, ObjId, ObjId>, MorId> associator_inv;
  std::map<ObjId, MorId> left_unitor;  // I (x) A -> A
  std::map<ObjId, MorId> right_unitor; // A (x) I -> A
  std::map<std::pair<ObjId, ObjId>, MorId> symmetry; // empty when not symmetric

  ObjId tensor(ObjId a, ObjId b) const;
  MorId tensor_mor(MorId f, MorId g) const;
};

struct MonoidalCheck {
  std::string label;
  bool pass = true;
  long checked = 0;
  std::string counterexample;
};

struct MonoidalReport {
  std::vector<MonoidalCheck> checks;
  bool strict = false;
  bool symmetric = false;
  bool closed = false;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Bifunctoriality, naturality of the structure maps, pentagon and triangle;
/// symmetry diagrams when symmetry data is present; strict/closed flags.
/// Quantification runs over tuples where the (possibly partial) tensor is
/// defined and reports how many were checked.
MonoidalReport validate_monoidal(const MonoidalStructure& m);

/// The monoidal structure a cartesian structure induces: tensor = product,
/// unit = terminal, associator/unitors/symmetry from the product calculus.
MonoidalStructure induced_monoidal(const CartesianStructure& s);

} // namespace catkern
