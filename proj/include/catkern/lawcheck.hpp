#pragma once

#include "catkern/instances.hpp"
#include "catkern/monad.hpp"
#include "catkern/structures.hpp"

#include <array>
#include <functional>

namespace catkern {

// ---- equation terms ----------------------------------------------------------
//
// Suites are data: each equation is a pair of morphism terms over typed
// variables, evaluated against any context that carries the needed structure.

struct ObjTerm;
using ObjTermPtr = std::shared_ptr<const ObjTerm>;
struct ObjTerm {
  enum Kind { Var, Prod, Exp, Unit, TApp, Carrier } kind = Var;
  int var = -1; // Var: object variable; Carrier: algebra variable
  ObjTermPtr a, b;
};

ObjTermPtr ovar(int i);
ObjTermPtr oprod(ObjTermPtr a, ObjTermPtr b);
ObjTermPtr oexp(ObjTermPtr base, ObjTermPtr result);
ObjTermPtr ounit();
ObjTermPtr otapp(ObjTermPtr a);
ObjTermPtr ocarrier(int algebra_var);

struct MorTerm;
using MorTermPtr = std::shared_ptr<const MorTerm>;
struct MorTerm {
  enum Kind {
    Var, Id, Comp, Pi1, Pi2, Pairing, Times, Delta, Swap, Assoc, AssocInv,
    Bang, Ev, Lambda, LambdaInv, Eta, Mu, TMap, Lst, Action
  } kind = Var;
  int var = -1; // Var: morphism variable; Action: algebra variable
  MorTermPtr f, g;
  ObjTermPtr o1, o2, o3;
};

MorTermPtr mvar(int i);
MorTermPtr mid(ObjTermPtr o);
MorTermPtr mcomp(MorTermPtr f, MorTermPtr g); // f . g
MorTermPtr mpi1(ObjTermPtr a, ObjTermPtr b);
MorTermPtr mpi2(ObjTermPtr a, ObjTermPtr b);
MorTermPtr mpair(MorTermPtr f, MorTermPtr g);
MorTermPtr mtimes(MorTermPtr f, MorTermPtr g);
MorTermPtr mdelta(ObjTermPtr a);
MorTermPtr mswap(ObjTermPtr a, ObjTermPtr b);
MorTermPtr massoc(ObjTermPtr a, ObjTermPtr b, ObjTermPtr c);
MorTermPtr massoc_inv(ObjTermPtr a, ObjTermPtr b, ObjTermPtr c);
MorTermPtr mbang(ObjTermPtr a);
MorTermPtr mev(ObjTermPtr base, ObjTermPtr result);
MorTermPtr mlambda(ObjTermPtr tip, ObjTermPtr base, ObjTermPtr result, MorTermPtr f);
MorTermPtr mlambda_inv(ObjTermPtr base, ObjTermPtr result, MorTermPtr f);
MorTermPtr meta(ObjTermPtr a);
MorTermPtr mmu(ObjTermPtr a);
MorTermPtr mtmap(MorTermPtr f);
MorTermPtr mlst(ObjTermPtr a, ObjTermPtr b);
MorTermPtr maction(int algebra_var);

// ---- contexts ------------------------------------------------------------------

/// Interface the evaluator runs against. Object/morphism handles are opaque;
/// capability calls return nullopt when the instance lacks the structure, in
/// which case the binding counts as skipped.
class EqContext {
public:
  using Obj = long long;
  using Mor = long long;
  virtual ~EqContext() = default;

  virtual std::vector<Obj> objects() = 0;   // variable enumeration domain
  virtual std::vector<Mor> hom(Obj a, Obj b) = 0;
  virtual Obj dom(Mor f) = 0;
  virtual Obj cod(Mor f) = 0;
  virtual Mor id(Obj a) = 0;
  virtual Mor compose(Mor f, Mor g) = 0; // f . g; type errors are schema bugs
  virtual std::string obj_name(Obj a) = 0;
  virtual std::string mor_name(Mor f) = 0;

  virtual std::optional<Obj> unit_obj() { return std::nullopt; }
  virtual std::optional<Mor> bang(Obj) { return std::nullopt; }
  virtual std::optional<Obj> prod_obj(Obj, Obj) { return std::nullopt; }
  virtual std::optional<Mor> pi1(Obj, Obj) { return std::nullopt; }
  virtual std::optional<Mor> pi2(Obj, Obj) { return std::nullopt; }
  virtual std::optional<Mor> pairing(Mor, Mor) { return std::nullopt; }
  virtual std::optional<Obj> exp_obj(Obj, Obj) { return std::nullopt; }
  virtual std::optional<Mor> ev(Obj, Obj) { return std::nullopt; }
  virtual std::optional<Mor> transpose(Obj, Obj, Obj, Mor) { return std::nullopt; }
  virtual std::optional<Obj> t_obj(Obj) { return std::nullopt; }
  virtual std::optional<Mor> t_mor(Mor) { return std::nullopt; }
  virtual std::optional<Mor> eta(Obj) { return std::nullopt; }
  virtual std::optional<Mor> mu(Obj) { return std::nullopt; }
  virtual std::optional<Mor> lst(Obj, Obj) { return std::nullopt; }
  virtual int algebra_count() { return 0; }
  virtual Obj algebra_carrier(int) { throw std::logic_error("no algebras"); }
  virtual Mor algebra_action(int) { throw std::logic_error("no algebras"); }
};

/// A table category with its chosen cartesian structure.
class TableCatContext : public EqContext {
public:
  TableCatContext(CatPtr cat, const CartesianStructure* cart);
  std::vector<Obj> objects() override;
  std::vector<Mor> hom(Obj a, Obj b) override;
  Obj dom(Mor f) override;
  Obj cod(Mor f) override;
  Mor id(Obj a) override;
  Mor compose(Mor f, Mor g) override;
  std::string obj_name(Obj a) override;
  std::string mor_name(Mor f) override;
  std::optional<Obj> unit_obj() override;
  std::optional<Mor> bang(Obj a) override;
  std::optional<Obj> prod_obj(Obj a, Obj b) override;
  std::optional<Mor> pi1(Obj a, Obj b) override;
  std::optional<Mor> pi2(Obj a, Obj b) override;
  std::optional<Mor> pairing(Mor f, Mor g) override;
  std::optional<Obj> exp_obj(Obj base, Obj result) override;
  std::optional<Mor> ev(Obj base, Obj result) override;
  std::optional<Mor> transpose(Obj tip, Obj base, Obj result, Mor g) override;

private:
  CatPtr cat_;
  const CartesianStructure* cart_;
};

/// The lazy finite-set calculus, with full cartesian-closed structure by
/// formula and an optional monad plus algebra family. Objects are plain
/// sizes; only sizes <= max_size enumerate as variable values.
class FinSetContext : public EqContext {
public:
  FinSetContext(int max_size, std::optional<SetMonad> monad = std::nullopt,
                std::vector<Algebra> algebras = {});

  /// Fault injection for tests: replaces the strength component at (a, b).
  void override_lst(int a, int b, SetFn table);

  std::vector<Obj> objects() override;
  std::vector<Mor> hom(Obj a, Obj b) override;
  Obj dom(Mor f) override;
  Obj cod(Mor f) override;
  Mor id(Obj a) override;
  Mor compose(Mor f, Mor g) override;
  std::string obj_name(Obj a) override;
  std::string mor_name(Mor f) override;
  std::optional<Obj> unit_obj() override { return 1; }
  std::optional<Mor> bang(Obj a) override;
  std::optional<Obj> prod_obj(Obj a, Obj b) override { return a * b; }
  std::optional<Mor> pi1(Obj a, Obj b) override;
  std::optional<Mor> pi2(Obj a, Obj b) override;
  std::optional<Mor> pairing(Mor f, Mor g) override;
  std::optional<Obj> exp_obj(Obj base, Obj result) override;
  std::optional<Mor> ev(Obj base, Obj result) override;
  std::optional<Mor> transpose(Obj tip, Obj base, Obj result, Mor g) override;
  std::optional<Obj> t_obj(Obj a) override;
  std::optional<Mor> t_mor(Mor f) override;
  std::optional<Mor> eta(Obj a) override;
  std::optional<Mor> mu(Obj a) override;
  std::optional<Mor> lst(Obj a, Obj b) override;
  int algebra_count() override { return static_cast<int>(algebras_.size()); }
  Obj algebra_carrier(int i) override { return algebras_[i].carrier; }
  Mor algebra_action(int i) override { return intern(algebras_[i].action); }

  Mor intern(const SetFn& f);
  const SetFn& fn(Mor m) const { return pool_[static_cast<std::size_t>(m)]; }

private:
  int max_;
  std::optional<SetMonad> monad_;
  std::vector<Algebra> algebras_;
  std::map<std::pair<int, int>, SetFn> lstOverride_;
  std::vector<SetFn> pool_;
  std::map<SetFn, Mor> interned_;
};

// ---- equations and suites -------------------------------------------------------

struct VarSpec {
  enum Kind { Object, Morphism, AlgebraVar } kind = Object;
  ObjTermPtr dom, cod; // morphism typing, may reference earlier variables
};

struct Equation {
  std::string label;
  std::string display;
  std::vector<VarSpec> vars;
  enum Kind { Equal, Iff } kind = Equal;
  std::vector<std::pair<MorTermPtr, MorTermPtr>> sides; // Equal: all must hold
  std::array<MorTermPtr, 4> iff{};                      // (a==b) <=> (c==d)
  bool suspected_typo_on_fail = false;
};

struct EquationSuite {
  std::string id;
  std::vector<Equation> equations;
};

EquationSuite product_suite();
EquationSuite exponent_suite();
EquationSuite assoc_suite();
EquationSuite monad_suite();
EquationSuite strength_suite();
EquationSuite algebra_suite();
std::optional<EquationSuite> suite_by_id(const std::string& id);
std::vector<std::string> suite_ids();

struct LawResult {
  std::string label;
  std::string display;
  enum Status { Pass, Fail, Skipped } status = Skipped;
  long checked = 0;
  long skipped = 0;
  bool suspected_typo = false; // set when a flagged equation fails
  std::string counterexample;  // binding plus the two differing sides
};

struct LawReport {
  std::string suite;
  std::vector<LawResult> results;
  bool all_pass(bool allow_suspected_typo = true) const;
};

LawReport run_suite(EqContext& ctx, const EquationSuite& suite);

// ---- derivation replay ------------------------------------------------------------

/// A proof chain: successive morphism terms, each step checked equal to the
/// previous one under every binding.
struct Derivation {
  std::string id;
  std::string description;
  std::vector<VarSpec> vars;
  std::vector<MorTermPtr> steps;
  std::vector<std::string> step_notes;
};

std::vector<Derivation> all_derivations();
std::optional<Derivation> derivation_by_id(const std::string& id);

struct DerivationResult {
  std::string id;
  bool pass = false;
  long bindings = 0;
  long skipped = 0;
  int first_failing_step = -1; // index i: step i != step i+1
  std::string counterexample;
};

DerivationResult replay_derivation(EqContext& ctx, const Derivation& d);

// ---- monad validation reports ------------------------------------------------------

struct StrengthFlags {
  bool commutative = false;
  bool affine = false;
};

/// Monad laws (m-series) over carriers <= max_size.
LawReport validate_monad(const SetMonad& m, int max_size);
/// Strength laws (s-series) over carriers <= max_size.
LawReport validate_strength(const SetMonad& m, int max_size);
StrengthFlags strength_flags(const SetMonad& m, int max_size);

} // namespace catkern
