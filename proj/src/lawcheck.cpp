#include "catkern/lawcheck.hpp"

#include <algorithm>
#include <functional>

namespace catkern {

// ---- term builders -------------------------------------------------------------

ObjTermPtr ovar(int i) {
  auto t = std::make_shared<ObjTerm>();
  t->kind = ObjTerm::Var;
  t->var = i;
  return t;
}

ObjTermPtr oprod(ObjTermPtr a, ObjTermPtr b) {
  auto t = std::make_shared<ObjTerm>();
  t->kind = ObjTerm::Prod;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

ObjTermPtr oexp(ObjTermPtr base, ObjTermPtr result) {
  auto t = std::make_shared<ObjTerm>();
  t->kind = ObjTerm::Exp;
  t->a = std::move(base);
  t->b = std::move(result);
  return t;
}

ObjTermPtr ounit() {
  auto t = std::make_shared<ObjTerm>();
  t->kind = ObjTerm::Unit;
  return t;
}

ObjTermPtr otapp(ObjTermPtr a) {
  auto t = std::make_shared<ObjTerm>();
  t->kind = ObjTerm::TApp;
  t->a = std::move(a);
  return t;
}

ObjTermPtr ocarrier(int algebra_var) {
  auto t = std::make_shared<ObjTerm>();
  t->kind = ObjTerm::Carrier;
  t->var = algebra_var;
  return t;
}

MorTermPtr mvar(int i) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Var;
  t->var = i;
  return t;
}

MorTermPtr mid(ObjTermPtr o) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Id;
  t->o1 = std::move(o);
  return t;
}

MorTermPtr mcomp(MorTermPtr f, MorTermPtr g) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Comp;
  t->f = std::move(f);
  t->g = std::move(g);
  return t;
}

MorTermPtr mpi1(ObjTermPtr a, ObjTermPtr b) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Pi1;
  t->o1 = std::move(a);
  t->o2 = std::move(b);
  return t;
}

MorTermPtr mpi2(ObjTermPtr a, ObjTermPtr b) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Pi2;
  t->o1 = std::move(a);
  t->o2 = std::move(b);
  return t;
}

MorTermPtr mpair(MorTermPtr f, MorTermPtr g) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Pairing;
  t->f = std::move(f);
  t->g = std::move(g);
  return t;
}

MorTermPtr mtimes(MorTermPtr f, MorTermPtr g) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Times;
  t->f = std::move(f);
  t->g = std::move(g);
  return t;
}

MorTermPtr mdelta(ObjTermPtr a) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Delta;
  t->o1 = std::move(a);
  return t;
}

MorTermPtr mswap(ObjTermPtr a, ObjTermPtr b) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Swap;
  t->o1 = std::move(a);
  t->o2 = std::move(b);
  return t;
}

MorTermPtr massoc(ObjTermPtr a, ObjTermPtr b, ObjTermPtr c) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Assoc;
  t->o1 = std::move(a);
  t->o2 = std::move(b);
  t->o3 = std::move(c);
  return t;
}

MorTermPtr massoc_inv(ObjTermPtr a, ObjTermPtr b, ObjTermPtr c) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::AssocInv;
  t->o1 = std::move(a);
  t->o2 = std::move(b);
  t->o3 = std::move(c);
  return t;
}

MorTermPtr mbang(ObjTermPtr a) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Bang;
  t->o1 = std::move(a);
  return t;
}

MorTermPtr mev(ObjTermPtr base, ObjTermPtr result) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Ev;
  t->o1 = std::move(base);
  t->o2 = std::move(result);
  return t;
}

MorTermPtr mlambda(ObjTermPtr tip, ObjTermPtr base, ObjTermPtr result, MorTermPtr f) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Lambda;
  t->o1 = std::move(tip);
  t->o2 = std::move(base);
  t->o3 = std::move(result);
  t->f = std::move(f);
  return t;
}

MorTermPtr mlambda_inv(ObjTermPtr base, ObjTermPtr result, MorTermPtr f) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::LambdaInv;
  t->o1 = std::move(base);
  t->o2 = std::move(result);
  t->f = std::move(f);
  return t;
}

MorTermPtr meta(ObjTermPtr a) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Eta;
  t->o1 = std::move(a);
  return t;
}

MorTermPtr mmu(ObjTermPtr a) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Mu;
  t->o1 = std::move(a);
  return t;
}

MorTermPtr mtmap(MorTermPtr f) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::TMap;
  t->f = std::move(f);
  return t;
}

MorTermPtr mlst(ObjTermPtr a, ObjTermPtr b) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Lst;
  t->o1 = std::move(a);
  t->o2 = std::move(b);
  return t;
}

MorTermPtr maction(int algebra_var) {
  auto t = std::make_shared<MorTerm>();
  t->kind = MorTerm::Action;
  t->var = algebra_var;
  return t;
}

// ---- evaluation ----------------------------------------------------------------

namespace {

struct Env {
  std::vector<EqContext::Obj> ovals;
  std::vector<EqContext::Mor> mvals;
  std::vector<int> avals; // algebra indices
};

using OptObj = std::optional<EqContext::Obj>;
using OptMor = std::optional<EqContext::Mor>;

OptObj eval_obj(EqContext& ctx, const Env& env, const ObjTermPtr& t);

OptMor eval_mor(EqContext& ctx, const Env& env, const MorTermPtr& t) {
  switch (t->kind) {
  case MorTerm::Var:
    return env.mvals[t->var];
  case MorTerm::Id: {
    auto o = eval_obj(ctx, env, t->o1);
    if (!o) return std::nullopt;
    return ctx.id(*o);
  }
  case MorTerm::Comp: {
    auto f = eval_mor(ctx, env, t->f);
    auto g = eval_mor(ctx, env, t->g);
    if (!f || !g) return std::nullopt;
    if (ctx.dom(*f) != ctx.cod(*g))
      throw std::logic_error("schema type error: composition mismatch");
    return ctx.compose(*f, *g);
  }
  case MorTerm::Pi1: {
    auto a = eval_obj(ctx, env, t->o1);
    auto b = eval_obj(ctx, env, t->o2);
    if (!a || !b) return std::nullopt;
    return ctx.pi1(*a, *b);
  }
  case MorTerm::Pi2: {
    auto a = eval_obj(ctx, env, t->o1);
    auto b = eval_obj(ctx, env, t->o2);
    if (!a || !b) return std::nullopt;
    return ctx.pi2(*a, *b);
  }
  case MorTerm::Pairing: {
    auto f = eval_mor(ctx, env, t->f);
    auto g = eval_mor(ctx, env, t->g);
    if (!f || !g) return std::nullopt;
    if (ctx.dom(*f) != ctx.dom(*g))
      throw std::logic_error("schema type error: pairing domains differ");
    return ctx.pairing(*f, *g);
  }
  case MorTerm::Times: {
    auto f = eval_mor(ctx, env, t->f);
    auto g = eval_mor(ctx, env, t->g);
    if (!f || !g) return std::nullopt;
    auto p1 = ctx.pi1(ctx.dom(*f), ctx.dom(*g));
    auto p2 = ctx.pi2(ctx.dom(*f), ctx.dom(*g));
    if (!p1 || !p2) return std::nullopt;
    return ctx.pairing(ctx.compose(*f, *p1), ctx.compose(*g, *p2));
  }
  case MorTerm::Delta: {
    auto a = eval_obj(ctx, env, t->o1);
    if (!a) return std::nullopt;
    return ctx.pairing(ctx.id(*a), ctx.id(*a));
  }
  case MorTerm::Swap: {
    auto a = eval_obj(ctx, env, t->o1);
    auto b = eval_obj(ctx, env, t->o2);
    if (!a || !b) return std::nullopt;
    auto p1 = ctx.pi1(*a, *b);
    auto p2 = ctx.pi2(*a, *b);
    if (!p1 || !p2) return std::nullopt;
    return ctx.pairing(*p2, *p1);
  }
  case MorTerm::Assoc: {
    auto a = eval_obj(ctx, env, t->o1);
    auto b = eval_obj(ctx, env, t->o2);
    auto c = eval_obj(ctx, env, t->o3);
    if (!a || !b || !c) return std::nullopt;
    auto ab = ctx.prod_obj(*a, *b);
    if (!ab) return std::nullopt;
    auto pab1 = ctx.pi1(*a, *b), pab2 = ctx.pi2(*a, *b);
    auto pc1 = ctx.pi1(*ab, *c), pc2 = ctx.pi2(*ab, *c);
    if (!pab1 || !pab2 || !pc1 || !pc2) return std::nullopt;
    auto inner = ctx.pairing(ctx.compose(*pab2, *pc1), *pc2); // (AxB)xC -> BxC
    if (!inner) return std::nullopt;
    return ctx.pairing(ctx.compose(*pab1, *pc1), *inner);
  }
  case MorTerm::AssocInv: {
    auto a = eval_obj(ctx, env, t->o1);
    auto b = eval_obj(ctx, env, t->o2);
    auto c = eval_obj(ctx, env, t->o3);
    if (!a || !b || !c) return std::nullopt;
    auto bc = ctx.prod_obj(*b, *c);
    if (!bc) return std::nullopt;
    auto pbc1 = ctx.pi1(*b, *c), pbc2 = ctx.pi2(*b, *c);
    auto pa1 = ctx.pi1(*a, *bc), pa2 = ctx.pi2(*a, *bc);
    if (!pbc1 || !pbc2 || !pa1 || !pa2) return std::nullopt;
    auto inner = ctx.pairing(*pa1, ctx.compose(*pbc1, *pa2)); // Ax(BxC) -> AxB
    if (!inner) return std::nullopt;
    return ctx.pairing(*inner, ctx.compose(*pbc2, *pa2));
  }
  case MorTerm::Bang: {
    auto a = eval_obj(ctx, env, t->o1);
    if (!a) return std::nullopt;
    return ctx.bang(*a);
  }
  case MorTerm::Ev: {
    auto base = eval_obj(ctx, env, t->o1);
    auto result = eval_obj(ctx, env, t->o2);
    if (!base || !result) return std::nullopt;
    return ctx.ev(*base, *result);
  }
  case MorTerm::Lambda: {
    auto tip = eval_obj(ctx, env, t->o1);
    auto base = eval_obj(ctx, env, t->o2);
    auto result = eval_obj(ctx, env, t->o3);
    auto f = eval_mor(ctx, env, t->f);
    if (!tip || !base || !result || !f) return std::nullopt;
    return ctx.transpose(*tip, *base, *result, *f);
  }
  case MorTerm::LambdaInv: {
    auto base = eval_obj(ctx, env, t->o1);
    auto result = eval_obj(ctx, env, t->o2);
    auto f = eval_mor(ctx, env, t->f);
    if (!base || !result || !f) return std::nullopt;
    auto e = ctx.ev(*base, *result);
    if (!e) return std::nullopt;
    auto p1 = ctx.pi1(ctx.dom(*f), *base);
    auto p2 = ctx.pi2(ctx.dom(*f), *base);
    if (!p1 || !p2) return std::nullopt;
    auto fx = ctx.pairing(ctx.compose(*f, *p1), *p2);
    if (!fx) return std::nullopt;
    return ctx.compose(*e, *fx);
  }
  case MorTerm::Eta: {
    auto a = eval_obj(ctx, env, t->o1);
    if (!a) return std::nullopt;
    return ctx.eta(*a);
  }
  case MorTerm::Mu: {
    auto a = eval_obj(ctx, env, t->o1);
    if (!a) return std::nullopt;
    return ctx.mu(*a);
  }
  case MorTerm::TMap: {
    auto f = eval_mor(ctx, env, t->f);
    if (!f) return std::nullopt;
    return ctx.t_mor(*f);
  }
  case MorTerm::Lst: {
    auto a = eval_obj(ctx, env, t->o1);
    auto b = eval_obj(ctx, env, t->o2);
    if (!a || !b) return std::nullopt;
    return ctx.lst(*a, *b);
  }
  case MorTerm::Action:
    return ctx.algebra_action(env.avals[t->var]);
  }
  throw std::logic_error("unreachable");
}

OptObj eval_obj(EqContext& ctx, const Env& env, const ObjTermPtr& t) {
  switch (t->kind) {
  case ObjTerm::Var:
    return env.ovals[t->var];
  case ObjTerm::Prod: {
    auto a = eval_obj(ctx, env, t->a);
    auto b = eval_obj(ctx, env, t->b);
    if (!a || !b) return std::nullopt;
    return ctx.prod_obj(*a, *b);
  }
  case ObjTerm::Exp: {
    auto a = eval_obj(ctx, env, t->a);
    auto b = eval_obj(ctx, env, t->b);
    if (!a || !b) return std::nullopt;
    return ctx.exp_obj(*a, *b);
  }
  case ObjTerm::Unit:
    return ctx.unit_obj();
  case ObjTerm::TApp: {
    auto a = eval_obj(ctx, env, t->a);
    if (!a) return std::nullopt;
    return ctx.t_obj(*a);
  }
  case ObjTerm::Carrier:
    return ctx.algebra_carrier(env.avals[t->var]);
  }
  throw std::logic_error("unreachable");
}

std::string binding_string(EqContext& ctx, const std::vector<VarSpec>& vars, const Env& env) {
  std::string s;
  int oi = 0, mi = 0, ai = 0;
  for (const auto& v : vars) {
    if (!s.empty()) s += ", ";
    switch (v.kind) {
    case VarSpec::Object:
      s += "O" + std::to_string(oi) + "=" + ctx.obj_name(env.ovals[oi]);
      ++oi;
      break;
    case VarSpec::Morphism:
      s += "f" + std::to_string(mi) + "=" + ctx.mor_name(env.mvals[mi]);
      ++mi;
      break;
    case VarSpec::AlgebraVar:
      s += "alg" + std::to_string(ai) + "#" + std::to_string(env.avals[ai]);
      ++ai;
      break;
    }
  }
  return s;
}

// Enumerates all bindings, invoking fn per complete environment. fn returns
// false to stop the whole enumeration.
void enumerate(EqContext& ctx, const std::vector<VarSpec>& vars, Env& env, std::size_t i,
               long& skipped, const std::function<bool(const Env&)>& fn, bool& stop) {
  if (stop) return;
  if (i == vars.size()) {
    if (!fn(env)) stop = true;
    return;
  }
  const VarSpec& v = vars[i];
  switch (v.kind) {
  case VarSpec::Object:
    for (auto o : ctx.objects()) {
      env.ovals.push_back(o);
      enumerate(ctx, vars, env, i + 1, skipped, fn, stop);
      env.ovals.pop_back();
      if (stop) return;
    }
    break;
  case VarSpec::Morphism: {
    auto d = eval_obj(ctx, env, v.dom);
    auto c = eval_obj(ctx, env, v.cod);
    if (!d || !c) {
      ++skipped;
      return;
    }
    for (auto m : ctx.hom(*d, *c)) {
      env.mvals.push_back(m);
      enumerate(ctx, vars, env, i + 1, skipped, fn, stop);
      env.mvals.pop_back();
      if (stop) return;
    }
    break;
  }
  case VarSpec::AlgebraVar:
    for (int a = 0; a < ctx.algebra_count(); ++a) {
      env.avals.push_back(a);
      enumerate(ctx, vars, env, i + 1, skipped, fn, stop);
      env.avals.pop_back();
      if (stop) return;
    }
    break;
  }
}

} // namespace

LawReport run_suite(EqContext& ctx, const EquationSuite& suite) {
  LawReport report;
  report.suite = suite.id;
  for (const Equation& eq : suite.equations) {
    LawResult r;
    r.label = eq.label;
    r.display = eq.display;
    Env env;
    bool stop = false;
    bool failed = false;
    enumerate(ctx, eq.vars, env, 0, r.skipped, [&](const Env& e) {
      if (eq.kind == Equation::Equal) {
        for (const auto& [lhsT, rhsT] : eq.sides) {
          auto lhs = eval_mor(ctx, e, lhsT);
          auto rhs = eval_mor(ctx, e, rhsT);
          if (!lhs || !rhs) {
            ++r.skipped;
            return true;
          }
          ++r.checked;
          if (*lhs != *rhs) {
            failed = true;
            r.counterexample = binding_string(ctx, eq.vars, e) + "; lhs=" +
                               ctx.mor_name(*lhs) + " rhs=" + ctx.mor_name(*rhs);
            return false;
          }
        }
      } else {
        auto a = eval_mor(ctx, e, eq.iff[0]);
        auto b = eval_mor(ctx, e, eq.iff[1]);
        auto c = eval_mor(ctx, e, eq.iff[2]);
        auto d = eval_mor(ctx, e, eq.iff[3]);
        if (!a || !b || !c || !d) {
          ++r.skipped;
          return true;
        }
        ++r.checked;
        if ((*a == *b) != (*c == *d)) {
          failed = true;
          r.counterexample = binding_string(ctx, eq.vars, e);
          return false;
        }
      }
      return true;
    }, stop);
    if (failed) {
      r.status = LawResult::Fail;
      r.suspected_typo = eq.suspected_typo_on_fail;
    } else {
      r.status = r.checked > 0 ? LawResult::Pass : LawResult::Skipped;
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

bool LawReport::all_pass(bool allow_suspected_typo) const {
  for (const auto& r : results) {
    if (r.status == LawResult::Fail && !(allow_suspected_typo && r.suspected_typo))
      return false;
  }
  return true;
}

DerivationResult replay_derivation(EqContext& ctx, const Derivation& d) {
  DerivationResult out;
  out.id = d.id;
  out.pass = true;
  Env env;
  bool stop = false;
  enumerate(ctx, d.vars, env, 0, out.skipped, [&](const Env& e) {
    std::optional<EqContext::Mor> prev;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      auto cur = eval_mor(ctx, e, d.steps[i]);
      if (!cur) {
        ++out.skipped;
        return true;
      }
      if (prev && *prev != *cur) {
        out.pass = false;
        out.first_failing_step = static_cast<int>(i) - 1;
        out.counterexample = binding_string(ctx, d.vars, e) + "; step " +
                             std::to_string(i - 1) + " -> " + std::to_string(i) +
                             (i - 1 < d.step_notes.size() ? " [" + d.step_notes[i - 1] + "]"
                                                          : "");
        return false;
      }
      prev = cur;
    }
    ++out.bindings;
    return true;
  }, stop);
  if (out.bindings == 0 && out.pass) out.pass = false; // nothing checked
  return out;
}

// ---- contexts -------------------------------------------------------------------

TableCatContext::TableCatContext(CatPtr cat, const CartesianStructure* cart)
    : cat_(std::move(cat)), cart_(cart) {}

std::vector<EqContext::Obj> TableCatContext::objects() {
  std::vector<Obj> out;
  for (ObjId o = 0; o < cat_->object_count(); ++o) out.push_back(o);
  return out;
}

std::vector<EqContext::Mor> TableCatContext::hom(Obj a, Obj b) {
  std::vector<Mor> out;
  for (MorId m : cat_->hom(static_cast<ObjId>(a), static_cast<ObjId>(b)))
    out.push_back(m);
  return out;
}

EqContext::Obj TableCatContext::dom(Mor f) { return cat_->dom(static_cast<MorId>(f)); }
EqContext::Obj TableCatContext::cod(Mor f) { return cat_->cod(static_cast<MorId>(f)); }
EqContext::Mor TableCatContext::id(Obj a) { return cat_->identity(static_cast<ObjId>(a)); }

EqContext::Mor TableCatContext::compose(Mor f, Mor g) {
  MorId r = cat_->compose(static_cast<MorId>(f), static_cast<MorId>(g));
  if (r == kNoMor) throw std::logic_error("table compose mismatch");
  return r;
}

std::string TableCatContext::obj_name(Obj a) {
  return cat_->object_name(static_cast<ObjId>(a));
}
std::string TableCatContext::mor_name(Mor f) {
  return cat_->morphism_name(static_cast<MorId>(f));
}

std::optional<EqContext::Obj> TableCatContext::unit_obj() {
  if (!cart_ || !cart_->terminal) return std::nullopt;
  return cart_->terminal->object;
}

std::optional<EqContext::Mor> TableCatContext::bang(Obj a) {
  if (!cart_ || !cart_->terminal) return std::nullopt;
  return cart_->terminal->bang[static_cast<ObjId>(a)];
}

std::optional<EqContext::Obj> TableCatContext::prod_obj(Obj a, Obj b) {
  if (!cart_) return std::nullopt;
  const ProductWitness* p = cart_->product(static_cast<ObjId>(a), static_cast<ObjId>(b));
  if (!p) return std::nullopt;
  return p->apex;
}

std::optional<EqContext::Mor> TableCatContext::pi1(Obj a, Obj b) {
  if (!cart_) return std::nullopt;
  const ProductWitness* p = cart_->product(static_cast<ObjId>(a), static_cast<ObjId>(b));
  if (!p) return std::nullopt;
  return p->pi1;
}

std::optional<EqContext::Mor> TableCatContext::pi2(Obj a, Obj b) {
  if (!cart_) return std::nullopt;
  const ProductWitness* p = cart_->product(static_cast<ObjId>(a), static_cast<ObjId>(b));
  if (!p) return std::nullopt;
  return p->pi2;
}

std::optional<EqContext::Mor> TableCatContext::pairing(Mor f, Mor g) {
  if (!cart_) return std::nullopt;
  MorId r = cart_->pair(static_cast<MorId>(f), static_cast<MorId>(g));
  if (r == kNoMor) return std::nullopt;
  return r;
}

std::optional<EqContext::Obj> TableCatContext::exp_obj(Obj base, Obj result) {
  if (!cart_) return std::nullopt;
  const ExponentialWitness* e =
      cart_->exponential(static_cast<ObjId>(base), static_cast<ObjId>(result));
  if (!e) return std::nullopt;
  return e->object;
}

std::optional<EqContext::Mor> TableCatContext::ev(Obj base, Obj result) {
  if (!cart_) return std::nullopt;
  const ExponentialWitness* e =
      cart_->exponential(static_cast<ObjId>(base), static_cast<ObjId>(result));
  if (!e) return std::nullopt;
  return e->eval;
}

std::optional<EqContext::Mor> TableCatContext::transpose(Obj tip, Obj base, Obj result,
                                                         Mor g) {
  if (!cart_) return std::nullopt;
  MorId r = cart_->lambda(static_cast<ObjId>(tip), static_cast<ObjId>(base),
                          static_cast<ObjId>(result), static_cast<MorId>(g));
  if (r == kNoMor) return std::nullopt;
  return r;
}

FinSetContext::FinSetContext(int max_size, std::optional<SetMonad> monad,
                             std::vector<Algebra> algebras)
    : max_(max_size), monad_(std::move(monad)), algebras_(std::move(algebras)) {}

void FinSetContext::override_lst(int a, int b, SetFn table) {
  lstOverride_[{a, b}] = std::move(table);
}

EqContext::Mor FinSetContext::intern(const SetFn& f) {
  auto it = interned_.find(f);
  if (it != interned_.end()) return it->second;
  Mor h = static_cast<Mor>(pool_.size());
  pool_.push_back(f);
  interned_.emplace(f, h);
  return h;
}

std::vector<EqContext::Obj> FinSetContext::objects() {
  std::vector<Obj> out;
  for (int n = 0; n <= max_; ++n) out.push_back(n);
  return out;
}

std::vector<EqContext::Mor> FinSetContext::hom(Obj a, Obj b) {
  std::vector<Mor> out;
  long long count = exp_size(static_cast<int>(a), static_cast<int>(b));
  if (count > 100000) throw BoundExceeded(static_cast<double>(count), "hom too large");
  for (long long i = 0; i < count; ++i)
    out.push_back(intern(fn_from_numeral(i, static_cast<int>(a), static_cast<int>(b))));
  return out;
}

EqContext::Obj FinSetContext::dom(Mor f) { return fn(f).dom; }
EqContext::Obj FinSetContext::cod(Mor f) { return fn(f).cod; }
EqContext::Mor FinSetContext::id(Obj a) { return intern(set_id(static_cast<int>(a))); }

EqContext::Mor FinSetContext::compose(Mor f, Mor g) {
  return intern(set_compose(fn(f), fn(g)));
}

std::string FinSetContext::obj_name(Obj a) { return std::to_string(a); }

std::string FinSetContext::mor_name(Mor f) {
  const SetFn& fun = fn(f);
  std::string s = std::to_string(fun.dom) + ">" + std::to_string(fun.cod) + ":[";
  for (int i = 0; i < fun.dom; ++i) {
    if (i) s += ",";
    s += std::to_string(fun.tab[i]);
  }
  return s + "]";
}

std::optional<EqContext::Mor> FinSetContext::bang(Obj a) {
  return intern(fn_bang(static_cast<int>(a)));
}

std::optional<EqContext::Mor> FinSetContext::pi1(Obj a, Obj b) {
  return intern(fn_pi1(static_cast<int>(a), static_cast<int>(b)));
}

std::optional<EqContext::Mor> FinSetContext::pi2(Obj a, Obj b) {
  return intern(fn_pi2(static_cast<int>(a), static_cast<int>(b)));
}

std::optional<EqContext::Mor> FinSetContext::pairing(Mor f, Mor g) {
  return intern(fn_pair(fn(f), fn(g)));
}

std::optional<EqContext::Obj> FinSetContext::exp_obj(Obj base, Obj result) {
  return exp_size(static_cast<int>(base), static_cast<int>(result));
}

std::optional<EqContext::Mor> FinSetContext::ev(Obj base, Obj result) {
  return intern(fn_ev(static_cast<int>(base), static_cast<int>(result)));
}

std::optional<EqContext::Mor> FinSetContext::transpose(Obj tip, Obj base, Obj result,
                                                       Mor g) {
  (void)result;
  return intern(fn_curry(fn(g), static_cast<int>(tip), static_cast<int>(base)));
}

std::optional<EqContext::Obj> FinSetContext::t_obj(Obj a) {
  if (!monad_) return std::nullopt;
  return monad_->T(static_cast<int>(a));
}

std::optional<EqContext::Mor> FinSetContext::t_mor(Mor f) {
  if (!monad_) return std::nullopt;
  return intern(monad_->map(fn(f)));
}

std::optional<EqContext::Mor> FinSetContext::eta(Obj a) {
  if (!monad_) return std::nullopt;
  return intern(monad_->eta(static_cast<int>(a)));
}

std::optional<EqContext::Mor> FinSetContext::mu(Obj a) {
  if (!monad_) return std::nullopt;
  return intern(monad_->mu(static_cast<int>(a)));
}

std::optional<EqContext::Mor> FinSetContext::lst(Obj a, Obj b) {
  if (!monad_) return std::nullopt;
  auto it = lstOverride_.find({static_cast<int>(a), static_cast<int>(b)});
  if (it != lstOverride_.end()) return intern(it->second);
  return intern(monad_->lst(static_cast<int>(a), static_cast<int>(b)));
}

// ---- monad validation ------------------------------------------------------------

LawReport validate_monad(const SetMonad& m, int max_size) {
  FinSetContext ctx(max_size, m);
  return run_suite(ctx, monad_suite());
}

LawReport validate_strength(const SetMonad& m, int max_size) {
  FinSetContext ctx(max_size, m);
  return run_suite(ctx, strength_suite());
}

StrengthFlags strength_flags(const SetMonad& m, int max_size) {
  StrengthFlags f;
  f.affine = (m.T(1) == 1);
  f.commutative = true;
  for (int a = 0; a <= max_size && f.commutative; ++a)
    for (int b = 0; b <= max_size && f.commutative; ++b) {
      // two double-strength routes; the swapped strengths are the derived ones
      SetFn route1 = set_compose(
          m.mu(a * b), set_compose(m.map(m.lst(a, b)), m.rst(a, m.T(b))));
      SetFn route2 = set_compose(
          m.mu(a * b), set_compose(m.map(m.rst(a, b)), m.lst(m.T(a), b)));
      if (route1 != route2) f.commutative = false;
    }
  return f;
}

} // namespace catkern
