#include "catkern/monad.hpp"

#include <algorithm>

namespace catkern {

bool is_algebra(const SetMonad& m, const Algebra& a) {
  if (a.action.dom != m.T(a.carrier) || a.action.cod != a.carrier) return false;
  if (set_compose(a.action, m.eta(a.carrier)) != set_id(a.carrier)) return false;
  return set_compose(a.action, m.mu(a.carrier)) ==
         set_compose(a.action, m.map(a.action));
}

std::vector<Algebra> enumerate_algebras(const SetMonad& m, int max_carrier) {
  std::vector<Algebra> out;
  for (int n = 0; n <= max_carrier; ++n) {
    const int tn = m.T(n);
    const long long count = exp_size(tn, n);
    for (long long i = 0; i < count; ++i) {
      Algebra a{n, fn_from_numeral(i, tn, n)};
      if (is_algebra(m, a)) out.push_back(std::move(a));
    }
  }
  return out;
}

bool is_algebra_hom(const SetMonad& m, const Algebra& a, const Algebra& b, const SetFn& f) {
  if (f.dom != a.carrier || f.cod != b.carrier) return false;
  return set_compose(f, a.action) == set_compose(b.action, m.map(f));
}

long count_algebra_homs(const SetMonad& m, const Algebra& a, const Algebra& b) {
  long n = 0;
  const long long count = exp_size(a.carrier, b.carrier);
  for (long long i = 0; i < count; ++i)
    if (is_algebra_hom(m, a, b, fn_from_numeral(i, a.carrier, b.carrier))) ++n;
  return n;
}

SetFn klift(const SetMonad& m, const SetFn& f, int b) {
  return set_compose(m.mu(b), m.map(f));
}

namespace {

std::string pad(long long i, long long total) {
  int width = 1;
  for (long long t = total - 1; t >= 10; t /= 10) ++width;
  std::string s = std::to_string(i);
  return std::string(width - std::min<std::size_t>(width, s.size()), '0') + s;
}

} // namespace

KleisliCategory kleisli_category(const SetMonad& m, int max_obj) {
  KleisliCategory out;
  CategoryBuilder b;
  for (int n = 0; n <= max_obj; ++n) b.add_object(std::to_string(n));
  auto morName = [&](int a, int c, const SetFn& f) {
    return "k" + std::to_string(a) + "_" + std::to_string(c) + "_" +
           pad(fn_numeral(f), exp_size(a, m.T(c)));
  };
  std::vector<std::tuple<int, int, SetFn>> mors;
  for (int a = 0; a <= max_obj; ++a)
    for (int c = 0; c <= max_obj; ++c) {
      const long long count = exp_size(a, m.T(c));
      if (count > 100000)
        throw BoundExceeded(static_cast<double>(count), "kleisli hom too large");
      for (long long i = 0; i < count; ++i) {
        SetFn f = fn_from_numeral(i, a, m.T(c));
        b.add_morphism(morName(a, c, f), b.object(std::to_string(a)),
                       b.object(std::to_string(c)));
        mors.emplace_back(a, c, std::move(f));
      }
    }
  for (int n = 0; n <= max_obj; ++n)
    b.set_identity(b.object(std::to_string(n)), b.morphism(morName(n, n, m.eta(n))));
  for (const auto& [a1, c1, f] : mors)
    for (const auto& [a2, c2, g] : mors) {
      if (a2 != c1) continue;
      SetFn gf = set_compose(klift(m, g, c2), f);
      b.set_composite(b.morphism(morName(a2, c2, g)), b.morphism(morName(a1, c1, f)),
                      b.morphism(morName(a1, c2, gf)));
    }
  out.cat = b.build();
  out.obj_size.resize(out.cat->object_count());
  for (ObjId o = 0; o < out.cat->object_count(); ++o)
    out.obj_size[o] = std::stoi(out.cat->object_name(o));
  out.mor_fn.resize(out.cat->morphism_count());
  for (const auto& [a, c, f] : mors)
    out.mor_fn[*out.cat->morphism_by_name(morName(a, c, f))] = f;
  return out;
}

EMCategory em_category(const SetMonad& m, int max_carrier) {
  EMCategory out;
  out.algebras = enumerate_algebras(m, max_carrier);
  CategoryBuilder b;
  auto algName = [&](const Algebra& a) {
    return "alg" + std::to_string(a.carrier) + "_" +
           pad(fn_numeral(a.action), exp_size(m.T(a.carrier), a.carrier));
  };
  for (const auto& a : out.algebras) b.add_object(algName(a));
  auto morName = [&](const Algebra& a, const Algebra& c, const SetFn& f) {
    return "h:" + algName(a) + ">" + algName(c) + ":" +
           pad(fn_numeral(f), exp_size(a.carrier, c.carrier));
  };
  std::vector<std::tuple<std::size_t, std::size_t, SetFn>> homs;
  for (std::size_t i = 0; i < out.algebras.size(); ++i)
    for (std::size_t j = 0; j < out.algebras.size(); ++j) {
      const Algebra& a = out.algebras[i];
      const Algebra& c = out.algebras[j];
      const long long count = exp_size(a.carrier, c.carrier);
      for (long long k = 0; k < count; ++k) {
        SetFn f = fn_from_numeral(k, a.carrier, c.carrier);
        if (!is_algebra_hom(m, a, c, f)) continue;
        b.add_morphism(morName(a, c, f), b.object(algName(a)), b.object(algName(c)));
        homs.emplace_back(i, j, std::move(f));
      }
    }
  for (const auto& a : out.algebras)
    b.set_identity(b.object(algName(a)), b.morphism(morName(a, a, set_id(a.carrier))));
  for (const auto& [i1, j1, f] : homs)
    for (const auto& [i2, j2, g] : homs) {
      if (i2 != j1) continue;
      b.set_composite(
          b.morphism(morName(out.algebras[i2], out.algebras[j2], g)),
          b.morphism(morName(out.algebras[i1], out.algebras[j1], f)),
          b.morphism(morName(out.algebras[i1], out.algebras[j2], set_compose(g, f))));
    }
  out.cat = b.build();
  // remap algebra list and hom table to canonical ids
  std::vector<Algebra> byId(out.cat->object_count());
  for (const auto& a : out.algebras) byId[*out.cat->object_by_name(algName(a))] = a;
  out.algebras = std::move(byId);
  out.hom_fn.resize(out.cat->morphism_count());
  for (MorId mm = 0; mm < out.cat->morphism_count(); ++mm) {
    // recover the table from the name suffix
    const std::string& n = out.cat->morphism_name(mm);
    auto colon = n.rfind(':');
    long long idx = std::stoll(n.substr(colon + 1));
    const Algebra& a = out.algebras[out.cat->dom(mm)];
    const Algebra& c = out.algebras[out.cat->cod(mm)];
    out.hom_fn[mm] = fn_from_numeral(idx, a.carrier, c.carrier);
  }
  return out;
}

std::optional<ObjId> EMCategory::object_of(const Algebra& a) const {
  for (std::size_t i = 0; i < algebras.size(); ++i)
    if (algebras[i] == a) return static_cast<ObjId>(i);
  return std::nullopt;
}

EmTerminalResult em_terminal(const SetMonad& m, const EMCategory& em) {
  EmTerminalResult r;
  r.algebra = Algebra{1, fn_bang(m.T(1))};
  r.is_object = is_algebra(m, r.algebra);
  r.unique_hom_from_every_algebra = true;
  for (const auto& a : em.algebras)
    if (count_algebra_homs(m, a, r.algebra) != 1) r.unique_hom_from_every_algebra = false;
  return r;
}

EmProductResult em_product(const SetMonad& m, const EMCategory& em, const Algebra& a,
                           const Algebra& b) {
  EmProductResult r;
  const int na = a.carrier, nb = b.carrier;
  SetFn tpis = fn_pair(m.map(fn_pi1(na, nb)), m.map(fn_pi2(na, nb)));
  r.product = Algebra{na * nb, set_compose(fn_times(a.action, b.action), tpis)};
  r.pi1 = fn_pi1(na, nb);
  r.pi2 = fn_pi2(na, nb);
  r.action_is_algebra = is_algebra(m, r.product);
  r.projections_are_homs = is_algebra_hom(m, r.product, a, r.pi1) &&
                           is_algebra_hom(m, r.product, b, r.pi2);

  r.pairings_are_homs = true;
  r.pairings_unique = true;
  for (const auto& c : em.algebras) {
    const long long fa = exp_size(c.carrier, na);
    for (long long i = 0; i < fa; ++i) {
      SetFn f = fn_from_numeral(i, c.carrier, na);
      if (!is_algebra_hom(m, c, a, f)) continue;
      const long long gb = exp_size(c.carrier, nb);
      for (long long j = 0; j < gb; ++j) {
        SetFn g = fn_from_numeral(j, c.carrier, nb);
        if (!is_algebra_hom(m, c, b, g)) continue;
        SetFn h = fn_pair(f, g);
        if (!is_algebra_hom(m, c, r.product, h)) r.pairings_are_homs = false;
        // uniqueness among all functions with the same projections
        int count = 0;
        const long long hh = exp_size(c.carrier, na * nb);
        if (hh <= 100000) {
          for (long long k = 0; k < hh; ++k) {
            SetFn cand = fn_from_numeral(k, c.carrier, na * nb);
            if (set_compose(r.pi1, cand) == f && set_compose(r.pi2, cand) == g) ++count;
          }
          if (count != 1) r.pairings_unique = false;
        }
      }
    }
  }

  if (na == nb && a == b) {
    r.delta_is_hom = is_algebra_hom(m, a, r.product, fn_delta(na));
  } else {
    r.delta_is_hom = true; // only defined on the square of one algebra
  }
  return r;
}

bool ahom_check(const SetMonad& m, int b, const Algebra& a, const Algebra& c,
                const SetFn& f) {
  if (f.dom != b * a.carrier || f.cod != c.carrier) return false;
  SetFn lhs = set_compose(f, fn_times(set_id(b), a.action));
  SetFn rhs = set_compose(c.action, set_compose(m.map(f), m.lst(b, a.carrier)));
  return lhs == rhs;
}

std::vector<SetFn> enumerate_ahom(const SetMonad& m, int c, const Algebra& a,
                                  const Algebra& b) {
  std::vector<SetFn> out;
  const long long count = exp_size(c * a.carrier, b.carrier);
  if (count > 2000000)
    throw BoundExceeded(static_cast<double>(count), "ahom enumeration too large");
  for (long long i = 0; i < count; ++i) {
    SetFn f = fn_from_numeral(i, c * a.carrier, b.carrier);
    if (ahom_check(m, c, a, b, f)) out.push_back(std::move(f));
  }
  return out;
}

InternalExponentResult internal_exponent(const SetMonad& m, int base, const Algebra& a) {
  InternalExponentResult r;
  const int e = static_cast<int>(exp_size(base, a.carrier));
  // action = curry(f_A . T ev . T s . lst . s) : T(base => A) -> (base => A)
  SetFn s1 = fn_swap(m.T(e), base);
  SetFn l = m.lst(base, e);
  SetFn ts = m.map(fn_swap(base, e));
  SetFn tev = m.map(fn_ev(base, a.carrier));
  SetFn act0 = set_compose(
      a.action, set_compose(tev, set_compose(ts, set_compose(l, s1))));
  r.algebra = Algebra{e, fn_curry(act0, m.T(e), base)};
  r.action_laws = is_algebra(m, r.algebra);
  // ev . s : base x (base => A) -> A is a homomorphism in its right argument
  SetFn evs = set_compose(fn_ev(base, a.carrier), fn_swap(base, e));
  r.ev_swap_in_ahom = ahom_check(m, base, r.algebra, a, evs);
  return r;
}

ExternalExponent external_exponent(const SetMonad& m, const Algebra& a, const Algebra& b) {
  ExternalExponent ee;
  ee.monad = m;
  ee.a = a;
  ee.b = b;
  const int e0 = static_cast<int>(exp_size(a.carrier, b.carrier));
  // lambda(ev . (id x f_A)) and lambda(f_B . T ev . lst), both E0 -> (TA => B)
  SetFn lhs = fn_curry(
      set_compose(fn_ev(a.carrier, b.carrier), fn_times(set_id(e0), a.action)), e0,
      m.T(a.carrier));
  SetFn rhs = fn_curry(set_compose(b.action, set_compose(m.map(fn_ev(a.carrier, b.carrier)),
                                                         m.lst(e0, a.carrier))),
                       e0, m.T(a.carrier));
  std::vector<std::int32_t> members;
  for (int u = 0; u < e0; ++u)
    if (lhs.tab[u] == rhs.tab[u]) members.push_back(u);
  ee.carved = carve(e0, std::move(members));
  return ee;
}

SetFn ExternalExponent::theta(const SetFn& f, int c) const {
  // f : C x A -> B; m_f(x) = index of curry(f)(x) in the carved subset
  SetFn lam = fn_curry(f, c, a.carrier);
  SetFn out{lam.dom, carved.size, std::vector<std::int32_t>(lam.dom)};
  for (int x = 0; x < lam.dom; ++x) {
    int idx = carved.index_of(lam.tab[x]);
    if (idx < 0) throw std::logic_error("theta: transpose misses the equalizer");
    out.tab[x] = idx;
  }
  return out;
}

SetFn ExternalExponent::omega(const SetFn& g) const {
  return fn_uncurry(set_compose(carved.incl, g), a.carrier, b.carrier);
}

bool ExternalExponent::ev_lolli_in_ahom() const {
  SetFn ev = fn_ev(a.carrier, b.carrier);
  SetFn evl = set_compose(ev, fn_times(carved.incl, set_id(a.carrier)));
  return ahom_check(monad, carved.size, a, b, evl);
}

ThetaOmegaReport verify_theta_omega(const ExternalExponent& ee, int c) {
  ThetaOmegaReport r;
  auto ahoms = enumerate_ahom(ee.monad, c, ee.a, ee.b);
  r.ahom_count = static_cast<long>(ahoms.size());
  r.hom_count = exp_size(c, ee.object());
  r.counts_equal = (r.ahom_count == r.hom_count);
  r.mutually_inverse = true;
  for (const auto& f : ahoms)
    if (ee.omega(ee.theta(f, c)) != f) r.mutually_inverse = false;
  for (long long i = 0; i < r.hom_count; ++i) {
    SetFn g = fn_from_numeral(i, c, ee.object());
    if (ee.theta(ee.omega(g), c) != g) r.mutually_inverse = false;
  }
  return r;
}

ConjectureProbe conjecture_probe(const SetMonad& m, int c, const Algebra& a,
                                 const Algebra& b) {
  ConjectureProbe p;
  p.c = c;
  auto ee = external_exponent(m, a, b);
  p.lhs = exp_size(c, ee.object());
  auto ie = internal_exponent(m, c, b);
  p.rhs = count_algebra_homs(m, a, ie.algebra);
  p.equal = (p.lhs == p.rhs);
  return p;
}

} // namespace catkern
