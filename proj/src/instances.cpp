#include "catkern/instances.hpp"

#include "catkern/analysis.hpp"

#include <algorithm>
#include <filesystem>

namespace catkern {

// ---- set calculus ------------------------------------------------------------

SetFn set_id(int n) {
  SetFn f{n, n, std::vector<std::int32_t>(n)};
  for (int i = 0; i < n; ++i) f.tab[i] = i;
  return f;
}

SetFn set_compose(const SetFn& g, const SetFn& f) {
  SetFn h{f.dom, g.cod, std::vector<std::int32_t>(f.dom)};
  for (int i = 0; i < f.dom; ++i) h.tab[i] = g.tab[f.tab[i]];
  return h;
}

SetFn set_const(int dom, int cod, int value) {
  return SetFn{dom, cod, std::vector<std::int32_t>(dom, value)};
}

SetFn fn_pi1(int nx, int ny) {
  SetFn f{nx * ny, nx, std::vector<std::int32_t>(nx * ny)};
  for (int p = 0; p < nx * ny; ++p) f.tab[p] = p / ny;
  return f;
}

SetFn fn_pi2(int nx, int ny) {
  SetFn f{nx * ny, ny, std::vector<std::int32_t>(nx * ny)};
  for (int p = 0; p < nx * ny; ++p) f.tab[p] = p % ny;
  return f;
}

SetFn fn_pair(const SetFn& f, const SetFn& g) {
  SetFn h{f.dom, f.cod * g.cod, std::vector<std::int32_t>(f.dom)};
  for (int i = 0; i < f.dom; ++i) h.tab[i] = pair_index(f.tab[i], g.tab[i], g.cod);
  return h;
}

SetFn fn_times(const SetFn& f, const SetFn& g) {
  SetFn h{f.dom * g.dom, f.cod * g.cod, std::vector<std::int32_t>(f.dom * g.dom)};
  for (int x = 0; x < f.dom; ++x)
    for (int y = 0; y < g.dom; ++y)
      h.tab[pair_index(x, y, g.dom)] = pair_index(f.tab[x], g.tab[y], g.cod);
  return h;
}

SetFn fn_swap(int nx, int ny) {
  SetFn f{nx * ny, ny * nx, std::vector<std::int32_t>(nx * ny)};
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      f.tab[pair_index(x, y, ny)] = pair_index(y, x, nx);
  return f;
}

SetFn fn_assoc(int a, int b, int c) {
  SetFn f{a * b * c, a * b * c, std::vector<std::int32_t>(a * b * c)};
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y)
      for (int z = 0; z < c; ++z)
        f.tab[pair_index(pair_index(x, y, b), z, c)] =
            pair_index(x, pair_index(y, z, c), b * c);
  return f;
}

SetFn fn_assoc_inv(int a, int b, int c) {
  SetFn f{a * b * c, a * b * c, std::vector<std::int32_t>(a * b * c)};
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y)
      for (int z = 0; z < c; ++z)
        f.tab[pair_index(x, pair_index(y, z, c), b * c)] =
            pair_index(pair_index(x, y, b), z, c);
  return f;
}

SetFn fn_delta(int n) {
  SetFn f{n, n * n, std::vector<std::int32_t>(n)};
  for (int i = 0; i < n; ++i) f.tab[i] = pair_index(i, i, n);
  return f;
}

SetFn fn_bang(int n) { return set_const(n, 1, 0); }

long long exp_size(int base, int result) {
  long long s = 1;
  for (int i = 0; i < base; ++i) s *= result;
  return s;
}

int fn_numeral(const SetFn& f) {
  long long idx = 0, mult = 1;
  for (int i = 0; i < f.dom; ++i) {
    idx += f.tab[i] * mult;
    mult *= f.cod;
  }
  return static_cast<int>(idx);
}

SetFn fn_from_numeral(long long idx, int base, int result) {
  SetFn f{base, result, std::vector<std::int32_t>(base)};
  for (int i = 0; i < base; ++i) {
    f.tab[i] = static_cast<std::int32_t>(idx % result);
    idx /= result;
  }
  return f;
}

SetFn fn_ev(int base, int result) {
  const int e = static_cast<int>(exp_size(base, result));
  SetFn f{e * base, result, std::vector<std::int32_t>(e * base)};
  for (int u = 0; u < e; ++u) {
    SetFn g = fn_from_numeral(u, base, result);
    for (int x = 0; x < base; ++x) f.tab[pair_index(u, x, base)] = g.tab[x];
  }
  return f;
}

SetFn fn_curry(const SetFn& g, int c, int base) {
  const int result = g.cod;
  SetFn f{c, static_cast<int>(exp_size(base, result)), std::vector<std::int32_t>(c)};
  for (int x = 0; x < c; ++x) {
    SetFn section{base, result, std::vector<std::int32_t>(base)};
    for (int y = 0; y < base; ++y) section.tab[y] = g.tab[pair_index(x, y, base)];
    f.tab[x] = fn_numeral(section);
  }
  return f;
}

SetFn fn_uncurry(const SetFn& f, int base, int result) {
  SetFn g{f.dom * base, result, std::vector<std::int32_t>(f.dom * base)};
  for (int x = 0; x < f.dom; ++x) {
    SetFn section = fn_from_numeral(f.tab[x], base, result);
    for (int y = 0; y < base; ++y) g.tab[pair_index(x, y, base)] = section.tab[y];
  }
  return g;
}

int Carved::index_of(int ambient_element) const {
  auto it = std::lower_bound(member.begin(), member.end(), ambient_element);
  if (it != member.end() && *it == ambient_element)
    return static_cast<int>(it - member.begin());
  return -1;
}

Carved carve(int ambient, std::vector<std::int32_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Carved c;
  c.size = static_cast<int>(members.size());
  c.member = std::move(members);
  c.incl = SetFn{c.size, ambient, c.member};
  return c;
}

// ---- monoids -------------------------------------------------------------------

bool Monoid::valid() const {
  if (size <= 0 || static_cast<int>(mul.size()) != size * size) return false;
  for (int a = 0; a < size; ++a)
    if (at(unit, a) != a || at(a, unit) != a) return false;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) return false;
  return true;
}

bool Monoid::abelian() const {
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (at(a, b) != at(b, a)) return false;
  return true;
}

Monoid trivial_monoid() { return {"trivial", 1, 0, {0}}; }

Monoid cyclic2() { return {"c2", 2, 0, {0, 1, 1, 0}}; }

Monoid left_zero3() {
  // elements: 0 = unit, 1, 2 with x*y = x for x,y in {1,2}
  return {"lz3", 3, 0, {0, 1, 2, 1, 1, 1, 2, 2, 2}};
}

std::optional<Monoid> parse_monoid(const std::string& name) {
  if (name == "trivial") return trivial_monoid();
  if (name == "c2") return cyclic2();
  if (name == "lz3") return left_zero3();
  return std::nullopt;
}

// ---- set monads ---------------------------------------------------------------

int SetMonad::T(int n) const {
  return kind == Kind::Maybe ? n + 1 : monoid.size * n;
}

SetFn SetMonad::map(const SetFn& f) const {
  if (kind == Kind::Maybe) {
    SetFn g{f.dom + 1, f.cod + 1, std::vector<std::int32_t>(f.dom + 1)};
    for (int i = 0; i < f.dom; ++i) g.tab[i] = f.tab[i];
    g.tab[f.dom] = f.cod; // bottom to bottom
    return g;
  }
  const int m = monoid.size;
  SetFn g{m * f.dom, m * f.cod, std::vector<std::int32_t>(m * f.dom)};
  for (int w = 0; w < m; ++w)
    for (int i = 0; i < f.dom; ++i)
      g.tab[pair_index(w, i, f.dom)] = pair_index(w, f.tab[i], f.cod);
  return g;
}

SetFn SetMonad::eta(int n) const {
  if (kind == Kind::Maybe) {
    SetFn f{n, n + 1, std::vector<std::int32_t>(n)};
    for (int i = 0; i < n; ++i) f.tab[i] = i;
    return f;
  }
  const int m = monoid.size;
  SetFn f{n, m * n, std::vector<std::int32_t>(n)};
  for (int i = 0; i < n; ++i) f.tab[i] = pair_index(monoid.unit, i, n);
  return f;
}

SetFn SetMonad::mu(int n) const {
  if (kind == Kind::Maybe) {
    // T^2 n = n+2: elements 0..n-1, n = inner bottom, n+1 = outer bottom
    SetFn f{n + 2, n + 1, std::vector<std::int32_t>(n + 2)};
    for (int i = 0; i < n; ++i) f.tab[i] = i;
    f.tab[n] = n;
    f.tab[n + 1] = n;
    return f;
  }
  const int m = monoid.size;
  SetFn f{m * m * n, m * n, std::vector<std::int32_t>(m * m * n)};
  for (int w1 = 0; w1 < m; ++w1)
    for (int w2 = 0; w2 < m; ++w2)
      for (int i = 0; i < n; ++i)
        f.tab[pair_index(w1, pair_index(w2, i, n), m * n)] =
            pair_index(monoid.at(w1, w2), i, n);
  return f;
}

SetFn SetMonad::lst(int a, int b) const {
  // A x TB -> T(A x B)
  if (kind == Kind::Maybe) {
    SetFn f{a * (b + 1), a * b + 1, std::vector<std::int32_t>(a * (b + 1))};
    for (int x = 0; x < a; ++x)
      for (int y = 0; y <= b; ++y)
        f.tab[pair_index(x, y, b + 1)] = (y < b) ? pair_index(x, y, b) : a * b;
    return f;
  }
  const int m = monoid.size;
  SetFn f{a * m * b, m * a * b, std::vector<std::int32_t>(a * m * b)};
  for (int x = 0; x < a; ++x)
    for (int w = 0; w < m; ++w)
      for (int y = 0; y < b; ++y)
        f.tab[pair_index(x, pair_index(w, y, b), m * b)] =
            pair_index(w, pair_index(x, y, b), a * b);
  return f;
}

SetFn SetMonad::rst(int a, int b) const {
  // Ts . lst . s : TA x B -> B x TA -> T(B x A) -> T(A x B)
  SetFn s1 = fn_swap(T(a), b);
  SetFn l = lst(b, a);
  SetFn ts = map(fn_swap(b, a));
  return set_compose(ts, set_compose(l, s1));
}

SetMonad maybe_monad() {
  SetMonad m;
  m.kind = SetMonad::Kind::Maybe;
  m.name = "maybe";
  return m;
}

SetMonad writer_monad(Monoid mo) {
  SetMonad m;
  m.kind = SetMonad::Kind::Writer;
  m.monoid = std::move(mo);
  m.name = "writer:" + m.monoid.name;
  return m;
}

// ---- materialized finset --------------------------------------------------------

namespace {

std::string finset_mor_name(int dom, int cod, int idx) {
  long long total = exp_size(dom, cod);
  int width = 1;
  for (long long t = total - 1; t >= 10; t /= 10) ++width;
  std::string s = std::to_string(idx);
  return "f" + std::to_string(dom) + "_" + std::to_string(cod) + "_" +
         std::string(width - std::min<std::size_t>(width, s.size()), '0') + s;
}

} // namespace

class FinSetInstance::Pullbacks : public PullbackChooser {
public:
  CatPtr cat;
  int max_size = 0;
  std::shared_ptr<const std::vector<SetFn>> fns;
  mutable std::map<std::pair<MorId, MorId>, std::optional<PullbackWitness>> cache;

  MorId mor_of(const SetFn& f) const {
    return *cat->morphism_by_name(finset_mor_name(f.dom, f.cod, fn_numeral(f)));
  }

  const PullbackWitness* pullback(MorId f1, MorId f2) const override {
    auto it = cache.find({f1, f2});
    if (it == cache.end()) it = cache.emplace(std::make_pair(f1, f2), build(f1, f2)).first;
    return it->second ? &*it->second : nullptr;
  }

  std::optional<PullbackWitness> build(MorId m1, MorId m2) const {
    const FinCategory& c = *cat;
    if (c.cod(m1) != c.cod(m2)) return std::nullopt;
    const SetFn& f1 = (*fns)[m1];
    const SetFn& f2 = (*fns)[m2];
    std::vector<std::int32_t> members;
    for (int x = 0; x < f1.dom; ++x)
      for (int y = 0; y < f2.dom; ++y)
        if (f1.tab[x] == f2.tab[y]) members.push_back(pair_index(x, y, f2.dom));
    if (static_cast<int>(members.size()) > max_size) return std::nullopt;
    Carved cv = carve(f1.dom * f2.dom, std::move(members));
    SetFn p1{cv.size, f1.dom, std::vector<std::int32_t>(cv.size)};
    SetFn p2{cv.size, f2.dom, std::vector<std::int32_t>(cv.size)};
    for (int i = 0; i < cv.size; ++i) {
      p1.tab[i] = cv.member[i] / f2.dom;
      p2.tab[i] = cv.member[i] % f2.dom;
    }
    PullbackWitness w;
    w.f1 = m1;
    w.f2 = m2;
    w.apex = *c.object_by_name(std::to_string(cv.size));
    w.p1 = mor_of(p1);
    w.p2 = mor_of(p2);
    if (!verify_pullback(c, w))
      throw std::logic_error("finset pullback failed verification");
    return w;
  }
};

const PullbackChooser& FinSetInstance::pullbacks() const { return *pullbacks_; }

ObjId FinSetInstance::obj_of(int size) const {
  auto o = cat->object_by_name(std::to_string(size));
  if (!o) throw std::out_of_range("finset: no object of size " + std::to_string(size));
  return *o;
}

MorId FinSetInstance::mor_of(const SetFn& f) const {
  auto m = cat->morphism_by_name(finset_mor_name(f.dom, f.cod, fn_numeral(f)));
  if (!m) throw std::out_of_range("finset: morphism out of range");
  return *m;
}

const EqualizerWitness& FinSetInstance::equalizer(MorId f, MorId g) const {
  auto it = eqCache_.find({f, g});
  if (it != eqCache_.end()) return it->second;
  const SetFn& ff = fn(f);
  const SetFn& gg = fn(g);
  std::vector<std::int32_t> members;
  for (int x = 0; x < ff.dom; ++x)
    if (ff.tab[x] == gg.tab[x]) members.push_back(x);
  Carved cv = carve(ff.dom, std::move(members));
  EqualizerWitness w;
  w.f = f;
  w.g = g;
  w.object = obj_of(cv.size);
  w.arrow = mor_of(cv.incl);
  if (!verify_equalizer(*cat, w)) throw std::logic_error("finset equalizer failed");
  return eqCache_.emplace(std::make_pair(f, g), std::move(w)).first->second;
}

std::optional<MorId> FinSetInstance::dep_prod_object(MorId f, MorId v) const {
  // f : B -> A, v : Y -> B. Carrier: pairs (a, section of v over f^-1(a)),
  // numbered a-major with sections in lexicographic table order.
  const SetFn& ff = fn(f);
  const SetFn& vv = fn(v);
  const int A = ff.cod, B = ff.dom;
  std::vector<std::int32_t> proj; // to A
  for (int a = 0; a < A; ++a) {
    std::vector<int> fiber; // elements of B over a
    for (int b = 0; b < B; ++b)
      if (ff.tab[b] == a) fiber.push_back(b);
    // enumerate sections s : fiber -> Y with v(s(b)) = b, lexicographically
    std::vector<std::vector<int>> choices(fiber.size());
    for (std::size_t i = 0; i < fiber.size(); ++i)
      for (int y = 0; y < vv.dom; ++y)
        if (vv.tab[y] == fiber[i]) choices[i].push_back(y);
    long long count = 1;
    for (const auto& ch : choices) {
      count *= static_cast<long long>(ch.size());
      if (count > max_size) return std::nullopt;
    }
    for (long long s = 0; s < count; ++s) proj.push_back(a);
    if (static_cast<int>(proj.size()) > max_size) return std::nullopt;
  }
  SetFn p{static_cast<int>(proj.size()), A, proj};
  return mor_of(p);
}

FinSetInstance finset(int n, double morphism_cap) {
  if (n < 1) throw std::invalid_argument("finset: n must be >= 1");
  double morCount = 0;
  for (int d = 0; d <= n; ++d)
    for (int c = 0; c <= n; ++c) morCount += static_cast<double>(exp_size(d, c));
  if (morCount > morphism_cap)
    throw BoundExceeded(morCount, "finset(" + std::to_string(n) + ") morphism count " +
                                      std::to_string(morCount));

  FinSetInstance inst;
  inst.max_size = n;
  CategoryBuilder b;
  for (int k = 0; k <= n; ++k) b.add_object(std::to_string(k));
  std::vector<SetFn> fns;
  for (int d = 0; d <= n; ++d)
    for (int c = 0; c <= n; ++c) {
      long long cnt = exp_size(d, c);
      if (d > 0 && c == 0) continue; // no maps from nonempty to empty
      for (long long i = 0; i < cnt; ++i) {
        SetFn f = fn_from_numeral(i, d, c);
        b.add_morphism(finset_mor_name(d, c, static_cast<int>(i)), b.object(std::to_string(d)),
                       b.object(std::to_string(c)));
        fns.push_back(std::move(f));
      }
    }
  // identities and composition via the numerals
  auto morIdOf = [&](const SetFn& f) {
    return b.morphism(finset_mor_name(f.dom, f.cod, fn_numeral(f)));
  };
  for (int k = 0; k <= n; ++k) b.set_identity(b.object(std::to_string(k)), morIdOf(set_id(k)));
  for (const SetFn& f : fns)
    for (const SetFn& g : fns) {
      if (f.cod != g.dom) continue;
      b.set_composite(morIdOf(g), morIdOf(f), morIdOf(set_compose(g, f)));
    }
  inst.cat = b.build();

  inst.obj_size.resize(inst.cat->object_count());
  for (ObjId o = 0; o < inst.cat->object_count(); ++o)
    inst.obj_size[o] = std::stoi(inst.cat->object_name(o));
  {
    std::vector<SetFn> byId(inst.cat->morphism_count());
    for (const SetFn& f : fns) {
      MorId m = *inst.cat->morphism_by_name(finset_mor_name(f.dom, f.cod, fn_numeral(f)));
      byId[m] = f;
    }
    inst.fns_ = std::make_shared<const std::vector<SetFn>>(std::move(byId));
  }

  // chosen cartesian structure: terminal 1, pairing-encoded products,
  // numeral-encoded exponentials; every witness passes the generic validator.
  CartesianStructure& s = inst.structure;
  s.cat = inst.cat;
  {
    TerminalWitness t;
    t.object = inst.obj_of(1);
    t.bang.resize(inst.cat->object_count());
    for (ObjId o = 0; o < inst.cat->object_count(); ++o)
      t.bang[o] = inst.mor_of(fn_bang(inst.obj_size[o]));
    s.terminal = std::move(t);
  }
  bool allProds = true;
  for (int a = 0; a <= n; ++a)
    for (int c = 0; c <= n; ++c) {
      if (a * c > n) {
        allProds = false;
        continue;
      }
      ProductWitness w;
      w.left = inst.obj_of(a);
      w.right = inst.obj_of(c);
      w.apex = inst.obj_of(a * c);
      w.pi1 = inst.mor_of(fn_pi1(a, c));
      w.pi2 = inst.mor_of(fn_pi2(a, c));
      if (!verify_product(*inst.cat, w))
        throw std::logic_error("finset product failed verification");
      s.products.emplace(std::make_pair(w.left, w.right), std::move(w));
    }
  s.has_finite_products = allProds;
  bool allExps = true;
  for (int a2 = 0; a2 <= n; ++a2)
    for (int a1 = 0; a1 <= n; ++a1) {
      long long carrier = exp_size(a2, a1);
      if (carrier > n || carrier * a2 > n) {
        // carrier or the eval-domain product falls outside the fragment
        allExps = false;
        continue;
      }
      ExponentialWitness w;
      w.base = inst.obj_of(a2);
      w.result = inst.obj_of(a1);
      w.object = inst.obj_of(static_cast<int>(carrier));
      w.eval = inst.mor_of(fn_ev(a2, a1));
      if (!verify_exponential(*inst.cat, s, w))
        throw std::logic_error("finset exponential failed verification");
      s.exponentials.emplace(std::make_pair(w.base, w.result), std::move(w));
    }
  s.is_ccc = s.has_finite_products && allExps;

  auto pb = std::make_shared<FinSetInstance::Pullbacks>();
  pb->cat = inst.cat;
  pb->max_size = inst.max_size;
  pb->fns = inst.fns_;
  inst.pullbacks_ = pb;
  return inst;
}

// ---- zoo ------------------------------------------------------------------------

FunctorData subset_fibration(const FinSetInstance& inst) {
  CategoryBuilder b;
  struct Obj {
    int size;
    unsigned mask;
    ObjId total; // builder id
  };
  std::vector<Obj> objs;
  auto objName = [](int size, unsigned mask) {
    std::string s = "p" + std::to_string(size) + "_";
    for (int i = 0; i < size; ++i) s += (mask >> i) & 1u ? '1' : '0';
    return s;
  };
  for (int k = 0; k <= inst.max_size; ++k)
    for (unsigned mask = 0; mask < (1u << k); ++mask)
      objs.push_back({k, mask, b.add_object(objName(k, mask))});

  struct Mor {
    std::size_t src, dst;
    MorId under; // in inst.cat
    MorId total;
  };
  std::vector<Mor> mors;
  auto morName = [&](const Mor& m) {
    return inst.cat->morphism_name(m.under) + "|" + objName(objs[m.src].size, objs[m.src].mask) +
           ">" + objName(objs[m.dst].size, objs[m.dst].mask);
  };
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (MorId under :
           inst.cat->hom(inst.obj_of(objs[i].size), inst.obj_of(objs[j].size))) {
        const SetFn& f = inst.fn(under);
        bool ok = true;
        for (int x = 0; x < objs[i].size; ++x)
          if ((objs[i].mask >> x) & 1u)
            if (!((objs[j].mask >> f.tab[x]) & 1u)) ok = false;
        if (!ok) continue;
        Mor m{i, j, under, kNoMor};
        m.total = b.add_morphism(morName(m), objs[i].total, objs[j].total);
        mors.push_back(m);
      }
  for (const auto& o : objs) {
    MorId under = inst.cat->identity(inst.obj_of(o.size));
    Mor key{&o - objs.data(), &o - objs.data(), under, kNoMor};
    b.set_identity(o.total, b.morphism(morName(key)));
  }
  for (const auto& m2 : mors)
    for (const auto& m1 : mors) {
      if (m1.dst != m2.src) continue;
      Mor comp{m1.src, m2.dst, inst.cat->compose(m2.under, m1.under), kNoMor};
      b.set_composite(b.morphism(morName(m2)), b.morphism(morName(m1)),
                      b.morphism(morName(comp)));
    }
  CatPtr total = b.build();

  FunctorData u{total, inst.cat, std::vector<ObjId>(total->object_count(), kNoObj),
                std::vector<MorId>(total->morphism_count(), kNoMor)};
  for (const auto& o : objs)
    u.obj_map[*total->object_by_name(objName(o.size, o.mask))] = inst.obj_of(o.size);
  for (const auto& m : mors) u.mor_map[*total->morphism_by_name(morName(m))] = m.under;
  if (auto v = functor_violation(u))
    throw std::logic_error("subset fibration projection invalid: " + *v);
  return u;
}

std::vector<ZooEntry> load_zoo(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".catspec") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<ZooEntry> out;
  for (const auto& p : files) {
    ParsedSpec spec = parse_catspec_file(p.string());
    if (!spec.category) throw std::runtime_error(p.string() + ": no category");
    out.push_back({p.stem().string(), spec.category, spec.annotations});
  }
  return out;
}

std::vector<AnnotationCheck> verify_annotations(const ZooEntry& e) {
  std::vector<AnnotationCheck> out;
  const FinCategory& c = *e.cat;
  CategoryProfile prof = category_profile(c);
  auto boolstr = [](bool b) { return b ? std::string("true") : std::string("false"); };
  for (const auto& [key, val] : e.annotations) {
    AnnotationCheck chk{key, val, "", false};
    if (key == "discrete") chk.actual = boolstr(prof.discrete);
    else if (key == "preorder") chk.actual = boolstr(prof.preorder);
    else if (key == "pointed") chk.actual = boolstr(prof.pointed);
    else if (key == "well_pointed") chk.actual = boolstr(prof.well_pointed);
    else if (key == "objects") chk.actual = std::to_string(c.object_count());
    else if (key == "morphisms") chk.actual = std::to_string(c.morphism_count());
    else if (key == "terminal" || key == "initial") {
      auto hits = key == "terminal" ? find_terminals(c) : find_initials(c);
      chk.actual = hits.empty() ? "none" : c.object_name(hits.front());
    } else if (key == "has_pullbacks") {
      bool all = true;
      for (MorId f1 = 0; f1 < c.morphism_count() && all; ++f1)
        for (MorId f2 = 0; f2 < c.morphism_count() && all; ++f2)
          if (c.cod(f1) == c.cod(f2) && !choose_pullback(c, f1, f2)) all = false;
      chk.actual = boolstr(all);
    } else if (key == "iso") {
      auto m = c.morphism_by_name(val);
      chk.actual = m && classify_morphism(c, *m).iso ? val : "no";
    } else {
      chk.actual = "unknown-key";
    }
    chk.ok = (chk.actual == chk.expected) || (key == "iso" && chk.actual == val);
    out.push_back(std::move(chk));
  }
  return out;
}

} // namespace catkern
