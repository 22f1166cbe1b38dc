#include "catkern/catspec.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace catkern {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

struct RawMor {
  std::string name, dom, cod;
  int line;
};

} // namespace

ParsedSpec parse_catspec(const std::string& text) {
  ParsedSpec spec;
  std::vector<std::string> objects;
  std::vector<RawMor> mors;
  std::vector<std::array<std::string, 2>> idents; // obj, mor
  std::vector<std::array<std::string, 3>> comps;  // g, f, h
  FunctorBlock* open = nullptr;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("#@", 0) == 0) {
      auto tk = tokens(line.substr(2));
      if (tk.size() >= 2) spec.annotations.emplace_back(tk[0], tk[1]);
      else if (tk.size() == 1) spec.annotations.emplace_back(tk[0], "");
      continue;
    }
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto tk = tokens(line);
    if (tk.empty()) continue;

    if (open) {
      if (tk[0] == "end") {
        open = nullptr;
      } else if (tk[0] == "obj" && tk.size() == 4 && tk[2] == "|->") {
        open->obj_pairs.emplace_back(tk[1], tk[3]);
      } else if (tk[0] == "mor" && tk.size() == 4 && tk[2] == "|->") {
        open->mor_pairs.emplace_back(tk[1], tk[3]);
      } else {
        throw ParseError(lineno, "expected obj/mor |-> pair or 'end' in functor block");
      }
      continue;
    }

    if (tk[0] == "object" && tk.size() == 2) {
      objects.push_back(tk[1]);
    } else if (tk[0] == "morphism" && tk.size() == 6 && tk[2] == ":" && tk[4] == "->") {
      mors.push_back({tk[1], tk[3], tk[5], lineno});
    } else if (tk[0] == "identity" && tk.size() == 4 && tk[2] == "=") {
      idents.push_back({tk[1], tk[3]});
    } else if (tk[0] == "compose" && tk.size() == 6 && tk[2] == "." && tk[4] == "=") {
      comps.push_back({tk[1], tk[3], tk[5]});
    } else if (tk[0] == "functor" && tk.size() == 2) {
      spec.functors.push_back({tk[1], {}, {}});
      open = &spec.functors.back();
    } else {
      throw ParseError(lineno, "unrecognized declaration: " + tk[0]);
    }
  }
  if (open) throw ParseError(lineno, "unterminated functor block");

  if (objects.empty() && mors.empty()) return spec;

  CategoryBuilder b;
  for (const auto& o : objects)
    if (b.object(o) == kNoObj) b.add_object(o);
  for (const auto& m : mors) {
    ObjId d = b.object(m.dom), c = b.object(m.cod);
    if (d == kNoObj) throw ParseError(m.line, "unknown object: " + m.dom);
    if (c == kNoObj) throw ParseError(m.line, "unknown object: " + m.cod);
    b.add_morphism(m.name, d, c);
  }
  auto mor = [&](const std::string& n) {
    MorId m = b.morphism(n);
    if (m == kNoMor) throw ParseError(0, "unknown morphism: " + n);
    return m;
  };
  for (const auto& [o, m] : idents) {
    ObjId a = b.object(o);
    if (a == kNoObj) throw ParseError(0, "unknown object: " + o);
    b.set_identity(a, mor(m));
  }
  for (const auto& [g, f, h] : comps) b.set_composite(mor(g), mor(f), mor(h));

  spec.category = b.build();
  return spec;
}

ParsedSpec parse_catspec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catspec(ss.str());
}

std::string serialize_catspec(const FinCategory& c) {
  std::ostringstream out;
  for (ObjId a = 0; a < c.object_count(); ++a) out << "object " << c.object_name(a) << "\n";
  for (MorId f = 0; f < c.morphism_count(); ++f)
    out << "morphism " << c.morphism_name(f) << " : " << c.object_name(c.dom(f)) << " -> "
        << c.object_name(c.cod(f)) << "\n";
  for (ObjId a = 0; a < c.object_count(); ++a)
    out << "identity " << c.object_name(a) << " = " << c.morphism_name(c.identity(a))
        << "\n";
  for (MorId g = 0; g < c.morphism_count(); ++g)
    for (MorId f = 0; f < c.morphism_count(); ++f)
      if (c.composable(g, f))
        out << "compose " << c.morphism_name(g) << " . " << c.morphism_name(f) << " = "
            << c.morphism_name(c.compose(g, f)) << "\n";
  return out.str();
}

FunctorData resolve_functor(const FunctorBlock& b, CatPtr source, CatPtr target) {
  FunctorData f{source, target, std::vector<ObjId>(source->object_count(), kNoObj),
                std::vector<MorId>(source->morphism_count(), kNoMor)};
  for (const auto& [s, t] : b.obj_pairs) {
    auto so = source->object_by_name(s);
    auto to = target->object_by_name(t);
    if (!so) throw std::runtime_error("functor " + b.name + ": unknown source object " + s);
    if (!to) throw std::runtime_error("functor " + b.name + ": unknown target object " + t);
    f.obj_map[*so] = *to;
  }
  for (const auto& [s, t] : b.mor_pairs) {
    auto sm = source->morphism_by_name(s);
    auto tm = target->morphism_by_name(t);
    if (!sm) throw std::runtime_error("functor " + b.name + ": unknown source morphism " + s);
    if (!tm) throw std::runtime_error("functor " + b.name + ": unknown target morphism " + t);
    f.mor_map[*sm] = *tm;
  }
  for (ObjId a = 0; a < source->object_count(); ++a)
    if (f.obj_map[a] == kNoObj)
      throw std::runtime_error("functor " + b.name + ": object " + source->object_name(a) +
                               " unmapped");
  for (MorId m = 0; m < source->morphism_count(); ++m)
    if (f.mor_map[m] == kNoMor) {
      if (source->is_identity(m))
        f.mor_map[m] = target->identity(f.obj_map[source->dom(m)]);
      else
        throw std::runtime_error("functor " + b.name + ": morphism " +
                                 source->morphism_name(m) + " unmapped");
    }
  return f;
}

} // namespace catkern
