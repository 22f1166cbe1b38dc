#pragma once

#include "catkern/category.hpp"
#include "catkern/functor.hpp"

#include <string>
#include <vector>

namespace catkern {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

/// A functor block: name plus object/morphism name pairs, resolved later
/// against a source and a target category.
struct FunctorBlock {
  std::string name;
  std::vector<std::pair<std::string, std::string>> obj_pairs;
  std::vector<std::pair<std::string, std::string>> mor_pairs;
};

struct ParsedSpec {
  CatPtr category;                       // null when the file has no category part
  std::vector<FunctorBlock> functors;
  std::vector<std::pair<std::string, std::string>> annotations; // "#@ key value" lines
};

/// Parses the catspec text format:
///   object <name>
///   morphism <name> : <dom> -> <cod>
///   identity <obj> = <name>
///   compose <g> . <f> = <h>
///   functor <name> ... obj <a> |-> <b> / mor <f> |-> <g> ... end
/// Lines may appear in any order; '#' starts a comment; '#@ key value' lines
/// are collected as annotations. Building validates the category axioms.
ParsedSpec parse_catspec(const std::string& text);
ParsedSpec parse_catspec_file(const std::string& path);

/// Canonical serialization: sorted object/morphism ids, one declaration per
/// line. parse(serialize(c)) rebuilds an identical category.
std::string serialize_catspec(const FinCategory& c);

/// Resolves a functor block against explicit source/target categories.
FunctorData resolve_functor(const FunctorBlock& b, CatPtr source, CatPtr target);

} // namespace catkern
