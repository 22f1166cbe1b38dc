#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catkern {

using ObjId = std::int32_t;
using MorId = std::int32_t;
inline constexpr MorId kNoMor = -1;
inline constexpr ObjId kNoObj = -1;

enum class Axiom {
  DanglingId,       // identity map missing or mistyped
  MissingComposite, // composable pair without an entry
  BadComposite,     // entry with wrong endpoints or on a non-composable pair
  NonAssociative,   // h(gf) != (hg)f
  BrokenUnit,       // f . id != f or id . f != f
};

std::string_view axiom_name(Axiom a);

struct AxiomViolation {
  Axiom kind;
  std::vector<std::string> witnesses; // names of the offending morphisms/objects
  std::string detail;
};

class BuildError : public std::runtime_error {
public:
  BuildError(AxiomViolation v, const std::string& msg)
      : std::runtime_error(msg), violation(std::move(v)) {}
  AxiomViolation violation;
};

class BoundExceeded : public std::runtime_error {
public:
  BoundExceeded(double estimate, const std::string& msg)
      : std::runtime_error(msg), estimate(estimate) {}
  double estimate;
};

struct MorData {
  std::string name;
  ObjId dom = kNoObj;
  ObjId cod = kNoObj;
};

/// An explicitly represented finite category: object and morphism tables,
/// an identity map, and a total composition table over composable pairs.
/// Immutable once built; builds always validate the axioms.
class FinCategory {
public:
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object_name(ObjId a) const { return objects_[a]; }
  const std::string& morphism_name(MorId f) const { return morphisms_[f].name; }
  ObjId dom(MorId f) const { return morphisms_[f].dom; }
  ObjId cod(MorId f) const { return morphisms_[f].cod; }
  MorId identity(ObjId a) const { return identity_[a]; }
  bool is_identity(MorId f) const { return identity_[dom(f)] == f; }

  bool composable(MorId g, MorId f) const { return cod(f) == dom(g); }

  /// g . f, or kNoMor when cod(f) != dom(g).
  MorId compose(MorId g, MorId f) const {
    return table_[static_cast<std::size_t>(g) * morphisms_.size() + f];
  }

  const std::vector<MorId>& hom(ObjId a, ObjId b) const {
    return hom_[static_cast<std::size_t>(a) * objects_.size() + b];
  }

  std::optional<ObjId> object_by_name(std::string_view n) const;
  std::optional<MorId> morphism_by_name(std::string_view n) const;

  std::vector<ObjId> objects() const;
  std::vector<MorId> morphisms() const;

private:
  friend class CategoryBuilder;
  std::vector<std::string> objects_;          // sorted
  std::vector<MorData> morphisms_;            // sorted by name
  std::vector<MorId> identity_;               // per object
  std::vector<MorId> table_;                  // g * |M| + f
  std::vector<std::vector<MorId>> hom_;       // a * |O| + b
};

using CatPtr = std::shared_ptr<const FinCategory>;

/// Accumulates objects, morphisms, identities and composites, then produces a
/// validated FinCategory with canonically sorted identifiers. Throws
/// BuildError naming the violated axiom and witnesses when validation fails.
class CategoryBuilder {
public:
  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId dom, ObjId cod);
  void set_identity(ObjId a, MorId f);
  void set_composite(MorId g, MorId f, MorId gf);

  ObjId object(std::string_view name) const;
  MorId morphism(std::string_view name) const;
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  CatPtr build() const;

private:
  std::vector<std::string> objects_;
  std::vector<MorData> morphisms_;
  std::map<std::string, ObjId, std::less<>> objIndex_;
  std::map<std::string, MorId, std::less<>> morIndex_;
  std::vector<std::pair<ObjId, MorId>> identities_;
  std::vector<std::array<MorId, 3>> composites_;
};

/// Re-checks every category axiom on an already-built category.
/// Returns the first violation found in canonical scan order, if any.
std::optional<AxiomViolation> validate_category(const FinCategory& c);

} // namespace catkern
