#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace zksc {

// Domains ordered by growing privacy: public < verifier < prover.
enum class Domain : std::uint8_t { Public = 0, Verifier = 1, Prover = 2 };

// Stages ordered post < pre: whatever the circuit computes is also computed
// locally by each party that can see it.
enum class Stage : std::uint8_t { Post = 0, Pre = 1 };

inline bool domain_le(Domain a, Domain b) {
  return static_cast<int>(a) <= static_cast<int>(b);
}
inline bool stage_le(Stage a, Stage b) {
  return static_cast<int>(a) <= static_cast<int>(b);
}

const char* domain_name(Domain d);   // "public" / "verifier" / "prover"
const char* domain_token(Domain d);  // "@public" / ...
const char* stage_token(Stage s);    // "$pre" / "$post"

// An upward-closed set of domains. Exactly four values exist and they are
// totally ordered by inclusion:
//   {} < {prover} < {verifier, prover} < {public, verifier, prover}
class EffectSet {
 public:
  constexpr EffectSet() : rank_(0) {}

  static constexpr EffectSet empty() { return EffectSet(0); }
  static EffectSet up(Domain d) {
    return EffectSet(static_cast<std::uint8_t>(3 - static_cast<int>(d)));
  }
  // <$pre> = {}, <$post> = <@public>
  static EffectSet of_stage(Stage s) {
    return s == Stage::Pre ? empty() : up(Domain::Public);
  }

  EffectSet unite(EffectSet o) const {
    return EffectSet(rank_ > o.rank_ ? rank_ : o.rank_);
  }
  // The four sets are totally ordered, so intersection is the smaller one.
  EffectSet intersect(EffectSet o) const {
    return EffectSet(rank_ < o.rank_ ? rank_ : o.rank_);
  }
  bool contains(Domain d) const {
    return rank_ >= 3 - static_cast<int>(d);
  }
  bool includes(EffectSet o) const { return rank_ >= o.rank_; }
  // The least domain in the set, if nonempty.
  std::optional<Domain> least() const {
    if (rank_ == 0) return std::nullopt;
    return static_cast<Domain>(3 - rank_);
  }

  bool operator==(const EffectSet&) const = default;

  std::string to_string() const;

 private:
  explicit constexpr EffectSet(std::uint8_t r) : rank_(r) {}
  std::uint8_t rank_;  // 0 = empty, 1 = <prover>, 2 = <verifier>, 3 = <public>
};

struct QualType;

// The data-type component of a qualified type. Bool/UInt carry a flag for
// the presence of the modulus bracket [N]; N itself is a single global
// compile-time parameter, so no per-type value is stored.
struct DataType {
  enum class Kind : std::uint8_t { Unit, Bool, UInt, List };
  Kind kind = Kind::Unit;
  bool has_modulus = false;
  std::shared_ptr<const QualType> elem;  // List only

  bool is_primitive() const { return kind != Kind::List; }
};

// A qualified type (data type, stage, domain). The stage is optional in
// surface syntax ("to infer"); resolved types always carry one.
struct QualType {
  DataType data;
  std::optional<Stage> stage;
  Domain domain = Domain::Public;

  Stage stage_or_pre() const { return stage.value_or(Stage::Pre); }
};

QualType unit_type();
QualType uint_type(bool has_modulus, Stage s, Domain d);
QualType bool_type(bool has_modulus, Stage s, Domain d);
QualType list_type(QualType elem, Stage s, Domain d);

bool operator==(const DataType& a, const DataType& b);
inline bool operator!=(const DataType& a, const DataType& b) { return !(a == b); }
bool operator==(const QualType& a, const QualType& b);
inline bool operator!=(const QualType& a, const QualType& b) { return !(a == b); }

std::string to_string(const DataType& t);
std::string to_string(const QualType& q);

// <t>: the effect closure of a data type. Empty for primitives; for a list
// it is <t'> u <s'> u <d'> of the element type.
EffectSet type_effect(const DataType& t);

// Whether q satisfies the well-structuredness constraints: primitives are
// unrestricted except that unit forces stage pre; a list must itself be
// stage pre with <d> including <s'> u <d'> of its element, recursively.
// Requires a fully resolved type.
bool well_structured(const QualType& q);

// allpre_{d'}(q): every nesting level of q is qualified $pre d'.
bool allpre(Domain d, const QualType& q);

}  // namespace zksc
