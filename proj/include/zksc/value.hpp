#pragma once

#include <deque>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zksc/nat.hpp"
#include "zksc/source.hpp"
#include "zksc/types.hpp"

namespace zksc {

struct UnitValue {
  bool operator==(const UnitValue&) const = default;
};

// Core values: built without the unknown marker. Used for the contents of
// input dictionaries only.
struct CoreValue;
using CoreList = std::vector<CoreValue>;
struct CoreValue {
  std::variant<Nat, bool, UnitValue, CoreList> v;
};
bool operator==(const CoreValue& a, const CoreValue& b);

struct Value;

// M V: a value or the unknown marker (top). List elements are themselves
// maybe-values. Values are immutable and shared.
class MaybeValue {
 public:
  MaybeValue() = default;  // unknown
  static MaybeValue unknown() { return MaybeValue(); }
  static MaybeValue known(Value v);

  bool is_known() const { return v_ != nullptr; }
  const Value& get() const { return *v_; }

 private:
  std::shared_ptr<const Value> v_;
};

using ValueList = std::vector<MaybeValue>;

struct Value {
  std::variant<Nat, bool, UnitValue, ValueList> v;

  bool is_nat() const { return std::holds_alternative<Nat>(v); }
  bool is_bool() const { return std::holds_alternative<bool>(v); }
  bool is_unit() const { return std::holds_alternative<UnitValue>(v); }
  bool is_list() const { return std::holds_alternative<ValueList>(v); }
  const Nat& nat() const { return std::get<Nat>(v); }
  bool boolean() const { return std::get<bool>(v); }
  const ValueList& list() const { return std::get<ValueList>(v); }
};

MaybeValue known_nat(Nat n);
MaybeValue known_bool(bool b);
MaybeValue known_unit();
MaybeValue known_list(ValueList elems);

// Deep structural equality; unknown equals unknown.
bool equal_maybe(const MaybeValue& a, const MaybeValue& b);

std::string to_string(const MaybeValue& v);
std::string to_string(const CoreValue& v);

// Wraps every level of a core value in Known.
MaybeValue allpure(const CoreValue& v);

// Raised internally on runtime failure (failed assertion, division by
// zero, index out of bounds). Public APIs surface it as a failed result.
struct EvalFailure {
  std::string reason;
  SourcePos pos;
};

// upd(a, i1..in, v): rebuilds the list value a with the cell addressed by
// the index vector replaced by v. n = 0 yields v. Unknown propagates
// monadically. Throws EvalFailure on a known index out of bounds.
MaybeValue upd(const MaybeValue& a, std::span<const MaybeValue> indices,
               const MaybeValue& v);

// A value environment, operated as a stack (most recent binding wins).
class Env {
 public:
  void push(const std::string& var, MaybeValue v);
  void pop_top();  // tail
  // Rewrites the binding of `var` nearest the top. The variable must be
  // bound; typechecking guarantees it.
  void update(const std::string& var, MaybeValue v);
  const MaybeValue& lookup(const std::string& var) const;

  std::size_t size() const { return entries_.size(); }
  // Entry i counted from the top of the stack.
  const std::pair<std::string, MaybeValue>& from_top(std::size_t i) const;

  bool operator==(const Env& o) const;

 private:
  std::vector<std::pair<std::string, MaybeValue>> entries_;  // top at back
};

// The three input dictionaries, one per domain.
struct Inputs {
  std::map<std::string, CoreValue> dict[3];

  const std::map<std::string, CoreValue>& at(Domain d) const {
    return dict[static_cast<int>(d)];
  }
  std::map<std::string, CoreValue>& at(Domain d) {
    return dict[static_cast<int>(d)];
  }
};

// Streams of values delivered to the circuit, one per non-public domain.
// Local evaluation appends at the back; circuit evaluation consumes from
// the front.
struct OutStreams {
  std::deque<MaybeValue> prover;
  std::deque<MaybeValue> verifier;

  std::deque<MaybeValue>& at(Domain d) {
    return d == Domain::Prover ? prover : verifier;
  }
  const std::deque<MaybeValue>& at(Domain d) const {
    return d == Domain::Prover ? prover : verifier;
  }
  bool empty() const { return prover.empty() && verifier.empty(); }
};

bool equal_streams(const OutStreams& a, const OutStreams& b);

}  // namespace zksc
