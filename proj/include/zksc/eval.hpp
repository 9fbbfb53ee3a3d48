#pragma once

#include <optional>

#include "zksc/ast.hpp"
#include "zksc/value.hpp"

namespace zksc {

struct LocalResult {
  bool ok = false;
  MaybeValue value;
  Env env;
  OutStreams out;
  // Failure details, when !ok.
  std::string failure;
  SourcePos failure_pos;
};

bool equal_results(const LocalResult& a, const LocalResult& b);

// The local dynamic semantics from the point of view of domain d. The
// expression must be typechecked (annotated).
LocalResult eval_local(Domain d, const Expr& e, Env env, const Inputs& inputs,
                       const Nat& modulus);

struct CircuitResult {
  enum class Status : std::uint8_t { Ok, Failed, StreamUnderflow };
  Status status = Status::Failed;
  bool ok() const { return status == Status::Ok; }
  MaybeValue value;
  Env env;
  OutStreams remaining;
  std::string failure;
  SourcePos failure_pos;
};

// The circuit semantics: computations in stage $post or domain @public,
// with non-public wire values consumed from the supplied streams.
CircuitResult eval_circuit(const Expr& e, Env env, const Inputs& inputs,
                           OutStreams streams, const Nat& modulus);

}  // namespace zksc
