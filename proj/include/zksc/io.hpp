#pragma once

#include <string>
#include <vector>

#include "zksc/ast.hpp"
#include "zksc/circuit.hpp"
#include "zksc/compile.hpp"
#include "zksc/value.hpp"

namespace zksc {

struct InputFormatError {
  std::string message;
};

// Parses one input dictionary from JSON text: an object mapping keys to
// non-negative integers, booleans, or nested arrays of these.
std::map<std::string, CoreValue> parse_input_dict(const std::string& json_text);

// The get sites of a typechecked program: key, source domain, annotation.
struct GetSite {
  Domain source;
  std::string key;
  QualType annotation;
  SourcePos pos;
};
std::vector<GetSite> collect_get_sites(const Program& p);

// Checks that every get key of the listed domains is present and its value
// conforms to the annotation's shape; reduces uint[N] values mod N.
// Throws InputFormatError.
void validate_inputs(const std::vector<GetSite>& sites, Inputs& inputs,
                     const std::vector<Domain>& domains, const Nat& modulus);

// Encodes a stream for the circuit boundary: known naturals stay, known
// booleans map through |.| (tt -> 0, ff -> 1). Entries must be known.
std::vector<Nat> encode_stream(const std::deque<MaybeValue>& stream);

// JSON array of naturals, one line.
std::string stream_to_json(const std::vector<Nat>& entries);
std::vector<Nat> stream_from_json(const std::string& json_text);

// Builds pi from fully-known output streams.
InputAssignment streams_to_assignment(const OutStreams& out);

std::string manifest_to_json(const std::vector<InputSite>& sites,
                             const std::string& file);

}  // namespace zksc
