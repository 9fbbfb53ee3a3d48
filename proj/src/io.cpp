#include "zksc/io.hpp"

#include <json.hpp>

namespace zksc {

namespace {

using nlohmann::json;

CoreValue json_to_core(const json& j) {
  if (j.is_boolean()) return CoreValue{j.get<bool>()};
  if (j.is_number_unsigned()) return CoreValue{Nat(j.get<std::uint64_t>())};
  if (j.is_number_integer())
    throw InputFormatError{"negative numbers are not valid input values"};
  if (j.is_string()) {
    // Large naturals may be given as decimal strings.
    auto n = nat_from_string(j.get<std::string>());
    if (!n) throw InputFormatError{"string values must be decimal naturals"};
    return CoreValue{*n};
  }
  if (j.is_array()) {
    CoreList items;
    items.reserve(j.size());
    for (const auto& e : j) items.push_back(json_to_core(e));
    return CoreValue{std::move(items)};
  }
  throw InputFormatError{
      "input values must be non-negative integers, booleans, or arrays"};
}

}  // namespace

std::map<std::string, CoreValue> parse_input_dict(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputFormatError{std::string("invalid JSON: ") + e.what()};
  }
  if (!j.is_object()) throw InputFormatError{"an input file must hold a JSON object"};
  std::map<std::string, CoreValue> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out.emplace(it.key(), json_to_core(it.value()));
  return out;
}

namespace {

void collect_gets(const Expr& e, std::vector<GetSite>& out) {
  if (const auto* g = e.as<GetExpr>()) {
    if (!g->annotation)
      throw std::logic_error("collect_get_sites on an untypechecked program");
    out.push_back(GetSite{g->source, g->key, *g->annotation, e.pos});
  }
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BinOp>) {
          collect_gets(*n.lhs, out);
          collect_gets(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, AssertExpr>) {
          collect_gets(*n.arg, out);
        } else if constexpr (std::is_same_v<T, AssertZeroExpr>) {
          collect_gets(*n.arg, out);
        } else if constexpr (std::is_same_v<T, IfExpr>) {
          collect_gets(*n.guard, out);
          collect_gets(*n.then_e, out);
          collect_gets(*n.else_e, out);
        } else if constexpr (std::is_same_v<T, ForExpr>) {
          collect_gets(*n.lo, out);
          collect_gets(*n.hi, out);
          collect_gets(*n.body, out);
        } else if constexpr (std::is_same_v<T, WireExpr>) {
          collect_gets(*n.body, out);
        } else if constexpr (std::is_same_v<T, CastExpr>) {
          collect_gets(*n.body, out);
        } else if constexpr (std::is_same_v<T, AssignExpr>) {
          for (const auto& i : n.lv.indices) collect_gets(*i, out);
          collect_gets(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, LoadExpr>) {
          for (const auto& i : n.lv.indices) collect_gets(*i, out);
          collect_gets(*n.index, out);
        } else if constexpr (std::is_same_v<T, LetExpr>) {
          collect_gets(*n.bound, out);
          collect_gets(*n.rest, out);
        } else if constexpr (std::is_same_v<T, SeqExpr>) {
          collect_gets(*n.first, out);
          collect_gets(*n.rest, out);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          for (const auto& a : n.args) collect_gets(*a, out);
        }
      },
      e.node);
}

// Checks a core value against the shape of an annotation and reduces
// uint[N] leaves mod N.
CoreValue conform(const CoreValue& v, const QualType& q, const Nat& modulus,
                  const std::string& key) {
  switch (q.data.kind) {
    case DataType::Kind::UInt: {
      const Nat* n = std::get_if<Nat>(&v.v);
      if (!n)
        throw InputFormatError{"input '" + key + "' must be a natural number"};
      return CoreValue{q.data.has_modulus ? Nat(*n % modulus) : *n};
    }
    case DataType::Kind::Bool: {
      const bool* b = std::get_if<bool>(&v.v);
      if (!b) throw InputFormatError{"input '" + key + "' must be a boolean"};
      return CoreValue{*b};
    }
    case DataType::Kind::Unit:
      throw InputFormatError{"input '" + key + "' has unit type"};
    case DataType::Kind::List: {
      const CoreList* list = std::get_if<CoreList>(&v.v);
      if (!list) throw InputFormatError{"input '" + key + "' must be an array"};
      CoreList out;
      out.reserve(list->size());
      for (const auto& e : *list)
        out.push_back(conform(e, *q.data.elem, modulus, key));
      return CoreValue{std::move(out)};
    }
  }
  throw InputFormatError{"input '" + key + "' has an unsupported type"};
}

}  // namespace

std::vector<GetSite> collect_get_sites(const Program& p) {
  std::vector<GetSite> out;
  collect_gets(*p.main().body, out);
  return out;
}

void validate_inputs(const std::vector<GetSite>& sites, Inputs& inputs,
                     const std::vector<Domain>& domains, const Nat& modulus) {
  for (const GetSite& site : sites) {
    bool wanted = false;
    for (Domain d : domains) wanted = wanted || d == site.source;
    if (!wanted) continue;
    auto& dict = inputs.at(site.source);
    auto it = dict.find(site.key);
    if (it == dict.end())
      throw InputFormatError{"missing key '" + site.key + "' in the " +
                             domain_name(site.source) + " inputs"};
    it->second = conform(it->second, site.annotation, modulus, site.key);
  }
}

std::vector<Nat> encode_stream(const std::deque<MaybeValue>& stream) {
  std::vector<Nat> out;
  out.reserve(stream.size());
  for (const MaybeValue& v : stream) {
    if (!v.is_known())
      throw std::logic_error("encoding a stream with unknown entries");
    const Value& val = v.get();
    if (val.is_nat())
      out.push_back(val.nat());
    else if (val.is_bool())
      out.push_back(Nat(val.boolean() ? 0 : 1));
    else
      throw std::logic_error("stream entry is neither a natural nor a boolean");
  }
  return out;
}

std::string stream_to_json(const std::vector<Nat>& entries) {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += nat_to_string(entries[i]);
  }
  out += "]\n";
  return out;
}

std::vector<Nat> stream_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputFormatError{std::string("invalid JSON: ") + e.what()};
  }
  if (!j.is_array()) throw InputFormatError{"a stream file must hold a JSON array"};
  std::vector<Nat> out;
  for (const auto& e : j) {
    if (e.is_number_unsigned())
      out.push_back(Nat(e.get<std::uint64_t>()));
    else if (e.is_string()) {
      auto n = nat_from_string(e.get<std::string>());
      if (!n) throw InputFormatError{"stream entries must be naturals"};
      out.push_back(*n);
    } else {
      throw InputFormatError{"stream entries must be naturals"};
    }
  }
  return out;
}

InputAssignment streams_to_assignment(const OutStreams& out) {
  InputAssignment pi;
  pi.prover = encode_stream(out.prover);
  pi.verifier = encode_stream(out.verifier);
  return pi;
}

std::string manifest_to_json(const std::vector<InputSite>& sites,
                             const std::string& file) {
  nlohmann::json j = nlohmann::json::array();
  for (const InputSite& s : sites) {
    nlohmann::json entry;
    entry["domain"] = domain_name(s.domain);
    entry["index"] = s.index;
    entry["file"] = file;
    entry["line"] = s.pos.line;
    entry["col"] = s.pos.col;
    j.push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

}  // namespace zksc
