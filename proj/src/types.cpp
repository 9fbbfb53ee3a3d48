#include "zksc/types.hpp"

#include "zksc/source.hpp"

namespace zksc {

const char* type_error_code_name(TypeErrorCode code) {
  switch (code) {
    case TypeErrorCode::UnknownVariable: return "UnknownVariable";
    case TypeErrorCode::TypeMismatch: return "TypeMismatch";
    case TypeErrorCode::StageMismatch: return "StageMismatch";
    case TypeErrorCode::DomainMismatch: return "DomainMismatch";
    case TypeErrorCode::NoReadUp: return "NoReadUp";
    case TypeErrorCode::NoWriteDown: return "NoWriteDown";
    case TypeErrorCode::NotMutable: return "NotMutable";
    case TypeErrorCode::MalformedGetAnnotation: return "MalformedGetAnnotation";
    case TypeErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
  }
  return "Unknown";
}

std::string format_diagnostic(const std::string& file, SourcePos pos,
                              const std::string& code, const std::string& msg) {
  return file + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.col) +
         ": error[" + code + "]: " + msg;
}

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Public: return "public";
    case Domain::Verifier: return "verifier";
    case Domain::Prover: return "prover";
  }
  return "?";
}

const char* domain_token(Domain d) {
  switch (d) {
    case Domain::Public: return "@public";
    case Domain::Verifier: return "@verifier";
    case Domain::Prover: return "@prover";
  }
  return "?";
}

const char* stage_token(Stage s) { return s == Stage::Pre ? "$pre" : "$post"; }

std::string EffectSet::to_string() const {
  switch (rank_) {
    case 0: return "{}";
    case 1: return "<@prover>";
    case 2: return "<@verifier>";
    default: return "<@public>";
  }
}

QualType unit_type() {
  QualType q;
  q.data.kind = DataType::Kind::Unit;
  q.stage = Stage::Pre;
  q.domain = Domain::Public;
  return q;
}

QualType uint_type(bool has_modulus, Stage s, Domain d) {
  QualType q;
  q.data.kind = DataType::Kind::UInt;
  q.data.has_modulus = has_modulus;
  q.stage = s;
  q.domain = d;
  return q;
}

QualType bool_type(bool has_modulus, Stage s, Domain d) {
  QualType q;
  q.data.kind = DataType::Kind::Bool;
  q.data.has_modulus = has_modulus;
  q.stage = s;
  q.domain = d;
  return q;
}

QualType list_type(QualType elem, Stage s, Domain d) {
  QualType q;
  q.data.kind = DataType::Kind::List;
  q.data.elem = std::make_shared<const QualType>(std::move(elem));
  q.stage = s;
  q.domain = d;
  return q;
}

bool operator==(const DataType& a, const DataType& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case DataType::Kind::Unit: return true;
    case DataType::Kind::Bool:
    case DataType::Kind::UInt: return a.has_modulus == b.has_modulus;
    case DataType::Kind::List: return *a.elem == *b.elem;
  }
  return false;
}

bool operator==(const QualType& a, const QualType& b) {
  return a.data == b.data && a.stage == b.stage && a.domain == b.domain;
}

std::string to_string(const DataType& t) {
  switch (t.kind) {
    case DataType::Kind::Unit: return "()";
    case DataType::Kind::Bool: return t.has_modulus ? "bool[N]" : "bool";
    case DataType::Kind::UInt: return t.has_modulus ? "uint[N]" : "uint";
    case DataType::Kind::List: return "list[" + to_string(*t.elem) + "]";
  }
  return "?";
}

std::string to_string(const QualType& q) {
  std::string s = to_string(q.data);
  if (q.stage) {
    s += ' ';
    s += stage_token(*q.stage);
  }
  s += ' ';
  s += domain_token(q.domain);
  return s;
}

EffectSet type_effect(const DataType& t) {
  if (t.kind != DataType::Kind::List) return EffectSet::empty();
  const QualType& e = *t.elem;
  return type_effect(e.data)
      .unite(EffectSet::of_stage(e.stage_or_pre()))
      .unite(EffectSet::up(e.domain));
}

bool well_structured(const QualType& q) {
  if (!q.stage) return false;
  if (q.data.is_primitive()) {
    if (q.data.kind == DataType::Kind::Unit) return *q.stage == Stage::Pre;
    return true;
  }
  if (*q.stage != Stage::Pre) return false;
  const QualType& e = *q.data.elem;
  if (!e.stage) return false;
  EffectSet need =
      EffectSet::of_stage(*e.stage).unite(EffectSet::up(e.domain));
  if (!EffectSet::up(q.domain).includes(need)) return false;
  return well_structured(e);
}

bool allpre(Domain d, const QualType& q) {
  if (q.stage_or_pre() != Stage::Pre || q.domain != d) return false;
  if (q.data.kind == DataType::Kind::List) return allpre(d, *q.data.elem);
  return true;
}

}  // namespace zksc
