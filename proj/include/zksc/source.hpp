#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zksc {

struct SourcePos {
  std::uint32_t line = 1;
  std::uint32_t col = 1;
};

inline bool operator==(SourcePos a, SourcePos b) {
  return a.line == b.line && a.col == b.col;
}

// Thrown by the lexer/parser. Always carries a position.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourcePos pos, const std::string& msg)
      : std::runtime_error(msg), pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

enum class TypeErrorCode {
  UnknownVariable,
  TypeMismatch,
  StageMismatch,
  DomainMismatch,
  NoReadUp,
  NoWriteDown,
  NotMutable,
  MalformedGetAnnotation,
  UnsupportedConstruct,
};

const char* type_error_code_name(TypeErrorCode code);

class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorCode code, SourcePos pos, const std::string& msg)
      : std::runtime_error(msg), code_(code), pos_(pos) {}
  TypeErrorCode code() const { return code_; }
  SourcePos pos() const { return pos_; }

 private:
  TypeErrorCode code_;
  SourcePos pos_;
};

// file:line:col: error[CODE]: message
std::string format_diagnostic(const std::string& file, SourcePos pos,
                              const std::string& code, const std::string& msg);

}  // namespace zksc
