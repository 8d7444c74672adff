#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eiq {

/// Broad failure classes. The CLI maps each to a process exit code.
enum class ErrorKind {
  Validation,    // input violates a category / representation axiom
  Schema,        // document is malformed or does not match the schema
  Io,            // file could not be read or written
  SizeLimit,     // a configured enumeration bound was exceeded
  Precondition,  // caller broke an operation's contract
  Invariant,     // internal consistency check failed (a bug, or corrupt input)
};

/// One machine-readable complaint about an input.
struct Finding {
  std::string code;     // stable identifier, e.g. "hom-both-directions"
  std::string message;  // human-readable witness
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Error(ErrorKind kind, std::vector<Finding> findings)
      : std::runtime_error(summarize(findings)), kind_(kind), findings_(std::move(findings)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Finding>& findings() const noexcept { return findings_; }

 private:
  static std::string summarize(const std::vector<Finding>& findings) {
    if (findings.empty()) return "validation failed";
    std::string out = findings.front().code + ": " + findings.front().message;
    if (findings.size() > 1) out += " (+" + std::to_string(findings.size() - 1) + " more)";
    return out;
  }

  ErrorKind kind_;
  std::vector<Finding> findings_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

}  // namespace eiq
