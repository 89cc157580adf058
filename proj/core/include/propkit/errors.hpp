#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace propkit {

// Base class for everything propkit throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Formula / valuation / sequent text could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A derivation node violates its rule. `path` is the chain of premise
// indices from the root down to the offending node.
class CheckError : public Error {
 public:
  enum class Kind { RuleMismatch, BadArity, BadIndex };

  CheckError(Kind kind, std::vector<std::size_t> path, const std::string& message)
      : Error(render(kind, path, message)), kind_(kind), path_(std::move(path)) {}

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& path() const { return path_; }

  static std::string path_to_string(const std::vector<std::size_t>& path) {
    if (path.empty()) return "root";
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) out += '/';
      out += std::to_string(path[i]);
    }
    return out;
  }

 private:
  static std::string render(Kind kind, const std::vector<std::size_t>& path,
                            const std::string& message) {
    const char* k = kind == Kind::RuleMismatch ? "RuleMismatch"
                    : kind == Kind::BadArity   ? "BadArity"
                                               : "BadIndex";
    return std::string(k) + " at node " + path_to_string(path) + ": " + message;
  }

  Kind kind_;
  std::vector<std::size_t> path_;
};

// nc_weaken was given a map that is not injective, out of bounds, or not
// formula-preserving.
class EmbeddingError : public Error {
 public:
  explicit EmbeddingError(const std::string& message)
      : Error("invalid embedding: " + message) {}
};

// A transformer was fed a derivation that does not check, or whose shape
// does not match the transformer's contract.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error("precondition violated: " + message) {}
};

// Evidence passed to a proof constructor no longer matches the input.
class EvidenceError : public Error {
 public:
  explicit EvidenceError(const std::string& message)
      : Error("stale evidence: " + message) {}
};

// Exhaustive valuation enumeration refused (too many variables).
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& message) : Error(message) {}
};

// The decision procedure refuted the endsequent of a derivation that
// checked; indicates a bug in this library, never in user input.
class SoundnessBreachError : public Error {
 public:
  explicit SoundnessBreachError(const std::string& message)
      : Error("internal soundness breach: " + message) {}
};

// A serialized derivation document is malformed.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& message)
      : Error("bad derivation document: " + message) {}
};

}  // namespace propkit
