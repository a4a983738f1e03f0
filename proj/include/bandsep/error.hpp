#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bandsep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with inputs outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exact oracle refused an instance larger than its configured guard.
class SizeGuardError : public Error {
 public:
  SizeGuardError(const std::string& what, std::size_t n, std::size_t limit)
      : Error(what + ": n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit)),
        n_(n),
        limit_(limit) {}

  std::size_t n() const { return n_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

/// Malformed input text. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A produced certificate failed its own verification. Never expected; seeing
/// one means a bug.
class CertificateError : public Error {
 public:
  using Error::Error;
};

/// A separator provider could not deliver a separator for the requested part.
class ProviderError : public Error {
 public:
  using Error::Error;
};

/// The non-expanding-set finder failed on an induced subgraph. `vertices` are
/// ids in the graph the caller passed in; that subgraph is an expander
/// candidate.
class ExpanderEncountered : public Error {
 public:
  ExpanderEncountered(const std::string& what, std::vector<int> vertices)
      : Error(what), vertices_(std::move(vertices)) {}

  const std::vector<int>& vertices() const { return vertices_; }

 private:
  std::vector<int> vertices_;
};

/// Result of a validator: ok, or the first violated condition.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace bandsep
