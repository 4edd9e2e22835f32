#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncnull {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A square matrix has no inverse.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class MissingLetter : public Error {
 public:
  using Error::Error;
};

class UnknownLetter : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation or expansion hit an inverse that does not exist. `path` lists
/// child indices from the root to the offending inverse node.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::vector<std::size_t> path, std::string subtree)
      : Error(what), path_(std::move(path)), subtree_(std::move(subtree)) {}
  const std::vector<std::size_t>& path() const noexcept { return path_; }
  const std::string& subtree() const noexcept { return subtree_; }

 private:
  std::vector<std::size_t> path_;
  std::string subtree_;
};

class BasepointMismatch : public Error {
 public:
  using Error::Error;
};

class SingularConstantTerm : public Error {
 public:
  using Error::Error;
};

class ResolventSingular : public Error {
 public:
  using Error::Error;
};

class GOutOfRange : public Error {
 public:
  using Error::Error;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

class ResolventNotVanishing : public Error {
 public:
  using Error::Error;
};

class DegreeTooHigh : public Error {
 public:
  using Error::Error;
};

class ConditioningFailure : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace ncnull
