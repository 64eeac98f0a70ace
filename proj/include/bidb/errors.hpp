#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bidb {

// Exit-code contract shared with the CLI: 2 parse, 3 capacity, 4 invariant,
// 5 postulate failure.
class Error : public std::runtime_error {
 public:
  enum class Code { parse = 2, capacity = 3, invariant = 4, postulate = 5 };
  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(Code::parse, what), offset_(offset) {}
  // Byte offset into the input text.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(Code::capacity, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(Code::invariant, what) {}
};

}  // namespace bidb
