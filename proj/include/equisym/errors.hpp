#pragma once

#include <stdexcept>
#include <string>

namespace equisym {

// Exit code 1 in the CLI.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Exit code 2 in the CLI.
class ResourceCap : public std::runtime_error {
 public:
  explicit ResourceCap(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : DomainError("ParseError", msg + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& msg) {
  throw DomainError(kind, msg);
}

}  // namespace equisym
