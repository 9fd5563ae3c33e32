#ifndef AWAREKIT_ERROR_HPP
#define AWAREKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace awarekit {

// Every failure raised by the library carries a stable code (for example
// "AwarenessMismatch" or "NotAPartition") plus a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Raised by the formula and Boolean-combination parsers.
class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& detail, std::size_t offset)
      : Error(std::move(code),
              detail + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace awarekit

#endif  // AWAREKIT_ERROR_HPP
