#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pillai {

// Base error carrying a stable machine-readable code next to the human text.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

// Violations of a mathematical precondition (zero divisor, constant f, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

// Rejected input text; position is a 0-based offset into the source string.
class ParseError : public Error {
   public:
    ParseError(const std::string& message, std::size_t position)
        : Error("parse_error", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace pillai
