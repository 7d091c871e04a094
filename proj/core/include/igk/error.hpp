#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace igk {

/// Coarse classification used by front ends to map failures to exit codes.
enum class ErrorCategory {
  Validation,  // malformed input, shape or space mismatch
  Contract,    // a mathematical precondition does not hold
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string name, const std::string& what)
      : std::runtime_error(what), category_(category), name_(std::move(name)) {}

  ErrorCategory category() const noexcept { return category_; }
  /// Type name of the concrete error, e.g. "DominationError".
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorCategory category_;
  std::string name_;
};

#define IGK_DEFINE_ERROR(Type, Category)                 \
  class Type : public Error {                            \
   public:                                               \
    explicit Type(const std::string& what)               \
        : Error(ErrorCategory::Category, #Type, what) {} \
  }

IGK_DEFINE_ERROR(ValidationError, Validation);
IGK_DEFINE_ERROR(SpaceMismatchError, Validation);
IGK_DEFINE_ERROR(UnknownIdentifierError, Validation);
IGK_DEFINE_ERROR(DominationError, Contract);
IGK_DEFINE_ERROR(ZeroMassError, Contract);
IGK_DEFINE_ERROR(ExponentError, Contract);
IGK_DEFINE_ERROR(EmptyFiberError, Contract);
IGK_DEFINE_ERROR(DomainError, Contract);
IGK_DEFINE_ERROR(NegativeDensityError, Contract);
IGK_DEFINE_ERROR(ModelError, Contract);
IGK_DEFINE_ERROR(UnsupportedError, Contract);
IGK_DEFINE_ERROR(IoError, Io);

#undef IGK_DEFINE_ERROR

/// Parse failure in the density language.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(ErrorCategory::Validation, "SyntaxError", what),
        offset_(offset),
        expected_(std::move(expected)) {}

  /// Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace igk
