#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace largeness {

  enum class Errc {
    BadShape,
    BadEntry,
    NonAssociative,
    Overflow,
    BoundExceeded,
    EmptyBase,
    EmptyCore,
    CoreNotSubsemigroup,
    WidthMismatch,
    InvalidArgument,
    NotGoodFamily,
    BlockOrderViolation,
    TableIncomplete,
    NoIdentity,
    FipViolated,
    EmptySet,
    Parse,
  };

  std::string_view errc_name(Errc code) noexcept;

  // Every library failure is reported through this type. `detail()` carries
  // the structured payload of the error (for NonAssociative the triple
  // x, y, z; for BadEntry the row and column; and so on).
  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& what, std::vector<std::size_t> detail = {})
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          _code(code),
          _detail(std::move(detail)) {}

    Errc code() const noexcept {
      return _code;
    }

    std::vector<std::size_t> const& detail() const noexcept {
      return _detail;
    }

   private:
    Errc                     _code;
    std::vector<std::size_t> _detail;
  };

}  // namespace largeness
