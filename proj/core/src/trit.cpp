#include "rmlogic/trit.hpp"

#include <sstream>

#include "rmlogic/errors.hpp"

namespace rmlogic {

ParseError::ParseError(std::string message, std::size_t position,
                       std::vector<std::string> expected)
    : InputError(std::move(message)), position_(position), expected_(std::move(expected)) {}

char to_char(Trit t) {
  switch (t) {
    case Trit::Zero: return '0';
    case Trit::Half: return 'h';
    case Trit::One: return '1';
  }
  return '?';
}

std::string to_string(Trit t) { return std::string(1, to_char(t)); }

std::optional<Trit> trit_from_char(char c) {
  switch (c) {
    case '0': return Trit::Zero;
    case 'h': return Trit::Half;
    case '1': return Trit::One;
    default: return std::nullopt;
  }
}

Trit parse_trit(std::string_view text) {
  if (text == "1/2") return Trit::Half;
  if (text.size() == 1) {
    if (auto t = trit_from_char(text[0])) return *t;
  }
  throw InputError("bad trit symbol '" + std::string(text) + "' (expected 0, h, 1/2 or 1)");
}

}  // namespace rmlogic
