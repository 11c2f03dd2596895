#include "wallcross/rational.hpp"

namespace wallcross {

Rat parse_rat(const std::string& text) {
  if (text.empty()) fail(ErrorCode::InvalidInput, "empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/')) {
      fail(ErrorCode::InvalidInput, "bad rational literal '" + text + "'");
    }
  }
  Rat r;
  if (r.set_str(text, 10) != 0) {
    fail(ErrorCode::InvalidInput, "bad rational literal '" + text + "'");
  }
  if (r.get_den() == 0) {
    fail(ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) {
  return value.get_str();
}

}  // namespace wallcross
