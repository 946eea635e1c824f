#include "cyclo/m_value.hpp"

#include "cyclo/error.hpp"

namespace cyclo {

std::string MValue::to_string() const {
  switch (kind_) {
    case Kind::NegInfinity: return "-inf";
    case Kind::Undetermined: return "undetermined";
    case Kind::AtMostZero: return "undetermined<=0";
    case Kind::Finite: return std::to_string(value_);
  }
  return "?";
}

MValue MValue::parse(const std::string& text) {
  if (text == "-inf") return neg_infinity();
  if (text == "undetermined") return undetermined();
  if (text == "undetermined<=0") return at_most_zero();
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size() && v >= 0) return finite(v);
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, "not an m value: '" + text + "'");
}

}  // namespace cyclo
