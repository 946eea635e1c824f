#pragma once

#include <string>

namespace cyclo {

/// Value of the norm invariant m: -inf, a finite level, or one of two
/// "not decided" markers.
class MValue {
 public:
  enum class Kind { NegInfinity, Finite, Undetermined, AtMostZero };

  static MValue neg_infinity() { return MValue(Kind::NegInfinity, 0); }
  static MValue finite(int m) { return MValue(Kind::Finite, m); }
  static MValue undetermined() { return MValue(Kind::Undetermined, 0); }
  /// m is -inf or 0 but the computation cannot tell which.
  static MValue at_most_zero() { return MValue(Kind::AtMostZero, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_infinity() const { return kind_ == Kind::NegInfinity; }
  int value() const { return value_; }

  /// "-inf", "undetermined", "undetermined<=0" or the decimal value.
  std::string to_string() const;
  static MValue parse(const std::string& text);

  bool operator==(const MValue&) const = default;

 private:
  MValue(Kind kind, int value) : kind_(kind), value_(value) {}
  Kind kind_;
  int value_;
};

}  // namespace cyclo
