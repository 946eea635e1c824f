#include "cyclo/root_of_unity.hpp"

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

RootOfUnityContent RootOfUnityContent::cyclotomic(std::uint64_t conductor) {
  if (conductor == 0) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  if (conductor % 4 == 2) conductor /= 2;
  return RootOfUnityContent(Kind::Cyclotomic, conductor);
}

RootOfUnityContent RootOfUnityContent::finite_field(std::uint64_t l) {
  if (!nt::is_prime(l)) throw Error(ErrorKind::NotPrime, "finite base field order " + std::to_string(l));
  return RootOfUnityContent(Kind::FiniteField, l);
}

unsigned RootOfUnityContent::exponent(std::uint64_t p) const {
  if (kind_ == Kind::FiniteField) {
    if (p == value_) return 0;
    return nt::valuation(value_ - 1, p);
  }
  const unsigned k = nt::valuation(value_, p);
  return (p == 2 && k == 0) ? 1 : k;
}

std::string RootOfUnityContent::to_string() const {
  if (kind_ == Kind::FiniteField) return "F_" + std::to_string(value_);
  return "Q(xi_" + std::to_string(value_) + ")";
}

}  // namespace cyclo
