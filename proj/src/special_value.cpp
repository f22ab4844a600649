#include "zetaval/special_value.hpp"

namespace zetaval {

SpecialValue::SpecialValue(Cyclotomic coeff, unsigned pi_power)
    : coeff_(coeff.simplified()), pi_power_(pi_power) {}

BigComplex SpecialValue::embed(const Precision& prec) const {
  const auto bits = prec.bits();
  return coeff_.embed_bits(bits) * pow(BigFloat::pi(bits), static_cast<long>(pi_power_));
}

std::string SpecialValue::to_string() const {
  const std::string c = coeff_.is_rational() ? coeff_.rational_value().to_string() : coeff_.to_string();
  if (pi_power_ == 0) return c;
  const std::string pi = pi_power_ == 1 ? "pi" : "pi^" + std::to_string(pi_power_);
  return "(" + c + ") * " + pi;
}

} // namespace zetaval
