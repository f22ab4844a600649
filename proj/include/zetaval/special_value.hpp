#pragma once

#include <string>

#include "zetaval/cyclotomic.hpp"

namespace zetaval {

/// coeff * pi^pi_power with an exact cyclotomic coefficient. The coefficient
/// is kept over the smallest modulus that holds it, so rational multiples of
/// a power of pi always carry modulus 1.
class SpecialValue {
public:
  SpecialValue(Cyclotomic coeff, unsigned pi_power);

  const Cyclotomic& coeff() const { return coeff_; }
  unsigned pi_power() const { return pi_power_; }

  /// coeff * pi^k as a complex number.
  BigComplex embed(const Precision& prec) const;

  /// "(1/90) * pi^4", "(1/4) * pi", or "([q=5] ...) * pi^2" for irrational coefficients.
  std::string to_string() const;

  friend bool operator==(const SpecialValue& a, const SpecialValue& b) {
    return a.pi_power_ == b.pi_power_ && a.coeff_ == b.coeff_;
  }

private:
  Cyclotomic coeff_;
  unsigned pi_power_;
};

} // namespace zetaval
