#include "simcert/canonical.hpp"

namespace simcert {

bool monic_divisor_integrality(const Poly<Rational>& f) {
  if (!f.is_monic()) fail(ErrorCode::InvalidArgument, "polynomial is not monic");
  for (const auto& c : f.coeffs())
    if (!is_integral(c)) return false;
  return true;
}

bool monic_divisor_integrality(const Poly<Cubic>& f) {
  if (!f.is_monic()) fail(ErrorCode::InvalidArgument, "polynomial is not monic");
  for (const auto& c : f.coeffs())
    if (!in_z_alpha(c)) return false;
  return true;
}

}  // namespace simcert
