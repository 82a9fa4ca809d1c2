#pragma once

// The order Z[alpha], alpha = cbrt(16), is not integrally closed. The 3x3
// matrix built here has entries in Z[alpha] but a minimal polynomial over
// Q(beta) with a coefficient outside Z[alpha]; this forces some off-diagonal
// products of any conjugate with a prescribed diagonal out of Z[alpha].

#include <string>
#include <vector>

#include "simcert/matrix.hpp"
#include "simcert/poly.hpp"
#include "simcert/scalar.hpp"

namespace simcert {

/// [[0, 2, alpha], [2 alpha, 0, 4], [4, alpha, 0]] with alpha = 2 beta.
Matrix<Cubic> brewer_matrix();

struct CoefficientCheck {
  std::size_t degree = 0;
  Cubic value;
  bool in_subring = false;
};

struct ForcedProduct {
  std::string name;  // "P12", "P13", "P23": P_ij = B_ij * B_ji
  Cubic value;
  bool in_subring = false;
};

enum class ObstructionVerdict { Obstructed, Inconclusive };

const char* obstruction_verdict_name(ObstructionVerdict v) noexcept;

struct ObstructionReport {
  Poly<Cubic> minimal_poly;
  Vec<Cubic> target;
  std::vector<CoefficientCheck> integrality;  // minimal polynomial coefficients
  std::vector<ForcedProduct> forced_products;
  ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;
};

/// Coefficientwise Z[alpha]-membership of a polynomial.
std::vector<CoefficientCheck> coefficient_membership(const Poly<Cubic>& f);

/// For a 3x3 A whose minimal polynomial m = x^2 + p x + q has degree 2, any B
/// with m(B) = 0 and diagonal (g1, g2, g3) satisfies
///   P12 + P13 = -(g1^2 + p g1 + q), P12 + P23 = -(g2^2 + ...), P13 + P23 = -(g3^2 + ...).
/// A product outside Z[alpha] rules out every such B in M_3(Z[alpha]).
ObstructionReport forced_products_obstruction(const Matrix<Cubic>& a, const Vec<Cubic>& target);

struct BrewerReport {
  Matrix<Cubic> matrix;
  Poly<Cubic> charpoly;
  std::vector<CoefficientCheck> charpoly_integrality;
  ObstructionReport obstruction;
  // x^2 - (alpha/2) x - 8 alpha, which differs from the minimal polynomial in
  // its linear term, evaluated at the matrix.
  Poly<Cubic> alternate_poly;
  bool alternate_annihilates = false;
};

/// Full check for target (1, -1, 0): minimal polynomial of degree 2 with the
/// linear coefficient outside Z[alpha], characteristic polynomial inside it,
/// and an Obstructed verdict. Throws Internal if any of these fails.
BrewerReport brewer_obstruction_report();

}  // namespace simcert
