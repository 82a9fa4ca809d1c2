#include "simcert/counterexample.hpp"

#include "simcert/canonical.hpp"
#include "simcert/prescribe.hpp"

namespace simcert {

const char* obstruction_verdict_name(ObstructionVerdict v) noexcept {
  return v == ObstructionVerdict::Obstructed ? "Obstructed" : "Inconclusive";
}

Matrix<Cubic> brewer_matrix() {
  const Cubic alpha = Cubic::alpha();
  const Cubic two_alpha = Cubic(2) * alpha;
  return Matrix<Cubic>::from_rows({
      {Cubic(0), Cubic(2), alpha},
      {two_alpha, Cubic(0), Cubic(4)},
      {Cubic(4), alpha, Cubic(0)},
  });
}

std::vector<CoefficientCheck> coefficient_membership(const Poly<Cubic>& f) {
  std::vector<CoefficientCheck> out;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k)
    out.push_back({k, f.coeffs()[k], in_z_alpha(f.coeffs()[k])});
  return out;
}

ObstructionReport forced_products_obstruction(const Matrix<Cubic>& a, const Vec<Cubic>& target) {
  if (a.rows() != 3 || a.cols() != 3) fail(ErrorCode::DimensionMismatch, "3x3 matrix required");
  check_target(a, target);
  ObstructionReport rep;
  rep.target = target;
  rep.minimal_poly = minpoly(a);
  if (rep.minimal_poly.degree() != 2)
    fail(ErrorCode::MinpolyDegreeNotTwo,
         "minimal polynomial has degree " + std::to_string(rep.minimal_poly.degree()));
  rep.integrality = coefficient_membership(rep.minimal_poly);

  const Cubic& q = rep.minimal_poly.coeffs()[0];
  const Cubic& p = rep.minimal_poly.coeffs()[1];
  Cubic r[3];
  for (int i = 0; i < 3; ++i) r[i] = -(target[i] * target[i] + p * target[i] + q);

  // Inverse of ((1,1,0),(1,0,1),(0,1,1)).
  const Cubic half = Cubic(Rational(1, 2));
  rep.forced_products = {
      {"P12", half * (r[0] + r[1] - r[2]), false},
      {"P13", half * (r[0] + r[2] - r[1]), false},
      {"P23", half * (r[1] + r[2] - r[0]), false},
  };
  rep.verdict = ObstructionVerdict::Inconclusive;
  for (auto& fp : rep.forced_products) {
    fp.in_subring = in_z_alpha(fp.value);
    if (!fp.in_subring) rep.verdict = ObstructionVerdict::Obstructed;
  }
  return rep;
}

BrewerReport brewer_obstruction_report() {
  BrewerReport rep;
  rep.matrix = brewer_matrix();
  rep.charpoly = charpoly(rep.matrix);
  rep.charpoly_integrality = coefficient_membership(rep.charpoly);
  rep.obstruction = forced_products_obstruction(rep.matrix, {Cubic(1), Cubic(-1), Cubic(0)});

  const Cubic alpha = Cubic::alpha();
  rep.alternate_poly = Poly<Cubic>(Ring<Cubic>{}, {Cubic(-8) * alpha, -(Cubic(Rational(1, 2)) * alpha), Cubic(1)});
  rep.alternate_annihilates = eval_at_matrix(rep.alternate_poly, rep.matrix).is_zero_matrix();

  const auto& m = rep.obstruction.minimal_poly;
  if (!eval_at_matrix(m, rep.matrix).is_zero_matrix())
    fail(ErrorCode::Internal, "minimal polynomial does not annihilate the matrix");
  if (!divides(m, rep.charpoly)) fail(ErrorCode::Internal, "minimal polynomial does not divide charpoly");
  if (rep.obstruction.integrality[1].in_subring)
    fail(ErrorCode::Internal, "linear coefficient of the minimal polynomial lies in Z[alpha]");
  for (const auto& c : rep.charpoly_integrality)
    if (!c.in_subring) fail(ErrorCode::Internal, "charpoly coefficient outside Z[alpha]");
  if (rep.obstruction.verdict != ObstructionVerdict::Obstructed)
    fail(ErrorCode::Internal, "expected an obstruction for diagonal (1, -1, 0)");
  return rep;
}

}  // namespace simcert
