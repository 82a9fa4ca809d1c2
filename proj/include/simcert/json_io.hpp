#pragma once

// JSON encodings of scalars, matrices, polynomials, certificates and reports.
//
// Scalars: integers as decimal strings, rationals as "p/q" (or "p"), F_p
// elements as residue strings, Q(beta) elements as arrays of three rational
// strings in beta-coordinates. Matrices:
//   {"ring": "Z"|"Q"|"Fp"|"Qbeta", "p": <prime, Fp only>, "n": n, "entries": [[...], ...]}
// Polynomials: {"ring": ..., "coefficients": [...]} lowest degree first.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "simcert/canonical.hpp"
#include "simcert/counterexample.hpp"
#include "simcert/matrix.hpp"
#include "simcert/prescribe.hpp"
#include "simcert/similarity.hpp"

namespace simcert {

using json = nlohmann::json;
using AnyMatrix = std::variant<Matrix<Integer>, Matrix<Rational>, Matrix<Fp>, Matrix<Cubic>>;

inline constexpr std::size_t kDefaultMaxDimension = 64;

json encode_scalar(const Integer& x);
json encode_scalar(const Rational& x);
json encode_scalar(const Fp& x);
json encode_scalar(const Cubic& x);

Integer decode_scalar(const Ring<Integer>& ring, const json& j);
Rational decode_scalar(const Ring<Rational>& ring, const json& j);
Fp decode_scalar(const Ring<Fp>& ring, const json& j);
Cubic decode_scalar(const Ring<Cubic>& ring, const json& j);

json encode_matrix(const Matrix<Integer>& m);
json encode_matrix(const Matrix<Rational>& m);
json encode_matrix(const Matrix<Fp>& m);
json encode_matrix(const Matrix<Cubic>& m);
json encode_matrix(const AnyMatrix& m);

AnyMatrix decode_matrix(const json& j, std::size_t max_dimension = kDefaultMaxDimension);
AnyMatrix parse_matrix(std::string_view text, std::size_t max_dimension = kDefaultMaxDimension);

RingTag ring_of(const AnyMatrix& m);

/// Z -> Q, Z -> F_p, Z -> Q(beta), Q -> Q(beta), or identity.
AnyMatrix convert_ring(const AnyMatrix& m, RingTag to, std::int64_t p = 0);

json encode_poly(const Poly<Integer>& f);
json encode_poly(const Poly<Rational>& f);
json encode_poly(const Poly<Fp>& f);
json encode_poly(const Poly<Cubic>& f);

json encode_certificate(const SimilarityCertificate<Integer>& c);
json encode_certificate(const SimilarityCertificate<Rational>& c);
json encode_certificate(const SimilarityCertificate<Fp>& c);
json encode_certificate(const SimilarityCertificate<Cubic>& c);

/// Re-parses a certificate and checks it against A (promoted to the
/// certificate's conjugation ring when A is an integer matrix).
bool verify_certificate_json(const AnyMatrix& a, const json& cert);

json encode_frobenius(const FrobeniusForm<Rational>& f);
json encode_frobenius(const FrobeniusForm<Fp>& f);
json encode_frobenius(const FrobeniusForm<Cubic>& f);

json encode_ideal(const NonscalarityIdeal& ideal);
json encode_decision(const Decision2x2& d);
json encode_obstruction(const ObstructionReport& r);
json encode_brewer(const BrewerReport& r);

/// Comma-separated ring elements ("3,0,-3", "1/2,1/2", "0:1:0,0:-1:0").
Vec<Integer> parse_gamma(const Ring<Integer>& ring, std::string_view csv);
Vec<Rational> parse_gamma(const Ring<Rational>& ring, std::string_view csv);
Vec<Fp> parse_gamma(const Ring<Fp>& ring, std::string_view csv);
Vec<Cubic> parse_gamma(const Ring<Cubic>& ring, std::string_view csv);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const json& j);

}  // namespace simcert
