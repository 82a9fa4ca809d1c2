#include "simcert/json_io.hpp"

#include <string>

namespace simcert {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string scalar_string(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(ErrorCode::Parse, "scalar must be a string or an integer, got " + j.dump());
}

template <class T>
json encode_matrix_impl(const Matrix<T>& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "only square matrices are encoded");
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode_scalar(m(i, j)));
    entries.push_back(std::move(row));
  }
  json out = {{"ring", ring_tag_name(Ring<T>::tag)}, {"n", m.rows()}, {"entries", std::move(entries)}};
  if constexpr (std::is_same_v<T, Fp>) out["p"] = m.ring().p;
  return out;
}

template <class T>
Matrix<T> decode_entries(const json& j, const Ring<T>& ring, std::size_t max_dimension) {
  const json& n_json = require(j, "n");
  if (!n_json.is_number_integer() || n_json.get<long long>() < 1)
    fail(ErrorCode::Parse, "'n' must be a positive integer");
  const auto n = static_cast<std::size_t>(n_json.get<long long>());
  if (n > max_dimension)
    fail(ErrorCode::InvalidArgument, "dimension " + std::to_string(n) + " exceeds the cap " +
                                         std::to_string(max_dimension));
  const json& entries = require(j, "entries");
  if (!entries.is_array() || entries.size() != n) fail(ErrorCode::Parse, "'entries' must have n rows");
  Matrix<T> m(n, n, ring);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = entries[r];
    if (!row.is_array() || row.size() != n) fail(ErrorCode::Parse, "each row must have n entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = decode_scalar(ring, row[c]);
  }
  return m;
}

template <class T>
json encode_poly_impl(const Poly<T>& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(encode_scalar(c));
  json out = {{"ring", ring_tag_name(Ring<T>::tag)}, {"coefficients", std::move(coeffs)}};
  if constexpr (std::is_same_v<T, Fp>) out["p"] = f.ring().p;
  return out;
}

template <class T>
json encode_step(const ElementaryConj<T>& e) {
  using Kind = typename ElementaryConj<T>::Kind;
  switch (e.kind) {
    case Kind::Transvection:
      return {{"kind", "transvection"}, {"i", e.i}, {"j", e.j}, {"t", encode_scalar(e.t)}};
    case Kind::Permutation: return {{"kind", "permutation"}, {"perm", e.perm}};
    case Kind::DiagonalUnit: {
      json units = json::array();
      for (const auto& u : e.units) units.push_back(encode_scalar(u));
      return {{"kind", "diagonal"}, {"units", std::move(units)}};
    }
  }
  return {};
}

template <class T>
json encode_certificate_impl(const SimilarityCertificate<T>& c) {
  json out;
  out["g"] = encode_matrix(c.g);
  out["g_inv"] = encode_matrix(c.g_inv);
  if constexpr (std::is_same_v<T, Rational>) {
    if (c.entry_ring == RingTag::Z) {
      const auto b = to_integer(c.B);
      if (!b) fail(ErrorCode::Internal, "certificate claims integer entries but B is not integral");
      out["B"] = encode_matrix(*b);
    } else {
      out["B"] = encode_matrix(c.B);
    }
  } else {
    out["B"] = encode_matrix(c.B);
  }
  out["conj_ring"] = ring_tag_name(c.conj_ring);
  out["entry_ring"] = ring_tag_name(c.entry_ring);
  out["verified"] = c.verified;
  if (c.steps) {
    json steps = json::array();
    for (const auto& s : *c.steps) steps.push_back(encode_step(s));
    out["steps"] = std::move(steps);
  }
  return out;
}

template <class T>
json encode_frobenius_impl(const FrobeniusForm<T>& f) {
  json blocks = json::array();
  for (const auto& b : f.blocks) blocks.push_back(encode_poly(b));
  return {{"blocks", std::move(blocks)},
          {"rcf", encode_matrix(f.rcf)},
          {"transform", encode_certificate(f.transform)}};
}

template <class T>
Vec<T> parse_gamma_impl(const Ring<T>& ring, std::string_view csv) {
  Vec<T> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    const std::string_view token = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
    if (token.empty()) fail(ErrorCode::Parse, "empty element in target list");
    out.push_back(scalar_from_text(ring, token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
Matrix<T> certificate_matrix(const json& j, const Ring<T>& ring) {
  AnyMatrix any = decode_matrix(j);
  if (ring_of(any) == Ring<T>::tag) return std::get<Matrix<T>>(any);
  AnyMatrix converted = convert_ring(any, Ring<T>::tag);
  (void)ring;
  return std::get<Matrix<T>>(converted);
}

template <class T>
bool verify_json_impl(const Matrix<T>& a, const json& cert) {
  SimilarityCertificate<T> c;
  c.g = certificate_matrix(require(cert, "g"), a.ring());
  c.g_inv = certificate_matrix(require(cert, "g_inv"), a.ring());
  c.B = certificate_matrix(require(cert, "B"), a.ring());
  c.conj_ring = parse_ring_tag(require(cert, "conj_ring").get<std::string>());
  c.entry_ring = parse_ring_tag(require(cert, "entry_ring").get<std::string>());
  if constexpr (std::is_same_v<T, Fp>) {
    if (c.g.ring() != a.ring() || c.B.ring() != a.ring()) return false;
  }
  return verify_certificate(a, c);
}

}  // namespace

json encode_scalar(const Integer& x) { return format_integer(x); }
json encode_scalar(const Rational& x) { return format_rational(x); }
json encode_scalar(const Fp& x) { return std::to_string(x.residue()); }
json encode_scalar(const Cubic& x) {
  return json::array({format_rational(x.a()), format_rational(x.b()), format_rational(x.c())});
}

Integer decode_scalar(const Ring<Integer>&, const json& j) { return parse_integer(scalar_string(j)); }
Rational decode_scalar(const Ring<Rational>&, const json& j) { return parse_rational(scalar_string(j)); }
Fp decode_scalar(const Ring<Fp>& ring, const json& j) {
  return scalar_from_text(ring, scalar_string(j));
}
Cubic decode_scalar(const Ring<Cubic>&, const json& j) {
  if (j.is_array()) {
    if (j.size() != 3) fail(ErrorCode::Parse, "cubic element needs three coordinates");
    return Cubic(parse_rational(scalar_string(j[0])), parse_rational(scalar_string(j[1])),
                 parse_rational(scalar_string(j[2])));
  }
  return Cubic(parse_rational(scalar_string(j)));
}

json encode_matrix(const Matrix<Integer>& m) { return encode_matrix_impl(m); }
json encode_matrix(const Matrix<Rational>& m) { return encode_matrix_impl(m); }
json encode_matrix(const Matrix<Fp>& m) { return encode_matrix_impl(m); }
json encode_matrix(const Matrix<Cubic>& m) { return encode_matrix_impl(m); }
json encode_matrix(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return encode_matrix(x); }, m);
}

AnyMatrix decode_matrix(const json& j, std::size_t max_dimension) {
  if (!j.is_object()) fail(ErrorCode::Parse, "matrix must be a JSON object");
  const json& ring = require(j, "ring");
  if (!ring.is_string()) fail(ErrorCode::Parse, "'ring' must be a string");
  switch (parse_ring_tag(ring.get<std::string>())) {
    case RingTag::Z: return decode_entries(j, Ring<Integer>{}, max_dimension);
    case RingTag::Q: return decode_entries(j, Ring<Rational>{}, max_dimension);
    case RingTag::Fp: {
      const json& p = require(j, "p");
      if (!p.is_number_integer()) fail(ErrorCode::Parse, "'p' must be an integer");
      return decode_entries(j, Ring<Fp>(p.get<std::int64_t>()), max_dimension);
    }
    case RingTag::Qbeta: return decode_entries(j, Ring<Cubic>{}, max_dimension);
    case RingTag::ZAlpha: break;
  }
  fail(ErrorCode::Parse, "matrices over Zalpha are encoded with ring 'Qbeta'");
}

AnyMatrix parse_matrix(std::string_view text, std::size_t max_dimension) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
  return decode_matrix(j, max_dimension);
}

RingTag ring_of(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return Ring<std::decay_t<decltype(x(0, 0))>>::tag; }, m);
}

AnyMatrix convert_ring(const AnyMatrix& m, RingTag to, std::int64_t p) {
  const RingTag from = ring_of(m);
  if (from == to) {
    if (to == RingTag::Fp && p != 0 && std::get<Matrix<Fp>>(m).ring().p != p)
      fail(ErrorCode::InvalidArgument, "matrix is over a different prime field");
    return m;
  }
  if (from == RingTag::Z) {
    const auto& z = std::get<Matrix<Integer>>(m);
    switch (to) {
      case RingTag::Q: return to_rational(z);
      case RingTag::Fp: return reduce_mod(z, Ring<Fp>(p));
      case RingTag::Qbeta:
        return map_matrix(z, Ring<Cubic>{}, [](const Integer& x) { return Cubic(Rational(x)); });
      default: break;
    }
  }
  if (from == RingTag::Q && to == RingTag::Qbeta)
    return map_matrix(std::get<Matrix<Rational>>(m), Ring<Cubic>{},
                      [](const Rational& x) { return Cubic(x); });
  if (from == RingTag::Q && to == RingTag::Z) {
    auto z = to_integer(std::get<Matrix<Rational>>(m));
    if (!z) fail(ErrorCode::InvalidArgument, "matrix has non-integral entries");
    return *z;
  }
  fail(ErrorCode::InvalidArgument, std::string("cannot convert a matrix over ") + ring_tag_name(from) +
                                       " to " + ring_tag_name(to));
}

json encode_poly(const Poly<Integer>& f) { return encode_poly_impl(f); }
json encode_poly(const Poly<Rational>& f) { return encode_poly_impl(f); }
json encode_poly(const Poly<Fp>& f) { return encode_poly_impl(f); }
json encode_poly(const Poly<Cubic>& f) { return encode_poly_impl(f); }

json encode_certificate(const SimilarityCertificate<Integer>& c) { return encode_certificate_impl(c); }
json encode_certificate(const SimilarityCertificate<Rational>& c) { return encode_certificate_impl(c); }
json encode_certificate(const SimilarityCertificate<Fp>& c) { return encode_certificate_impl(c); }
json encode_certificate(const SimilarityCertificate<Cubic>& c) { return encode_certificate_impl(c); }

bool verify_certificate_json(const AnyMatrix& a, const json& cert) {
  const RingTag conj = parse_ring_tag(require(cert, "conj_ring").get<std::string>());
  if (conj == RingTag::ZAlpha) return false;
  std::int64_t p = 0;
  if (conj == RingTag::Fp) p = require(require(cert, "g"), "p").get<std::int64_t>();
  const AnyMatrix promoted = convert_ring(a, conj, p);
  return std::visit([&](const auto& m) { return verify_json_impl(m, cert); }, promoted);
}

json encode_frobenius(const FrobeniusForm<Rational>& f) { return encode_frobenius_impl(f); }
json encode_frobenius(const FrobeniusForm<Fp>& f) { return encode_frobenius_impl(f); }
json encode_frobenius(const FrobeniusForm<Cubic>& f) { return encode_frobenius_impl(f); }

json encode_ideal(const NonscalarityIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(encode_scalar(g));
  return {{"generator", encode_scalar(ideal.generator)},
          {"generators", std::move(gens)},
          {"unit_ideal", ideal.generator == 1},
          {"scalar", sgn(ideal.generator) == 0}};
}

json encode_decision(const Decision2x2& d) {
  json out;
  out["verdict"] = verdict_name(d.verdict);
  out["bound"] = encode_scalar(d.bound);
  out["reason"] = d.reason;
  if (d.certificate) out["certificate"] = encode_certificate(*d.certificate);
  json cands = json::array();
  for (const auto& c : d.candidates) {
    json cj;
    cj["candidate"] = encode_matrix(c.candidate);
    cj["lattice_rank"] = c.lattice_rank;
    cj["outcome"] = verdict_name(c.outcome);
    cj["reason"] = c.reason;
    if (c.form)
      cj["form"] = json::array({encode_scalar(c.form->a), encode_scalar(c.form->b), encode_scalar(c.form->c)});
    if (c.minimum) cj["minimum"] = encode_scalar(*c.minimum);
    if (c.witness) cj["witness"] = json::array({encode_scalar(c.witness->first), encode_scalar(c.witness->second)});
    cands.push_back(std::move(cj));
  }
  out["candidates"] = std::move(cands);
  return out;
}

namespace {

json encode_checks(const std::vector<CoefficientCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"degree", c.degree}, {"value", encode_scalar(c.value)}, {"in_subring", c.in_subring}});
  return out;
}

}  // namespace

json encode_obstruction(const ObstructionReport& r) {
  json target = json::array();
  for (const auto& g : r.target) target.push_back(encode_scalar(g));
  json products = json::array();
  for (const auto& p : r.forced_products)
    products.push_back({{"name", p.name}, {"value", encode_scalar(p.value)}, {"in_subring", p.in_subring}});
  return {{"minimal_poly", encode_poly(r.minimal_poly)},
          {"target", std::move(target)},
          {"integrality_failures", encode_checks(r.integrality)},
          {"forced_products", std::move(products)},
          {"subring", "Zalpha"},
          {"verdict", obstruction_verdict_name(r.verdict)}};
}

json encode_brewer(const BrewerReport& r) {
  json out = encode_obstruction(r.obstruction);
  out["matrix"] = encode_matrix(r.matrix);
  out["charpoly"] = encode_poly(r.charpoly);
  out["charpoly_integrality"] = encode_checks(r.charpoly_integrality);
  out["alternate_poly"] = encode_poly(r.alternate_poly);
  out["alternate_poly_annihilates"] = r.alternate_annihilates;
  out["note"] =
      "minimal polynomial x^2 - (alpha^2/2) x - 8 alpha, alpha = 2 beta; the linear coefficient "
      "-alpha^2/2 is outside Z[alpha]. The variant x^2 - (alpha/2) x - 8 alpha does not annihilate "
      "the matrix.";
  return out;
}

Vec<Integer> parse_gamma(const Ring<Integer>& ring, std::string_view csv) { return parse_gamma_impl(ring, csv); }
Vec<Rational> parse_gamma(const Ring<Rational>& ring, std::string_view csv) { return parse_gamma_impl(ring, csv); }
Vec<Fp> parse_gamma(const Ring<Fp>& ring, std::string_view csv) { return parse_gamma_impl(ring, csv); }
Vec<Cubic> parse_gamma(const Ring<Cubic>& ring, std::string_view csv) { return parse_gamma_impl(ring, csv); }

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace simcert
