#include "simcert/simcert.h"

#include <exception>
#include <new>
#include <string>

#include "simcert/json_io.hpp"

using namespace simcert;

struct simcert_matrix {
  AnyMatrix m;
};

struct simcert_result {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

simcert_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return SIMCERT_ERR_PARSE;
    case ErrorCode::ScalarMatrix: return SIMCERT_ERR_SCALAR_MATRIX;
    case ErrorCode::TargetTraceMismatch: return SIMCERT_ERR_TRACE_MISMATCH;
    case ErrorCode::IdealNotUnit: return SIMCERT_ERR_IDEAL_NOT_UNIT;
    case ErrorCode::DimensionTooSmall: return SIMCERT_ERR_DIMENSION;
    case ErrorCode::NoUnitOffDiagonal: return SIMCERT_ERR_NO_UNIT;
    case ErrorCode::SearchExhausted:
    case ErrorCode::DecompositionSearchExhausted: return SIMCERT_ERR_SEARCH_EXHAUSTED;
    case ErrorCode::IntegralityViolation: return SIMCERT_ERR_INTEGRALITY;
    case ErrorCode::Internal: return SIMCERT_ERR_INTERNAL;
    default: return SIMCERT_ERR_INVALID_ARGUMENT;
  }
}

simcert_status failure(simcert_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
simcert_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    return failure(status_of(e.code()), std::string(error_code_name(e.code())) + ": " + e.what());
  } catch (const json::exception& e) {
    return failure(SIMCERT_ERR_PARSE, std::string("Parse: ") + e.what());
  } catch (const std::bad_alloc&) {
    return failure(SIMCERT_ERR_INTERNAL, "Internal: out of memory");
  } catch (const std::exception& e) {
    return failure(SIMCERT_ERR_INTERNAL, std::string("Internal: ") + e.what());
  }
}

simcert_status emit(const json& j, simcert_result** out) {
  *out = new simcert_result{dump_canonical(j)};
  return SIMCERT_OK;
}

simcert_status check_args(const void* a, simcert_result** out) {
  if (a == nullptr || out == nullptr) return failure(SIMCERT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return SIMCERT_OK;
}

std::string_view target_text(const char* target) {
  if (target == nullptr) fail(ErrorCode::InvalidArgument, "target diagonal is required");
  return target;
}

template <class T>
simcert_status certified(const Matrix<T>& a, const SimilarityCertificate<T>& cert, json j, simcert_result** out) {
  if (!cert.verified || !verify_certificate(a, cert))
    return failure(SIMCERT_ERR_UNVERIFIED, "certificate failed verification");
  return emit(j, out);
}

template <class T>
bool poly_integral(const Poly<T>& f) {
  if constexpr (std::is_same_v<T, Rational>) {
    for (const auto& c : f.coeffs())
      if (!is_integral(c)) return false;
    return true;
  } else if constexpr (std::is_same_v<T, Cubic>) {
    for (const auto& c : f.coeffs())
      if (!in_z_alpha(c)) return false;
    return true;
  } else {
    return true;
  }
}

const Matrix<Integer>& integer_matrix(const AnyMatrix& m) {
  if (ring_of(m) != RingTag::Z) fail(ErrorCode::InvalidArgument, "an integer matrix (ring Z) is required");
  return std::get<Matrix<Integer>>(m);
}

// Field view of the input: integer matrices are promoted to Q.
AnyMatrix field_matrix(const AnyMatrix& m) {
  return ring_of(m) == RingTag::Z ? convert_ring(m, RingTag::Q) : m;
}

}  // namespace

extern "C" {

int simcert_status_exit_code(simcert_status status) {
  switch (status) {
    case SIMCERT_OK: return 0;
    case SIMCERT_ERR_PARSE:
    case SIMCERT_ERR_INVALID_ARGUMENT:
    case SIMCERT_ERR_SCALAR_MATRIX:
    case SIMCERT_ERR_TRACE_MISMATCH:
    case SIMCERT_ERR_IDEAL_NOT_UNIT:
    case SIMCERT_ERR_DIMENSION:
    case SIMCERT_ERR_NO_UNIT: return 2;
    case SIMCERT_ERR_SEARCH_EXHAUSTED:
    case SIMCERT_UNDECIDED: return 3;
    default: return 1;
  }
}

const char* simcert_status_name(simcert_status status) {
  switch (status) {
    case SIMCERT_OK: return "ok";
    case SIMCERT_ERR_PARSE: return "parse error";
    case SIMCERT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SIMCERT_ERR_SCALAR_MATRIX: return "scalar matrix";
    case SIMCERT_ERR_TRACE_MISMATCH: return "target trace mismatch";
    case SIMCERT_ERR_IDEAL_NOT_UNIT: return "nonscalarity ideal is not the unit ideal";
    case SIMCERT_ERR_DIMENSION: return "dimension too small";
    case SIMCERT_ERR_NO_UNIT: return "no off-diagonal unit";
    case SIMCERT_ERR_SEARCH_EXHAUSTED: return "search exhausted";
    case SIMCERT_UNDECIDED: return "undecided";
    case SIMCERT_ERR_UNVERIFIED: return "unverified certificate";
    case SIMCERT_ERR_INTEGRALITY: return "integrality violation";
    case SIMCERT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* simcert_last_error(void) { return g_last_error.c_str(); }

simcert_status simcert_matrix_parse(const char* json_text, simcert_matrix** out) {
  if (json_text == nullptr || out == nullptr) return failure(SIMCERT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new simcert_matrix{parse_matrix(json_text)};
    return SIMCERT_OK;
  });
}

void simcert_matrix_free(simcert_matrix* m) { delete m; }

simcert_status simcert_matrix_convert(const simcert_matrix* m, const char* ring, int64_t p, simcert_matrix** out) {
  if (m == nullptr || ring == nullptr || out == nullptr)
    return failure(SIMCERT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new simcert_matrix{convert_ring(m->m, parse_ring_tag(ring), p)};
    return SIMCERT_OK;
  });
}

size_t simcert_matrix_dim(const simcert_matrix* m) {
  if (m == nullptr) return 0;
  return std::visit([](const auto& x) { return x.rows(); }, m->m);
}

const char* simcert_matrix_ring(const simcert_matrix* m) {
  if (m == nullptr) return "";
  return ring_tag_name(ring_of(m->m));
}

simcert_status simcert_matrix_json(const simcert_matrix* m, simcert_result** out) {
  if (auto s = check_args(m, out)) return s;
  return guarded([&] { return emit(encode_matrix(m->m), out); });
}

simcert_status simcert_prescribe_field(const simcert_matrix* a, const char* target, simcert_result** out) {
  if (auto s = check_args(a, out)) return s;
  return guarded([&] {
    const AnyMatrix f = field_matrix(a->m);
    return std::visit(
        [&](const auto& m) -> simcert_status {
          using T = std::decay_t<decltype(m(0, 0))>;
          if constexpr (FieldScalar<T>) {
            const Vec<T> gamma = parse_gamma(m.ring(), target_text(target));
            const SimilarityCertificate<T> cert = fillmore_field(m, gamma);
            return certified(m, cert, encode_certificate(cert), out);
          } else {
            fail(ErrorCode::InvalidArgument, "field matrix required");
          }
        },
        f);
  });
}

simcert_status simcert_prescribe_ksim(const simcert_matrix* a, const char* target, uint64_t seed,
                                      simcert_result** out) {
  if (auto s = check_args(a, out)) return s;
  return guarded([&] {
    const Matrix<Integer>& m = integer_matrix(a->m);
    const Vec<Integer> gamma = parse_gamma(m.ring(), target_text(target));
    const SimilarityCertificate<Rational> cert = prescribe_ksim_integral(m, gamma, seed);
    return certified(to_rational(m), cert, encode_certificate(cert), out);
  });
}

simcert_status simcert_prescribe_zsim(const simcert_matrix* a, const char* target, uint64_t seed,
                                      simcert_result** out) {
  if (auto s = check_args(a, out)) return s;
  return guarded([&] {
    const Matrix<Integer>& m = integer_matrix(a->m);
    const Vec<Integer> gamma = parse_gamma(m.ring(), target_text(target));
    const SimilarityCertificate<Integer> cert = prescribe_zsim(m, gamma, seed);
    return certified(m, cert, encode_certificate(cert), out);
  });
}

simcert_status simcert_check_ideal(const simcert_matrix* a, simcert_result** out) {
  if (auto s = check_args(a, out)) return s;
  return guarded([&] { return emit(encode_ideal(nonscalarity_ideal(integer_matrix(a->m))), out); });
}

simcert_status simcert_rcf(const simcert_matrix* a, uint64_t seed, simcert_result** out) {
  if (auto s = check_args(a, out)) return s;
  return guarded([&] {
    const AnyMatrix f = field_matrix(a->m);
    const bool from_integer = ring_of(a->m) == RingTag::Z;
    return std::visit(
        [&](const auto& m) -> simcert_status {
          using T = std::decay_t<decltype(m(0, 0))>;
          if constexpr (FieldScalar<T>) {
            const FrobeniusForm<T> form = frobenius_form(m, seed);
            json j = encode_frobenius(form);
            bool integral = true;
            for (const auto& b : form.blocks) integral = integral && poly_integral(b);
            j["integral"] = integral;
            if (from_integer && !integral)
              fail(ErrorCode::IntegralityViolation, "invariant factor of an integer matrix is not integral");
            return certified(m, form.transform, std::move(j), out);
          } else {
            fail(ErrorCode::InvalidArgument, "field matrix required");
          }
        },
        f);
  });
}

simcert_status simcert_charpoly(const simcert_matrix* a, simcert_result** out) {
  if (auto s = check_args(a, out)) return s;
  return guarded([&] {
    return std::visit(
        [&](const auto& m) {
          const auto f = charpoly(m);
          return emit({{"charpoly", encode_poly(f)}, {"integral", poly_integral(f)}}, out);
        },
        a->m);
  });
}

simcert_status simcert_minpoly(const simcert_matrix* a, simcert_result** out) {
  if (auto s = check_args(a, out)) return s;
  return guarded([&] {
    const AnyMatrix f = field_matrix(a->m);
    return std::visit(
        [&](const auto& m) -> simcert_status {
          using T = std::decay_t<decltype(m(0, 0))>;
          if constexpr (FieldScalar<T>) {
            const Poly<T> mp = minpoly(m);
            if (!eval_at_matrix(mp, m).is_zero_matrix())
              fail(ErrorCode::Internal, "minimal polynomial does not annihilate the matrix");
            return emit({{"minpoly", encode_poly(mp)}, {"integral", poly_integral(mp)}}, out);
          } else {
            fail(ErrorCode::InvalidArgument, "field matrix required");
          }
        },
        f);
  });
}

simcert_status simcert_decide_2x2(const simcert_matrix* a, const char* target, int64_t bound,
                                  simcert_result** out) {
  if (auto s = check_args(a, out)) return s;
  return guarded([&] {
    const Matrix<Integer>& m = integer_matrix(a->m);
    if (bound < 0) fail(ErrorCode::InvalidArgument, "bound must be non-negative");
    const Vec<Integer> gamma = parse_gamma(m.ring(), target_text(target));
    const Decision2x2 d = decide_2x2(m, gamma, Integer(static_cast<long>(bound)));
    if (d.certificate && !(d.certificate->verified && verify_certificate(m, *d.certificate)))
      return failure(SIMCERT_ERR_UNVERIFIED, "certificate failed verification");
    emit(encode_decision(d), out);
    if (d.verdict == Verdict::Unknown) {
      g_last_error = "undecided within the search bound";
      return SIMCERT_UNDECIDED;
    }
    return SIMCERT_OK;
  });
}

simcert_status simcert_counterexample(const simcert_matrix* a, const char* target, simcert_result** out) {
  if (out == nullptr) return failure(SIMCERT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (a == nullptr && target == nullptr) return emit(encode_brewer(brewer_obstruction_report()), out);
    const Matrix<Cubic> m = a == nullptr ? brewer_matrix()
                                         : std::get<Matrix<Cubic>>(convert_ring(a->m, RingTag::Qbeta));
    const Vec<Cubic> gamma =
        target == nullptr ? Vec<Cubic>{Cubic(1), Cubic(-1), Cubic(0)} : parse_gamma(m.ring(), target);
    return emit(encode_obstruction(forced_products_obstruction(m, gamma)), out);
  });
}

simcert_status simcert_verify_certificate_json(const simcert_matrix* a, const char* certificate_json, int* ok) {
  if (a == nullptr || certificate_json == nullptr || ok == nullptr)
    return failure(SIMCERT_ERR_INVALID_ARGUMENT, "null argument");
  *ok = 0;
  return guarded([&] {
    json j;
    try {
      j = json::parse(certificate_json);
    } catch (const json::exception& e) {
      fail(ErrorCode::Parse, std::string("malformed certificate JSON: ") + e.what());
    }
    *ok = verify_certificate_json(a->m, j) ? 1 : 0;
    return SIMCERT_OK;
  });
}

const char* simcert_result_json(const simcert_result* r) { return r == nullptr ? "" : r->text.c_str(); }

void simcert_result_free(simcert_result* r) { delete r; }

}  // extern "C"
