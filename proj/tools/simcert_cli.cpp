// simcert: command-line front end over the C library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "simcert/simcert.h"

namespace {

using json = nlohmann::json;

struct Options {
  std::string in;
  std::string out;
  std::string gamma;
  std::string ring;
  std::int64_t p = 0;
  std::uint64_t seed = 0;
  std::int64_t bound = 1000;
};

struct MatrixDeleter {
  void operator()(simcert_matrix* m) const { simcert_matrix_free(m); }
};
struct ResultDeleter {
  void operator()(simcert_result* r) const { simcert_result_free(r); }
};
using MatrixPtr = std::unique_ptr<simcert_matrix, MatrixDeleter>;
using ResultPtr = std::unique_ptr<simcert_result, ResultDeleter>;

class Failure {
 public:
  Failure(int code, std::string msg) : code_(code), msg_(std::move(msg)) {}
  int code() const { return code_; }
  const std::string& message() const { return msg_; }

 private:
  int code_;
  std::string msg_;
};

[[noreturn]] void raise(simcert_status s) {
  throw Failure(simcert_status_exit_code(s), std::string(simcert_status_name(s)) + ": " + simcert_last_error());
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Failure(2, "cannot open input file " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

MatrixPtr load_matrix(const Options& o) {
  const std::string text = read_input(o.in);
  simcert_matrix* raw = nullptr;
  if (simcert_status s = simcert_matrix_parse(text.c_str(), &raw)) raise(s);
  MatrixPtr m(raw);
  if (!o.ring.empty() && o.ring != simcert_matrix_ring(m.get())) {
    simcert_matrix* conv = nullptr;
    if (simcert_status s = simcert_matrix_convert(m.get(), o.ring.c_str(), o.p, &conv)) raise(s);
    m.reset(conv);
  }
  return m;
}

const char* gamma_arg(const Options& o) {
  if (o.gamma.empty()) throw Failure(2, "--gamma is required");
  return o.gamma.c_str();
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Failure(2, "cannot open output file " + o.out);
  f << text;
}

// Re-checks the certificate embedded in the output (at `key`, or the whole
// document when key is empty) and refuses to emit it otherwise.
void reverify(const simcert_matrix* a, const std::string& text, const char* key) {
  const json doc = json::parse(text);
  const json* cert = &doc;
  if (key != nullptr) {
    if (!doc.contains(key)) return;
    cert = &doc.at(key);
  }
  int ok = 0;
  if (simcert_status s = simcert_verify_certificate_json(a, cert->dump().c_str(), &ok)) raise(s);
  if (ok != 1) throw Failure(1, "emitted certificate does not verify; refusing to write it");
}

int finish(const Options& o, simcert_status s, simcert_result** raw, const simcert_matrix* a, bool certificate,
           const char* key) {
  ResultPtr r(*raw);
  if (s != SIMCERT_OK && s != SIMCERT_UNDECIDED) raise(s);
  const std::string text = simcert_result_json(r.get());
  if (certificate) reverify(a, text, key);
  write_output(o, text);
  if (s == SIMCERT_UNDECIDED) std::cerr << "undecided: " << simcert_last_error() << "\n";
  return simcert_status_exit_code(s);
}

int run_command(const std::string& cmd, const Options& o) {
  simcert_result* r = nullptr;
  if (cmd == "counterexample") {
    if (o.in.empty()) {
      const simcert_status s = simcert_counterexample(nullptr, o.gamma.empty() ? nullptr : o.gamma.c_str(), &r);
      return finish(o, s, &r, nullptr, false, nullptr);
    }
    MatrixPtr a = load_matrix(o);
    const simcert_status s = simcert_counterexample(a.get(), o.gamma.empty() ? nullptr : o.gamma.c_str(), &r);
    return finish(o, s, &r, a.get(), false, nullptr);
  }

  MatrixPtr a = load_matrix(o);
  if (cmd == "prescribe-field")
    return finish(o, simcert_prescribe_field(a.get(), gamma_arg(o), &r), &r, a.get(), true, nullptr);
  if (cmd == "prescribe-ksim")
    return finish(o, simcert_prescribe_ksim(a.get(), gamma_arg(o), o.seed, &r), &r, a.get(), true, nullptr);
  if (cmd == "prescribe-zsim")
    return finish(o, simcert_prescribe_zsim(a.get(), gamma_arg(o), o.seed, &r), &r, a.get(), true, nullptr);
  if (cmd == "check-ideal") return finish(o, simcert_check_ideal(a.get(), &r), &r, a.get(), false, nullptr);
  if (cmd == "rcf") return finish(o, simcert_rcf(a.get(), o.seed, &r), &r, a.get(), true, "transform");
  if (cmd == "charpoly") return finish(o, simcert_charpoly(a.get(), &r), &r, a.get(), false, nullptr);
  if (cmd == "minpoly") return finish(o, simcert_minpoly(a.get(), &r), &r, a.get(), false, nullptr);
  if (cmd == "decide-2x2")
    return finish(o, simcert_decide_2x2(a.get(), gamma_arg(o), o.bound, &r), &r, a.get(), true, "certificate");
  throw Failure(2, "unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact similarity certificates with a prescribed diagonal"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
    bool gamma, seed, bound, ring;
  };
  const Spec specs[] = {
      {"prescribe-field", "conjugate over a field to the target diagonal", true, false, false, true},
      {"prescribe-ksim", "rational conjugation of an integer matrix to an integer matrix", true, true, false, false},
      {"prescribe-zsim", "unimodular conjugation of an integer matrix (n >= 3)", true, true, false, false},
      {"check-ideal", "nonscalarity ideal of an integer matrix", false, false, false, false},
      {"rcf", "rational canonical form with transform", false, true, false, true},
      {"charpoly", "characteristic polynomial", false, false, false, true},
      {"minpoly", "minimal polynomial", false, false, false, true},
      {"decide-2x2", "decide unimodular similarity to the target diagonal for 2x2 integer matrices", true, false,
       true, false},
      {"counterexample", "forced-product obstruction over Z[cbrt(16)]", true, false, false, false},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--in", o.in, std::string("input matrix JSON (default: stdin)") +
                                      (std::string(s.name) == "counterexample" ? "; omit for the built-in example"
                                                                               : ""));
    sub->add_option("--out", o.out, "output path (default: stdout)");
    if (s.gamma) sub->add_option("--gamma", o.gamma, "comma-separated target diagonal, e.g. --gamma=3,0,-3");
    if (s.seed) sub->add_option("--seed", o.seed, "seed for randomized fallbacks")->capture_default_str();
    if (s.bound) sub->add_option("--bound", o.bound, "search bound for indefinite forms")->capture_default_str();
    if (s.ring) {
      sub->add_option("--ring", o.ring, "convert the input to this ring first (Q, Fp, Qbeta)");
      sub->add_option("--p", o.p, "prime for --ring Fp");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run_command(app.get_subcommands().front()->get_name(), o);
  } catch (const Failure& f) {
    std::cerr << "simcert: " << f.message() << "\n";
    return f.code();
  } catch (const json::exception& e) {
    std::cerr << "simcert: malformed output: " << e.what() << "\n";
    return 1;
  }
}
