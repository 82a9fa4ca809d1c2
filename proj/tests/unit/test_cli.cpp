#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("simcert_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& stdin_text = "") {
  const fs::path in = scratch() / "stdin.txt", err = scratch() / "stderr.txt";
  std::ofstream(in) << stdin_text;
  const std::string cmd = std::string("'") + SIMCERT_CLI + "' " + args + " < '" + in.string() + "' 2> '" +
                          err.string() + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string data(const std::string& name) { return std::string(SIMCERT_TEST_DATA) + "/" + name; }

long long det3(const json& m) {
  auto e = [&](int i, int j) { return std::stoll(m.at("entries")[i][j].get<std::string>()); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

TEST_CASE("prescribe-zsim on diag(0,1,2)") {
  const Run r = run("prescribe-zsim --in '" + data("diag012.json") + "' --gamma=3,0,0");
  REQUIRE(r.code == 0);
  const json c = json::parse(r.out);
  const long long d = det3(c.at("g"));
  CHECK((d == 1 || d == -1));
  CHECK(c.at("B").at("entries")[0][0] == "3");
  CHECK(c.at("B").at("entries")[1][1] == "0");
  CHECK(c.at("B").at("entries")[2][2] == "0");
  CHECK(c.at("verified") == true);

  const Run again = run("prescribe-zsim --gamma=3,0,0", slurp(data("diag012.json")));
  CHECK(again.code == 0);
  CHECK(again.out == r.out);
}

TEST_CASE("decide-2x2 on [[1,2],[-3,-1]]") {
  const Run r = run("decide-2x2 --in '" + data("form_2_2_3.json") + "' --gamma=0,0");
  REQUIRE(r.code == 0);
  const json d = json::parse(r.out);
  CHECK(d.at("verdict") == "NotSimilar");
  bool form = false;
  for (const auto& c : d.at("candidates"))
    if (c.at("form") == json::array({"2", "-2", "3"})) form = true;
  CHECK(form);
}

TEST_CASE("precondition failures exit with 2") {
  const Run two = run("prescribe-zsim --in '" + data("form_2_2_3.json") + "' --gamma=0,0");
  CHECK(two.code == 2);
  CHECK(two.out.empty());
  CHECK(two.err.find("n >= 3") != std::string::npos);

  const Run bad = run("charpoly", "{\"ring\": ");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("arse") != std::string::npos);

  CHECK(run("prescribe-zsim --in '" + data("diag012.json") + "' --gamma=3,3,3").code == 2);
  CHECK(run("prescribe-zsim --in '" + data("diag012.json") + "'").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("decide-2x2 --gamma=0,0 --bound=x", slurp(data("form_2_2_3.json"))).code == 2);
  CHECK(run("charpoly --in /nonexistent/file.json").code == 2);
  CHECK(run("prescribe-field --gamma=1,2", R"({"ring":"Z","n":2,"entries":[[3,0],[0,3]]})").code == 2);
}

TEST_CASE("other subcommands") {
  const Run ideal = run("check-ideal", R"({"ring":"Z","n":2,"entries":[[1,2],[4,3]]})");
  REQUIRE(ideal.code == 0);
  CHECK(json::parse(ideal.out).at("generator") == "2");

  const Run rcf = run("rcf --in '" + data("diag012.json") + "'");
  REQUIRE(rcf.code == 0);
  CHECK(json::parse(rcf.out).at("integral") == true);

  const Run mp = run("minpoly --ring Fp --p 2 --in '" + data("diag012.json") + "'");
  REQUIRE(mp.code == 0);
  CHECK(json::parse(mp.out).at("minpoly").at("coefficients") == json::array({"0", "1", "1"}));

  const Run field = run("prescribe-field --ring Fp --p 3 --gamma=1,1,1 --in '" + data("diag012.json") + "'");
  REQUIRE(field.code == 0);
  CHECK(json::parse(field.out).at("conj_ring") == "Fp");

  const Run ksim = run("prescribe-ksim --gamma=-4,5,2 --in '" + data("diag012.json") + "'");
  REQUIRE(ksim.code == 0);
  CHECK(json::parse(ksim.out).at("B").at("ring") == "Z");

  const fs::path out = scratch() / "out.json";
  const Run file = run("charpoly --out '" + out.string() + "' --in '" + data("diag012.json") + "'");
  CHECK(file.code == 0);
  CHECK(file.out.empty());
  CHECK(json::parse(slurp(out)).at("integral") == true);
}

TEST_CASE("counterexample") {
  const Run r = run("counterexample");
  REQUIRE(r.code == 0);
  const json b = json::parse(r.out);
  CHECK(b.at("verdict") == "Obstructed");
  CHECK(b.at("minimal_poly").at("coefficients")[0] == json::array({"0", "-16", "0"}));
  CHECK(b.at("minimal_poly").at("coefficients")[1] == json::array({"0", "0", "-2"}));
  bool p13 = false, p23 = false;
  for (const auto& p : b.at("forced_products")) {
    if (p.at("name") == "P13" && p.at("value") == json::array({"0", "8", "2"}) && p.at("in_subring") == false)
      p13 = true;
    if (p.at("name") == "P23" && p.at("value") == json::array({"0", "8", "-2"}) && p.at("in_subring") == false)
      p23 = true;
  }
  CHECK(p13);
  CHECK(p23);
  CHECK(run("counterexample").out == r.out);

  const Run zero = run("counterexample --gamma=0:0:0,0:0:0,0:0:0");
  REQUIRE(zero.code == 0);
  CHECK(json::parse(zero.out).at("verdict") == "Inconclusive");

  const Run cyclic =
      run("counterexample --in - --gamma=0,0,0", R"({"ring":"Z","n":3,"entries":[[0,0,1],[1,0,0],[0,1,0]]})");
  CHECK(cyclic.code == 2);
}
