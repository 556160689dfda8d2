#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "frobgen/cli.hpp"
#include "frobgen/error.hpp"
#include "frobgen/generators.hpp"
#include "frobgen/module_file.hpp"

using namespace frobgen;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(FROBGEN_DATA_DIR) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("cyclic2 prints the C_8 polynomial verbatim") {
  const auto r = run({"cyclic2", "-p", "5", "-m", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(first_line(r.out) == c8f5_printed_polynomial());
  CHECK(r.out.find("# cyclic_vector: e_1") != std::string::npos);
  CHECK(r.err.empty());

  const auto m = run({"cyclic2", "-p", "5", "-m", "3", "--matrices"});
  CHECK(m.out.find("[[s^3 + s*t^2, s^2*t + 4*t^3]; [3*s^2*t + 2*t^3, s^3 + s*t^2]]") != std::string::npos);
  CHECK(m.out.find("[[1, s^3 + s*t^2]; [0, 3*s^2*t + 2*t^3]]") != std::string::npos);
}

TEST_CASE("cyclic2 case reports") {
  CHECK(first_line(run({"cyclic2", "-p", "17", "-m", "3"}).out) == "Y^8 - t");
  const auto minus = run({"cyclic2", "-p", "7", "-m", "3", "--output", "json"});
  CHECK(minus.code == cli::kOk);
  const auto doc = Json::parse(minus.out);
  CHECK(doc["case"] == "minus-one");
  CHECK(doc["polynomial"].is_null());
  const auto text = run({"cyclic2", "-p", "3", "-m", "2"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.rfind("existence-only", 0) == 0);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands{
      {"cyclic2", "-p", "5", "-m", "3", "--output", "json"},
      {"cyclic2", "-p", "11", "-m", "3"},
      {"sln", "-q", "3", "-n", "3"},
      {"galois", "--module", data("c8f5.mod"), "--xi", "s=1,t=2"},
      {"lambda-star", "--group", "torus", "-p", "3", "-n", "2"},
      {"--seed", "7", "ls-fiber", "--module", data("q8.mod"), "--target",
       "[[1,1,0,0];[0,1,0,1];[0,0,1,1];[0,0,0,1]]", "--m", "4"}};
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    CAPTURE(c[0]);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("structured polynomials re-parse to equal objects") {
  const auto doc = Json::parse(run({"cyclic2", "-p", "5", "-m", "3", "--output", "json"}).out);
  CHECK(doc["case"] == "torus");
  CHECK(doc["metadata"]["seed"] == kDefaultSeed);
  CHECK(doc["metadata"]["cyclic_vector"] == "e_1 = [1, 0]");
  const sym::Ring st(5, {"s", "t"});
  const auto f = parse_linearized(doc["polynomial"].get<std::string>(), st, FrobeniusQ{1});
  CHECK(f == *cyclic2_generic_poly(5, 3).f);

  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {5, 2}}) {
    const auto s = Json::parse(run({"sln", "-q", std::to_string(q), "-n", std::to_string(n), "--output", "json"}).out);
    std::vector<std::string> vars = s["params"]["parameters"];
    const sym::Ring ring(static_cast<std::uint32_t>(q), vars);
    const auto g = parse_linearized(s["polynomial"].get<std::string>(), ring, FrobeniusQ{1});
    CHECK(g == sln_generic_poly(static_cast<std::uint32_t>(q), static_cast<unsigned>(n)));
  }
}

TEST_CASE("galois") {
  const auto bad = run({"galois", "--module", data("c8f5.mod"), "--xi", "s=0,t=0"});
  CHECK(bad.code == cli::kMath);
  CHECK(bad.err == "error: singular-matrix: singular specialization\n");
  const auto ok = run({"galois", "--module", data("c8f5.mod"), "--xi", "s=1,t=1"});
  CHECK(ok.code == cli::kOk);
  CHECK(first_line(ok.out) == "splitting_degree: 4");
  CHECK(ok.out.find("rho_order: 4") != std::string::npos);
  const auto ext = run({"galois", "--module", data("c8f5.mod"), "--xi", "s=g,t=1", "--field", "GF(5^2)", "--output",
                        "json"});
  CHECK(ext.code == cli::kOk);
  const auto doc = Json::parse(ext.out);
  CHECK(8 % doc["splitting_degree"].get<int>() == 0);
  CHECK(run({"galois", "--module", data("missing.mod"), "--xi", "s=1,t=1"}).code == cli::kUsage);
  CHECK(run({"galois", "--module", data("c8f5.mod"), "--xi", "s=1"}).code == cli::kUsage);
}

TEST_CASE("verification subcommands") {
  const auto c8 = run({"c8f5-verify"});
  CHECK(c8.code == cli::kOk);
  const auto q8 = run({"q8-verify", "--samples", "2"});
  // The printed triple and polynomial disagree with the computation.
  CHECK(q8.code == cli::kVerification);
  CHECK(q8.out.find("lambda_star match: no") != std::string::npos);
  CHECK(q8.out.find("eliminant disagrees at 0 points") != std::string::npos);
  CHECK(q8.err == "error: verification: q8-verify failed\n");
}

TEST_CASE("ls-fiber and lambda-star") {
  const auto r = run({"ls-fiber", "--module", data("q8.mod"), "--target", "[[1,1,0,0];[0,1,0,1];[0,0,1,1];[0,0,0,1]]",
                      "--m", "4", "--output", "json"});
  CHECK(r.code == cli::kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["fiber_size"] == 8);
  const auto none = run({"ls-fiber", "--module", data("q8.mod"), "--target",
                         "[[1,1,0,0];[0,1,0,1];[0,0,1,1];[0,0,0,1]]", "--m", "2", "--output", "json"});
  CHECK(Json::parse(none.out)["fiber_size"] == 0);
  const auto outside = run({"ls-fiber", "--module", data("q8.mod"), "--target",
                            "[[1,0,0,0];[0,1,1,0];[0,0,1,0];[0,0,0,1]]", "--m", "1"});
  CHECK(outside.code == cli::kUsage);

  const auto l = run({"lambda-star", "--group", "q8"});
  CHECK(l.code == cli::kOk);
  CHECK(l.out.find("u_1 = t_1^2 + t_1") != std::string::npos);
  CHECK(run({"lambda-star", "--group", "torus"}).code == cli::kUsage);
}

TEST_CASE("usage errors and help") {
  const auto none = run({});
  CHECK(none.code == cli::kUsage);
  CHECK(none.err.rfind("error: usage: ", 0) == 0);
  CHECK(run({"cyclic2", "-p", "5"}).code == cli::kUsage);
  CHECK(run({"cyclic2", "-p", "5", "-m", "x"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--output", "xml", "sln", "-q", "2", "-n", "2"}).code == cli::kUsage);
  CHECK(run({"cyclic2", "-p", "4", "-m", "2"}).code == cli::kUsage);
  CHECK(run({"sln", "-q", "2", "-n", "1"}).code == cli::kUsage);
  const auto budget = run({"cyclic2", "-p", "3", "-m", "4"});
  CHECK(budget.code == cli::kMath);
  CHECK(budget.err.rfind("error: budget-exceeded: ", 0) == 0);
  const auto help = run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("cyclic2") != std::string::npos);
  for (const auto& r : {none, budget}) CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("module files") {
  const auto m = load_module_file(data("c8f5.mod"));
  CHECK(m.p == 5);
  CHECK(m.n == 2);
  CHECK(m.vars == std::vector<std::string>{"s", "t"});
  CHECK(parse_module_file(to_module_text(m)).A == m.A);
  CHECK(parse_module_file("p = 2\nq_exponent = 1\nn = 1\nvars = t\nA = [[t]]\n").k == 1);

  const std::string good = "p = 5\nk = 1\nn = 1\nvars = s\nA = [[s]]\n";
  CHECK_NOTHROW(parse_module_file(good));
  CHECK_THROWS_AS(parse_module_file(good + "colour = red\n"), ParseError);
  CHECK_THROWS_AS(parse_module_file(good + "p = 5\n"), ParseError);
  CHECK_THROWS_AS(parse_module_file("p = 5\nk = 1\nn = 1\nvars = s\n"), ParseError);
  CHECK_THROWS_AS(parse_module_file("p = 5\nk = 1\nn = 1\nvars = s\nA = [[s\n"), ParseError);
  CHECK_THROWS_AS(parse_module_file("p = 6\nk = 1\nn = 1\nvars = s\nA = [[s]]\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_module_file("p = 5\nk = 1\nn = 2\nvars = s\nA = [[s]]\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_module_file("p = 5\nk = 1\nn = 1\nvars = s\nA = [[u]]\n"), ParseError);
  try {
    parse_module_file("p = 5\nk = 1\nbogus\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(load_module_file(data("missing.mod")), InvalidArgument);
}

TEST_CASE("installed binary exit codes") {
  const char* bin = std::getenv("FROBGEN_BIN");
  if (bin == nullptr) return;
  auto status = [&](const std::string& args) {
    const std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("cyclic2 -p 5 -m 3") == 0);
  CHECK(status("cyclic2 -p 4 -m 3") == 1);
  CHECK(status("galois --module " + data("c8f5.mod") + " --xi s=0,t=0") == 2);
  CHECK(status("q8-verify --samples 1") == 3);
}
