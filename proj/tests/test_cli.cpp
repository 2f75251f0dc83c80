#include <doctest.h>

#include <sstream>

#include "symorb/cli.hpp"
#include "symorb/scenarios.hpp"

using namespace symorb;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("polynomial arguments") {
  const FieldSpec Q = FieldSpec::rationals();
  CHECK(cli::parse_polynomial_arg("e(3,2)", 5, Q) == elementary_symmetric(5, 3, 2, Q));
  CHECK(cli::parse_polynomial_arg("x1*x2", 2, Q) == parse_polynomial("x1*x2", 2, Q));
  CHECK_THROWS_AS(cli::parse_polynomial_arg("e(6,2)", 5, Q), Error);
}

TEST_CASE("ideal specs") {
  const FieldSpec Q = FieldSpec::rationals();
  auto s5 = cli::parse_ideal_spec("orbit:S5:e(3,2)", 0, Q);
  CHECK(s5.nvars() == 5);
  CHECK(s5.generators().size() == 10);
  auto c4 = cli::parse_ideal_spec("orbit:C4:x1^2;x1*x3", 0, Q);
  CHECK(c4.generators().size() == 6);
  auto gens = cli::parse_ideal_spec("orbit:gens:(1 2):x1^2*x3", 3, Q);
  CHECK(gens.generators().size() == 2);
  auto list = cli::parse_ideal_spec("list:x1 - x2;x2 - x3", 3, Q);
  CHECK(list.generators().size() == 2);
  CHECK_THROWS_AS(cli::parse_ideal_spec("list:x1", 0, Q), Error);
  CHECK_THROWS_AS(cli::parse_ideal_spec("bogus:x1", 2, Q), Error);
  CHECK_THROWS_AS(cli::parse_ideal_spec("orbit:S3:x4", 0, Q), Error);
}

TEST_CASE("membership exit codes") {
  auto no = run({"member", "x1*x2", "--field", "F2", "--ideal", "orbit:S5:e(3,2)"});
  CHECK(no.code == cli::kFalse);
  auto yes = run({"member", "x1^2*x2^2", "--field", "F2", "--ideal", "orbit:S5:e(3,2)"});
  CHECK(yes.code == cli::kTrue);
  auto graded = run({"member", "x1^2*x2^2", "--field", "F2", "--ideal", "orbit:S5:e(3,2)", "--method", "graded"});
  CHECK(graded.code == cli::kTrue);
  CHECK(contains(graded.out, "linear_combination"));
}

TEST_CASE("exit codes do not depend on the output format") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"radical-member", "x1*x2", "--ideal", "orbit:S3:x1^2*x2 + x1*x2^2"},
           {"radical-member", "x1*x2*x3", "--ideal", "orbit:S3:x1^2*x2 + x1*x2^2"},
           {"verify", "elimination", "--n", "3", "--d", "2"},
           {"verify", "witness", "--ideal", "orbit:S3:x1"}}) {
    auto human = run(args);
    auto with_flag = args;
    with_flag.insert(with_flag.end(), {"--format", "machine"});
    auto machine = run(with_flag);
    CHECK(human.code == machine.code);
    CHECK(contains(machine.out, "schema=symorb.verdict/1"));
  }
}

TEST_CASE("machine output is stable") {
  std::vector<std::string> args{"sample-genericity", "--support", "x1^3 + x1*x2*x3", "--group", "S3",
                                "--format",          "machine",   "--probe",         "bad=1,-1"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == cli::kTrue);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "seed=20240601"));
  CHECK(contains(a.out, "probe.0.success=false"));
}

TEST_CASE("elimination") {
  auto q = run({"eliminate", "--n", "3", "--d", "2"});
  CHECK(q.code == cli::kTrue);
  CHECK(contains(q.out, "1,1/2,1"));
  auto f2 = run({"eliminate", "--n", "3", "--d", "2", "--field", "F2"});
  CHECK(f2.code == cli::kUsage);
  CHECK(contains(f2.err, "vanishes in F2"));
}

TEST_CASE("verify claims") {
  CHECK(run({"verify", "squarefree", "--poly", "x1*x2 + x1*x3 + x2*x3", "--N", "5"}).code == cli::kTrue);
  CHECK(run({"verify", "squarefree", "--poly", "x1*x2 - x2*x3", "--N", "5"}).code == cli::kTrue);
  CHECK(run({"verify", "telescoping", "--n", "3", "--d", "2"}).code == cli::kTrue);
  CHECK(run({"verify", "radical-orbit", "--ideal", "orbit:S5:e(3,2)", "--k", "2", "--field", "F3"}).code ==
        cli::kFalse);
  CHECK(run({"verify", "rank-condition", "--poly", "x1^2*x2 + 2*x1*x2^2", "--group", "S3"}).code == cli::kTrue);
  CHECK(run({"verify", "ideal-equal", "--ideal", "orbit:S5:e(3,2)", "--other", "orbit:S5:x1*x2"}).code ==
        cli::kTrue);
  CHECK(run({"verify", "ideal-equal", "--ideal", "orbit:S5:e(3,2)", "--other", "orbit:S5:x1*x2", "--field",
             "F2"})
            .code == cli::kFalse);
  CHECK(run({"verify", "lemma", "--n", "5", "--d", "2", "--a", "1"}).code == cli::kTrue);
  CHECK(run({"verify", "witness", "--ideal", "orbit:S3:x1^2*x2 + x1*x2^2"}).code == cli::kTrue);
  CHECK(run({"verify", "nonsense"}).code == cli::kUsage);
}

TEST_CASE("orbit and gb commands") {
  auto o = run({"orbit", "--ideal", "orbit:S4:e(3,2)"});
  CHECK(o.code == cli::kTrue);
  CHECK(contains(o.out, "generators: 4"));
  auto gb = run({"gb", "--ideal", "orbit:S4:e(3,2)", "--order", "lex"});
  CHECK(gb.code == cli::kTrue);
  CHECK(contains(gb.out, "x2^2*x4"));
}

TEST_CASE("usage and parse errors") {
  auto none = run({});
  CHECK(none.code == cli::kUsage);
  auto bad = run({"member", "x1", "--ideal", "orbit:S3:x1^2 +"});
  CHECK(bad.code == cli::kUsage);
  CHECK(contains(bad.err, "symorb: parse error"));
  CHECK(run({"member", "x1"}).code == cli::kUsage);
  CHECK(run({"member", "x1", "--ideal", "orbit:S3:x1", "--field", "F4"}).code == cli::kUsage);
  CHECK(run({"member", "x1", "--ideal", "orbit:S3:x1", "--order", "deglex"}).code == cli::kUsage);
  CHECK(run({"repro", "no-such-scenario"}).code == cli::kUsage);
}

TEST_CASE("budget exhaustion") {
  auto r = run({"radical-member", "x1", "--ideal", "orbit:S7:x1^3*x2 + x2^2*x3^2 - x1*x4*x5^2 + x6*x7^3",
                "--budget", "3"});
  CHECK(r.code == cli::kBudget);
  CHECK(contains(r.err, "budget"));
}

TEST_CASE("scenario registry") {
  auto list = run({"repro", "--list"});
  CHECK(list.code == cli::kTrue);
  for (const auto& s : scenarios()) CHECK(contains(list.out, s.name));
  CHECK(find_scenario("groebner-e32-s4") != nullptr);
  CHECK(find_scenario("missing") == nullptr);
  for (const auto& s : scenarios()) {
    if (s.slow) continue;
    CAPTURE(s.name);
    CHECK(run({"repro", s.name}).code == cli::kTrue);
  }
}
