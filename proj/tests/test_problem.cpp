#include <gtest/gtest.h>

#include "polyconj/problem.hpp"
#include "test_util.hpp"

using namespace polyconj;
using namespace polyconj::testing;

namespace {

const char* kObjects = R"("objects": {
    "A": {"matrix": [["2"]]},
    "F": {"mapping": {"linear": "A"}},
    "P": {"polyhedron": {"dim": 1, "A": [["1"], ["-1"]], "b": ["1", "0"]}},
    "f": {"plfunction": {"n": 1, "pieces": [{"c": ["1"], "d": "0"}, {"c": ["-1"], "d": "0"}]}},
    "E": {"mapping": {"epigraph_of": "f"}}
  })";

ProblemFile problem(const std::string& tasks) {
  return parse_problem_text(std::string("{\"version\": \"1\", ") + kObjects + ", \"tasks\": [" + tasks + "]}");
}

std::string input_error(const std::string& text) {
  try {
    parse_problem_text(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Problem, ObjectsResolve) {
  const ProblemFile pf = problem("");
  EXPECT_TRUE(equal(std::get<PolyMap>(pf.objects.at("F")).graph(), from_linear(Mat::from_ints({{2}})).graph()));
  EXPECT_TRUE(equal(std::get<PolyMap>(pf.objects.at("E")).graph(), epi_mapping(abs_fn()).graph()));
  EXPECT_TRUE(equal(std::get<Polyhedron>(pf.objects.at("P")), interval(0, 1)));
}

TEST(Problem, SupportTaskCarriesCertificate) {
  const RunReport rep = run_problem(problem(R"({"op": "support", "set": "P", "v": ["3"]})"));
  ASSERT_EQ(rep.tasks.size(), 1u);
  const io::Json& r = rep.tasks[0].result.result;
  EXPECT_EQ(r["value"], "3");
  EXPECT_EQ(r["maximizer"], io::Json::array({"1"}));
  EXPECT_TRUE(r.contains("multipliers"));
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Problem, LinearConjugateValues) {
  const RunReport rep = run_problem(problem(R"({"op": "conjugate", "map": "F", "xstar": ["-2"], "ystar": ["1"]},
                                               {"op": "conjugate", "map": "F", "xstar": ["1"], "ystar": ["0"]})"));
  EXPECT_EQ(rep.tasks[0].result.result["value"], "0");
  EXPECT_EQ(rep.tasks[1].result.result["value"], "+inf");
  EXPECT_TRUE(rep.tasks[1].result.result.contains("ray"));
}

TEST(Problem, OpFilterKeepsIndices) {
  const ProblemFile pf = problem(R"({"op": "support", "set": "P", "v": ["1"]},
                                    {"op": "conjugate", "function": "f", "xstar": ["1/2"]},
                                    {"op": "support", "set": "P", "v": ["-1"]})");
  const RunReport rep = run_problem(pf, {"support"});
  ASSERT_EQ(rep.tasks.size(), 2u);
  EXPECT_EQ(rep.tasks[0].index, 0u);
  EXPECT_EQ(rep.tasks[1].index, 2u);
  EXPECT_EQ(rep.tasks[1].result.result["value"], "0");
}

TEST(Problem, ParallelMatchesSerial) {
  const ProblemFile pf = problem(R"({"op": "sumrule", "kind": "conjugate", "maps": ["F", "F"], "u": ["-4"], "v": ["1"]},
                                    {"op": "chainrule", "kind": "linear", "function": "f", "matrix": "A", "xstar": ["1"], "xbar": ["0"]},
                                    {"op": "subdiff", "function": "f", "xbar": ["0"]},
                                    {"op": "coderivative", "map": "E", "xbar": ["0"], "ybar": ["0"], "ystar": ["1"]})");
  EXPECT_EQ(to_json(run_problem(pf)).dump(), to_json(run_problem(pf, {}, 3)).dump());
}

TEST(Problem, DisjointSumRuleNotApplicable) {
  const ProblemFile pf = parse_problem_text(R"({"version": "1", "objects": {
      "F1": {"mapping": {"n": 1, "p": 1, "graph": {"dim": 2, "A": [["1", "0"]], "b": ["0"]}}},
      "F2": {"mapping": {"n": 1, "p": 1, "graph": {"dim": 2, "A": [["-1", "0"]], "b": ["-1"]}}}},
    "tasks": [{"op": "sumrule", "kind": "conjugate", "maps": ["F1", "F2"], "u": ["0"], "v": ["1"]}]})");
  const RunReport rep = run_problem(pf);
  const io::Json& r = rep.tasks[0].result.result;
  EXPECT_EQ(r["lhs"], "-inf");
  EXPECT_EQ(r["rhs"], "+inf");
  EXPECT_EQ(r["applicable"], false);
  EXPECT_FALSE(rep.tasks[0].result.check->applicable);
  EXPECT_TRUE(rep.tasks[0].result.check->passed);
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Problem, FailedCheckGivesExitTwo) {
  RunReport rep;
  rep.tasks.push_back({0, "sumrule", {io::Json::object(), Check{true, false}}});
  EXPECT_EQ(rep.exit_code(), 2);
  EXPECT_EQ(to_json(rep)["summary"]["failed"], 1);
}

TEST(Problem, InputErrors) {
  EXPECT_NE(input_error("{\"version\": \"1\", ").find("line 1"), std::string::npos);
  EXPECT_NE(input_error(R"({"version": "2", "objects": {}, "tasks": []})").find("version"), std::string::npos);
  EXPECT_NE(input_error(R"({"version": "1", "objects": {"G": {"mapping": {"linear": "A"}}, "A": {"matrix": [["1"]]}}, "tasks": []})")
                .find("unknown object \"A\""),
            std::string::npos);
  EXPECT_NE(input_error(R"({"version": "1", "objects": {"X": {"cone": {}}}, "tasks": []})").find("unknown object kind"),
            std::string::npos);
  EXPECT_THROW(problem(R"({"op": "support", "set": "F", "v": ["1"]})"), InputError);
  EXPECT_THROW(problem(R"({"op": "support", "set": "P", "v": ["1", "2"]})"), InputError);
  EXPECT_THROW(problem(R"({"op": "frobnicate"})"), InputError);
  EXPECT_THROW(problem(R"({"op": "coderivative", "map": "F", "xbar": ["1"], "ybar": ["3"], "ystar": ["1"]})"), InputError);
  EXPECT_THROW(problem(R"({"op": "sumrule", "kind": "linear", "maps": ["F", "F"]})"), InputError);
  const std::string msg = input_error(std::string("{\"version\": \"1\", ") + kObjects +
                                      R"(, "tasks": [{"op": "support", "set": "P", "v": ["1"]},
                                                     {"op": "project", "set": "P", "keep": ["x"]}]})");
  EXPECT_NE(msg.find("task 1 (project)"), std::string::npos) << msg;
}

TEST(Problem, RuntimePreconditionNamesTask) {
  const ProblemFile pf = problem(R"({"op": "support", "set": "P", "v": ["1"]},
                                    {"op": "project", "set": "P", "keep": [4]})");
  try {
    run_problem(pf);
    FAIL() << "expected an InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("task 1 (project)"), std::string::npos) << e.what();
  }
}
