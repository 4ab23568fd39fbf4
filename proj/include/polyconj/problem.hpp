#pragma once

// Problem files: named objects plus an ordered task list, and the report
// produced by running them.
//
//   {"version": "1",
//    "objects": {"P": {"polyhedron": {...}}, "A": {"matrix": [[...]]},
//                "F": {"mapping": {...}}, "L": {"mapping": {"linear": "A"}},
//                "f": {"plfunction": {...}}, "E": {"mapping": {"epigraph_of": "f"}}},
//    "tasks": [{"op": "support", "set": "P", "v": ["1", "0"]}, ...]}
//
// Objects may refer to objects defined before them.

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "polyconj/calculus.hpp"
#include "polyconj/io.hpp"
#include "polyconj/mapping.hpp"
#include "polyconj/oracle.hpp"
#include "polyconj/plfunc.hpp"
#include "polyconj/polyhedron.hpp"
#include "polyconj/support.hpp"

namespace polyconj {

using Object = std::variant<Polyhedron, PolyMap, PLFunction, Mat>;

struct Check {
  bool applicable = false;
  bool passed = false;
};

struct TaskResult {
  io::Json result;
  std::optional<Check> check;
};

struct Task {
  std::size_t index = 0;
  std::string op;
  std::function<TaskResult()> run;
};

struct ProblemFile {
  std::string version;
  std::map<std::string, Object> objects;
  std::vector<Task> tasks;
};

inline const std::vector<std::string>& task_ops() {
  static const std::vector<std::string> ops = {"support", "project", "conjugate", "biconjugate", "coderivative", "subdiff",
                                               "sumrule", "chainrule", "intersect", "qualification"};
  return ops;
}

// ---------------------------------------------------------------------------
// Result serialization.

namespace io {

inline Json to_json(const SupportEval& s) {
  Json j{{"value", to_json(s.value)}};
  if (s.multipliers) j["multipliers"] = to_json(*s.multipliers);
  if (s.maximizer) j["maximizer"] = to_json(*s.maximizer);
  if (s.unbounded_ray) j["ray"] = to_json(*s.unbounded_ray);
  if (s.farkas) j["farkas"] = to_json(*s.farkas);
  return j;
}

inline Json to_json(const Qualification& q) {
  Json j{{"relative_interior", q.relative_interior}};
  if (q.mixed) j["mixed"] = *q.mixed;
  j["nonempty"] = q.nonempty;
  return j;
}

inline Json to_json(const RuleReport& r) {
  Json j{{"kind", polyconj::to_string(r.kind)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)},
         {"equal", r.equal},                    {"inequality_holds", r.inequality_holds}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.witness_value) j["witness_value"] = to_json(*r.witness_value);
  j["reduction"] = to_json(r.reduction);
  j["qualification"] = to_json(r.qualification);
  j["applicable"] = r.applicable;
  return j;
}

inline Json to_json(const IntersectionRuleReport& r) {
  Json j{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal}, {"inequality_holds", r.inequality_holds}};
  if (r.split) j["split"] = Json::array({to_json(r.split->first), to_json(r.split->second)});
  if (r.split_value) j["split_value"] = to_json(*r.split_value);
  j["qualification"] = to_json(r.qualification);
  j["applicable"] = r.applicable;
  return j;
}

inline Json to_json(const CoderivativeRuleReport& r) {
  return Json{{"lhs", to_json(r.lhs)},         {"rhs", to_json(r.rhs)},   {"lhs_in_rhs", r.lhs_in_rhs},
              {"rhs_in_lhs", r.rhs_in_lhs},    {"equal", r.equal},        {"qualification", to_json(r.qualification)}};
}

inline Json to_json(const FunctionSumReport& r) {
  Json j{{"conj_lhs", to_json(r.conj_lhs)}, {"conj_rhs", to_json(r.conj_rhs)}, {"conj_equal", r.conj_equal}};
  if (r.split) j["split"] = Json::array({to_json(r.split->first), to_json(r.split->second)});
  if (r.split_value) j["split_value"] = to_json(*r.split_value);
  j["subdiff_lhs"] = to_json(r.subdiff_lhs);
  j["subdiff_rhs"] = to_json(r.subdiff_rhs);
  j["subdiff_equal"] = r.subdiff_equal;
  return j;
}

inline Json to_json(const LinearChainReport& r) {
  Json j{{"conj_lhs", to_json(r.conj_lhs)}, {"conj_rhs", to_json(r.conj_rhs)}, {"conj_equal", r.conj_equal}};
  if (r.ystar) j["ystar"] = to_json(*r.ystar);
  if (r.witness_value) j["witness_value"] = to_json(*r.witness_value);
  j["subdiff_lhs"] = to_json(r.subdiff_lhs);
  j["subdiff_rhs"] = to_json(r.subdiff_rhs);
  j["subdiff_equal"] = r.subdiff_equal;
  return j;
}

}  // namespace io

// ---------------------------------------------------------------------------
// Parsing.

namespace detail {

inline const char* kind_name(const Object& o) {
  switch (o.index()) {
    case 0: return "polyhedron";
    case 1: return "mapping";
    case 2: return "plfunction";
    default: return "matrix";
  }
}

template <class T>
constexpr const char* kind_name() {
  if constexpr (std::is_same_v<T, Polyhedron>) return "polyhedron";
  else if constexpr (std::is_same_v<T, PolyMap>) return "mapping";
  else if constexpr (std::is_same_v<T, PLFunction>) return "plfunction";
  else return "matrix";
}

class TaskReader {
 public:
  TaskReader(const io::Json& j, const std::map<std::string, Object>& objects, std::string where)
      : j_(j), objects_(objects), where_(std::move(where)) {}

  const std::string& where() const { return where_; }
  bool has(const char* key) const { return j_.contains(key); }

  std::string str(const char* key) const {
    const io::Json& v = io::field(j_, key, where_);
    if (!v.is_string()) throw InputError(where_ + "." + key + ": expected a string");
    return v.get<std::string>();
  }

  Vec vec(const char* key, std::size_t size) const {
    Vec v = io::vec_from_json(io::field(j_, key, where_), where_ + "." + key);
    if (v.size() != size)
      throw InputError(where_ + "." + key + ": has " + std::to_string(v.size()) + " entries, expected " +
                       std::to_string(size));
    return v;
  }

  std::vector<std::size_t> indices(const char* key) const {
    const io::Json& v = io::field(j_, key, where_);
    if (!v.is_array()) throw InputError(where_ + "." + key + ": expected an array");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      out.push_back(io::natural_from_json(v[i], where_ + "." + key + "[" + std::to_string(i) + "]"));
    return out;
  }

  template <class T>
  T object(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) throw InputError(where_ + ": unknown object \"" + name + "\"");
    const T* p = std::get_if<T>(&it->second);
    if (!p)
      throw InputError(where_ + ": object \"" + name + "\" is a " + kind_name(it->second) + ", expected a " +
                       kind_name<T>());
    return *p;
  }

  template <class T>
  T ref(const char* key) const {
    return object<T>(str(key));
  }

  template <class T>
  std::pair<T, T> pair(const char* key) const {
    const io::Json& v = io::field(j_, key, where_);
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      throw InputError(where_ + "." + key + ": expected two object names");
    return {object<T>(v[0].get<std::string>()), object<T>(v[1].get<std::string>())};
  }

  void require(bool ok, const std::string& what) const {
    if (!ok) throw InputError(where_ + ": " + what);
  }

 private:
  const io::Json& j_;
  const std::map<std::string, Object>& objects_;
  std::string where_;
};

inline Object parse_object(const io::Json& j, const std::map<std::string, Object>& defined, const std::string& where) {
  if (!j.is_object() || j.size() != 1) throw InputError(where + ": expected a single-key object");
  const std::string kind = j.begin().key();
  const io::Json& body = j.begin().value();
  const std::string w = where + "." + kind;
  if (kind == "polyhedron") return io::polyhedron_from_json(body, w);
  if (kind == "matrix") return io::matrix_from_json(body, w);
  if (kind == "plfunction") return io::plfunction_from_json(body, w);
  if (kind == "mapping") {
    TaskReader r(body, defined, w);
    if (body.is_object() && body.contains("linear")) {
      const io::Json& lin = body["linear"];
      return from_linear(lin.is_string() ? r.object<Mat>(lin.get<std::string>()) : io::matrix_from_json(lin, w + ".linear"));
    }
    if (body.is_object() && body.contains("epigraph_of")) return epi_mapping(r.ref<PLFunction>("epigraph_of"));
    return io::polymap_from_json(body, w);
  }
  throw InputError(where + ": unknown object kind \"" + kind + "\"");
}

inline Check rule_check(const RuleReport& r) { return {r.applicable, r.passed()}; }

inline bool intersection_passed(const IntersectionRuleReport& r) {
  if (!r.inequality_holds) return false;
  if (!r.applicable) return true;
  if (!r.equal) return false;
  return !r.lhs.finite() || (r.split_value && *r.split_value == r.rhs);
}

inline RuleKind rule_kind(const std::string& s, const std::string& where) {
  if (s == "sum") return RuleKind::Sum;
  if (s == "chain") return RuleKind::Chain;
  if (s == "intersection") return RuleKind::Intersection;
  throw InputError(where + ".kind: expected sum, chain or intersection");
}

/// Validates the task's arguments now and returns the deferred computation.
inline std::function<TaskResult()> parse_task(const std::string& op, const TaskReader& t) {
  using io::Json;
  using io::to_json;

  if (op == "support") {
    const Polyhedron P = t.ref<Polyhedron>("set");
    const Vec v = t.vec("v", P.dim());
    return [P, v] {
      const SupportEval s = support_eval(P, v);
      return TaskResult{to_json(s), Check{true, verify_support_certificate(P, v, s)}};
    };
  }

  if (op == "project") {
    const Polyhedron P = t.ref<Polyhedron>("set");
    const std::vector<std::size_t> keep = t.indices("keep");
    return [P, keep] { return TaskResult{to_json(project(P, keep)), std::nullopt}; };
  }

  if (op == "conjugate") {
    if (t.has("function")) {
      const PLFunction f = t.ref<PLFunction>("function");
      const Vec xs = t.vec("xstar", f.n());
      return [f, xs] {
        const SupportEval s = conjugate_eval(epi_mapping(f), xs, make_vec({-1}));
        const bool ok = s.value == conjugate(f, xs) &&
                        verify_support_certificate(epi_mapping(f).graph(), concat(xs, make_vec({-1})), s);
        return TaskResult{to_json(s), Check{true, ok}};
      };
    }
    const PolyMap F = t.ref<PolyMap>("map");
    const Vec xs = t.vec("xstar", F.n()), ys = t.vec("ystar", F.p());
    return [F, xs, ys] {
      const SupportEval s = conjugate_eval(F, xs, ys);
      return TaskResult{to_json(s), Check{true, verify_support_certificate(F.graph(), concat(xs, ys), s)}};
    };
  }

  if (op == "biconjugate") {
    const PolyMap F = t.ref<PolyMap>("map");
    const Vec x = t.vec("x", F.n()), y = t.vec("y", F.p());
    return [F, x, y] {
      const ExtReal v = biconjugate_value(F, x, y);
      const bool in = F.in_graph(x, y);
      return TaskResult{Json{{"value", to_json(v)}, {"in_graph", in}}, Check{true, (v == ExtReal(0)) == in}};
    };
  }

  if (op == "coderivative") {
    const PolyMap F = t.ref<PolyMap>("map");
    const Vec xb = t.vec("xbar", F.n()), yb = t.vec("ybar", F.p()), ys = t.vec("ystar", F.p());
    t.require(F.in_graph(xb, yb), "(xbar, ybar) is not in the graph");
    std::optional<Vec> xs;
    if (t.has("xstar")) xs = t.vec("xstar", F.n());
    return [F, xb, yb, ys, xs] {
      const Polyhedron D = coderivative_polyhedron(F, xb, yb, ys);
      Json j{{"coderivative", to_json(D)}};
      if (!xs) return TaskResult{j, std::nullopt};
      const bool fy = coderivative_contains_fy(F, xb, yb, ys, *xs);
      const bool nc = coderivative_contains_normal(F, xb, yb, ys, *xs);
      const bool in = contains(D, *xs);
      j["contains"] = Json{{"fenchel_young", fy}, {"normal_cone", nc}, {"polyhedron", in}};
      return TaskResult{j, Check{true, fy == nc && nc == in}};
    };
  }

  if (op == "subdiff") {
    if (t.has("function")) {
      const PLFunction f = t.ref<PLFunction>("function");
      const Vec xb = t.vec("xbar", f.n());
      t.require(f(xb).finite(), "xbar is outside the domain");
      return [f, xb] { return TaskResult{Json{{"subdifferential", io::to_json(subdifferential(f, xb))}}, std::nullopt}; };
    }
    const PolyMap F = t.ref<PolyMap>("map");
    const Vec xs = t.vec("xstar", F.n()), ys = t.vec("ystar", F.p());
    return [F, xs, ys] {
      const ExtReal v = conjugate_value(F, xs, ys);
      Json j{{"conjugate", to_json(v)}};
      if (!v.finite()) {
        j["subdifferential"] = nullptr;
        return TaskResult{j, std::nullopt};
      }
      const Polyhedron S = conjugate_subdifferential(F, xs, ys);
      j["subdifferential"] = to_json(S);
      // Every point of the face is a graph point whose coderivative at the
      // sign-flipped dual contains x*.
      const Vec z = *relative_interior_point(S);
      const bool ok = coderivative_contains(F, slice(z, 0, F.n()), slice(z, F.n(), F.p()), -ys, xs);
      return TaskResult{j, Check{true, ok}};
    };
  }

  if (op == "sumrule" || op == "chainrule") {
    const std::string kind = t.str("kind");
    const bool sum = op == "sumrule";
    if (kind == "conjugate") {
      const auto [F1, F2] = t.pair<PolyMap>("maps");
      if (sum) {
        t.require(F1.n() == F2.n() && F1.p() == F2.p(), "maps must have the same shape");
        const Vec u = t.vec("u", F1.n()), v = t.vec("v", F1.p());
        return [F1, F2, u, v] {
          const RuleReport r = sum_rule_check(F1, F2, u, v);
          return TaskResult{io::to_json(r), rule_check(r)};
        };
      }
      t.require(F1.p() == F2.n(), "target dimension of the first map must equal the source of the second");
      const Vec u = t.vec("u", F1.n()), w = t.vec("w", F2.p());
      return [F1, F2, u, w] {
        const RuleReport r = chain_rule_check(F1, F2, u, w);
        return TaskResult{io::to_json(r), rule_check(r)};
      };
    }
    if (kind == "coderivative") {
      const auto [F1, F2] = t.pair<PolyMap>("maps");
      if (sum) {
        t.require(F1.n() == F2.n() && F1.p() == F2.p(), "maps must have the same shape");
        const Vec xb = t.vec("xbar", F1.n()), y1 = t.vec("ybar1", F1.p()), y2 = t.vec("ybar2", F1.p()),
                  ys = t.vec("ystar", F1.p());
        t.require(F1.in_graph(xb, y1) && F2.in_graph(xb, y2), "graph points are not in the graphs");
        return [F1, F2, xb, y1, y2, ys] {
          const CoderivativeRuleReport r = coderivative_sum_rule_check(F1, F2, xb, y1, y2, ys);
          return TaskResult{io::to_json(r), Check{true, r.equal}};
        };
      }
      t.require(F1.p() == F2.n(), "target dimension of the first map must equal the source of the second");
      const Vec xb = t.vec("xbar", F1.n()), yb = t.vec("ybar", F1.p()), zb = t.vec("zbar", F2.p()),
                zs = t.vec("zstar", F2.p());
      t.require(F1.in_graph(xb, yb) && F2.in_graph(yb, zb), "graph points are not in the graphs");
      return [F1, F2, xb, yb, zb, zs] {
        const CoderivativeRuleReport r = coderivative_chain_rule_check(F1, F2, xb, yb, zb, zs);
        return TaskResult{io::to_json(r), Check{true, r.equal}};
      };
    }
    if (sum && kind == "function") {
      const auto [f1, f2] = t.pair<PLFunction>("functions");
      t.require(f1.n() == f2.n(), "functions must have the same dimension");
      const Vec xs = t.vec("xstar", f1.n()), xb = t.vec("xbar", f1.n());
      t.require(f1(xb).finite() && f2(xb).finite(), "xbar is outside the common domain");
      return [f1, f2, xs, xb] {
        const FunctionSumReport r = sum_rule_function_check(f1, f2, xs, xb);
        return TaskResult{io::to_json(r), Check{true, r.passed()}};
      };
    }
    if (!sum && kind == "linear") {
      const PLFunction g = t.ref<PLFunction>("function");
      const Mat A = t.ref<Mat>("matrix");
      t.require(A.rows() == g.n(), "matrix rows must equal the function's dimension");
      const Vec xs = t.vec("xstar", A.cols()), xb = t.vec("xbar", A.cols());
      t.require(g(A * xb).finite(), "A xbar is outside the domain");
      return [g, A, xs, xb] {
        const LinearChainReport r = linear_chain_check(g, A, xs, xb);
        return TaskResult{io::to_json(r), Check{true, r.passed()}};
      };
    }
    throw InputError(t.where() + ".kind: unsupported kind \"" + kind + "\"");
  }

  if (op == "intersect") {
    if (t.has("sets")) {
      const auto [P1, P2] = t.pair<Polyhedron>("sets");
      t.require(P1.dim() == P2.dim(), "sets must have the same dimension");
      const Vec v = t.vec("v", P1.dim());
      return [P1, P2, v] {
        const IntersectionRuleReport r = intersection_rule_check(P1, P2, v);
        return TaskResult{io::to_json(r), Check{r.applicable, intersection_passed(r)}};
      };
    }
    const auto [F1, F2] = t.pair<PolyMap>("maps");
    t.require(F1.n() == F2.n() && F1.p() == F2.p(), "maps must have the same shape");
    const Vec u = t.vec("u", F1.n()), v = t.vec("v", F1.p());
    return [F1, F2, u, v] {
      const RuleReport r = intersection_rule_map_check(F1, F2, u, v);
      return TaskResult{io::to_json(r), rule_check(r)};
    };
  }

  if (op == "qualification") {
    if (t.has("sets")) {
      const auto [P1, P2] = t.pair<Polyhedron>("sets");
      t.require(P1.dim() == P2.dim(), "sets must have the same dimension");
      return [P1, P2] {
        Qualification q;
        q.nonempty = !is_empty(intersect(P1, P2));
        q.relative_interior = relative_interiors_meet(P1, P2);
        q.mixed = meets_relative_interior(P1, P2);
        return TaskResult{io::to_json(q), std::nullopt};
      };
    }
    const RuleKind kind = rule_kind(t.str("kind"), t.where());
    const auto [F1, F2] = t.pair<PolyMap>("maps");
    if (kind == RuleKind::Chain)
      t.require(F1.p() == F2.n(), "target dimension of the first map must equal the source of the second");
    else
      t.require(F1.n() == F2.n() && F1.p() == F2.p(), "maps must have the same shape");
    return [kind, F1, F2] { return TaskResult{io::to_json(qualification_report(kind, F1, F2)), std::nullopt}; };
  }

  throw InputError(t.where() + ": unknown op \"" + op + "\"");
}

}  // namespace detail

inline ProblemFile parse_problem(const io::Json& j) {
  ProblemFile pf;
  if (!j.is_object()) throw InputError("problem: expected an object");
  const io::Json& ver = io::field(j, "version", "problem");
  if (!ver.is_string() || ver.get<std::string>() != "1") throw InputError("problem.version: expected \"1\"");
  pf.version = "1";

  const io::Json& objs = io::field(j, "objects", "problem");
  if (!objs.is_object()) throw InputError("problem.objects: expected an object");
  for (auto it = objs.begin(); it != objs.end(); ++it)
    pf.objects.emplace(it.key(), detail::parse_object(it.value(), pf.objects, "objects." + it.key()));

  const io::Json& tasks = io::field(j, "tasks", "problem");
  if (!tasks.is_array()) throw InputError("problem.tasks: expected an array");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::string where = "task " + std::to_string(i);
    const io::Json& op_j = io::field(tasks[i], "op", where);
    if (!op_j.is_string()) throw InputError(where + ".op: expected a string");
    const std::string op = op_j.get<std::string>();
    where += " (" + op + ")";
    detail::TaskReader reader(tasks[i], pf.objects, where);
    try {
      pf.tasks.push_back({i, op, detail::parse_task(op, reader)});
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return pf;
}

/// Parses JSON text; syntax errors report line and column.
inline ProblemFile parse_problem_text(const std::string& text) {
  io::Json j;
  try {
    j = io::Json::parse(text);
  } catch (const io::Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(j);
}

inline ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str());
}

// ---------------------------------------------------------------------------
// Running.

struct TaskOutcome {
  std::size_t index = 0;
  std::string op;
  TaskResult result;
};

struct RunReport {
  std::vector<TaskOutcome> tasks;

  std::size_t checks() const {
    return static_cast<std::size_t>(std::count_if(tasks.begin(), tasks.end(), [](const TaskOutcome& t) { return t.result.check.has_value(); }));
  }
  std::size_t failed() const {
    return static_cast<std::size_t>(std::count_if(tasks.begin(), tasks.end(), [](const TaskOutcome& t) {
      return t.result.check && !t.result.check->passed;
    }));
  }
  std::size_t applicable() const {
    return static_cast<std::size_t>(std::count_if(tasks.begin(), tasks.end(), [](const TaskOutcome& t) {
      return t.result.check && t.result.check->applicable;
    }));
  }
  int exit_code() const { return failed() == 0 ? 0 : 2; }
};

/// Runs the tasks whose op is in `ops` (all when empty). Tasks are
/// independent; with threads > 1 they are split round-robin and the report
/// keeps task order. The first failing task by index is rethrown as an
/// InputError naming it.
inline RunReport run_problem(const ProblemFile& pf, const std::vector<std::string>& ops = {}, unsigned threads = 1) {
  std::vector<const Task*> todo;
  for (const Task& t : pf.tasks)
    if (ops.empty() || std::find(ops.begin(), ops.end(), t.op) != ops.end()) todo.push_back(&t);

  std::vector<std::optional<TaskResult>> results(todo.size());
  std::vector<std::string> errors(todo.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < todo.size(); k += stride) {
      try {
        results[k] = todo[k]->run();
      } catch (const std::exception& e) {
        errors[k] = e.what();
        if (errors[k].empty()) errors[k] = "error";
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1))));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (std::thread& th : pool) th.join();
  }

  RunReport rep;
  for (std::size_t k = 0; k < todo.size(); ++k) {
    if (!results[k])
      throw InputError("task " + std::to_string(todo[k]->index) + " (" + todo[k]->op + "): " + errors[k]);
    rep.tasks.push_back({todo[k]->index, todo[k]->op, std::move(*results[k])});
  }
  return rep;
}

inline io::Json to_json(const RunReport& r) {
  io::Json tasks = io::Json::array();
  for (const TaskOutcome& t : r.tasks) {
    io::Json j{{"index", t.index}, {"op", t.op}, {"result", t.result.result}};
    j["check"] = t.result.check ? io::Json{{"applicable", t.result.check->applicable}, {"passed", t.result.check->passed}}
                                : io::Json(nullptr);
    tasks.push_back(std::move(j));
  }
  const std::size_t checks = r.checks(), failed = r.failed();
  return io::Json{{"version", "1"},
                  {"tasks", tasks},
                  {"summary",
                   {{"tasks", r.tasks.size()},
                    {"checks", checks},
                    {"applicable", r.applicable()},
                    {"passed", checks - failed},
                    {"failed", failed}}}};
}

inline std::string to_text(const RunReport& r) {
  std::ostringstream out;
  for (const TaskOutcome& t : r.tasks) {
    out << "task " << t.index << " " << t.op;
    const io::Json& res = t.result.result;
    for (const char* key : {"value", "lhs", "rhs", "conj_lhs", "conj_rhs"})
      if (res.is_object() && res.contains(key) && res[key].is_string()) out << " " << key << "=" << res[key].get<std::string>();
    if (t.result.check)
      out << (t.result.check->passed ? " ok" : " FAILED") << (t.result.check->applicable ? "" : " (not applicable)");
    out << "\n";
  }
  const std::size_t checks = r.checks(), failed = r.failed();
  out << r.tasks.size() << " tasks, " << checks << " checks, " << checks - failed << " passed, " << failed
      << " failed\n";
  return out.str();
}

}  // namespace polyconj
