// polyconj command-line front end.
//
//   polyconj run --input problem.json [--format json|text] [--output path] [--parallel N]
//   polyconj <op> --input problem.json ...     runs only the tasks with that op
//   polyconj selfcheck [--seed S] [--count N] [--profile dim,rows,coeff] ...
//
// Exit codes: 0 all checks passed, 1 input error, 2 a check failed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyconj/problem.hpp"
#include "polyconj/selfcheck.hpp"

namespace {

struct Options {
  std::string input;
  std::string output = "stdout";
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::string profile = "3,8,4";
  unsigned parallel = 1;
};

polyconj::Profile parse_profile(const std::string& s) {
  std::vector<long> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw polyconj::InputError("--profile: expected three positive integers dim,rows,coeff");
    }
  }
  if (parts.size() != 3) throw polyconj::InputError("--profile: expected three positive integers dim,rows,coeff");
  return {static_cast<std::size_t>(parts[0]), static_cast<std::size_t>(parts[1]), parts[2]};
}

void emit(const Options& o, const std::string& text) {
  if (o.output == "stdout" || o.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw polyconj::InputError("cannot write " + o.output);
  out << text;
}

int run_tasks(const Options& o, const std::vector<std::string>& ops) {
  if (o.input.empty()) throw polyconj::InputError("--input is required");
  const polyconj::ProblemFile pf = polyconj::load_problem(o.input);
  const polyconj::RunReport rep = polyconj::run_problem(pf, ops, o.parallel);
  emit(o, o.format == "text" ? polyconj::to_text(rep) : polyconj::to_json(rep).dump(2) + "\n");
  return rep.exit_code();
}

int run_selfcheck(const Options& o) {
  const polyconj::SelfcheckReport rep = polyconj::selfcheck(o.seed, o.count, parse_profile(o.profile), o.parallel);
  emit(o, o.format == "text" ? polyconj::to_text(rep) : polyconj::to_json(rep).dump(2) + "\n");
  return rep.ok() ? 0 : 2;
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--output", o.output, "Report destination (path or stdout)");
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--parallel", o.parallel, "Worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conjugate and coderivative calculus for polyhedral set-valued mappings"};
  app.require_subcommand(1);
  Options o;

  std::vector<std::pair<CLI::App*, std::vector<std::string>>> task_cmds;
  CLI::App* run = app.add_subcommand("run", "Run every task of a problem file");
  task_cmds.push_back({run, {}});
  for (const std::string& op : polyconj::task_ops())
    task_cmds.push_back({app.add_subcommand(op, "Run the " + op + " tasks of a problem file"), {op}});
  for (auto& [sub, ops] : task_cmds) {
    sub->add_option("--input", o.input, "Problem file")->required();
    add_output_flags(sub, o);
  }

  CLI::App* self = app.add_subcommand("selfcheck", "Run the randomized verification suites");
  self->add_option("--seed", o.seed, "Suite seed");
  self->add_option("--count", o.count, "Qualified instances per suite");
  self->add_option("--profile", o.profile, "Instance profile dim,rows,coeff");
  add_output_flags(self, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (self->parsed()) return run_selfcheck(o);
    for (auto& [sub, ops] : task_cmds)
      if (sub->parsed()) return run_tasks(o, ops);
  } catch (const polyconj::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
