// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <set>
#include <string>
#include <vector>

#include "ronchi/acceptance.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int shell(const std::string& cmd) { return std::system(cmd.c_str()); }

// Runs the installed CLI twice with the same arguments and compares bytes.
bool same_bytes_twice(const std::string& args, const std::string& tag, std::string& detail) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / ("ronchi_acceptance_" + tag + "_a.out")).string();
  const std::string b = (dir / ("ronchi_acceptance_" + tag + "_b.out")).string();
  const std::string cli = RONCHI_CLI_PATH;
  const int ra = shell("\"" + cli + "\" " + args + " > " + a + " 2>&1");
  const int rb = shell("\"" + cli + "\" " + args + " > " + b + " 2>&1");
  const std::string x = slurp(a), y = slurp(b);
  const bool ok = ra == rb && !x.empty() && x == y;
  detail += tag + "_bytes=" + std::to_string(x.size()) + (ok ? " identical" : " DIFFER") + "; ";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  ronchi::acceptance::Options opts;
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--mc-seeds" && i + 1 < argc) {
      opts.monte_carlo_seeds = std::atoi(argv[++i]);
    } else if (arg == "--known-failure" && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: ronchi_acceptance [--mc-seeds N] [--known-failure ID]...\n";
      return 2;
    }
  }

  std::vector<int> failed;
  for (const auto& r : ronchi::acceptance::run_all(opts)) {
    std::cout << ronchi::acceptance::format_line(r) << std::endl;
    if (!r.pass) failed.push_back(r.id);
  }

  // Process-level determinism of the two user-facing commands.
  std::string detail;
  bool ok = same_bytes_twice("--seed 7 simulate", "simulate", detail);
  ok &= same_bytes_twice("--seed 7 reproduce --mc_seeds 20", "reproduce", detail);
  std::printf("[%s] 10b repeated CLI invocations: %s\n", ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) failed.push_back(10);

  int unexpected = 0;
  for (int id : failed) {
    if (known.count(id))
      std::printf("known failure: criterion %d (see README)\n", id);
    else
      ++unexpected;
  }
  std::printf("%zu criteria failed, %d unexpected\n", failed.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
