#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "egd/ed_engine.hpp"

namespace egd::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kInfeasible = 3 };

struct CliConfig {
  std::string diagram;
  std::string marked;
  std::string mode = "both";
  std::string word;
  std::string parabolic;  // J, for decompose / strata
  std::string source, target;
  int length = -1;
  bool json = false;
  bool classify = false;
  EngineOptions engine;
};

struct Output {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// Each command parses its inputs first; a parse error never starts a sweep.
Output cmd_ed(const CliConfig& cfg);
Output cmd_mdpairs(const CliConfig& cfg);
Output cmd_decompose(const CliConfig& cfg);
Output cmd_morphism(const CliConfig& cfg);
Output cmd_strata(const CliConfig& cfg);
Output cmd_coxeter(const CliConfig& cfg);

// Full command line, program name excluded.
Output run(const std::vector<std::string>& args);

// "l(v)=3 c(u)=3 v=[1,2,3] u=[4,2,3,1,2,4,1,2,1]"
std::string format_pair(const WeylGroup& group, const MdPair& p);

}  // namespace egd::cli
