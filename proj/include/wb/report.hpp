#ifndef WB_REPORT_HPP
#define WB_REPORT_HPP

#include <string>
#include <vector>

namespace wb {

struct RunConfig {
  std::string command;
  int n = 3;
  int W = 4;
  int N = 3;
  int samples = 25;
  std::string format = "json";  // json | csv
  std::string out;              // empty: stdout
  unsigned seed = 20240901;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 check failure
  std::string output;
};

// Throws std::invalid_argument on unknown commands, flags, or out-of-range
// values (the caller turns that into exit code 2).
RunConfig parse_cli(const std::vector<std::string> &args);

RunResult run_report(const RunConfig &cfg);

int cli_main(int argc, char **argv);

}  // namespace wb

#endif
