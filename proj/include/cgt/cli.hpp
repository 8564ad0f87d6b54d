#ifndef CGT_CLI_HPP_
#define CGT_CLI_HPP_

// Command-line front end.  Every command produces a Report; the human text
// and the machine JSON are both rendered from that one value.
//
// Exit codes: 0 success, 1 anomaly or failed verification, 2 input error,
// 3 resource cap exceeded.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgt/common.hpp"

namespace cgt {

struct CliFlags {
  bool json = false;
  u32 cap = kDefaultOrderCap;
  std::optional<u64> seed;
  std::string out;  // -o target; empty = none
};

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  std::string status;  // "pass" | "fail" | "anomaly"
  std::optional<u64> seed;
  long long timing_ms = 0;
  nlohmann::ordered_json results;

  nlohmann::ordered_json to_json() const;
};

std::string render_human(const Report& r);
int report_exit_code(const Report& r);

// target: a JSON file path, or a catalog entry name.
Report cmd_analyze(const std::string& target, const CliFlags& flags);

// replacement_spec: "H=<label>,<label>,... [W=<v>;<v>;...]" with vectors as
// comma-separated residues; empty string skips the trace.
// random_replacements > 0 runs that many seeded descent instances drawn
// from the module's quadratic-free elementary abelian subgroups.
Report cmd_check_module(const std::string& target, const std::string& replacement_spec,
                        u32 random_replacements, const CliFlags& flags);

Report cmd_verify_example(bool tamper, const CliFlags& flags);

Report cmd_sweep(std::optional<u32> p_filter, std::optional<u64> max_order, const CliFlags& flags);

Report cmd_catalog_list(const CliFlags& flags);

// Catalog entry name, or a family name (cyclic, elem-abelian, extraspecial,
// unitriangular, wreath) together with --p/--n.
Report cmd_catalog_build(const std::string& name, std::optional<u32> p, std::optional<u32> n,
                         const CliFlags& flags);

int run_cli(int argc, const char* const* argv);

}  // namespace cgt

#endif  // CGT_CLI_HPP_
