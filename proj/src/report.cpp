#include "wb/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "wb/barcx.hpp"
#include "wb/phi.hpp"

namespace wb {

namespace {

using nlohmann::json;

const std::vector<std::string> kCommands = {
    "dims",        "ce-homology",      "verify-bv",
    "bar-homology", "verify-bar",      "braid-nf",
    "solve-associator", "verify-phi",  "verify-identity",
    "all"};

long parse_long(const std::string &flag, const std::string &text) {
  try {
    size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception &) {
    throw std::invalid_argument("flag " + flag + ": bad number '" + text + "'");
  }
}

json ranks_json(const std::map<std::pair<int, int>, int> &ranks) {
  json j = json::object();
  for (auto &[kw, r] : ranks)
    j[std::to_string(kw.first) + "," + std::to_string(kw.second)] = r;
  return j;
}

long ranks_total(const std::map<std::pair<int, int>, int> &ranks) {
  long t = 0;
  for (auto &[kw, r] : ranks) t += r;
  return t;
}

json dims_payload(const RunConfig &cfg) {
  auto A = default_labels(cfg.n);
  json j;
  j["t_tilde"] = json::object();
  for (auto &[w, d] : t_tilde(A, cfg.W)->graded_dims())
    j["t_tilde"][std::to_string(w)] = d;
  j["t"] = json::object();
  if (cfg.n >= 2)
    for (auto &[w, d] : t_plain(A, cfg.W)->graded_dims())
      j["t"][std::to_string(w)] = d;
  j["pass"] = true;
  return j;
}

json ce_payload(const RunConfig &cfg) {
  auto ranks = homology_ranks(ce_complex(t_tilde(default_labels(cfg.n), cfg.W),
                                         cfg.W));
  json j;
  j["ranks"] = ranks_json(ranks);
  j["total"] = ranks_total(ranks);
  j["pass"] = true;
  return j;
}

json verify_bv_payload(const RunConfig &cfg) {
  auto rep = verify_bv_quasiiso(default_labels(cfg.n), cfg.W);
  json j;
  j["pass"] = rep.pass;
  j["total"] = rep.total;
  j["weight_cap"] = rep.weight_cap;
  j["ranks"] = ranks_json(rep.ranks);
  if (!rep.pass) j["offender"] = rep.offender;
  return j;
}

json bar_payload(const RunConfig &cfg) {
  TruncatedUEA U(t_tilde(default_labels(cfg.n), cfg.W), cfg.W);
  auto ranks = bar_homology_ranks(bar_complex(U, cfg.W));
  json j;
  j["ranks"] = ranks_json(ranks);
  j["total"] = ranks_total(ranks);
  j["pass"] = true;
  return j;
}

json verify_bar_payload(const RunConfig &cfg) {
  auto rep = verify_bar_quasiiso(default_labels(cfg.n), cfg.W);
  json j;
  j["pass"] = rep.pass;
  j["ce_ranks"] = ranks_json(rep.ce_ranks);
  j["bar_ranks"] = ranks_json(rep.bar_ranks);
  if (!rep.pass) j["detail"] = rep.detail;
  return j;
}

json braid_payload(const RunConfig &cfg) {
  int strands = std::min(std::max(cfg.n + 1, 2), 5);
  std::mt19937 rng(cfg.seed);
  int agree = 0;
  std::string counterexample;
  for (int s = 0; s < cfg.samples; ++s) {
    ArtinWord w;
    int len = 1 + (int)(rng() % 12);
    for (int i = 0; i < len; ++i) {
      int g = 1 + (int)(rng() % (strands - 1));
      w.push_back(rng() % 2 ? g : -g);
    }
    bool g = braid_trivial(w, strands);
    bool h = handle_reduce_trivial(w, strands);
    if (g == h)
      ++agree;
    else if (counterexample.empty())
      counterexample = braid_word_to_string(w);
  }
  json j;
  j["strands"] = strands;
  j["samples"] = cfg.samples;
  j["agreements"] = agree;
  j["pass"] = agree == cfg.samples;
  if (!counterexample.empty()) j["counterexample"] = counterexample;
  return j;
}

json associator_payload(const RunConfig &cfg) {
  auto phi = solve_associator(cfg.N);
  auto rep = check_associator(phi);
  json j;
  j["N"] = cfg.N;
  j["phi"] = json::parse(associator_to_json(phi));
  j["checks"] = {{"pentagon", rep.pentagon},
                 {"hexagon1", rep.hexagon1},
                 {"hexagon2", rep.hexagon2},
                 {"grouplike", rep.grouplike},
                 {"even", rep.even}};
  j["pass"] = rep.pass;
  if (!rep.pass) j["detail"] = rep.detail;
  return j;
}

json verify_phi_payload(const RunConfig &cfg) {
  auto phi = solve_associator(cfg.N);
  auto rep = verify_phi_functoriality(phi, cfg.N, cfg.samples, cfg.seed);
  json j;
  j["samples"] = cfg.samples;
  j["checks"] = rep.checks;
  j["pass"] = rep.pass;
  if (!rep.pass) j["detail"] = rep.detail;
  return j;
}

json verify_identity_payload(const RunConfig &cfg) {
  auto phi = solve_associator(cfg.N);
  auto rep = verify_homology_identity(phi, cfg.N);
  json j;
  j["checks"] = rep.checks;
  j["pass"] = rep.pass;
  if (!rep.pass) j["detail"] = rep.detail;
  return j;
}

json command_payload(const std::string &cmd, const RunConfig &cfg) {
  if (cmd == "dims") return dims_payload(cfg);
  if (cmd == "ce-homology") return ce_payload(cfg);
  if (cmd == "verify-bv") return verify_bv_payload(cfg);
  if (cmd == "bar-homology") return bar_payload(cfg);
  if (cmd == "verify-bar") return verify_bar_payload(cfg);
  if (cmd == "braid-nf") return braid_payload(cfg);
  if (cmd == "solve-associator") return associator_payload(cfg);
  if (cmd == "verify-phi") return verify_phi_payload(cfg);
  if (cmd == "verify-identity") return verify_identity_payload(cfg);
  throw std::invalid_argument("unknown command: " + cmd);
}

std::string csv_output(const RunConfig &cfg, const json &payload) {
  std::string csv;
  if (cfg.command == "dims") {
    csv = "weight,t_tilde,t\n";
    for (auto &[w, d] : payload.at("t_tilde").items()) {
      int dt = payload.at("t").contains(w) ? payload.at("t").at(w).get<int>()
                                           : 0;
      csv += w + "," + std::to_string(d.get<int>()) + "," +
             std::to_string(dt) + "\n";
    }
    return csv;
  }
  if (cfg.command == "ce-homology" || cfg.command == "bar-homology") {
    csv = "degree,weight,rank\n";
    for (auto &[kw, r] : payload.at("ranks").items())
      csv += kw + "," + std::to_string(r.get<int>()) + "\n";
    return csv;
  }
  throw std::invalid_argument(
      "csv output is only available for the rank/dimension tables");
}

}  // namespace

RunConfig parse_cli(const std::vector<std::string> &args) {
  if (args.empty())
    throw std::invalid_argument(
        "usage: wbench <command> [--n K] [--W K] [--N K] [--samples K] "
        "[--format json|csv] [--out PATH] [--seed K]");
  RunConfig cfg;
  cfg.command = args[0];
  if (std::find(kCommands.begin(), kCommands.end(), cfg.command) ==
      kCommands.end())
    throw std::invalid_argument("unknown command: " + cfg.command);
  for (size_t i = 1; i < args.size(); i += 2) {
    const std::string &flag = args[i];
    if (i + 1 >= args.size())
      throw std::invalid_argument("flag " + flag + " needs a value");
    const std::string &val = args[i + 1];
    if (flag == "--n")
      cfg.n = (int)parse_long(flag, val);
    else if (flag == "--W")
      cfg.W = (int)parse_long(flag, val);
    else if (flag == "--N")
      cfg.N = (int)parse_long(flag, val);
    else if (flag == "--samples")
      cfg.samples = (int)parse_long(flag, val);
    else if (flag == "--seed")
      cfg.seed = (unsigned)parse_long(flag, val);
    else if (flag == "--format")
      cfg.format = val;
    else if (flag == "--out")
      cfg.out = val;
    else
      throw std::invalid_argument("unknown flag: " + flag);
  }
  if (cfg.n < 1 || cfg.n > 5)
    throw std::invalid_argument("--n must be between 1 and 5");
  if (cfg.W < 1 || cfg.W > 6)
    throw std::invalid_argument("--W must be between 1 and 6");
  if (cfg.N < 1 || cfg.N > 4)
    throw std::invalid_argument("--N must be between 1 and 4");
  if (cfg.samples < 1 || cfg.samples > 100000)
    throw std::invalid_argument("--samples must be between 1 and 100000");
  if (cfg.format != "json" && cfg.format != "csv")
    throw std::invalid_argument("--format must be json or csv");
  return cfg;
}

RunResult run_report(const RunConfig &cfg) {
  json j;
  j["schema"] = 1;
  j["command"] = cfg.command;
  j["params"] = {{"n", cfg.n},
                 {"W", cfg.W},
                 {"N", cfg.N},
                 {"samples", cfg.samples},
                 {"seed", cfg.seed}};
  bool pass = true;
  json payload;
  if (cfg.command == "all") {
    json reports = json::object();
    for (auto &cmd : kCommands) {
      if (cmd == "all") continue;
      reports[cmd] = command_payload(cmd, cfg);
      pass = pass && reports[cmd].at("pass").get<bool>();
    }
    j["reports"] = std::move(reports);
  } else {
    payload = command_payload(cfg.command, cfg);
    pass = payload.at("pass").get<bool>();
    j.update(payload);
  }
  j["pass"] = pass;

  RunResult res;
  res.exit_code = pass ? 0 : 1;
  if (cfg.format == "csv")
    res.output = csv_output(cfg, payload);
  else
    res.output = j.dump(2) + "\n";
  return res;
}

int cli_main(int argc, char **argv) {
  RunConfig cfg;
  try {
    cfg = parse_cli({argv + 1, argv + argc});
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    auto start = std::chrono::steady_clock::now();
    auto res = run_report(cfg);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (cfg.out.empty()) {
      std::cout << res.output;
    } else {
      std::ofstream f(cfg.out);
      if (!f) {
        std::cerr << "error: cannot write " << cfg.out << "\n";
        return 2;
      }
      f << res.output;
    }
    std::cerr << cfg.command << ": " << (res.exit_code == 0 ? "pass" : "FAIL")
              << " (" << ms << " ms)\n";
    return res.exit_code;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wb
