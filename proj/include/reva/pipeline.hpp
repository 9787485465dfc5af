#pragma once

#include <string>
#include <vector>

#include "reva/config.hpp"

namespace reva {

// Command bodies behind the CLI; each consumes the previous stage's artifact
// files and writes its own. All randomness derives from the config seed.

void cmd_train(const RunConfig& cfg, const std::string& method, const std::string& out_ckpt,
               const std::string& out_log, const std::string& groups_path);

void cmd_analyze(const RunConfig& cfg, const std::string& ckpt, const std::string& out_ranking);

void cmd_sweep_eps(const RunConfig& cfg, const std::string& ckpt, const std::string& out_csv,
                   const std::string& out_eps);

void cmd_build_valset(const RunConfig& cfg, const std::string& ckpt,
                      const std::string& ranking_path, const std::string& out_dir);

void cmd_evaluate(const RunConfig& cfg, const std::string& ckpt, const std::string& suite_dir,
                  const std::string& out_report, const std::string& holdout_suite_dir,
                  const std::string& out_bars, const std::string& timestamp);

void cmd_group(const RunConfig& cfg, const std::string& report_path,
               const std::string& out_groups);

void cmd_enhance(const RunConfig& cfg, const std::string& ckpt, const std::string& groups_path,
                 const std::string& out_ckpt, const std::string& out_log, bool from_scratch);

void cmd_compare(const std::vector<std::string>& report_paths, const std::string& out_csv);

// Builds the severity-corrupted copy of an arbitrary dataset as a suite
// directory (used for the holdout comparison).
void cmd_corrupt_holdout(const RunConfig& cfg, const std::string& out_dir);

} // namespace reva
