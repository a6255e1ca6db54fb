#pragma once

#include <optional>
#include <string>
#include <vector>

namespace v2vbeam::eval {

/// One evaluated sequence in the per-sample dump. `top` holds the ranked
/// prediction (k entries).
struct SampleResult {
  std::string scenario_id;
  int start_index = 0;
  int fold = 0;
  int label = 0;
  std::vector<int> top;
  int beam_diff = 0;
  double rel_speed = 0.0;
  double mean_objects = 0.0;
  int coasted = 0;
};

enum class StrataKind { beam_diff, rel_speed, obj_count };

StrataKind strata_kind_from_name(const std::string& name);
const char* strata_kind_name(StrataKind kind);

struct StratumRow {
  std::string bin;
  int count = 0;
  std::optional<double> top1;  // null for empty bins
  std::optional<double> top5;
};

/// Bins the samples (beam difference: integer bins; relative speed: 2 m/s
/// bins; objects: 1-4 / 5-10 / 11-20 / 21+) and reports top-1/top-5 per bin.
/// Bin counts always sum to the number of samples.
std::vector<StratumRow> stratified_report(const std::vector<SampleResult>& samples,
                                          StrataKind kind);

}  // namespace v2vbeam::eval
