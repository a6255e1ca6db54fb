#include "v2vbeam/eval/stratify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace v2vbeam::eval {

namespace {

bool in_top(const SampleResult& s, int k) {
  const auto end = s.top.begin() +
                   std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(s.top.size()));
  return std::find(s.top.begin(), end, s.label) != end;
}

struct BinAccumulator {
  int count = 0;
  int hits1 = 0;
  int hits5 = 0;
};

std::string object_bin(double mean_objects) {
  const int rounded = std::max(1, static_cast<int>(std::lround(mean_objects)));
  if (rounded <= 4) return "1-4";
  if (rounded <= 10) return "5-10";
  if (rounded <= 20) return "11-20";
  return "21+";
}

}  // namespace

StrataKind strata_kind_from_name(const std::string& name) {
  if (name == "beam_diff") return StrataKind::beam_diff;
  if (name == "rel_speed") return StrataKind::rel_speed;
  if (name == "obj_count") return StrataKind::obj_count;
  throw std::invalid_argument("unknown strata kind: " + name);
}

const char* strata_kind_name(StrataKind kind) {
  switch (kind) {
    case StrataKind::beam_diff: return "beam_diff";
    case StrataKind::rel_speed: return "rel_speed";
    case StrataKind::obj_count: return "obj_count";
  }
  return "?";
}

std::vector<StratumRow> stratified_report(const std::vector<SampleResult>& samples,
                                          StrataKind kind) {
  // Ordered bin key -> (label, accumulator). The integer key keeps numeric
  // bin order; object-count bins use a fixed small key set.
  std::map<int, std::pair<std::string, BinAccumulator>> bins;
  auto bin_of = [&kind](const SampleResult& s) -> std::pair<int, std::string> {
    switch (kind) {
      case StrataKind::beam_diff:
        return {s.beam_diff, std::to_string(s.beam_diff)};
      case StrataKind::rel_speed: {
        const int b = static_cast<int>(s.rel_speed / 2.0);
        return {b, std::to_string(2 * b) + "-" + std::to_string(2 * b + 2)};
      }
      case StrataKind::obj_count: {
        const std::string label = object_bin(s.mean_objects);
        const int key = label == "1-4" ? 0 : label == "5-10" ? 1 : label == "11-20" ? 2 : 3;
        return {key, label};
      }
    }
    throw std::logic_error("unreachable");
  };

  for (const auto& s : samples) {
    auto [key, label] = bin_of(s);
    auto& [name, acc] = bins[key];
    name = label;
    ++acc.count;
    if (in_top(s, 1)) ++acc.hits1;
    if (in_top(s, 5)) ++acc.hits5;
  }

  // Beam-diff bins: make the range contiguous so empty bins show up.
  if (kind == StrataKind::beam_diff && !bins.empty()) {
    const int max_bin = bins.rbegin()->first;
    for (int b = 0; b <= max_bin; ++b) {
      auto& [name, acc] = bins[b];
      (void)acc;
      if (name.empty()) name = std::to_string(b);
    }
  }

  std::vector<StratumRow> rows;
  for (const auto& [key, entry] : bins) {
    (void)key;
    StratumRow row;
    row.bin = entry.first;
    row.count = entry.second.count;
    if (entry.second.count > 0) {
      row.top1 = static_cast<double>(entry.second.hits1) / entry.second.count;
      row.top5 = static_cast<double>(entry.second.hits5) / entry.second.count;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace v2vbeam::eval
