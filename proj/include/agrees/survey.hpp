#pragma once

// Parameter-family sweeps: one classify task per valid tuple, a worker pool,
// rows merged in parameter order so the output never depends on --jobs.

#include <atomic>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "agrees/families.hpp"
#include "agrees/report.hpp"

namespace agrees {

struct SurveyOptions {
  std::string family;
  /// Parameter name -> "lo..hi" or "v"; bounds may mention earlier parameters.
  std::map<std::string, std::string> ranges;
  std::string field = "fp:2147483647";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct SurveyRow {
  std::string family;
  std::vector<std::string> names;
  std::vector<int> values;
  AGReport report;
  std::string error;

  std::string params() const {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) out += (i != 0 ? ";" : "") + names[i] + "=" + std::to_string(values[i]);
    return out;
  }
};

struct SurveyResult {
  std::vector<SurveyRow> rows;
  std::size_t skipped = 0;
};

inline const std::map<std::string, std::string>& default_ranges(const std::string& family) {
  static const std::map<std::string, std::map<std::string, std::string>> table{
      {"contracted-o3", {{"n", "3..8"}, {"alpha", "1..n"}, {"beta", "1..n"}}},
      {"power-order", {{"m", "2..5"}, {"n", "m..10"}}},
      {"three-gen", {{"n", "3..9"}, {"alpha", "1..n"}}},
      {"remark43", {{"m", "4..6"}}},
      {"products", {{"m", "2..3"}, {"n", "m..4"}, {"alpha", "2..3"}, {"beta", "alpha..4"}}},
  };
  auto it = table.find(family);
  if (it == table.end()) throw BadParameters("unknown family '" + family + "'");
  return it->second;
}

inline std::pair<long, long> parse_range(const std::string& text, const std::map<std::string, long>& bound) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = eval_param_expr(text, bound);
    return {v, v};
  }
  return {eval_param_expr(text.substr(0, dots), bound), eval_param_expr(text.substr(dots + 2), bound)};
}

/// Valid tuples in lexicographic order plus the number of skipped ones.
inline std::pair<std::vector<std::vector<int>>, std::size_t> enumerate_tuples(const SurveyOptions& opts) {
  const FamilyInfo& info = family_info(opts.family);
  for (const auto& [name, range] : opts.ranges) {
    if (std::find(info.params.begin(), info.params.end(), name) == info.params.end()) {
      throw BadParameters("family " + opts.family + " has no parameter '" + name + "'");
    }
  }
  const auto& defaults = default_ranges(opts.family);
  std::vector<std::vector<int>> valid;
  std::size_t skipped = 0;
  std::map<std::string, long> bound;
  std::vector<int> current;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == info.params.size()) {
      FamilyParams p;
      for (std::size_t i = 0; i < k; ++i) p[info.params[i]] = current[i];
      try {
        make_family(opts.family, p);
        valid.push_back(current);
      } catch (const BadParameters&) {
        ++skipped;
      }
      return;
    }
    const std::string& name = info.params[k];
    auto it = opts.ranges.find(name);
    auto [lo, hi] = parse_range(it != opts.ranges.end() ? it->second : defaults.at(name), bound);
    for (long v = lo; v <= hi; ++v) {
      bound[name] = v;
      current.push_back(static_cast<int>(v));
      self(self, k + 1);
      current.pop_back();
    }
    bound.erase(name);
  };
  rec(rec, 0);
  return {valid, skipped};
}

/// Per-task seed: a splitmix64 mix of the run seed and the tuple.
inline std::uint64_t task_seed(std::uint64_t seed, const std::vector<int>& tuple) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(seed);
  for (int v : tuple) h = mix(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
  return h;
}

inline SurveyResult run_survey(const SurveyOptions& opts) {
  const FamilyInfo& info = family_info(opts.family);
  const FieldConfig cfg = FieldConfig::parse(opts.field);
  auto [tuples, skipped] = enumerate_tuples(opts);

  SurveyResult out;
  out.skipped = skipped;
  out.rows.resize(tuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      SurveyRow& row = out.rows[i];
      row.family = opts.family;
      row.names = info.params;
      row.values = tuples[i];
      FamilyParams p;
      for (std::size_t k = 0; k < info.params.size(); ++k) p[info.params[k]] = tuples[i][k];
      ClassifyConfig config;
      config.field = cfg;
      config.seed = task_seed(opts.seed, tuples[i]);
      try {
        row.report = classify(make_family(opts.family, p), config);
      } catch (const Error& e) {
        row.error = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1U, opts.jobs);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.rows.begin(), out.rows.end(),
            [](const SurveyRow& a, const SurveyRow& b) { return a.values < b.values; });
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline constexpr const char* kCsvHeader = "family,params,verdict,o,mu_I,mu_J,min_sum,threshold,witness";

inline void write_csv(std::ostream& os, const std::vector<SurveyRow>& rows) {
  os << kCsvHeader << "\r\n";
  for (const auto& row : rows) {
    const AGReport& r = row.report;
    std::vector<std::string> cells{row.family, row.params()};
    if (!row.error.empty()) {
      cells.insert(cells.end(), {"UNKNOWN", "", "", "", "", "", "error: " + row.error});
    } else {
      cells.push_back(to_string(r.verdict));
      cells.push_back(std::to_string(r.order));
      cells.push_back(std::to_string(r.mu));
      cells.push_back(r.colon ? std::to_string(r.colon->mu) : "");
      cells.push_back(r.refutation ? std::to_string(r.refutation->min_sum) : "");
      cells.push_back(r.refutation ? std::to_string(r.refutation->threshold) : "");
      cells.push_back(r.witness ? "(" + r.witness->f + ", " + r.witness->g + ", " + r.witness->h + ")" : "");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i != 0 ? "," : "") << csv_field(cells[i]);
    os << "\r\n";
  }
}

}  // namespace agrees
