#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "magictri/annealing.hpp"
#include "magictri/enumeration.hpp"
#include "magictri/experiments.hpp"
#include "magictri/triangle.hpp"

namespace magictri {

// Serialized reports for the command line tool.
//
// Every JSON document has the shape {"metadata": {...}, "result": {...}}.
// Two identical invocations differ only in metadata.timestamp, so stripping
// that one field makes outputs byte-comparable. CSV outputs carry no
// timestamps at all.

struct RunMetadata {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> flags;  // emitted in order
  std::vector<std::uint64_t> seeds;
  std::string started;  // ISO 8601 UTC, stamped by begin_run
  double elapsed_seconds = 0.0;
  std::chrono::steady_clock::time_point begun;
};

RunMetadata begin_run(std::string subcommand);
void finish_run(RunMetadata& meta);

/// Serializes a double in shortest round-trip decimal form. NaN becomes
/// "nan"; CSV consumers see it only in summary fields of empty batches.
std::string format_double(double value);

nlohmann::ordered_json metadata_json(const RunMetadata& meta);
nlohmann::ordered_json report_json(const RunMetadata& meta, nlohmann::ordered_json result);
std::string dump_report(const RunMetadata& meta, nlohmann::ordered_json result);

nlohmann::ordered_json verify_result(const TriangleArrangement& t);
std::string verify_text(const TriangleArrangement& t);

nlohmann::ordered_json count_result(const CountResult& r);
std::string count_text(const CountResult& r);

nlohmann::ordered_json distribution_result(const DistributionTable& d);
/// Header integer,corner,border,interior,center,total; one row per integer.
std::string distribution_csv(const DistributionTable& d);

/// Summary statistics only; per-trial records live in the CSV.
nlohmann::ordered_json step_stats_result(const StepStats& s);
/// Columns trial,seed,steps,success, then one trailing "# summary ..." line.
std::string step_stats_csv(const StepStats& s);

nlohmann::ordered_json frequency_result(const FrequencyEstimate& e);
nlohmann::ordered_json bound_result(int levels, double frequency_bound, double bound);

nlohmann::ordered_json anneal_result(const AnnealOutcome& o, const AnnealConfig& c);

}  // namespace magictri
