#include "magictri/reports.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "magictri/symmetry.hpp"
#include "magictri/version.hpp"

namespace magictri {

namespace {

std::string iso8601_utc_now() {
  const std::time_t tt = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

RunMetadata begin_run(std::string subcommand) {
  RunMetadata meta;
  meta.subcommand = std::move(subcommand);
  meta.started = iso8601_utc_now();
  meta.begun = std::chrono::steady_clock::now();
  return meta;
}

void finish_run(RunMetadata& meta) {
  meta.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - meta.begun).count();
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json metadata_json(const RunMetadata& meta) {
  nlohmann::ordered_json flags = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta.flags) flags[key] = value;
  return nlohmann::ordered_json{
      {"tool", "magictri"},
      {"version", kVersion},
      {"subcommand", meta.subcommand},
      {"flags", std::move(flags)},
      {"seeds", meta.seeds},
      {"rng", kRngName},
      {"timestamp",
       {{"started", meta.started}, {"elapsed_seconds", meta.elapsed_seconds}}},
  };
}

nlohmann::ordered_json report_json(const RunMetadata& meta, nlohmann::ordered_json result) {
  return nlohmann::ordered_json{{"metadata", metadata_json(meta)},
                                {"result", std::move(result)}};
}

std::string dump_report(const RunMetadata& meta, nlohmann::ordered_json result) {
  return report_json(meta, std::move(result)).dump(2) + "\n";
}

nlohmann::ordered_json verify_result(const TriangleArrangement& t) {
  const PairedSums sums = paired_sums(t);
  return nlohmann::ordered_json{
      {"levels", sums.levels},
      {"magic_constant", sums.magic},
      {"magic", is_magic(t)},
      {"row_sums", sums.row_sums},
      {"pos_diag_sums", sums.pos_diag_sums},
      {"neg_diag_sums", sums.neg_diag_sums},
      {"h", sums.h},
      {"p", sums.p},
      {"q", sums.q},
      {"entries", std::vector<int>(t.entries().begin(), t.entries().end())},
  };
}

std::string verify_text(const TriangleArrangement& t) {
  const PairedSums sums = paired_sums(t);
  std::ostringstream out;
  out << "levels " << sums.levels << '\n';
  out << "magic constant " << sums.magic << '\n';
  out << "row sums      " << join(sums.row_sums) << '\n';
  out << "pos diag sums " << join(sums.pos_diag_sums) << '\n';
  out << "neg diag sums " << join(sums.neg_diag_sums) << '\n';
  out << "h " << join(sums.h) << '\n';
  out << "p " << join(sums.p) << '\n';
  out << "q " << join(sums.q) << '\n';
  const bool magic = is_magic(t);
  out << "magic " << (magic ? "yes" : "no") << '\n';
  if (!magic) {
    const std::vector<std::int64_t>* paired[] = {&sums.h, &sums.p, &sums.q};
    const char* names[] = {"h", "p", "q"};
    for (int f = 0; f < 3; ++f) {
      for (std::size_t k = 0; k < paired[f]->size(); ++k) {
        if ((*paired[f])[k] != sums.magic) {
          out << "first mismatch: " << names[f] << (k + 1) << " = " << (*paired[f])[k]
              << ", target " << sums.magic << '\n';
          return out.str();
        }
      }
    }
  }
  return out.str();
}

nlohmann::ordered_json count_result(const CountResult& r) {
  return nlohmann::ordered_json{
      {"levels", r.levels},
      {"method", count_method_name(r.method)},
      {"t_n", r.up_to_symmetry},
      {"raw", r.raw},
  };
}

std::string count_text(const CountResult& r) {
  std::ostringstream out;
  out << "levels " << r.levels << ": " << r.up_to_symmetry
      << " magic triangles up to symmetry, " << r.raw << " raw (method "
      << count_method_name(r.method) << ")\n";
  return out.str();
}

namespace {

std::array<std::uint64_t, 5> distribution_row(const DistributionTable& d, int value) {
  const auto& counts = d.counts[static_cast<std::size_t>(value - 1)];
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return {counts[static_cast<int>(PositionClass::corner)],
          counts[static_cast<int>(PositionClass::border)],
          counts[static_cast<int>(PositionClass::interior)],
          counts[static_cast<int>(PositionClass::center)], total};
}

}  // namespace

nlohmann::ordered_json distribution_result(const DistributionTable& d) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int v = 1; v <= static_cast<int>(d.counts.size()); ++v) {
    const auto row = distribution_row(d, v);
    rows.push_back(nlohmann::ordered_json{
        {"integer", v},
        {"corner", row[0]},
        {"border", row[1]},
        {"interior", row[2]},
        {"center", row[3]},
        {"total", row[4]},
    });
  }
  return nlohmann::ordered_json{
      {"levels", d.levels},
      {"triangles", d.total},
      {"rows", std::move(rows)},
  };
}

std::string distribution_csv(const DistributionTable& d) {
  std::string out = "integer,corner,border,interior,center,total\n";
  for (int v = 1; v <= static_cast<int>(d.counts.size()); ++v) {
    const auto row = distribution_row(d, v);
    out += std::to_string(v);
    for (auto c : row) {
      out += ',';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json step_stats_result(const StepStats& s) {
  return nlohmann::ordered_json{
      {"levels", s.levels},
      {"trials", s.trials},
      {"successes", s.successes},
      {"failures", s.failures},
      {"unverified", s.unverified},
      {"steps",
       {{"mean", s.mean},
        {"median", s.median},
        {"q10", s.q10},
        {"q25", s.q25},
        {"q75", s.q75},
        {"q90", s.q90}}},
  };
}

std::string step_stats_csv(const StepStats& s) {
  std::string out = "trial,seed,steps,success\n";
  for (const auto& r : s.per_trial) {
    out += std::to_string(r.trial);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.steps);
    out += ',';
    out += r.success ? '1' : '0';
    out += '\n';
  }
  out += "# summary levels=" + std::to_string(s.levels);
  out += " trials=" + std::to_string(s.trials);
  out += " successes=" + std::to_string(s.successes);
  out += " failures=" + std::to_string(s.failures);
  out += " unverified=" + std::to_string(s.unverified);
  out += " mean=" + format_double(s.mean);
  out += " median=" + format_double(s.median);
  out += " q10=" + format_double(s.q10);
  out += " q25=" + format_double(s.q25);
  out += " q75=" + format_double(s.q75);
  out += " q90=" + format_double(s.q90);
  out += '\n';
  return out;
}

nlohmann::ordered_json frequency_result(const FrequencyEstimate& e) {
  return nlohmann::ordered_json{
      {"levels", e.levels},
      {"trials", e.trials},
      {"hits", e.hits},
      {"estimate", e.estimate},
      {"sigma", e.sigma},
      {"interval3",
       {{"lower", e.lower3}, {"upper", e.upper3}}},
  };
}

nlohmann::ordered_json bound_result(int levels, double frequency_bound, double bound) {
  return nlohmann::ordered_json{
      {"levels", levels},
      {"frequency_bound", frequency_bound},
      {"bound", bound},
  };
}

nlohmann::ordered_json anneal_result(const AnnealOutcome& o, const AnnealConfig& c) {
  nlohmann::ordered_json entries;
  if (o.triangle) {
    entries = std::vector<int>(o.triangle->entries().begin(), o.triangle->entries().end());
  }
  return nlohmann::ordered_json{
      {"levels", c.levels},
      {"success", o.success},
      {"steps", o.steps},
      {"final_energy", o.final_energy},
      {"config",
       {{"initial_temperature", c.initial_temperature},
        {"cooling_factor", c.cooling_factor},
        {"max_steps", c.max_steps},
        {"seed", c.seed}}},
      {"entries", std::move(entries)},
  };
}

}  // namespace magictri
