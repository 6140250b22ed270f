#include "wzsum/suite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "wzsum/certificate_file.hpp"
#include "wzsum/harmonic.hpp"
#include "wzsum/jet_oracle.hpp"
#include "wzsum/legendre.hpp"
#include "wzsum/params.hpp"

namespace wzsum {

std::vector<WZPair> load_pairs(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir))
    if (item.is_regular_file() && item.path().extension() == ".wz") files.push_back(item.path());
  std::sort(files.begin(), files.end());
  std::vector<WZPair> pairs;
  for (const auto& f : files) pairs.push_back(load_certificate(f));
  return pairs;
}

namespace {

using Job = std::function<std::vector<CheckRow>()>;

bool selected(const SuiteConfig& config, std::string_view name) {
  return config.filter.empty() || std::find(config.filter.begin(), config.filter.end(), name) != config.filter.end();
}

/// Mutations addressed to `target`, with the "<target>:" prefix removed.
std::vector<std::string> mutations_for(const SuiteConfig& config, std::string_view target) {
  std::vector<std::string> out;
  for (const auto& m : config.mutations) {
    const auto colon = m.find(':');
    if (colon != std::string::npos && std::string_view(m).substr(0, colon) == target) out.push_back(m.substr(colon + 1));
  }
  return out;
}

std::vector<CheckRow> jet_rows(const JetDerivation& d, const SuiteConfig& config) {
  const IdentityEntry& entry = find_entry(d.derived_id);
  const long n_max = config.n_max.value_or(std::min(entry.default_n_max, config.jet_n_max));
  const auto names = entry.rational_params();
  std::vector<CheckRow> rows;
  for (long n = entry.n_min; n <= n_max; ++n) {
    if (names.empty()) {
      rows.push_back(jet_check(d, Point<Rational>{n, {}}));
      continue;
    }
    const Rejector reject = [&](const Assignment& a) -> std::optional<std::string> {
      return entry.exclude ? entry.exclude(Point<Rational>{n, a}) : std::nullopt;
    };
    for (const auto& draw : draw_assignments(names, config.samples, cell_seed(config.seed, entry.id, n), reject)) {
      if (!draw) continue;
      rows.push_back(jet_check(d, Point<Rational>{n, *draw}));
    }
  }
  return rows;
}

std::vector<CheckRow> pair_rows(const WZPair& pair, const SuiteConfig& config) {
  const long n_max = config.n_max.value_or(config.wz_n_max);
  const std::uint64_t seed = cell_seed(config.seed, pair.name, -1);
  VerificationReport report = verify_wz_pair(pair, n_max, config.samples, seed);
  std::vector<CheckRow> rows = std::move(report.rows);
  auto sums = telescoping_rows(pair, n_max, draw_pair_params(pair, config.samples, seed));
  rows.insert(rows.end(), std::make_move_iterator(sums.begin()), std::make_move_iterator(sums.end()));
  return rows;
}

std::vector<std::vector<CheckRow>> run_jobs(const std::vector<Job>& jobs, unsigned threads) {
  std::vector<std::vector<CheckRow>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = jobs[i]();
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return results;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  long widest = std::max(config.wz_n_max, config.jet_n_max);
  for (const auto& e : catalog()) widest = std::max(widest, e.default_n_max);
  if (config.n_max) widest = std::max(widest, *config.n_max);
  warm_harmonic_cache(2 * widest + 2);
  (void)central_binomial(2 * widest + 2);

  // Mutations are resolved up front so a bad one fails before any work.
  std::vector<Job> jobs;
  for (const auto& entry : catalog()) {
    if (!selected(config, entry.id)) continue;
    IdentityEntry e = entry;
    for (const auto& m : mutations_for(config, entry.id)) e = mutated_entry(e, m);
    CheckConfig check{config.n_max, config.samples, config.seed};
    jobs.push_back([e = std::move(e), check] { return check_identity(e, check); });
  }
  for (const auto& d : jet_derivations()) {
    if (!selected(config, d.derived_id)) continue;
    jobs.push_back([&d, &config] { return jet_rows(d, config); });
  }
  if (!config.fixtures.empty()) {
    for (const auto& loaded : load_pairs(config.fixtures)) {
      if (!selected(config, loaded.name)) continue;
      WZPair pair = loaded;
      for (const auto& m : mutations_for(config, loaded.name)) pair = mutated_pair(pair, m);
      jobs.push_back([pair = std::move(pair), &config] { return pair_rows(pair, config); });
    }
  }

  SuiteReport report;
  report.seed = config.seed;
  for (auto& chunk : run_jobs(jobs, config.threads))
    for (auto& row : chunk) {
      report.summary.count(row.status);
      report.rows.push_back(std::move(row));
    }
  return report;
}

}  // namespace wzsum
