#pragma once

// Monte Carlo harness over (n, p) grids: sample binomial sets, decide the
// product-Schur property exactly and/or run the greedy colouring, aggregate
// per-cell frequencies with Wilson intervals, export CSV/JSON byte-stably.
//
// Reproducibility: every trial is fully named by (seed, trial_index, n, p);
// workers write into a preallocated slot per trial and aggregation runs in
// slot order, so thread count never changes any output byte. Cells at the
// same n share trial streams, which couples the samples monotonically in p
// (common random numbers).
//
// A greedy success certifies "not product-Schur" and is recorded as such a
// decision; a greedy failure decides nothing. Exact decisions use a quick
// geometric-progression certificate scan before the backtracking solver and
// report a per-trial "unknown" when the node budget runs out; unknowns are
// never folded into frequencies.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "schurlab/greedy.hpp"
#include "schurlab/product_schur.hpp"
#include "schurlab/sampler.hpp"
#include "schurlab/schur.hpp"

namespace schurlab {

struct ExperimentConfig {
  enum class PMode { explicit_values, power };
  enum class Method { exact, greedy, both };

  std::vector<uint64_t> n_values;
  PMode p_mode = PMode::power;
  std::vector<double> p_values;   // explicit mode
  int64_t p_exp_num = -1;         // power mode: p = factor * n^(num/den)
  int64_t p_exp_den = 11;
  std::vector<double> p_factors;  // power mode
  int r = 2;
  uint32_t trials = 100;
  uint64_t seed = 0;
  Method method = Method::both;
  bool degenerate = true;
  uint64_t budget = 200'000;  // solver decisions per trial

  static const char* method_name(Method m) {
    switch (m) {
      case Method::exact: return "exact";
      case Method::greedy: return "greedy";
      case Method::both: return "both";
    }
    return "?";
  }
  static Method method_from(const std::string& s) {
    if (s == "exact") return Method::exact;
    if (s == "greedy") return Method::greedy;
    if (s == "both") return Method::both;
    throw std::invalid_argument("unknown method: " + s);
  }

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Flat key = value text; '#' starts a comment, lists are whitespace or comma
// separated. Keys: n_values, p_mode, p_values, p_exponent (a rational like
// -1/11), p_factors, r, trials, seed, method, degenerate, budget.
inline ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig cfg;
  cfg.n_values.clear();
  std::string line;
  auto tokens = [](const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
      if (ch == ' ' || ch == '\t' || ch == ',') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  };
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (!tokens(line).empty())
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": expected key = value");
      continue;
    }
    const auto keys = tokens(line.substr(0, eq));
    const auto vals = tokens(line.substr(eq + 1));
    if (keys.size() != 1)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected a single key");
    const std::string& key = keys[0];
    auto need_one = [&]() -> const std::string& {
      if (vals.size() != 1)
        throw std::invalid_argument("config key " + key + ": expected one value");
      return vals[0];
    };
    try {
      if (key == "n_values") {
        for (const auto& v : vals) cfg.n_values.push_back(std::stoull(v));
      } else if (key == "p_mode") {
        const auto& v = need_one();
        if (v == "power") cfg.p_mode = ExperimentConfig::PMode::power;
        else if (v == "explicit") cfg.p_mode = ExperimentConfig::PMode::explicit_values;
        else throw std::invalid_argument("config p_mode: power or explicit");
      } else if (key == "p_values") {
        for (const auto& v : vals) cfg.p_values.push_back(std::stod(v));
      } else if (key == "p_exponent") {
        const auto& v = need_one();
        const auto slash = v.find('/');
        if (slash == std::string::npos) {
          cfg.p_exp_num = std::stoll(v);
          cfg.p_exp_den = 1;
        } else {
          cfg.p_exp_num = std::stoll(v.substr(0, slash));
          cfg.p_exp_den = std::stoll(v.substr(slash + 1));
        }
      } else if (key == "p_factors") {
        for (const auto& v : vals) cfg.p_factors.push_back(std::stod(v));
      } else if (key == "r") {
        cfg.r = std::stoi(need_one());
      } else if (key == "trials") {
        cfg.trials = static_cast<uint32_t>(std::stoul(need_one()));
      } else if (key == "seed") {
        cfg.seed = std::stoull(need_one());
      } else if (key == "method") {
        cfg.method = ExperimentConfig::method_from(need_one());
      } else if (key == "degenerate") {
        const auto& v = need_one();
        cfg.degenerate = (v == "true" || v == "1" || v == "yes");
      } else if (key == "budget") {
        cfg.budget = std::stoull(need_one());
      } else {
        throw std::invalid_argument("unknown config key: " + key);
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("config key " + key + ": bad value");
    }
  }
  if (cfg.n_values.empty())
    throw std::invalid_argument("config: n_values required");
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (cfg.p_mode == ExperimentConfig::PMode::explicit_values) {
    if (cfg.p_values.empty())
      throw std::invalid_argument("config: p_values required in explicit mode");
    for (double p : cfg.p_values)
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("config: probabilities must lie in [0, 1]");
  } else if (cfg.p_factors.empty()) {
    throw std::invalid_argument("config: p_factors required in power mode");
  }
  return cfg;
}

inline ExperimentConfig parse_experiment_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_experiment_config(in);
}

struct TrialRecord {
  uint64_t n = 0;
  double p = 0.0;
  uint32_t trial_index = 0;
  uint64_t set_size = 0;
  DecisionOutcome exact = DecisionOutcome::unknown;
  bool exact_ran = false;
  bool greedy_ran = false;
  bool greedy_success = false;
  std::optional<uint64_t> greedy_failed_element;
};

struct CellStats {
  uint64_t n = 0;
  double p = 0.0;
  bool p_clamped = false;
  uint32_t trials = 0;
  uint32_t schur_true = 0;   // decided product-Schur
  uint32_t schur_false = 0;  // decided not product-Schur
  uint32_t unknown = 0;
  uint32_t greedy_runs = 0;
  uint32_t greedy_successes = 0;
  uint32_t contradictions = 0;  // greedy success + exact "product-Schur"

  uint32_t decided() const { return schur_true + schur_false; }
  double schur_freq() const {
    return decided() == 0 ? std::nan("")
                          : static_cast<double>(schur_true) / decided();
  }
  double greedy_success_freq() const {
    return greedy_runs == 0 ? std::nan("")
                            : static_cast<double>(greedy_successes) / greedy_runs;
  }
  // Wilson 95% interval for the product-Schur frequency over decided trials.
  std::pair<double, double> wilson_ci(double z = 1.96) const {
    if (decided() == 0) return {0.0, 1.0};
    const double nn = decided();
    const double phat = static_cast<double>(schur_true) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (phat + z2 / (2 * nn)) / denom;
    const double half =
        z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
  }

  friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<CellStats> cells;  // n-major, p ascending within n

  uint32_t total_contradictions() const {
    uint32_t c = 0;
    for (const auto& cell : cells) c += cell.contradictions;
    return c;
  }

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

namespace detail {

struct Cell {
  uint64_t n;
  double p;
  bool clamped;
};

inline std::vector<Cell> expand_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (uint64_t n : cfg.n_values) {
    std::vector<Cell> row;
    if (cfg.p_mode == ExperimentConfig::PMode::explicit_values) {
      for (double p : cfg.p_values) row.push_back({n, p, false});
    } else {
      for (double f : cfg.p_factors) {
        auto pr = p_from_exponent(n, cfg.p_exp_num, cfg.p_exp_den, f);
        row.push_back({n, pr.value, pr.clamped});
      }
    }
    std::sort(row.begin(), row.end(),
              [](const Cell& a, const Cell& b) { return a.p < b.p; });
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return cells;
}

// Exact decision with a cheap certificate pre-pass: if the set contains a
// full geometric progression x, x^2, ..., x^L with L the forcing Schur
// length, it is product-Schur without any search (degenerate products only).
class ExactDecider {
 public:
  ExactDecider(int r, bool degenerate, uint64_t budget)
      : r_(r), degenerate_(degenerate), budget_(budget) {
    if (degenerate_ && r_ <= 3) {
      auto sn = schur_number(r_);
      if (sn.exact) forcing_len_ = static_cast<int>(sn.value);
    }
  }

  DecisionOutcome decide(const IntegerSet& s) const {
    if (forcing_len_ > 0) {
      for (uint64_t x = 2;; ++x) {
        uint64_t pw = 1;
        bool fits = true;
        for (int i = 0; i < forcing_len_; ++i) {
          if (pw > s.universe() / x) { fits = false; break; }
          pw *= x;
        }
        if (!fits) break;
        bool all = true;
        uint64_t cur = 1;
        for (int i = 0; i < forcing_len_ && all; ++i) {
          cur *= x;
          all = s.contains(cur);
        }
        if (all) return DecisionOutcome::product_schur;
      }
    }
    return is_product_schur(s, r_, degenerate_, budget_).outcome;
  }

 private:
  int r_;
  bool degenerate_;
  uint64_t budget_;
  int forcing_len_ = 0;
};

inline void run_trials(const ExperimentConfig& cfg, const std::vector<Cell>& cells,
                       std::vector<TrialRecord>& records, int threads,
                       std::ostream* progress, bool census_mode,
                       std::vector<std::optional<ForbiddenConfiguration>>* extracted,
                       std::vector<uint8_t>* one_removed) {
  const size_t total = cells.size() * cfg.trials;
  records.assign(total, {});
  if (extracted) extracted->assign(total, std::nullopt);
  if (one_removed) one_removed->assign(total, 0);

  // per-n divisor sieves, shared read-only across workers
  std::map<uint64_t, std::unique_ptr<FactorSieve>> sieves;
  const bool greedy_on = census_mode || cfg.method != ExperimentConfig::Method::exact;
  if (greedy_on) {
    for (uint64_t n : cfg.n_values)
      if (n <= 10'000'000 && !sieves.count(n))
        sieves[n] = std::make_unique<FactorSieve>(n);
  }
  std::optional<ExactDecider> decider;
  if (!census_mode && cfg.method != ExperimentConfig::Method::greedy)
    decider.emplace(cfg.r, cfg.degenerate, cfg.budget);

  std::atomic<size_t> next{0};
  std::atomic<size_t> done{0};
  std::mutex progress_mutex;

  auto worker = [&]() {
    while (true) {
      const size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      const Cell& cell = cells[idx / cfg.trials];
      const uint32_t trial = static_cast<uint32_t>(idx % cfg.trials);
      TrialRecord rec;
      rec.n = cell.n;
      rec.p = cell.p;
      rec.trial_index = trial;
      IntegerSet s = sample_binomial_set({cell.n, cell.p, cfg.seed, trial});
      if (census_mode && s.contains(1)) {
        std::vector<uint64_t> elems(s.elements().begin() + 1, s.elements().end());
        s = IntegerSet::from_elements(s.universe(), std::move(elems));
        if (one_removed) (*one_removed)[idx] = 1;
      }
      rec.set_size = s.size();
      if (greedy_on) {
        auto it = sieves.find(cell.n);
        const FactorSieve* sieve = it == sieves.end() ? nullptr : it->second.get();
        auto outcome = greedy_two_colour(s, sieve);
        rec.greedy_ran = true;
        rec.greedy_success = outcome.success;
        if (!outcome.success) {
          rec.greedy_failed_element = outcome.failed_element;
          if (census_mode && extracted)
            (*extracted)[idx] = extract_forbidden_configuration(outcome, s, sieve);
        }
      }
      if (decider) {
        rec.exact = decider->decide(s);
        rec.exact_ran = true;
      }
      records[idx] = std::move(rec);
      const size_t d = done.fetch_add(1) + 1;
      if (progress && (d % 64 == 0 || d == total)) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        *progress << "\r" << d << "/" << total << " trials" << std::flush;
      }
    }
  };

  std::vector<std::thread> pool;
  const int nthreads = std::max(1, threads);
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (progress) *progress << "\n";
}

}  // namespace detail

inline ExperimentReport run_threshold_experiment(const ExperimentConfig& cfg,
                                                 int threads = 1,
                                                 std::ostream* progress = nullptr) {
  const auto cells = detail::expand_cells(cfg);
  std::vector<TrialRecord> records;
  detail::run_trials(cfg, cells, records, threads, progress,
                     /*census_mode=*/false, nullptr, nullptr);

  ExperimentReport report;
  report.config = cfg;
  report.cells.reserve(cells.size());
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    CellStats st;
    st.n = cells[ci].n;
    st.p = cells[ci].p;
    st.p_clamped = cells[ci].clamped;
    st.trials = cfg.trials;
    for (uint32_t t = 0; t < cfg.trials; ++t) {
      const TrialRecord& rec = records[ci * cfg.trials + t];
      if (rec.greedy_ran) {
        ++st.greedy_runs;
        if (rec.greedy_success) ++st.greedy_successes;
      }
      // decided = exact decision, else the greedy one-sided bound
      if (rec.exact_ran && rec.exact != DecisionOutcome::unknown) {
        if (rec.exact == DecisionOutcome::product_schur) {
          ++st.schur_true;
          if (rec.greedy_ran && rec.greedy_success) ++st.contradictions;
        } else {
          ++st.schur_false;
        }
      } else if (rec.greedy_ran && rec.greedy_success) {
        ++st.schur_false;
      } else {
        ++st.unknown;
      }
    }
    report.cells.push_back(st);
  }
  return report;
}

struct CensusEntry {
  uint64_t n = 0;
  double p = 0.0;
  uint32_t trial_index = 0;
  uint64_t failed_element = 0;
  ForbiddenConfiguration configuration;
  int effective_size = 0;
};

struct CensusReport {
  std::vector<CensusEntry> entries;           // every greedy failure, validated
  std::map<int, uint32_t> effective_size_histogram;
  uint64_t ones_removed = 0;
  uint64_t trials_run = 0;
};

// Greedy failure census: 1 is resampled as absent (the extraction
// preconditions need 1 out of S), every failure yields a validated
// configuration.
inline CensusReport run_greedy_failure_census(const ExperimentConfig& cfg,
                                              int threads = 1,
                                              std::ostream* progress = nullptr) {
  const auto cells = detail::expand_cells(cfg);
  std::vector<TrialRecord> records;
  std::vector<std::optional<ForbiddenConfiguration>> extracted;
  std::vector<uint8_t> one_removed;
  detail::run_trials(cfg, cells, records, threads, progress,
                     /*census_mode=*/true, &extracted, &one_removed);
  CensusReport census;
  census.trials_run = records.size();
  for (size_t i = 0; i < records.size(); ++i) {
    census.ones_removed += one_removed[i];
    if (!extracted[i]) continue;
    CensusEntry entry;
    entry.n = records[i].n;
    entry.p = records[i].p;
    entry.trial_index = records[i].trial_index;
    entry.failed_element = records[i].greedy_failed_element.value_or(0);
    entry.configuration = *extracted[i];
    entry.effective_size = effective_size(entry.configuration);
    census.effective_size_histogram[entry.effective_size]++;
    census.entries.push_back(entry);
  }
  return census;
}

struct CrossingEstimate {
  uint64_t n = 0;
  bool ok = false;
  double p_cross = 0.0;
  std::string reason;  // set when not ok
};

// Per-n crossing of the empirical frequency through `level`, interpolated
// linearly in log p between the first straddling pair of cells. Refuses when
// no pair straddles or when the frequencies are provably non-monotone (one
// cell's whole interval above a later cell's).
inline std::vector<CrossingEstimate> estimate_crossing(
    const ExperimentReport& report, double level = 0.5) {
  std::vector<CrossingEstimate> out;
  for (uint64_t n : report.config.n_values) {
    CrossingEstimate est;
    est.n = n;
    std::vector<const CellStats*> cells;
    for (const auto& cell : report.cells)
      if (cell.n == n && cell.decided() > 0) cells.push_back(&cell);
    std::sort(cells.begin(), cells.end(),
              [](const CellStats* a, const CellStats* b) { return a->p < b->p; });
    bool monotone = true;
    for (size_t i = 0; i < cells.size() && monotone; ++i)
      for (size_t j = i + 1; j < cells.size() && monotone; ++j)
        if (cells[i]->wilson_ci().first > cells[j]->wilson_ci().second)
          monotone = false;
    if (!monotone) {
      est.reason = "frequencies not monotone within confidence intervals";
      out.push_back(est);
      continue;
    }
    bool found = false;
    for (size_t i = 0; i + 1 < cells.size(); ++i) {
      const double f0 = cells[i]->schur_freq(), f1 = cells[i + 1]->schur_freq();
      if (f0 <= level && level <= f1 && f1 > f0) {
        const double t = (level - f0) / (f1 - f0);
        est.p_cross = std::exp(std::log(cells[i]->p) +
                               t * (std::log(cells[i + 1]->p) - std::log(cells[i]->p)));
        est.ok = true;
        found = true;
        break;
      }
    }
    if (!found && !est.ok)
      est.reason = "no adjacent cells straddle the level";
    out.push_back(est);
  }
  return out;
}

// -------- export --------

namespace detail {

inline std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace detail

inline void write_report_csv(const ExperimentReport& report, std::ostream& out) {
  out << "n,p,trials,schur_freq,greedy_success_freq,unknown,ci_lo,ci_hi\n";
  for (const auto& cell : report.cells) {
    const auto ci = cell.wilson_ci();
    out << cell.n << ',' << detail::fmt("%.12g", cell.p) << ',' << cell.trials
        << ',' << detail::fmt("%.6f", cell.schur_freq()) << ','
        << detail::fmt("%.6f", cell.greedy_success_freq()) << ',' << cell.unknown
        << ',' << detail::fmt("%.6f", ci.first) << ','
        << detail::fmt("%.6f", ci.second) << '\n';
  }
}

inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["n_values"] = cfg.n_values;
  j["p_mode"] = cfg.p_mode == ExperimentConfig::PMode::power ? "power" : "explicit";
  j["p_values"] = cfg.p_values;
  j["p_exponent"] = {cfg.p_exp_num, cfg.p_exp_den};
  j["p_factors"] = cfg.p_factors;
  j["r"] = cfg.r;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["method"] = ExperimentConfig::method_name(cfg.method);
  j["degenerate"] = cfg.degenerate;
  j["budget"] = cfg.budget;
  return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  cfg.n_values = j.at("n_values").get<std::vector<uint64_t>>();
  cfg.p_mode = j.at("p_mode").get<std::string>() == "power"
                   ? ExperimentConfig::PMode::power
                   : ExperimentConfig::PMode::explicit_values;
  cfg.p_values = j.at("p_values").get<std::vector<double>>();
  cfg.p_exp_num = j.at("p_exponent").at(0).get<int64_t>();
  cfg.p_exp_den = j.at("p_exponent").at(1).get<int64_t>();
  cfg.p_factors = j.at("p_factors").get<std::vector<double>>();
  cfg.r = j.at("r").get<int>();
  cfg.trials = j.at("trials").get<uint32_t>();
  cfg.seed = j.at("seed").get<uint64_t>();
  cfg.method = ExperimentConfig::method_from(j.at("method").get<std::string>());
  cfg.degenerate = j.at("degenerate").get<bool>();
  cfg.budget = j.at("budget").get<uint64_t>();
  return cfg;
}

inline nlohmann::json report_to_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["config"] = config_to_json(report.config);
  j["cells"] = nlohmann::json::array();
  for (const auto& cell : report.cells) {
    const auto ci = cell.wilson_ci();
    nlohmann::json c;
    c["n"] = cell.n;
    c["p"] = cell.p;
    c["p_clamped"] = cell.p_clamped;
    c["trials"] = cell.trials;
    c["schur_true"] = cell.schur_true;
    c["schur_false"] = cell.schur_false;
    c["unknown"] = cell.unknown;
    c["greedy_runs"] = cell.greedy_runs;
    c["greedy_successes"] = cell.greedy_successes;
    c["contradictions"] = cell.contradictions;
    c["ci_lo"] = ci.first;
    c["ci_hi"] = ci.second;
    j["cells"].push_back(c);
  }
  j["contradictions_total"] = report.total_contradictions();
  return j;
}

inline ExperimentReport report_from_json(const nlohmann::json& j) {
  ExperimentReport report;
  report.config = config_from_json(j.at("config"));
  for (const auto& c : j.at("cells")) {
    CellStats cell;
    cell.n = c.at("n").get<uint64_t>();
    cell.p = c.at("p").get<double>();
    cell.p_clamped = c.at("p_clamped").get<bool>();
    cell.trials = c.at("trials").get<uint32_t>();
    cell.schur_true = c.at("schur_true").get<uint32_t>();
    cell.schur_false = c.at("schur_false").get<uint32_t>();
    cell.unknown = c.at("unknown").get<uint32_t>();
    cell.greedy_runs = c.at("greedy_runs").get<uint32_t>();
    cell.greedy_successes = c.at("greedy_successes").get<uint32_t>();
    cell.contradictions = c.at("contradictions").get<uint32_t>();
    report.cells.push_back(cell);
  }
  return report;
}

inline void export_report(const ExperimentReport& report, const std::string& format,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  if (format == "csv") {
    write_report_csv(report, out);
  } else if (format == "json") {
    out << report_to_json(report).dump(2) << '\n';
  } else {
    throw std::invalid_argument("export format must be csv or json");
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace schurlab
