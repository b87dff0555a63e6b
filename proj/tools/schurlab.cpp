// schurlab: monochromatic products in random integer sets, from the command
// line. One subcommand per operation family; set files are newline-delimited
// decimals under an "n=<universe>" header; every subcommand takes --json for
// machine-readable output.
//
// Exit codes: 0 success/decided, 1 usage error, 2 budget exhausted / unknown,
// 3 I/O error.
//
// Each --help carries examples; the test suite executes every one of them
// verbatim. Examples referring to example.set mean the file
//   n=6 / 2 / 3 / 6        (one entry per line)
// and example.cfg means the experiment config shown in `experiment --help`.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "schurlab/schurlab.hpp"

namespace {

using nlohmann::json;
using namespace schurlab;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBudget = 2;
constexpr int kIo = 3;

uint64_t default_seed() {
  if (const char* env = std::getenv("SCHURLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("SCHURLAB_SEED is not an integer");
    }
  }
  return 0;
}

std::vector<uint64_t> parse_u64_list(const std::string& text) {
  std::vector<uint64_t> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(std::stoull(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  return out;
}

std::string join_u64(const std::vector<uint64_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string colouring_assignments(const RColouring& col) {
  std::string out;
  for (size_t i = 0; i < col.domain.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(col.domain[i]);
    out += '=';
    out += static_cast<char>('A' + col.colours[i] - 1);
  }
  return out;
}

json colouring_to_json(const RColouring& col) {
  json j;
  j["r"] = col.r;
  j["domain"] = col.domain;
  std::vector<int> cs(col.colours.begin(), col.colours.end());
  j["colours"] = cs;
  return j;
}

IntegerSet load_set(const std::string& path) {
  if (path == "-") return read_set(std::cin);
  return read_set_file(path);
}

// ---- subcommand state ----

struct SampleArgs {
  uint64_t n = 0;
  double p = -1.0;
  std::string exponent;
  double factor = 1.0;
  uint64_t trial = 0;
  std::string out;
  uint64_t seed = 0;
  bool json_out = false;
};

struct FileArgs {
  std::string input;
  int colours = 2;
  bool no_degenerate = false;
  uint64_t budget = kDefaultProductSchurBudget;
  bool json_out = false;
};

int run_sample(const SampleArgs& a) {
  double p = a.p;
  bool clamped = false;
  if (!a.exponent.empty()) {
    const auto slash = a.exponent.find('/');
    const int64_t num = std::stoll(a.exponent.substr(0, slash));
    const int64_t den =
        slash == std::string::npos ? 1 : std::stoll(a.exponent.substr(slash + 1));
    auto prob = p_from_exponent(a.n, num, den, a.factor);
    p = prob.value;
    clamped = prob.clamped;
  } else if (p < 0.0) {
    throw std::invalid_argument("sample: give --p or --exponent");
  }
  auto s = sample_binomial_set({a.n, p, a.seed, a.trial});
  if (clamped) std::cerr << "note: probability clamped to 1\n";
  if (a.json_out) {
    json j;
    j["n"] = a.n;
    j["p"] = p;
    j["seed"] = a.seed;
    j["trial"] = a.trial;
    j["size"] = s.size();
    j["elements"] = s.elements();
    std::cout << j.dump() << '\n';
    return kOk;
  }
  if (a.out.empty()) {
    write_set(s, std::cout);
  } else {
    write_set_file(s, a.out);
    std::cout << "wrote " << a.out << " (" << s.size() << " elements)\n";
  }
  return kOk;
}

int run_greedy(const FileArgs& a) {
  auto s = load_set(a.input);
  std::unique_ptr<FactorSieve> sieve;
  if (s.max_element() >= 2 && s.max_element() <= 10'000'000)
    sieve = std::make_unique<FactorSieve>(s.max_element());
  auto out = greedy_two_colour(s, sieve.get());

  json j;
  j["status"] = out.success ? "success" : "failure";
  j["R"] = out.colouring.r_class.elements();
  j["B"] = out.colouring.b_class.elements();
  if (!a.json_out) {
    std::cout << "status: " << (out.success ? "success" : "failure") << '\n';
    std::cout << "R: " << join_u64(out.colouring.r_class.elements()) << '\n';
    std::cout << "B: " << join_u64(out.colouring.b_class.elements()) << '\n';
  }
  if (!out.success) {
    const auto& w = *out.witnesses;
    if (!a.json_out) {
      std::cout << "failed: " << *out.failed_element << '\n';
      std::cout << "witness-B: " << w.blue_pair[0] << ' ' << w.blue_pair[1] << '\n';
      std::cout << "witness-R: " << w.red_tuple[0] << ' ' << w.red_tuple[1] << ' '
                << w.red_tuple[2] << '\n';
    }
    j["failed"] = *out.failed_element;
    j["witness_B"] = w.blue_pair;
    j["witness_R"] = w.red_tuple;
    if (s.contains(1)) {
      if (!a.json_out) std::cout << "configuration: unavailable (1 in S)\n";
      j["configuration"] = nullptr;
    } else {
      auto cfg = extract_forbidden_configuration(out, s, sieve.get());
      std::string row;
      for (uint64_t entry : cfg.as_array()) {
        if (!row.empty()) row += ',';
        row += std::to_string(entry);
      }
      if (!a.json_out) {
        std::cout << "configuration: " << row << '\n';
        std::cout << "effective-size: " << effective_size(cfg) << '\n';
      }
      j["configuration"] = cfg.as_array();
      j["effective_size"] = effective_size(cfg);
    }
  }
  if (a.json_out) std::cout << j.dump() << '\n';
  return kOk;
}

int run_decide(const FileArgs& a) {
  auto s = load_set(a.input);
  auto res = is_product_schur(s, a.colours, !a.no_degenerate, a.budget);
  if (a.json_out) {
    json j;
    j["outcome"] = to_string(res.outcome);
    j["triples"] = res.triple_count;
    j["nodes"] = res.nodes;
    if (res.witness) j["witness"] = colouring_to_json(*res.witness);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << to_string(res.outcome) << '\n';
    if (res.witness)
      std::cout << "witness: " << colouring_assignments(*res.witness) << '\n';
  }
  return res.outcome == DecisionOutcome::unknown ? kBudget : kOk;
}

int run_schur_numbers(int r, const std::string& mode_name, uint64_t budget,
                      bool json_out) {
  const auto mode = sum_mode_from_string(mode_name);
  const auto res = mode == SumConstraintMode::weak_shifted
                       ? weak_double_sum_max(r, budget)
                       : schur_number(r, mode, budget);
  json j;
  j["r"] = r;
  j["mode"] = mode_name;
  j["exact"] = res.exact;
  j["max_colourable"] = res.max_colourable;
  j["nodes"] = res.nodes;
  j["seconds"] = res.seconds;
  if (res.exact) j["value"] = res.value;
  j["witness"] = res.witness.to_letter_string();
  if (json_out) {
    std::cout << j.dump() << '\n';
  } else if (res.exact) {
    std::cout << res.value << '\n';
    std::cout << "witness: " << res.witness.to_letter_string() << '\n';
  } else {
    std::cout << "unknown (colourable to " << res.max_colourable << ")\n";
    std::cout << "witness: " << res.witness.to_letter_string() << '\n';
  }
  return res.exact ? kOk : kBudget;
}

struct PatternArgs {
  std::string params;
  bool verify = false;
  bool find = false;
  std::string input;
  std::string delta = "1e-3";
  bool json_out = false;
};

int run_pattern(const PatternArgs& a) {
  if (a.find) {
    auto s = load_set(a.input);
    auto plan = make_interval_plan(s.universe(), parse_decimal_rational(a.delta));
    auto found = find_pattern(s, plan);
    if (a.json_out) {
      json j;
      if (found) {
        j["found"] = {{"a", found->a}, {"b", found->b}, {"c", found->c}, {"d", found->d}};
        j["values"] = build_pattern(*found).values;
      } else {
        j["found"] = nullptr;
      }
      std::cout << j.dump() << '\n';
      return kOk;
    }
    if (found)
      std::cout << "found: a=" << found->a << " b=" << found->b
                << " c=" << found->c << " d=" << found->d << '\n';
    else
      std::cout << "none\n";
    return kOk;
  }
  const auto parts = parse_u64_list(a.params);
  if (parts.size() != 4)
    throw std::invalid_argument("pattern: --params needs a,b,c,d");
  const PatternParams params{parts[0], parts[1], parts[2], parts[3]};
  auto pat = build_pattern(params);
  bool verified = false;
  if (a.verify) verified = verify_pattern_product_schur(params);
  if (a.json_out) {
    json j;
    j["params"] = {{"a", params.a}, {"b", params.b}, {"c", params.c}, {"d", params.d}};
    j["values"] = pat.values;
    if (a.verify) j["product_schur"] = verified;
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "a=" << params.a << " b=" << params.b << " c=" << params.c
            << " d=" << params.d << '\n';
  std::cout << "values:";
  for (uint64_t v : pat.values) std::cout << ' ' << v;
  std::cout << '\n';
  if (a.verify) std::cout << "product-Schur: " << (verified ? "yes" : "no") << '\n';
  return kOk;
}

int run_interval_colour(const FileArgs& a) {
  auto s = load_set(a.input);
  auto plan = build_interval_colouring(std::max<uint64_t>(s.universe(), 2), a.colours);
  auto out = colour_set_by_intervals(s, plan);
  const size_t mono =
      find_monochromatic_product(s, out.colouring, true).has_value() ? 1 : 0;
  if (a.json_out) {
    json j;
    j["sprime"] = plan.sprime;
    j["psi"] = plan.psi.to_letter_string();
    j["uncolourable"] = out.uncolourable;
    j["colouring"] = colouring_to_json(out.colouring);
    j["monochromatic_products"] = mono;
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "S'(" << a.colours << ")=" << plan.sprime << '\n';
  std::cout << "psi: " << plan.psi.to_letter_string() << '\n';
  std::cout << "uncolourable: "
            << (out.uncolourable.empty() ? "(none)" : join_u64(out.uncolourable))
            << '\n';
  std::cout << "colouring: " << colouring_assignments(out.colouring) << '\n';
  std::cout << "monochromatic-products: " << mono << '\n';
  return kOk;
}

int run_power_family(uint64_t n, int colours, uint64_t budget, bool json_out) {
  auto sr = schur_number(colours, SumConstraintMode::sums, budget);
  if (!sr.exact) {
    std::cout << "unknown (forcing number search exceeded budget)\n";
    return kBudget;
  }
  const int len = static_cast<int>(sr.value);
  auto family = greedy_disjoint_power_family(n, len);
  const uint64_t bound = power_family_size_bound(n, len);
  if (json_out) {
    json j;
    j["schur_number"] = sr.value;
    j["bound"] = bound;
    j["family"] = json::array();
    for (const auto& u : family)
      j["family"].push_back({{"x", u.base}, {"values", u.values}});
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "S(" << colours << ")=" << sr.value << '\n';
  for (const auto& u : family)
    std::cout << "x=" << u.base << ": " << join_u64(u.values) << '\n';
  std::cout << "family-size: " << family.size() << " (bound " << bound << ")\n";
  return kOk;
}

int run_experiment(const std::string& config_path, const std::string& out_base,
                   int threads, uint64_t seed, bool seed_given, bool json_out) {
  auto cfg = parse_experiment_config_file(config_path);
  if (seed_given) cfg.seed = seed;
  auto report = run_threshold_experiment(cfg, threads, &std::cerr);
  export_report(report, "csv", out_base + ".csv");
  export_report(report, "json", out_base + ".json");
  if (json_out) {
    std::cout << report_to_json(report).dump() << '\n';
  } else {
    std::cout << "wrote " << out_base << ".csv\n";
    std::cout << "wrote " << out_base << ".json\n";
  }
  return kOk;
}

int run_verify(const std::string& text, const std::string& mode_name, bool json_out) {
  const auto mode = sum_mode_from_string(mode_name);
  auto col = RColouring::from_letter_string(text);
  auto res = verify_sum_colouring(col, mode);
  if (json_out) {
    json j;
    j["valid"] = res.valid;
    if (res.violation)
      j["violation"] = {{"a", res.violation->a},
                        {"b", res.violation->b},
                        {"c", res.violation->c},
                        {"shifted", res.violation->shifted}};
    std::cout << j.dump() << '\n';
    return kOk;
  }
  if (res.valid) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid: (" << res.violation->a << ',' << res.violation->b
              << ',' << res.violation->c << ") "
              << (res.violation->shifted ? "shifted sum" : "sum") << '\n';
  }
  return kOk;
}

struct LemmaArgs {
  std::string exponents;
  uint64_t t = 1;
  uint64_t n = 1;
  uint64_t budget = 50'000'000;
  bool json_out = false;
};

int run_lemma_ei(const LemmaArgs& a) {
  TupleCountQuery q;
  for (uint64_t e : parse_u64_list(a.exponents))
    q.exponents.push_back(static_cast<uint32_t>(e));
  q.t = a.t;
  q.n = a.n;
  auto table = build_divisor_table(a.n);
  auto res = count_bounded_product_tuples(q, table, a.budget);
  if (a.json_out) {
    json j;
    j["count"] = res.count;
    j["bound_numerator"] = res.bound_numerator.to_string();
    j["bound_denominator"] = res.bound_denominator.to_string();
    j["holds"] = res.bound_holds;
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "count: " << res.count << '\n';
  std::cout << "bound: " << res.bound_numerator.to_string() << '/'
            << res.bound_denominator.to_string() << '\n';
  std::cout << "holds: " << (res.bound_holds ? "yes" : "no") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "schurlab: exact decisions, greedy colourings, Schur numbers, explicit\n"
      "constructions and Monte Carlo threshold experiments for monochromatic\n"
      "products in random integer sets"};
  app.require_subcommand(1);

  int exit_code = kOk;
  uint64_t seed = 0;
  bool seed_given = false;

  try {
    seed = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  // sample
  SampleArgs sample_args;
  sample_args.seed = seed;
  auto* sample = app.add_subcommand(
      "sample", "Draw a reproducible binomial random subset of [n]");
  sample->add_option("--n", sample_args.n, "universe size")->required();
  sample->add_option("--p", sample_args.p, "inclusion probability in [0,1]");
  sample->add_option("--exponent", sample_args.exponent,
                     "rational exponent for p = factor * n^(num/den), e.g. -1/11");
  sample->add_option("--factor", sample_args.factor, "factor for --exponent");
  sample->add_option("--trial", sample_args.trial, "trial index (stream selector)");
  sample->add_option("--seed", sample_args.seed, "random seed");
  sample->add_option("--out", sample_args.out, "output set file (default stdout)");
  sample->add_flag("--json", sample_args.json_out, "JSON output");
  sample->footer(
      "Examples:\n"
      "  $ schurlab sample --n 6 --p 1\n"
      "  n=6\n"
      "  1\n"
      "  2\n"
      "  3\n"
      "  4\n"
      "  5\n"
      "  6\n");

  // greedy
  FileArgs greedy_args;
  auto* greedy = app.add_subcommand(
      "greedy",
      "Run the increasing-order two-colour greedy; on failure print the "
      "extracted twelve-entry failure certificate");
  greedy->add_option("--input", greedy_args.input, "set file ('-' for stdin)")
      ->required();
  greedy->add_flag("--json", greedy_args.json_out, "JSON output");
  greedy->footer(
      "Examples (example.set holds: n=6, elements 2 3 6):\n"
      "  $ schurlab greedy --input example.set\n"
      "  status: success\n"
      "  R: 2 3\n"
      "  B: 6\n");

  // decide
  FileArgs decide_args;
  auto* decide = app.add_subcommand(
      "decide", "Exactly decide whether a set is r-product-Schur");
  decide->add_option("--input", decide_args.input, "set file ('-' for stdin)")
      ->required();
  decide->add_option("--colours", decide_args.colours, "number of colours r")
      ->required();
  decide->add_flag("--no-degenerate", decide_args.no_degenerate,
                   "ignore squares a*a = c");
  decide->add_option("--budget", decide_args.budget, "search decision budget");
  decide->add_flag("--json", decide_args.json_out, "JSON output");
  decide->footer(
      "Examples (example.set holds: n=6, elements 2 3 6):\n"
      "  $ schurlab decide --input example.set --colours 2\n"
      "  not product-Schur\n"
      "  witness: 2=A 3=A 6=B\n");

  // schur-numbers
  int sn_r = 2;
  std::string sn_mode = "sums";
  uint64_t sn_budget = kDefaultSumSearchBudget;
  bool sn_json = false;
  auto* sn = app.add_subcommand(
      "schur-numbers",
      "Forcing numbers for monochromatic sums (mode sums), sums+shifted sums "
      "(mode shifted), and the largest universe colourable under the weak "
      "variant that exempts 1+1=2 (mode weak)");
  sn->add_option("--r", sn_r, "number of colours")->required();
  sn->add_option("--mode", sn_mode, "sums | shifted | weak");
  sn->add_option("--budget", sn_budget, "search node budget");
  sn->add_flag("--json", sn_json, "JSON output");
  sn->footer(
      "Examples:\n"
      "  $ schurlab schur-numbers --r 2 --mode sums\n"
      "  5\n"
      "  witness: ABBA\n");

  // pattern
  PatternArgs pattern_args;
  auto* pattern = app.add_subcommand(
      "pattern",
      "Build / verify the fourteen-element product pattern, or search a set "
      "for one through the staged interval plan");
  pattern->add_option("--params", pattern_args.params, "generators a,b,c,d");
  pattern->add_flag("--verify", pattern_args.verify,
                    "confirm the pattern forces a monochromatic product");
  pattern->add_flag("--find", pattern_args.find, "search a set instead");
  pattern->add_option("--input", pattern_args.input, "set file for --find");
  pattern->add_option("--delta", pattern_args.delta,
                      "interval shrink parameter (rational, default 1e-3)");
  pattern->add_flag("--json", pattern_args.json_out, "JSON output");
  pattern->footer(
      "Examples:\n"
      "  $ schurlab pattern --params 2,3,5,7 --verify\n"
      "  a=2 b=3 c=5 d=7\n"
      "  values: 2 3 6 5 10 30 60 180 7 14 21 42 28 84\n"
      "  product-Schur: yes\n");

  // interval-colour
  FileArgs ic_args;
  auto* ic = app.add_subcommand(
      "interval-colour",
      "Colour a set through the exponent intervals (n^(i/S'), n^((i+1)/S')] "
      "and report elements too small to be covered");
  ic->add_option("--input", ic_args.input, "set file ('-' for stdin)")->required();
  ic->add_option("--colours", ic_args.colours, "number of colours r")->required();
  ic->add_flag("--json", ic_args.json_out, "JSON output");
  ic->footer(
      "Examples (example.set holds: n=6, elements 2 3 6):\n"
      "  $ schurlab interval-colour --input example.set --colours 2\n"
      "  S'(2)=5\n"
      "  psi: ABBA\n"
      "  uncolourable: (none)\n"
      "  colouring: 2=A 3=B 6=A\n"
      "  monochromatic-products: 0\n");

  // power-family
  uint64_t pf_n = 0;
  int pf_colours = 2;
  uint64_t pf_budget = kDefaultSumSearchBudget;
  bool pf_json = false;
  auto* pf = app.add_subcommand(
      "power-family",
      "Greedily build a disjoint family of geometric patterns x..x^S(r), each "
      "r-product-Schur");
  pf->add_option("--n", pf_n, "universe size")->required();
  pf->add_option("--colours", pf_colours, "number of colours r")->required();
  pf->add_option("--budget", pf_budget, "forcing-number search budget");
  pf->add_flag("--json", pf_json, "JSON output");
  pf->footer(
      "Examples:\n"
      "  $ schurlab power-family --n 100 --colours 2\n"
      "  S(2)=5\n"
      "  x=2: 2 4 8 16 32\n"
      "  family-size: 1 (bound 0)\n");

  // experiment
  std::string exp_config, exp_out = "report";
  int exp_threads = 1;
  bool exp_json = false;
  uint64_t exp_seed = 0;
  auto* exp = app.add_subcommand(
      "experiment",
      "Monte Carlo estimate of Pr([n]_p is r-product-Schur) and greedy success "
      "rates over an (n, p) grid; writes <out>.csv and <out>.json");
  exp->add_option("--config", exp_config, "flat key = value config file")->required();
  exp->add_option("--out", exp_out, "output base path");
  exp->add_option("--threads", exp_threads, "worker threads");
  auto* exp_seed_opt =
      exp->add_option("--seed", exp_seed, "override the config seed");
  exp->add_flag("--json", exp_json, "print the JSON report to stdout too");
  exp->footer(
      "Config keys: n_values, p_mode (power|explicit), p_exponent (e.g. -1/11),\n"
      "p_factors, p_values, r, trials, seed, method (exact|greedy|both),\n"
      "degenerate, budget.\n"
      "Examples (example.cfg holds: n_values = 32 / p_mode = explicit /\n"
      "p_values = 0 1 / trials = 2 / r = 2 / method = both / seed = 1):\n"
      "  $ schurlab experiment --config example.cfg --out results\n"
      "  wrote results.csv\n"
      "  wrote results.json\n");

  // verify
  std::string v_string, v_mode = "sums";
  bool v_json = false;
  auto* verify = app.add_subcommand(
      "verify", "Check a positional colouring string against a sum mode");
  verify->add_option("--string", v_string, "colouring, letters A..Z")->required();
  verify->add_option("--mode", v_mode, "sums | shifted | weak");
  verify->add_flag("--json", v_json, "JSON output");
  verify->footer(
      "Examples:\n"
      "  $ schurlab verify --string AABBBACCCACCCABBBA --mode weak\n"
      "  valid\n"
      "  $ schurlab verify --string AAAAA --mode sums\n"
      "  invalid: (1,1,2) sum\n");

  // lemma-ei
  LemmaArgs lemma_args;
  auto* lemma = app.add_subcommand(
      "lemma-ei",
      "Count exponent-weighted tuples with bounded product and check the "
      "n * t^(k-e) * D(n)^k bound exactly");
  lemma->add_option("--exponents", lemma_args.exponents, "e.g. 1,2,2")->required();
  lemma->add_option("--t", lemma_args.t, "lower bound for squared coordinates");
  lemma->add_option("--n", lemma_args.n, "product cap")->required();
  lemma->add_option("--budget", lemma_args.budget, "enumeration budget");
  lemma->add_flag("--json", lemma_args.json_out, "JSON output");
  lemma->footer(
      "Examples:\n"
      "  $ schurlab lemma-ei --exponents 1 --t 1 --n 10\n"
      "  count: 10\n"
      "  bound: 40/1\n"
      "  holds: yes\n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sample->parsed()) exit_code = run_sample(sample_args);
    else if (greedy->parsed()) exit_code = run_greedy(greedy_args);
    else if (decide->parsed()) exit_code = run_decide(decide_args);
    else if (sn->parsed()) exit_code = run_schur_numbers(sn_r, sn_mode, sn_budget, sn_json);
    else if (pattern->parsed()) exit_code = run_pattern(pattern_args);
    else if (ic->parsed()) exit_code = run_interval_colour(ic_args);
    else if (pf->parsed()) exit_code = run_power_family(pf_n, pf_colours, pf_budget, pf_json);
    else if (exp->parsed())
      exit_code = run_experiment(exp_config, exp_out, exp_threads, exp_seed,
                                 exp_seed_opt->count() > 0, exp_json);
    else if (verify->parsed()) exit_code = run_verify(v_string, v_mode, v_json);
    else if (lemma->parsed()) exit_code = run_lemma_ei(lemma_args);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const IntervalPlanError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return exit_code;
}
