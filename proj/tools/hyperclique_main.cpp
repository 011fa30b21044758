// hyperclique: even-order kernel hypergraph clustering toolkit.
//
// Subcommands: cluster, sweep, oracle-check, heat-convergence, bench.
// Exit codes: 0 success, 1 configuration error, 2 data error,
//             3 numerical error, 4 consistency-oracle violation.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hyc/baselines.hpp"
#include "hyc/common.hpp"
#include "hyc/eval.hpp"
#include "hyc/heat.hpp"
#include "hyc/hypergraph.hpp"
#include "hyc/io.hpp"
#include "hyc/kernels.hpp"
#include "hyc/oracles.hpp"
#include "hyc/rng.hpp"
#include "hyc/spectral.hpp"

namespace {

using hyc::ConfigError;
using hyc::DataError;

// ---------------------------------------------------------------------------
// key=value configuration file
// ---------------------------------------------------------------------------

const std::vector<std::string> kKnownKeys = {
    "seed",    "k",         "m",       "kernel",  "gamma",
    "degree",  "offset",    "modeling", "restarts", "max_iters",
    "embed.row_normalize",  "shift",   "oracle.max_entries", "workers",
    "label_col"};

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::map<std::string, std::string> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string stripped = trim(line);
    if (stripped.empty()) continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key=value, got: " + stripped);
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    bool known = false;
    for (const std::string& k : kKnownKeys) known = known || k == key;
    if (!known)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": unknown config key: " + key);
    values[key] = value;
  }
  return values;
}

// Pre-scan for --config so file values can become defaults before parsing.
std::string find_config_arg(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return {};
}

class FileDefaults {
 public:
  explicit FileDefaults(std::map<std::string, std::string> values)
      : values_(std::move(values)) {}

  std::string str(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }
  double num(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      std::size_t used = 0;
      double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("config key " + key + ": not a number: " + it->second);
    }
  }
  long long integer(const std::string& key, long long fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      std::size_t used = 0;
      long long v = std::stoll(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("config key " + key + ": not an integer: " + it->second);
    }
  }
  std::uint64_t seed(std::uint64_t fallback) const {
    auto it = values_.find("seed");
    if (it == values_.end()) return fallback;
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("config key seed: not an unsigned integer: " + it->second);
    }
  }
  bool flag(const std::string& key, bool fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw ConfigError("config key " + key + ": expected true/false: " + it->second);
  }

 private:
  std::map<std::string, std::string> values_;
};

// ---------------------------------------------------------------------------
// small parsers / formatting
// ---------------------------------------------------------------------------

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) parts.push_back(cur);
  return parts;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const std::string& p : split_commas(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(p, &used));
      if (used != p.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError(what + ": not a number: " + p);
    }
  }
  if (out.empty()) throw ConfigError(what + ": empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const std::string& p : split_commas(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(p, &used));
      if (used != p.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError(what + ": not an integer: " + p);
    }
  }
  if (out.empty()) throw ConfigError(what + ": empty list");
  return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const std::string& p : split_commas(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(p, &used));
      if (used != p.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError(what + ": not an unsigned integer: " + p);
    }
  }
  if (out.empty()) throw ConfigError(what + ": empty list");
  return out;
}

hyc::ShiftSpec parse_shift(const std::string& text) {
  if (text == "none") return hyc::ShiftSpec::none();
  if (text == "min-to-zero") return hyc::ShiftSpec::min_to_zero();
  if (text.rfind("add:", 0) == 0) {
    try {
      std::size_t used = 0;
      std::string num = text.substr(4);
      double c = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument("trailing");
      return hyc::ShiftSpec::add_constant(c);
    } catch (const std::exception&) {
      throw ConfigError("shift: bad constant in: " + text);
    }
  }
  throw ConfigError("shift: expected none, min-to-zero or add:<c>, got: " + text);
}

hyc::KernelKind parse_kernel_kind(const std::string& name) {
  if (name == "gaussian") return hyc::KernelKind::gaussian;
  if (name == "polynomial") return hyc::KernelKind::polynomial;
  if (name == "linear") return hyc::KernelKind::linear;
  throw ConfigError("kernel: expected gaussian, polynomial or linear, got: " + name);
}

hyc::KernelSpec make_kernel(const std::string& kind, double gamma, int degree,
                            double offset) {
  switch (parse_kernel_kind(kind)) {
    case hyc::KernelKind::gaussian:
      return hyc::KernelSpec::gaussian_spec(gamma);
    case hyc::KernelKind::polynomial:
      return hyc::KernelSpec::polynomial_spec(degree, offset);
    default:
      return hyc::KernelSpec::linear_spec();
  }
}

std::string join_doubles(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += hyc::format_double(xs[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_seeds(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// Output sink: a file when --output is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DataError("cannot open output file: " + path);
      out_ = &file_;
    }
  }
  std::ostream& out() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

double wall_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

// ---------------------------------------------------------------------------
// shared option bundle for cluster/sweep
// ---------------------------------------------------------------------------

struct CommonOpts {
  std::string input;
  std::string label_col;
  std::string output;
  std::uint64_t seed = 42;
  int k = 2;
  int restarts = 100;
  int max_iters = 300;
  bool row_normalize = false;
  std::string shift = "none";
  std::string kernel = "gaussian";
  double gamma = 1.0;
  int degree = 3;
  double offset = 1.0;
  std::string modeling = "biclique";
  long long max_entries = static_cast<long long>(hyc::kDefaultOracleGuard);
};

void init_from_file(CommonOpts& o, const FileDefaults& file) {
  o.seed = file.seed(42);
  o.k = static_cast<int>(file.integer("k", o.k));
  o.restarts = static_cast<int>(file.integer("restarts", o.restarts));
  o.max_iters = static_cast<int>(file.integer("max_iters", o.max_iters));
  o.row_normalize = file.flag("embed.row_normalize", o.row_normalize);
  o.shift = file.str("shift", o.shift);
  o.kernel = file.str("kernel", o.kernel);
  o.gamma = file.num("gamma", o.gamma);
  o.degree = static_cast<int>(file.integer("degree", o.degree));
  o.offset = file.num("offset", o.offset);
  o.modeling = file.str("modeling", o.modeling);
  o.max_entries = file.integer("oracle.max_entries", o.max_entries);
  o.label_col = file.str("label_col", "last");
}

void add_seed_option(CLI::App* sub, std::uint64_t& seed) {
  sub->add_option("--seed", seed, "master random seed")
      ->envname("BICLIQUE_SEED")
      ->capture_default_str();
}

hyc::ClusterOpts to_cluster_opts(const CommonOpts& o) {
  hyc::ClusterOpts opts;
  opts.restarts = o.restarts;
  opts.seed = o.seed;
  opts.max_iters = o.max_iters;
  opts.row_normalize = o.row_normalize;
  opts.shift = parse_shift(o.shift);
  return opts;
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int run_cluster(const CommonOpts& o, const std::string& input_hypergraph, int m,
                bool m_given) {
  Sink sink(o.output);
  std::ostream& out = sink.out();

  if (!input_hypergraph.empty() && !o.input.empty())
    throw ConfigError("pass exactly one of --input and --input-hypergraph");
  if (input_hypergraph.empty() && o.input.empty())
    throw ConfigError("pass exactly one of --input and --input-hypergraph");

  hyc::ClusterOpts opts = to_cluster_opts(o);
  hyc::ClusteringResult result;
  std::vector<int> truth;
  std::string source;

  if (!input_hypergraph.empty()) {
    std::ifstream in(input_hypergraph);
    if (!in) throw DataError("cannot open hypergraph file: " + input_hypergraph);
    hyc::UniformHypergraph G = hyc::read_edge_list(in);
    result = hyc::cluster_similarity(hyc::star_adjacency(G), o.k, opts);
    source = "input_hypergraph=" + input_hypergraph;
  } else {
    hyc::LoadedData data = hyc::load_csv(o.input, o.label_col);
    truth = data.labels;
    source = "input=" + o.input + " label_col=" + o.label_col;
    hyc::Modeling modeling = hyc::parse_modeling(o.modeling);
    if (modeling == hyc::Modeling::biclique) {
      if (m % 2 != 0 || m < 2)
        throw ConfigError("biclique modeling requires an even tuple order m >= 2 "
                          "(got m=" + std::to_string(m) + "); pick m in {2,4,6,...}");
      hyc::KernelSpec spec = make_kernel(o.kernel, o.gamma, o.degree, o.offset);
      result = hyc::cluster_biclique(data.X, spec, m, o.k, opts);
    } else {
      if (m_given && m != 3)
        throw ConfigError(std::string(hyc::modeling_name(modeling)) +
                          " modeling builds order-3 tensors; omit --m or pass --m 3");
      std::size_t entries = hyc::checked_pow_size(static_cast<int>(data.X.rows()), 3);
      if (o.max_entries >= 0 && entries > static_cast<std::size_t>(o.max_entries))
        throw hyc::SizeGuardError("order-3 tensor needs " + std::to_string(entries) +
                                  " entries > oracle.max_entries=" +
                                  std::to_string(o.max_entries));
      hyc::KernelSpec spec = make_kernel(o.kernel, o.gamma, o.degree, o.offset);
      result = hyc::cluster_order3(data.X, modeling, spec, o.gamma, o.k, opts);
    }
  }

  out << "# hyperclique cluster " << source << "\n";
  out << "# " << result.config << "\n";
  std::string eigs;
  for (int i = 0; i < result.embedding.eigenvalues.size(); ++i) {
    if (i) eigs += ',';
    eigs += hyc::format_double(result.embedding.eigenvalues[i]);
  }
  out << "# eigenvalues=" << eigs << "\n";
  out << "# kmeans_objective=" << hyc::format_double(result.kmeans_objective) << "\n";
  out << "# restart_objective_mean=" << hyc::format_double(result.restart_stats.objective_mean)
      << " restart_objective_std=" << hyc::format_double(result.restart_stats.objective_std)
      << "\n";
  out << "# restart_agreement_mean=" << hyc::format_double(result.restart_stats.agreement_mean)
      << " restart_agreement_std=" << hyc::format_double(result.restart_stats.agreement_std)
      << "\n";
  if (!truth.empty())
    out << "# error_rate=" << hyc::format_double(hyc::error_rate(result.labels, truth))
        << "\n";
  out << "index,label\n";
  for (std::size_t i = 0; i < result.labels.size(); ++i)
    out << i << "," << result.labels[i] << "\n";
  return 0;
}

int run_sweep(const CommonOpts& o, const std::string& gammas, const std::string& degrees,
              const std::string& offsets, const std::string& ms, int workers,
              const std::string& csv_path, const std::string& json_path) {
  if (o.input.empty()) throw ConfigError("sweep requires --input <csv>");
  hyc::LoadedData data = hyc::load_csv(o.input, o.label_col);
  if (data.labels.empty())
    throw DataError("sweep needs ground-truth labels; point label_col at the label column");

  hyc::SweepConfig cfg;
  cfg.modeling = hyc::parse_modeling(o.modeling);
  cfg.kind = parse_kernel_kind(o.kernel);
  if (!gammas.empty()) cfg.gammas = parse_double_list(gammas, "--gammas");
  if (!degrees.empty()) cfg.degrees = parse_int_list(degrees, "--degrees");
  if (!offsets.empty()) cfg.offsets = parse_double_list(offsets, "--offsets");
  if (!ms.empty()) cfg.m_values = parse_int_list(ms, "--ms");
  cfg.k = o.k;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  cfg.workers = workers;

  hyc::EvalReport report = hyc::sweep(data.X, data.labels, cfg);

  std::cerr << "[hyperclique] sweep input=" << o.input << " label_col=" << o.label_col
            << " workers=" << workers << " rows=" << report.rows.size() << "\n";

  if (!json_path.empty()) {
    std::ofstream jf(json_path);
    if (!jf) throw DataError("cannot open output file: " + json_path);
    hyc::write_json(jf, report);
  }
  if (!csv_path.empty()) {
    std::ofstream cf(csv_path);
    if (!cf) throw DataError("cannot open output file: " + csv_path);
    cf << "# hyperclique sweep input=" << o.input << " label_col=" << o.label_col << "\n";
    hyc::write_csv(cf, report);
  } else if (json_path.empty()) {
    std::cout << "# hyperclique sweep input=" << o.input << " label_col=" << o.label_col
              << "\n";
    hyc::write_csv(std::cout, report);
  }
  return 0;
}

int run_oracle_check(std::uint64_t seed, int trials, double inject_fault,
                     const std::string& output) {
  Sink sink(output);
  std::ostream& out = sink.out();
  hyc::OracleOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.inject_fault = inject_fault;
  out << "# hyperclique oracle-check seed=" << seed << " trials=" << trials
      << " inject_fault=" << hyc::format_double(inject_fault) << "\n";
  std::vector<hyc::OracleOutcome> outcomes = hyc::run_all_oracles(opts);
  for (const hyc::OracleOutcome& oc : outcomes) {
    out << (oc.passed ? "PASS" : "FAIL") << " " << oc.name
        << " worst=" << hyc::format_double(oc.worst)
        << " tol=" << hyc::format_double(oc.tolerance);
    if (!oc.passed && !oc.detail.empty()) out << " detail=" << oc.detail;
    out << "\n";
  }
  bool ok = hyc::all_passed(outcomes);
  out << "# all_passed=" << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 4;
}

int run_heat(std::uint64_t seed, const std::string& sizes, double alpha, int m,
             const std::string& seeds, const std::string& output) {
  Sink sink(output);
  std::ostream& out = sink.out();
  std::vector<int> n_grid = parse_int_list(sizes, "--sizes");
  std::vector<std::uint64_t> seed_list =
      seeds.empty() ? std::vector<std::uint64_t>{seed, seed + 1, seed + 2}
                    : parse_seed_list(seeds, "--seeds");
  hyc::ManifoldProblem problem = hyc::circle_sine_problem();
  hyc::ConvergenceReport report =
      hyc::convergence_experiment(problem, n_grid, alpha, m, seed_list);
  out << "# hyperclique heat-convergence problem=circle-sine m=" << report.m
      << " alpha=" << hyc::format_double(report.alpha) << " sizes=" << join_ints(n_grid)
      << " seeds=" << join_seeds(seed_list) << "\n";
  out << "n,t,seeds,mean_error,std_error\n";
  bool decreasing = true;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const hyc::ConvergenceRow& row = report.rows[i];
    out << row.n << "," << hyc::format_double(row.t) << "," << row.seeds << ","
        << hyc::format_double(row.mean_error) << "," << hyc::format_double(row.std_error)
        << "\n";
    if (i > 0 && !(row.mean_error < report.rows[i - 1].mean_error)) decreasing = false;
  }
  out << "# monotone_decreasing=" << (decreasing ? "true" : "false") << "\n";
  return 0;
}

int run_bench(std::uint64_t seed, int gram_n, const std::string& gram_ms,
              const std::string& pipeline_sizes, int pipeline_restarts, int k,
              const std::string& output) {
  Sink sink(output);
  std::ostream& out = sink.out();
  std::vector<int> ms = parse_int_list(gram_ms, "--gram-ms");
  std::vector<int> sizes = parse_int_list(pipeline_sizes, "--pipeline-sizes");
  out << "# hyperclique bench seed=" << seed << " gram_n=" << gram_n
      << " gram_ms=" << join_ints(ms) << " pipeline_sizes=" << join_ints(sizes)
      << " pipeline_restarts=" << pipeline_restarts << " k=" << k << "\n";

  hyc::Matrix data = hyc::random_data(gram_n, 4, seed);
  hyc::Matrix K = hyc::gram(data, hyc::KernelSpec::gaussian_spec(1.0));
  std::vector<double> gram_walls;
  for (int m : ms) {
    double best = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
      auto start = std::chrono::steady_clock::now();
      hyc::Matrix Km = hyc::biclique_gram_fast(K, m);
      double ms_elapsed = wall_ms_since(start);
      volatile double keep = Km(0, 0);
      (void)keep;
      best = rep == 0 ? ms_elapsed : std::min(best, ms_elapsed);
    }
    gram_walls.push_back(best);
    out << "gram,m=" << m << ",wall_ms=" << hyc::format_double(best) << "\n";
  }
  if (gram_walls.size() >= 2 && gram_walls.front() > 0.0)
    out << "gram_ratio=" << hyc::format_double(gram_walls.back() / gram_walls.front())
        << "\n";

  std::vector<double> logs_n, logs_t;
  for (int n : sizes) {
    hyc::Matrix X = hyc::random_data(n, 4, seed + static_cast<std::uint64_t>(n));
    hyc::ClusterOpts opts;
    opts.restarts = pipeline_restarts;
    opts.seed = seed;
    auto start = std::chrono::steady_clock::now();
    hyc::ClusteringResult r =
        hyc::cluster_biclique(X, hyc::KernelSpec::gaussian_spec(1.0), 4, k, opts);
    double ms_elapsed = wall_ms_since(start);
    volatile int keep = r.labels.empty() ? 0 : r.labels[0];
    (void)keep;
    out << "pipeline,n=" << n << ",wall_ms=" << hyc::format_double(ms_elapsed) << "\n";
    logs_n.push_back(std::log(static_cast<double>(n)));
    logs_t.push_back(std::log(std::max(ms_elapsed, 1e-9)));
  }
  if (logs_n.size() >= 2) {
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < logs_n.size(); ++i) {
      mean_x += logs_n[i];
      mean_y += logs_t[i];
    }
    mean_x /= static_cast<double>(logs_n.size());
    mean_y /= static_cast<double>(logs_n.size());
    double cov = 0.0, var = 0.0;
    for (std::size_t i = 0; i < logs_n.size(); ++i) {
      cov += (logs_n[i] - mean_x) * (logs_t[i] - mean_y);
      var += (logs_n[i] - mean_x) * (logs_n[i] - mean_x);
    }
    out << "pipeline_slope=" << hyc::format_double(cov / var) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const std::string config_path_pre = find_config_arg(argc, argv);
    FileDefaults file(config_path_pre.empty() ? std::map<std::string, std::string>{}
                                              : load_config_file(config_path_pre));

    CLI::App app{"even-order kernel hypergraph clustering toolkit"};
    app.require_subcommand(1);
    std::string config_path;  // consumed by the pre-scan; registered so parsing accepts it

    CommonOpts cluster_o, sweep_o;
    init_from_file(cluster_o, file);
    init_from_file(sweep_o, file);

    // ---- cluster ----
    CLI::App* cluster = app.add_subcommand("cluster", "cluster one dataset and print labels");
    cluster->add_option("--config", config_path, "key=value configuration file");
    cluster->add_option("--input", cluster_o.input, "CSV with feature columns");
    std::string cluster_hg;
    cluster->add_option("--input-hypergraph", cluster_hg,
                        "edge-list file: one 'v1 ... vm weight' edge per line");
    cluster->add_option("--label-col", cluster_o.label_col,
                        "label column: none, last, an index, or a header name")
        ->capture_default_str();
    cluster->add_option("--output", cluster_o.output, "write the report here instead of stdout");
    cluster->add_option("--k", cluster_o.k, "number of clusters")->capture_default_str();
    int cluster_m = static_cast<int>(file.integer("m", 4));
    cluster->add_option("--m", cluster_m, "tuple order (even; biclique modeling only)")
        ->capture_default_str();
    cluster->add_option("--modeling", cluster_o.modeling,
                        "biclique, gd-max, affine, dh2 or gendot")
        ->capture_default_str();
    cluster->add_option("--kernel", cluster_o.kernel, "gaussian, polynomial or linear")
        ->capture_default_str();
    cluster->add_option("--gamma", cluster_o.gamma, "gaussian/affine/dh2 bandwidth")
        ->capture_default_str();
    cluster->add_option("--degree", cluster_o.degree, "polynomial degree")
        ->capture_default_str();
    cluster->add_option("--offset", cluster_o.offset, "polynomial offset")
        ->capture_default_str();
    cluster->add_option("--restarts", cluster_o.restarts, "k-means restarts")
        ->capture_default_str();
    cluster->add_option("--max-iters", cluster_o.max_iters, "k-means iteration cap")
        ->capture_default_str();
    cluster->add_flag("--row-normalize,!--no-row-normalize", cluster_o.row_normalize,
                      "normalize embedding rows before k-means");
    cluster->add_option("--shift", cluster_o.shift, "gram shift: none, min-to-zero, add:<c>")
        ->capture_default_str();
    cluster->add_option("--max-entries", cluster_o.max_entries,
                        "dense tensor entry guard (oracle.max_entries)")
        ->capture_default_str();
    add_seed_option(cluster, cluster_o.seed);

    // ---- sweep ----
    CLI::App* sweep = app.add_subcommand("sweep", "grid sweep with restart statistics");
    sweep->add_option("--config", config_path, "key=value configuration file");
    sweep->add_option("--input", sweep_o.input, "CSV with features and a label column");
    sweep->add_option("--label-col", sweep_o.label_col,
                      "label column: last, an index, or a header name")
        ->capture_default_str();
    sweep->add_option("--k", sweep_o.k, "number of clusters")->capture_default_str();
    sweep->add_option("--modeling", sweep_o.modeling,
                      "biclique, gd-max, affine, dh2 or gendot")
        ->capture_default_str();
    sweep->add_option("--kernel", sweep_o.kernel,
                      "base kernel for biclique sweeps: gaussian, polynomial or linear")
        ->capture_default_str();
    std::string sweep_gammas, sweep_degrees, sweep_offsets, sweep_ms;
    sweep->add_option("--gammas", sweep_gammas, "comma list (default 1e-3..1e5 decades)");
    sweep->add_option("--degrees", sweep_degrees, "comma list (default 1,3,5,7,9)");
    sweep->add_option("--offsets", sweep_offsets, "comma list (default 0,1)");
    sweep->add_option("--ms", sweep_ms, "comma list of even orders (default 2,4,...,20)");
    sweep->add_option("--restarts", sweep_o.restarts, "k-means restarts per row")
        ->capture_default_str();
    int sweep_workers = static_cast<int>(file.integer("workers", 0));
    sweep->add_option("--workers", sweep_workers, "worker threads (0 = hardware)")
        ->capture_default_str();
    std::string sweep_csv, sweep_json;
    sweep->add_option("--csv", sweep_csv, "write the CSV report here (default stdout)");
    sweep->add_option("--json", sweep_json, "also write the JSON report here");
    add_seed_option(sweep, sweep_o.seed);

    // ---- oracle-check ----
    CLI::App* oracle = app.add_subcommand("oracle-check",
                                          "randomized cross-module consistency suites");
    oracle->add_option("--config", config_path, "key=value configuration file");
    int oracle_trials = 50;
    std::uint64_t oracle_seed = file.seed(42);
    double inject_fault = 0.0;
    std::string oracle_output;
    oracle->add_option("--trials", oracle_trials, "instances per suite")->capture_default_str();
    oracle->add_option("--output", oracle_output, "write the report here instead of stdout");
    oracle->add_option("--inject-fault", inject_fault,
                       "perturb one fast-gram entry (self-test of the oracle)")
        ->group("");
    add_seed_option(oracle, oracle_seed);

    // ---- heat-convergence ----
    CLI::App* heat = app.add_subcommand("heat-convergence",
                                        "discrete-to-analytic Laplacian convergence table");
    heat->add_option("--config", config_path, "key=value configuration file");
    std::string heat_sizes = "100,200,400";
    double heat_alpha = 1.0;
    int heat_m = static_cast<int>(file.integer("m", 2));
    std::string heat_seeds = "1841,1842,1843,1844,1845,1846,1847,1848,1849,1850";
    std::string heat_output;
    std::uint64_t heat_seed = file.seed(42);
    heat->add_option("--sizes", heat_sizes, "sample sizes, ascending")->capture_default_str();
    heat->add_option("--alpha", heat_alpha, "bandwidth exponent: t_n = n^{-1/(2+alpha)}")
        ->capture_default_str();
    heat->add_option("--m", heat_m, "even tuple order")->capture_default_str();
    heat->add_option("--seeds", heat_seeds, "comma list of sampling seeds")
        ->capture_default_str();
    heat->add_option("--output", heat_output, "write the report here instead of stdout");
    add_seed_option(heat, heat_seed);

    // ---- bench ----
    CLI::App* bench = app.add_subcommand("bench", "wall-clock scaling checks");
    bench->add_option("--config", config_path, "key=value configuration file");
    int gram_n = 2000;
    std::string gram_ms = "4,20";
    std::string pipeline_sizes = "250,500,1000";
    int pipeline_restarts = 10;
    int bench_k = 2;
    std::string bench_output;
    std::uint64_t bench_seed = file.seed(42);
    bench->add_option("--gram-n", gram_n, "points for the order-lift timing")
        ->capture_default_str();
    bench->add_option("--gram-ms", gram_ms, "orders to time the closed-form gram at")
        ->capture_default_str();
    bench->add_option("--pipeline-sizes", pipeline_sizes, "sizes for the end-to-end timing")
        ->capture_default_str();
    bench->add_option("--pipeline-restarts", pipeline_restarts, "restarts per pipeline run")
        ->capture_default_str();
    bench->add_option("--k", bench_k, "clusters for the pipeline timing")->capture_default_str();
    bench->add_option("--output", bench_output, "write the report here instead of stdout");
    add_seed_option(bench, bench_seed);

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 1;
    }

    if (cluster->parsed())
      return run_cluster(cluster_o, cluster_hg, cluster_m, cluster->count("--m") > 0);
    if (sweep->parsed())
      return run_sweep(sweep_o, sweep_gammas, sweep_degrees, sweep_offsets, sweep_ms,
                       sweep_workers, sweep_csv, sweep_json);
    if (oracle->parsed())
      return run_oracle_check(oracle_seed, oracle_trials, inject_fault, oracle_output);
    if (heat->parsed())
      return run_heat(heat_seed, heat_sizes, heat_alpha, heat_m, heat_seeds, heat_output);
    if (bench->parsed())
      return run_bench(bench_seed, gram_n, gram_ms, pipeline_sizes, pipeline_restarts,
                       bench_k, bench_output);
    return 0;
  } catch (const hyc::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const hyc::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const hyc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
