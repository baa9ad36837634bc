// Command-line front end for the weighted quantile estimators:
//   estimate  -- batch quantile estimation over a CSV sample
//   smooth    -- moving quantiles of a measurement stream with exponential decay
//   mixture   -- quantile curves (and Doksum shifts) of weighted mixtures
//   simulate  -- seeded regeneration of the simulation datasets as tidy CSV
//
// Exit codes: 0 ok, 2 parse error, 3 estimator domain error,
//             4 bad smoothing config, 5 bad mixture config.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wqe/estimators.hpp"
#include "wqe/mixture.hpp"
#include "wqe/random.hpp"
#include "wqe/smoothing.hpp"

namespace {

struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SmoothConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MixtureConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) {
    out.push_back(field);
  }
  if (!line.empty() && line.back() == sep) {
    out.emplace_back();
  }
  return out;
}

double parse_value(const std::string& field, const std::string& source, std::size_t line_no) {
  if (field.empty() || field == "NA") {
    return std::numeric_limits<double>::quiet_NaN();
  }
  try {
    std::size_t pos = 0;
    const double v = std::stod(field, &pos);
    if (pos != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw CsvError(source + ":" + std::to_string(line_no) + ": cannot parse number '" + field + "'");
  }
}

// CSV with a required header row; returns rows of fields.
std::vector<std::vector<std::string>> read_csv_rows(const std::string& path,
                                                    std::string& source_name) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path.empty() || path == "-") {
    source_name = "<stdin>";
  } else {
    file.open(path);
    if (!file) {
      throw CsvError(path + ": cannot open file");
    }
    in = &file;
    source_name = path;
  }
  std::string line;
  std::vector<std::vector<std::string>> rows;
  std::size_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(split(line, ','));
  }
  if (rows.empty()) {
    throw CsvError(source_name + ": missing header row");
  }
  return rows;
}

// Columns value[,weight]; absent weight column means unit weights.
// Returns nullopt for a header-only file when allow_empty is set.
std::optional<wqe::WeightedSample> read_sample_csv_opt(const std::string& path, bool allow_empty) {
  std::string source;
  const auto rows = read_csv_rows(path, source);
  const std::size_t ncol = rows.front().size();
  if (ncol < 1 || ncol > 2) {
    throw CsvError(source + ":1: expected columns value[,weight]");
  }
  std::vector<double> values, weights;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::size_t line_no = r + 1;
    if (rows[r].size() != ncol) {
      throw CsvError(source + ":" + std::to_string(line_no) + ": wrong field count");
    }
    values.push_back(parse_value(rows[r][0], source, line_no));
    weights.push_back(ncol == 2 ? parse_value(rows[r][1], source, line_no) : 1.0);
  }
  if (values.empty()) {
    if (allow_empty) return std::nullopt;
    throw CsvError(source + ": no data rows");
  }
  Eigen::ArrayXd v = Eigen::Map<Eigen::ArrayXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  Eigen::ArrayXd w = Eigen::Map<Eigen::ArrayXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  return wqe::WeightedSample{std::move(v), std::move(w)};
}

wqe::WeightedSample read_sample_csv(const std::string& path) {
  return *read_sample_csv_opt(path, false);
}

struct EstimatorConfig {
  std::string estimator = "hd";
  std::optional<double> width;
  std::string ess = "kish";

  wqe::EstimatorKind kind() const {
    if (estimator == "hd") return wqe::EstimatorKind::hd();
    if (estimator == "thd") return wqe::EstimatorKind::thd(width);
    if (estimator.rfind("type", 0) == 0 && estimator.size() == 5 &&
        estimator[4] >= '4' && estimator[4] <= '9') {
      return wqe::EstimatorKind::hf(estimator[4] - '0');
    }
    throw CLI::ValidationError("--estimator", "expected hd|thd|type4..type9");
  }

  wqe::EssKind ess_kind() const {
    if (ess == "kish") return wqe::EssKind::kish();
    if (ess.rfind("hr:", 0) == 0) {
      const std::string arg = ess.substr(3);
      if (arg == "inf") {
        return wqe::EssKind::huggins_roy(std::numeric_limits<double>::infinity());
      }
      try {
        return wqe::EssKind::huggins_roy(std::stod(arg));
      } catch (const std::exception&) {
      }
    }
    throw CLI::ValidationError("--ess", "expected kish|hr:<beta>|hr:inf");
  }
};

void add_estimator_options(CLI::App* cmd, EstimatorConfig* cfg, const std::string& default_kind) {
  cfg->estimator = default_kind;
  cmd->add_option("--estimator", cfg->estimator, "Estimator: hd|thd|type4..type9")
      ->capture_default_str();
  cmd->add_option("--width", cfg->width, "THD trimming width in (0,1]; default 1/sqrt(n*)");
  cmd->add_option("--ess", cfg->ess, "Effective sample size: kish|hr:<beta>|hr:inf")
      ->capture_default_str();
}

void print_row(std::FILE* out, double p, double q) {
  std::fprintf(out, "%.15g,%.15g\n", p, q);
}

// ---------------------------------------------------------------- estimate

int cmd_estimate(const std::string& input, const EstimatorConfig& cfg,
                 const std::vector<double>& probs) {
  const wqe::WeightedSample sample = read_sample_csv(input);
  const std::vector<double> q = wqe::estimate(sample, cfg.kind(), probs, cfg.ess_kind());
  std::printf("p,estimate\n");
  for (std::size_t i = 0; i < probs.size(); ++i) {
    print_row(stdout, probs[i], q[i]);
  }
  return 0;
}

// ---------------------------------------------------------------- smooth

int cmd_smooth(const std::string& input, const EstimatorConfig& cfg,
               const std::vector<double>& probs, double half_life, double weight_floor) {
  if (!(half_life > 0.0)) {
    throw SmoothConfigError("half-life must be positive");
  }
  if (!(weight_floor >= 0.0 && weight_floor < 1.0)) {
    throw SmoothConfigError("weight-floor must lie in [0, 1)");
  }

  std::string source;
  const auto rows = read_csv_rows(input, source);
  const std::size_t ncol = rows.front().size();
  if (ncol < 1 || ncol > 2) {
    throw CsvError(source + ":1: expected columns value[,group]");
  }
  const bool grouped = ncol == 2;

  std::printf("index,p,estimate\n");
  if (!grouped) {
    wqe::MovingQuantileTracker tracker({half_life, weight_floor}, cfg.kind(), cfg.ess_kind());
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const double v = parse_value(rows[r][0], source, r + 1);
      if (std::isnan(v)) {
        throw CsvError(source + ":" + std::to_string(r + 1) + ": missing value in stream");
      }
      tracker.push(v);
      for (double p : probs) {
        std::fprintf(stdout, "%zu,", r);
        print_row(stdout, p, tracker.quantile(p));
      }
    }
    return 0;
  }

  std::vector<double> values;
  std::vector<long long> groups;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::size_t line_no = r + 1;
    if (rows[r].size() != 2) {
      throw CsvError(source + ":" + std::to_string(line_no) + ": wrong field count");
    }
    const double v = parse_value(rows[r][0], source, line_no);
    const double g = parse_value(rows[r][1], source, line_no);
    if (std::isnan(v) || std::isnan(g) || g != std::floor(g)) {
      throw CsvError(source + ":" + std::to_string(line_no) + ": bad value/group pair");
    }
    values.push_back(v);
    groups.push_back(static_cast<long long>(g));

    Eigen::ArrayXd x = Eigen::Map<Eigen::ArrayXd>(values.data(), static_cast<Eigen::Index>(values.size()));
    Eigen::ArrayXd w = wqe::assign_group_weights(groups, half_life);
    const wqe::WeightedSample sample{std::move(x), std::move(w)};
    const std::vector<double> q = wqe::estimate(sample, cfg.kind(), probs, cfg.ess_kind());
    for (std::size_t i = 0; i < probs.size(); ++i) {
      std::fprintf(stdout, "%zu,", r);
      print_row(stdout, probs[i], q[i]);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- mixture

std::vector<double> parse_grid(const std::string& grid) {
  const auto parts = split(grid, ':');
  if (parts.size() != 3) {
    throw CLI::ValidationError("--grid", "expected <start>:<stop>:<step>");
  }
  double start, stop, step;
  try {
    start = std::stod(parts[0]);
    stop = std::stod(parts[1]);
    step = std::stod(parts[2]);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "expected numeric <start>:<stop>:<step>");
  }
  if (!(step > 0.0) || stop < start) {
    throw CLI::ValidationError("--grid", "requires step > 0 and stop >= start");
  }
  std::vector<double> grid_values;
  for (int i = 0;; ++i) {
    const double p = start + i * step;
    if (p > stop + 1e-12) break;
    grid_values.push_back(p);
  }
  return grid_values;
}

wqe::MixtureSpec parse_components(const std::vector<std::string>& specs) {
  wqe::MixtureSpec mix;
  for (const auto& s : specs) {
    const auto pos = s.rfind(':');
    if (pos == std::string::npos || pos == 0 || pos + 1 == s.size()) {
      throw CLI::ValidationError("--component", "expected <path>:<weight>");
    }
    const std::string path = s.substr(0, pos);
    double weight;
    try {
      weight = std::stod(s.substr(pos + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--component", "bad weight in '" + s + "'");
    }
    std::optional<wqe::WeightedSample> sample = read_sample_csv_opt(path, true);
    if (!sample) {
      throw MixtureConfigError(path + ": component is empty");
    }
    try {
      sample = wqe::drop_missing(*sample);
    } catch (const std::domain_error&) {
      throw MixtureConfigError(path + ": component has no usable values");
    }
    if (!(weight > 0.0)) {
      throw MixtureConfigError(path + ": component weight must be positive");
    }
    mix.components.push_back({sample->values, weight});
  }
  return mix;
}

int cmd_mixture(const std::vector<std::string>& components, const std::vector<std::string>& shift,
                const EstimatorConfig& cfg, const std::string& grid) {
  const std::vector<double> p_grid = parse_grid(grid);
  const wqe::MixtureSpec mix = parse_components(components);
  const auto curve = wqe::mixture_quantile_curve(mix, cfg.kind(), p_grid, cfg.ess_kind());

  if (shift.empty()) {
    std::printf("p,q\n");
    for (const auto& [p, q] : curve) {
      print_row(stdout, p, q);
    }
    return 0;
  }

  const wqe::MixtureSpec mix2 = parse_components(shift);
  const auto curve2 = wqe::mixture_quantile_curve(mix2, cfg.kind(), p_grid, cfg.ess_kind());
  std::printf("p,shift\n");
  for (std::size_t i = 0; i < curve.size(); ++i) {
    print_row(stdout, curve[i].first, curve2[i].second - curve[i].second);
  }
  return 0;
}

// ---------------------------------------------------------------- simulate

std::FILE* open_out(const std::filesystem::path& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::FILE* f = std::fopen(path.string().c_str(), "wb");
  if (!f) {
    throw std::runtime_error("cannot open " + path.string());
  }
  return f;
}

double sim1_value(int series, int i, wqe::Rng& rng) {
  switch (series) {
    case 0:  // (a) change point at i = 901
      return i <= 900 ? rng.normal(10.0, 1.0) : rng.normal(20.0, 1.0);
    case 1:  // (b) moving normal
      return rng.normal(10.0 + i / 100.0, 1.0);
    case 2:  // (c) standard normal
      return rng.normal(0.0, 1.0);
    case 3:  // (d) standard Cauchy
      return rng.cauchy(0.0, 1.0);
    case 4:  // (e) rising sine wave, amplitude 1, period 100, drift i/100,
             //     +10 outlier at every 50th index
      return std::sin(2.0 * M_PI * i / 100.0) + i / 100.0 + (i % 50 == 0 ? 10.0 : 0.0);
    default: {  // (f) dispersing normals
      const int j = (i - 1) / 100 + 1;
      const double mean =
          (2.0 * (j % 2) - 1.0) * (j / 2.0 + ((i - 1) % 100) / 100.0);
      return rng.normal(mean, 1.0);
    }
  }
}

void run_sim1(std::uint64_t seed, const std::filesystem::path& dir) {
  std::FILE* out = open_out(dir, "sim1.csv");
  std::fprintf(out, "series,i,value,median\n");
  const char* names = "abcdef";
  for (int s = 0; s < 6; ++s) {
    wqe::Rng rng = wqe::Rng::stream(seed, static_cast<std::uint64_t>(s));
    wqe::MovingQuantileTracker tracker({10.0, 1e-6});
    for (int i = 1; i <= 1000; ++i) {
      const double v = sim1_value(s, i, rng);
      tracker.push(v);
      std::fprintf(out, "%c,%d,%.15g,%.15g\n", names[s], i, v, tracker.quantile(0.5));
    }
  }
  std::fclose(out);
}

double sim2_value(int i, wqe::Rng& rng) {
  if (i <= 100) return rng.normal(0.0, 1.0);
  if (i <= 200) return rng.normal(10.0, 1.0);
  if (i <= 300) return rng.normal(0.0, 1.0);
  const double u = rng.uniform01();
  if (u < 0.4) return rng.normal(-10.0, 1.0);
  if (u < 0.6) return rng.normal(0.0, 1.0);
  return rng.normal(10.0, 1.0);
}

void run_sim2(std::uint64_t seed, const std::filesystem::path& dir) {
  std::FILE* out = open_out(dir, "sim2.csv");
  std::fprintf(out, "half_life,i,p,estimate\n");
  const double half_lives[] = {5.0, 10.0, 30.0};
  const double quartiles[] = {0.25, 0.5, 0.75};
  for (double hl : half_lives) {
    wqe::Rng rng = wqe::Rng::stream(seed, 100);  // same series for every half-life
    wqe::MovingQuantileTracker tracker({hl, 1e-6});
    for (int i = 1; i <= 500; ++i) {
      tracker.push(sim2_value(i, rng));
      for (double p : quartiles) {
        std::fprintf(out, "%g,%d,%g,%.15g\n", hl, i, p, tracker.quantile(p));
      }
    }
  }
  std::fclose(out);
}

wqe::MixtureSpec sim3_mixture(int m, wqe::Rng& rng) {
  constexpr int kSize = 100;
  const auto draw = [&](auto&& gen, double weight) {
    Eigen::ArrayXd x(kSize);
    for (int i = 0; i < kSize; ++i) x[i] = gen();
    return wqe::MixtureSpec::Component{std::move(x), weight};
  };
  wqe::MixtureSpec mix;
  switch (m) {
    case 0:  // (a) two normals, small gap
      mix.components.push_back(draw([&] { return rng.normal(0.0, 1.0); }, 0.75));
      mix.components.push_back(draw([&] { return rng.normal(5.0, 3.0); }, 0.25));
      break;
    case 1:  // (b) two normals, large gap
      mix.components.push_back(draw([&] { return rng.normal(0.0, 1.0); }, 0.99));
      mix.components.push_back(draw([&] { return rng.normal(100.0, 10.0); }, 0.01));
      break;
    case 2:  // (c) two uniforms, small gap
      mix.components.push_back(draw([&] { return rng.uniform(0.0, 1.0); }, 0.5));
      mix.components.push_back(draw([&] { return rng.uniform(5.0, 10.0); }, 0.5));
      break;
    case 3:  // (d) two uniforms, large gap
      mix.components.push_back(draw([&] { return rng.uniform(0.0, 1.0); }, 0.1));
      mix.components.push_back(draw([&] { return rng.uniform(20.0, 30.0); }, 0.9));
      break;
    case 4:  // (e) three exponentials
      mix.components.push_back(draw([&] { return rng.exponential(1.0); }, 0.7));
      mix.components.push_back(draw([&] { return rng.exponential(2.0); }, 0.2));
      mix.components.push_back(draw([&] { return rng.exponential(3.0); }, 0.1));
      break;
    default:  // (f) three shifted exponentials
      mix.components.push_back(draw([&] { return rng.exponential(1.0, 0.0); }, 0.3));
      mix.components.push_back(draw([&] { return rng.exponential(1.0, 10.0); }, 0.3));
      mix.components.push_back(draw([&] { return rng.exponential(1.0, 20.0); }, 0.4));
      break;
  }
  return mix;
}

void run_sim3(std::uint64_t seed, const std::filesystem::path& dir) {
  std::FILE* out = open_out(dir, "sim3.csv");
  std::fprintf(out, "mixture,trial,p,q\n");
  std::vector<double> grid;
  for (int i = 1; i <= 99; ++i) grid.push_back(i / 100.0);
  const char* names = "abcdef";
  for (int m = 0; m < 6; ++m) {
    for (int trial = 1; trial <= 50; ++trial) {
      wqe::Rng rng = wqe::Rng::stream(seed, 200 + static_cast<std::uint64_t>(m) * 50 + trial);
      const wqe::MixtureSpec mix = sim3_mixture(m, rng);
      const auto curve = wqe::mixture_quantile_curve(mix, wqe::EstimatorKind::hf(7), grid);
      for (const auto& [p, q] : curve) {
        std::fprintf(out, "%c,%d,%g,%.15g\n", names[m], trial, p, q);
      }
    }
  }
  std::fclose(out);
}

int cmd_simulate(const std::string& name, std::uint64_t seed, const std::string& out_dir) {
  const std::filesystem::path dir = out_dir;
  if (name == "sim1") {
    run_sim1(seed, dir);
  } else if (name == "sim2") {
    run_sim2(seed, dir);
  } else if (name == "sim3") {
    run_sim3(seed, dir);
  } else {
    std::fprintf(stderr, "error: unknown simulation '%s' (expected sim1|sim2|sim3)\n",
                 name.c_str());
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted quantile estimation toolkit"};
  app.require_subcommand(1);

  // estimate
  auto* est = app.add_subcommand("estimate", "Quantile estimates over a CSV sample (value[,weight])");
  std::string est_input;
  EstimatorConfig est_cfg;
  std::vector<double> est_probs{0.5};
  est->add_option("input", est_input, "Input CSV path (default: stdin)");
  add_estimator_options(est, &est_cfg, "hd");
  est->add_option("--p", est_probs, "Probability (repeatable)")->capture_default_str();

  // smooth
  auto* smo = app.add_subcommand("smooth", "Moving quantiles of a stream (value[,group])");
  std::string smo_input;
  EstimatorConfig smo_cfg;
  std::vector<double> smo_probs{0.5};
  double smo_half_life = 0.0;
  double smo_floor = 1e-6;
  smo->add_option("input", smo_input, "Input CSV path (default: stdin)");
  add_estimator_options(smo, &smo_cfg, "type7");
  smo->add_option("--p", smo_probs, "Probability (repeatable)")->capture_default_str();
  smo->add_option("--half-life", smo_half_life, "Decay half-life in sample (or group) units")
      ->required();
  smo->add_option("--weight-floor", smo_floor, "Eviction threshold; 0 disables eviction")
      ->capture_default_str();

  // mixture
  auto* mix = app.add_subcommand("mixture", "Quantile curve of a weighted mixture");
  EstimatorConfig mix_cfg;
  std::vector<std::string> mix_components;
  std::vector<std::string> mix_shift;
  std::string mix_grid = "0.01:0.99:0.01";
  mix->add_option("--component", mix_components, "Component as <path>:<weight> (repeatable)")
      ->required();
  mix->add_option("--shift", mix_shift,
                  "Second mixture as <path>:<weight> (repeatable); emits q2(p)-q1(p)");
  mix->add_option("--grid", mix_grid, "Probability grid <start>:<stop>:<step>")
      ->capture_default_str();
  add_estimator_options(mix, &mix_cfg, "type7");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Regenerate simulation datasets as CSV");
  std::string sim_name;
  std::uint64_t sim_seed = 42;
  std::string sim_out = ".";
  sim->add_option("name", sim_name,
                  "sim1: six series, n=1000, half-life 10, running type7 median\n"
                  "      (series e: sine wave, amplitude 1, period 100, drift i/100,\n"
                  "       +10 outliers at every 50th index)\n"
                  "sim2: quartile smoothing, half-lives 5/10/30, 500 indices\n"
                  "sim3: six mixtures, 50 trials, 99-point quantile curves")
      ->required();
  sim->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
  sim->add_option("--out", sim_out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (est->parsed()) return cmd_estimate(est_input, est_cfg, est_probs);
    if (smo->parsed()) return cmd_smooth(smo_input, smo_cfg, smo_probs, smo_half_life, smo_floor);
    if (mix->parsed()) return cmd_mixture(mix_components, mix_shift, mix_cfg, mix_grid);
    if (sim->parsed()) return cmd_simulate(sim_name, sim_seed, sim_out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const CsvError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const SmoothConfigError& e) {
    std::fprintf(stderr, "smoothing config error: %s\n", e.what());
    return 4;
  } catch (const MixtureConfigError& e) {
    std::fprintf(stderr, "mixture config error: %s\n", e.what());
    return 5;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "estimator domain error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
