#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skde/csv.hpp"
#include "skde/estimator.hpp"
#include "skde/ingest.hpp"
#include "skde/kernels.hpp"
#include "skde/raster.hpp"
#include "skde/selection.hpp"
#include "skde/simulate.hpp"

namespace {

using namespace skde;

//! Removes every registered output if the command does not finish.
class OutputGuard {
 public:
  void track(const std::string& path) { paths_.push_back(path); }
  void commit() { committed_ = true; }
  ~OutputGuard() {
    if (committed_) return;
    for (const auto& p : paths_) {
      std::error_code ec;
      std::filesystem::remove(p, ec);
    }
  }

 private:
  std::vector<std::string> paths_;
  bool committed_ = false;
};

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed while writing: " + path);
}

std::pair<int, int> parse_years(const std::string& years) {
  const auto sep = years.find_first_of("-:", 1);  // skip a leading minus sign
  try {
    if (sep == std::string::npos) {
      const int y = std::stoi(years);
      return {y, y};
    }
    return {std::stoi(years.substr(0, sep)), std::stoi(years.substr(sep + 1))};
  } catch (const std::exception&) {
    throw std::runtime_error("cannot parse --years value '" + years +
                             "' (expected START-END)");
  }
}

//! Truth presets for the rate command, plus a lat:lon:kappa:weight[;...] form.
VmfMixture parse_truth(const std::string& spec) {
  if (spec == "smooth3")
    return VmfMixture({{geo_to_unit(GeoCoord(35.0, 139.0)), 6.0, 0.5},
                       {geo_to_unit(GeoCoord(-20.0, -70.0)), 4.0, 0.3},
                       {geo_to_unit(GeoCoord(38.0, 23.0)), 3.0, 0.2}});
  if (spec == "tight3")
    return VmfMixture({{geo_to_unit(GeoCoord(35.0, 139.0)), 60.0, 0.5},
                       {geo_to_unit(GeoCoord(-20.0, -70.0)), 45.0, 0.3},
                       {geo_to_unit(GeoCoord(38.0, 23.0)), 80.0, 0.2}});
  if (spec == "uniform")
    return VmfMixture({{UnitVector3(0.0, 0.0, 1.0), 1e-12, 1.0}});

  std::vector<VmfComponent> components;
  std::stringstream groups(spec);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::stringstream fields(group);
    std::string field;
    std::vector<double> v;
    while (std::getline(fields, field, ':')) v.push_back(std::stod(field));
    if (v.size() != 4)
      throw std::runtime_error(
          "cannot parse --truth component '" + group +
          "' (expected lat:lon:kappa:weight, or a preset name)");
    components.push_back({geo_to_unit(GeoCoord(v[0], v[1])), v[2], v[3]});
  }
  return VmfMixture(std::move(components));
}

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + format_double(v[i]);
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------- ingest ---

struct IngestOptions {
  std::string input;
  std::string output;
  double min_mag = 6.5;
  std::string years = "1990-2021";
};

int cmd_ingest(const IngestOptions& opt) {
  const auto [start_year, end_year] = parse_years(opt.years);
  std::cout << "config: subcommand=ingest input=" << opt.input
            << " output=" << opt.output << " min-mag=" << format_double(opt.min_mag)
            << " years=" << start_year << "-" << end_year << "\n";

  const auto raw = parse_catalog(opt.input);
  const auto filtered = filter_catalog(raw, opt.min_mag, start_year, end_year);

  OutputGuard guard;
  guard.track(opt.output);
  std::ostringstream body;
  write_catalog(filtered, body);
  write_text_file(opt.output, body.str());
  guard.commit();

  std::cout << "events=" << filtered.events.size()
            << " skipped_parse=" << raw.skipped
            << " skipped_filter=" << filtered.skipped << "\n";
  return 0;
}

// -------------------------------------------------------------------- cv ---

struct CvOptions {
  std::string input;
  std::string output;
  std::vector<double> s_grid = {0.001, 0.01, 0.05, 0.5, 1.0};
  std::vector<int> n_grid = {5, 10, 20, 30, 40, 50, 75, 100};
  std::uint64_t seed = 0;
  double test_fraction = 0.2;
  double floor = 1e-3;
  bool strict_sigma = false;
  unsigned threads = 0;
};

int cmd_cv(const CvOptions& opt) {
  std::cout << "config: subcommand=cv input=" << opt.input
            << " output=" << opt.output << " s-grid=" << join_doubles(opt.s_grid)
            << " N-grid=" << join_ints(opt.n_grid) << " seed=" << opt.seed
            << " test-fraction=" << format_double(opt.test_fraction)
            << " floor=" << format_double(opt.floor)
            << " sigma-rule=" << (opt.strict_sigma ? "strict" : "default")
            << " threads=" << opt.threads << "\n";

  const auto catalog = parse_catalog(opt.input);
  const auto points = catalog_points(catalog);
  const SymbolRule rule = opt.strict_sigma ? strict_symbol_rule : default_symbol_rule;
  const auto result = grid_search(points, opt.s_grid, opt.n_grid,
                                  SplitSpec(opt.test_fraction, opt.seed), rule,
                                  opt.floor, opt.threads);

  OutputGuard guard;
  guard.track(opt.output);
  std::ostringstream body;
  write_cv_csv(result, body);
  write_text_file(opt.output, body.str());
  guard.commit();

  std::cout << "n_train=" << result.n_train << " n_test=" << result.n_test
            << " selected: s=" << format_double(result.selected_s)
            << " N=" << result.selected_trunc
            << " mean_log_loss=" << format_double(result.selected_loss) << "\n";
  return 0;
}

// ------------------------------------------------------------------ grid ---

struct GridOptions {
  std::string input;
  std::string output;
  std::string raster;
  double s = 0.01;
  int trunc = 75;
  int n_lat = 180;
  int n_lon = 360;
  double floor = 1e-3;
  bool raw = false;
  bool strict_sigma = false;
  unsigned threads = 0;
};

int cmd_grid(const GridOptions& opt) {
  std::cout << "config: subcommand=grid input=" << opt.input
            << " output=" << opt.output << " raster=" << opt.raster
            << " s=" << format_double(opt.s) << " N=" << opt.trunc
            << " nlat=" << opt.n_lat << " nlon=" << opt.n_lon
            << " floor=" << format_double(opt.floor)
            << " rectified=" << (opt.raw ? "no" : "yes")
            << " sigma-rule=" << (opt.strict_sigma ? "strict" : "default")
            << " threads=" << opt.threads << "\n";

  const auto catalog = parse_catalog(opt.input);
  const auto points = catalog_points(catalog);
  if (points.empty()) throw std::runtime_error("catalog has no events");
  const double h = bandwidth(points.size(), BandwidthPolicy(opt.s, 2));
  const Symbol symbol =
      opt.strict_sigma ? strict_symbol_rule(opt.s) : default_symbol_rule(opt.s);
  std::cout << "n=" << points.size() << " h=" << format_double(h)
            << " symbol=" << symbol.name << "\n";

  const auto estimate = fit(points, symbol, h, opt.trunc);
  const auto field = evaluate_grid(estimate, opt.n_lat, opt.n_lon, !opt.raw,
                                   opt.floor, opt.threads);

  OutputGuard guard;
  guard.track(opt.output);
  std::ostringstream body;
  write_density_field_csv(field, body);
  write_text_file(opt.output, body.str());
  if (!opt.raster.empty()) {
    guard.track(opt.raster);
    std::ostringstream image;
    write_p6(field, image);
    write_text_file(opt.raster, image.str());
  }
  guard.commit();

  std::cout << "cells=" << field.density.size() << " written\n";
  return 0;
}

// ----------------------------------------------------------------- bound ---

struct BoundOptions {
  std::string mode = "general";
  double h = 0.1;
  double r = 6.0;
  long long n = 1507;
  double s = 0.01;
  std::vector<int> n_grid = {24, 30, 40, 50, 75, 100, 150, 200};
  double target = 0.0;  // 0 disables the search
};

int cmd_bound(const BoundOptions& opt) {
  std::cout << "config: subcommand=bound mode=" << opt.mode;
  if (opt.mode == "general")
    std::cout << " h=" << format_double(opt.h) << " r=" << format_double(opt.r);
  else
    std::cout << " n=" << opt.n << " s=" << format_double(opt.s);
  std::cout << " N-grid=" << join_ints(opt.n_grid);
  if (opt.target > 0.0) std::cout << " target=" << format_double(opt.target);
  std::cout << "\n";

  const auto bound_at = [&](int trunc) {
    return opt.mode == "general" ? truncation_error_bound(opt.h, opt.r, trunc)
                                 : truncation_error_bound_n(opt.n, opt.s, trunc);
  };

  std::cout << "N,bound\n";
  for (int trunc : opt.n_grid)
    std::cout << trunc << ',' << format_double(bound_at(trunc)) << "\n";

  if (opt.target > 0.0) {
    constexpr int kSearchCap = 10000000;
    int trunc = 24;
    while (trunc < kSearchCap && bound_at(trunc) > opt.target)
      trunc = trunc < 1000 ? trunc + 1 : trunc + trunc / 100;
    if (bound_at(trunc) > opt.target)
      throw std::runtime_error("no N below the search cap reaches the target");
    while (trunc > 24 && bound_at(trunc - 1) <= opt.target) --trunc;
    std::cout << "minimal N >= 24 with bound <= " << format_double(opt.target)
              << ": " << trunc << " (bound " << format_double(bound_at(trunc))
              << ")\n";
  }
  return 0;
}

// ------------------------------------------------------------------ rate ---

struct RateOptions {
  std::string truth = "smooth3";
  double s = 1.0;
  int trunc = 40;
  std::vector<std::size_t> n_list = {250, 500, 1000, 2000};
  int replications = 50;
  int eval_points = 100;
  std::uint64_t seed = 0;
  std::string output;
  bool strict_sigma = false;
  unsigned threads = 0;
};

int cmd_rate(const RateOptions& opt) {
  std::cout << "config: subcommand=rate truth=" << opt.truth
            << " s=" << format_double(opt.s) << " N=" << opt.trunc << " n-list=";
  for (std::size_t i = 0; i < opt.n_list.size(); ++i)
    std::cout << (i ? "," : "") << opt.n_list[i];
  std::cout << " replications=" << opt.replications
            << " eval-points=" << opt.eval_points << " seed=" << opt.seed
            << " output=" << opt.output
            << " sigma-rule=" << (opt.strict_sigma ? "strict" : "default")
            << " threads=" << opt.threads << "\n";

  const auto truth = parse_truth(opt.truth);
  // Evaluation sites come from a stream far away from the replication seeds.
  const auto eval_points = sample_uniform_sphere(
      static_cast<std::size_t>(opt.eval_points), opt.seed + (1ULL << 31));
  const SymbolRule rule = opt.strict_sigma ? strict_symbol_rule : default_symbol_rule;
  const auto report = empirical_mse(truth, opt.s, rule, opt.trunc, opt.n_list,
                                    opt.replications, eval_points, opt.seed,
                                    opt.threads);

  OutputGuard guard;
  guard.track(opt.output);
  std::ostringstream body;
  write_mse_csv(report, body);
  write_text_file(opt.output, body.str());
  guard.commit();

  const double slope = rate_slope(report);
  const double target = -2.0 * opt.s / (2.0 * opt.s + 2.0);
  std::cout << "fitted_slope=" << format_double(slope)
            << " theoretical_target=" << format_double(target) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skde: spectral-series kernel density estimation on the sphere"};
  app.require_subcommand(1);

  IngestOptions ingest_opt;
  auto* ingest = app.add_subcommand(
      "ingest", "Normalize and filter a USGS-style catalog CSV");
  ingest->add_option("--input", ingest_opt.input, "catalog CSV")->required();
  ingest->add_option("--output", ingest_opt.output, "normalized CSV")->required();
  ingest->add_option("--min-mag", ingest_opt.min_mag, "magnitude threshold (kept if >=)");
  ingest->add_option("--years", ingest_opt.years, "year range START-END, inclusive");

  CvOptions cv_opt;
  auto* cv = app.add_subcommand(
      "cv", "Hold-out log-loss over the (s, N) grid and pair selection");
  cv->add_option("--input", cv_opt.input, "catalog CSV")->required();
  cv->add_option("--output", cv_opt.output, "surface CSV")->required();
  cv->add_option("--s-grid", cv_opt.s_grid, "smoothness grid")->delimiter(',');
  cv->add_option("--N-grid", cv_opt.n_grid, "truncation grid")->delimiter(',');
  cv->add_option("--seed", cv_opt.seed, "split seed");
  cv->add_option("--test-fraction", cv_opt.test_fraction, "hold-out fraction");
  cv->add_option("--floor", cv_opt.floor, "rectification floor");
  cv->add_flag("--strict-sigma", cv_opt.strict_sigma,
               "use 5+ceil_strict(s) for every s (default keeps 6 for s <= 1)");
  cv->add_option("--threads", cv_opt.threads, "worker threads (0 = auto)");

  GridOptions grid_opt;
  auto* grid = app.add_subcommand(
      "grid", "Evaluate a fitted density on a lat-lon grid, CSV plus raster");
  grid->add_option("--input", grid_opt.input, "catalog CSV")->required();
  grid->add_option("--output", grid_opt.output, "field CSV")->required();
  grid->add_option("--raster", grid_opt.raster, "P6 pixmap path (optional)");
  grid->add_option("--s", grid_opt.s, "smoothness");
  grid->add_option("--N", grid_opt.trunc, "truncation order");
  grid->add_option("--nlat", grid_opt.n_lat, "latitude cells");
  grid->add_option("--nlon", grid_opt.n_lon, "longitude cells");
  grid->add_option("--floor", grid_opt.floor, "rectification floor");
  grid->add_flag("--raw", grid_opt.raw, "skip rectification");
  grid->add_flag("--strict-sigma", grid_opt.strict_sigma,
                 "use 5+ceil_strict(s) for every s");
  grid->add_option("--threads", grid_opt.threads, "worker threads (0 = auto)");

  BoundOptions bound_opt;
  auto* bound = app.add_subcommand(
      "bound", "Truncation error bound table and minimal-N search");
  bound->add_option("--mode", bound_opt.mode, "general or n-form")
      ->check(CLI::IsMember({"general", "n-form"}));
  bound->add_option("--bandwidth", bound_opt.h, "bandwidth (general mode)");
  bound->add_option("--r", bound_opt.r, "decay order (general mode)");
  bound->add_option("--n", bound_opt.n, "sample size (n-form mode)");
  bound->add_option("--s", bound_opt.s, "smoothness in (0,1] (n-form mode)");
  bound->add_option("--N-grid", bound_opt.n_grid, "orders to tabulate")
      ->delimiter(',');
  bound->add_option("--target", bound_opt.target,
                    "search the minimal N with bound <= target");

  RateOptions rate_opt;
  auto* rate = app.add_subcommand(
      "rate", "Monte Carlo bias/variance/MSE against sample size");
  rate->add_option("--truth", rate_opt.truth,
                   "smooth3 | tight3 | uniform | lat:lon:kappa:weight[;...]");
  rate->add_option("--s", rate_opt.s, "smoothness");
  rate->add_option("--N", rate_opt.trunc, "truncation order");
  rate->add_option("--n-list", rate_opt.n_list, "sample sizes")->delimiter(',');
  rate->add_option("--replications", rate_opt.replications, "replications per n");
  rate->add_option("--eval-points", rate_opt.eval_points, "evaluation sites");
  rate->add_option("--seed", rate_opt.seed, "base seed");
  rate->add_option("--output", rate_opt.output, "report CSV")->required();
  rate->add_flag("--strict-sigma", rate_opt.strict_sigma,
                 "use 5+ceil_strict(s) for every s");
  rate->add_option("--threads", rate_opt.threads, "worker threads (0 = auto)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) return cmd_ingest(ingest_opt);
    if (cv->parsed()) return cmd_cv(cv_opt);
    if (grid->parsed()) return cmd_grid(grid_opt);
    if (bound->parsed()) return cmd_bound(bound_opt);
    if (rate->parsed()) return cmd_rate(rate_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
