#include "skde/selection.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "skde/csv.hpp"
#include "skde/parallel.hpp"

namespace skde {

namespace {

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;

  void add(double value) {
    const double term = value - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
};

}  // namespace

SplitSpec::SplitSpec(double fraction, std::uint64_t seed_)
    : test_fraction(fraction), seed(seed_) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw std::invalid_argument("SplitSpec: test_fraction must lie in (0, 1)");
}

double log_loss(const DensityEstimate& estimate,
                const std::vector<UnitVector3>& test, double floor) {
  if (test.empty()) throw std::invalid_argument("log_loss: test set must be nonempty");
  Kahan acc;
  for (const auto& x : test)
    acc.add(-std::log(rectify(estimate.evaluate(x), floor)));
  return acc.sum / static_cast<double>(test.size());
}

Symbol default_symbol_rule(double s) {
  if (s <= 1.0) return g_sigma(6);
  return g_sigma(sigma_for_smoothness(s));
}

Symbol strict_symbol_rule(double s) { return g_sigma(sigma_for_smoothness(s)); }

CvResult grid_search(const std::vector<UnitVector3>& points,
                     const std::vector<double>& s_grid,
                     const std::vector<int>& trunc_grid, const SplitSpec& spec,
                     const SymbolRule& symbol_rule, double floor,
                     unsigned threads) {
  if (s_grid.empty() || trunc_grid.empty())
    throw std::invalid_argument("grid_search: grids must be nonempty");

  const auto [train, test] = split(points, spec);
  if (train.empty() || test.empty())
    throw std::invalid_argument("grid_search: split produced an empty part");

  CvResult result;
  result.n_train = train.size();
  result.n_test = test.size();
  result.table.resize(s_grid.size() * trunc_grid.size());

  parallel_for(result.table.size(), threads, [&](std::size_t cell) {
    const double s = s_grid[cell / trunc_grid.size()];
    const int trunc = trunc_grid[cell % trunc_grid.size()];
    const double h = bandwidth(train.size(), BandwidthPolicy(s, 2));
    const DensityEstimate estimate = fit(train, symbol_rule(s), h, trunc);
    result.table[cell] = CvCell{s, trunc, log_loss(estimate, test, floor)};
  });

  // Lowest loss wins; near-ties (1e-9) go to the smaller N, then larger s.
  const CvCell* best = &result.table.front();
  for (const auto& cell : result.table)
    if (cell.mean_log_loss < best->mean_log_loss) best = &cell;
  const double cutoff = best->mean_log_loss + 1e-9;
  for (const auto& cell : result.table) {
    if (cell.mean_log_loss > cutoff) continue;
    if (cell.trunc < best->trunc ||
        (cell.trunc == best->trunc && cell.s > best->s))
      best = &cell;
  }
  result.selected_s = best->s;
  result.selected_trunc = best->trunc;
  result.selected_loss = best->mean_log_loss;
  return result;
}

void write_cv_csv(const CvResult& result, std::ostream& out) {
  out << "s,N,mean_log_loss\n";
  for (const auto& cell : result.table)
    out << format_double(cell.s) << ',' << cell.trunc << ','
        << format_double(cell.mean_log_loss) << '\n';
  out << "selected," << format_double(result.selected_s) << ','
      << result.selected_trunc << ',' << format_double(result.selected_loss)
      << '\n';
}

}  // namespace skde
