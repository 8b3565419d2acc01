#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skde/estimator.hpp"
#include "skde/rng.hpp"

namespace skde {

//! Hold-out split specification. The same (fraction, seed) pair always
//! produces the same split; see split() for the exact shuffle rule.
struct SplitSpec {
  double test_fraction = 0.2;
  std::uint64_t seed = 0;

  SplitSpec() = default;
  SplitSpec(double fraction, std::uint64_t seed_);
};

//! Seeded hold-out split. Indices 0..n-1 are shuffled by Fisher-Yates
//! driven by SplitMix64 (swap partner j = i + next_u64() % (n - i)); the
//! first round(test_fraction * n) shuffled indices form the test set and
//! the rest the training set, both in shuffled order.
template <typename Point>
std::pair<std::vector<Point>, std::vector<Point>> split(
    const std::vector<Point>& points, const SplitSpec& spec) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("split: need at least 2 points");

  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  SplitMix64 rng(spec.seed);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
    std::swap(idx[i], idx[j]);
  }

  const auto n_test =
      static_cast<std::size_t>(std::llround(spec.test_fraction * static_cast<double>(n)));
  std::pair<std::vector<Point>, std::vector<Point>> out;
  out.second.reserve(n_test);
  out.first.reserve(n - n_test);
  for (std::size_t i = 0; i < n; ++i)
    (i < n_test ? out.second : out.first).push_back(points[idx[i]]);
  return out;
}

//! Out-of-sample mean log-loss (negative log-score):
//! (1/n_test) sum_i -log(max(floor, f(X_i))).
double log_loss(const DensityEstimate& estimate,
                const std::vector<UnitVector3>& test, double floor = 1e-3);

//! Maps a smoothness level to the symbol used when fitting at that level.
using SymbolRule = std::function<Symbol(double s)>;

//! Decay order 6 for every s <= 1, otherwise 5 + ceil_strict(s).
Symbol default_symbol_rule(double s);

//! Always 5 + ceil_strict(s); for s = 1 this gives order 7, not 6.
Symbol strict_symbol_rule(double s);

struct CvCell {
  double s;
  int trunc;
  double mean_log_loss;
};

//! Log-loss surface over the (s, N) grid plus the selected pair.
struct CvResult {
  std::vector<CvCell> table;  // s-major, then N, in the requested grid order
  double selected_s = 0.0;
  int selected_trunc = 0;
  double selected_loss = 0.0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
};

//! One shared hold-out split scores every (s, N) cell. Per cell:
//! h = n_train^{-1/(2s+2)}, symbol from the rule, fit on train, mean
//! log-loss on test. Cells run in parallel into fixed table slots.
//! Selection: minimum loss; ties within 1e-9 prefer smaller N, then
//! larger s.
CvResult grid_search(const std::vector<UnitVector3>& points,
                     const std::vector<double>& s_grid,
                     const std::vector<int>& trunc_grid, const SplitSpec& spec,
                     const SymbolRule& symbol_rule = default_symbol_rule,
                     double floor = 1e-3, unsigned threads = 0);

//! CSV: header s,N,mean_log_loss, one row per cell in table order, then a
//! trailer record selected,<s>,<N>,<mean_log_loss>.
void write_cv_csv(const CvResult& result, std::ostream& out);

}  // namespace skde
