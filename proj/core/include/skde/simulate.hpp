#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "skde/estimator.hpp"
#include "skde/geometry.hpp"
#include "skde/selection.hpp"

namespace skde {

struct VmfComponent {
  UnitVector3 mu;
  double kappa;   // concentration, > 0
  double weight;  // > 0; component weights sum to 1
};

//! von Mises-Fisher mixture: exact sampler and exact density, which makes
//! it the ground truth of choice for the Monte Carlo experiments.
class VmfMixture {
 public:
  explicit VmfMixture(std::vector<VmfComponent> components);

  const std::vector<VmfComponent>& components() const { return components_; }

  //! sum_j w_j kappa_j exp(kappa_j <x, mu_j>) / (4 pi sinh kappa_j).
  double pdf(const UnitVector3& x) const;

 private:
  std::vector<VmfComponent> components_;
};

double vmf_mixture_pdf(const VmfMixture& mixture, const UnitVector3& x);

//! i.i.d. uniform points on S^2 (z uniform in (-1,1), longitude uniform).
std::vector<UnitVector3> sample_uniform_sphere(std::size_t n, std::uint64_t seed);

//! Exact mixture sampler. Per draw: component by weights, then the cosine
//! w of the angle to mu by the inverse transform
//! w = 1 + log(u + (1-u) e^{-2 kappa}) / kappa, azimuth uniform, rotated so
//! the pole maps to mu.
std::vector<UnitVector3> sample_vmf_mixture(const VmfMixture& mixture,
                                            std::size_t n, std::uint64_t seed);

struct MseRow {
  std::size_t n;
  double bias_sq;   // mean over eval points of bias(x)^2
  double variance;  // mean over eval points of the (R-1)-divisor variance
  double mse;       // mean over eval points of mean_r (fhat_r(x) - f(x))^2
};

//! Monte Carlo error decomposition per sample size. With the unbiased
//! variance divisor the rows satisfy exactly
//!   mse = bias_sq + (R-1)/R * variance.
struct MseReport {
  std::vector<MseRow> rows;
  int replications = 0;
  std::vector<UnitVector3> eval_points;
};

//! For each n: R independent samples of size n from the truth, each fitted
//! with h = n^{-1/(2s+2)} and the symbol the rule assigns to s, evaluated
//! unrectified at the eval points. Replication r of sample size index i
//! draws from SplitMix64 seeded with seed + i*R + r; (n, r) pairs run in
//! parallel and aggregation order is fixed.
MseReport empirical_mse(const VmfMixture& truth, double s,
                        const SymbolRule& symbol_rule, int trunc,
                        const std::vector<std::size_t>& n_list, int replications,
                        const std::vector<UnitVector3>& eval_points,
                        std::uint64_t seed, unsigned threads = 0);

//! Least-squares slope of log(mse) against log(n); needs >= 3 sample sizes.
double rate_slope(const MseReport& report);

//! CSV: header n,bias_sq,variance,mse, one row per sample size.
void write_mse_csv(const MseReport& report, std::ostream& out);

}  // namespace skde
