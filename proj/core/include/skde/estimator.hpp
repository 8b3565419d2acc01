#pragma once

#include <cstddef>
#include <iosfwd>
#include <variant>
#include <vector>

#include "skde/geometry.hpp"
#include "skde/kernels.hpp"
#include "skde/symbols.hpp"

namespace skde {

//! Bandwidth rule h = n^{-1/(2s+d)} for smoothness s and dimension d.
struct BandwidthPolicy {
  double s;  // Holder smoothness, > 0
  int d;     // 2 sphere, 3 ball, d for euclid

  BandwidthPolicy(double s_, int d_);
};

double bandwidth(std::size_t n, const BandwidthPolicy& policy);

//! Positivity fix applied before logs: max(floor, value).
double rectify(double value, double floor = 1e-3);

//! A fitted kernel density estimate: the kernel plus the training sample.
//! Evaluation is lazy, (1/n) sum_i K_h(X_i, x), and costs O(n N) per query.
//!
//! The sample is stored in a canonical coordinate order at fit time and
//! summed with compensation in that order, so evaluations are identical
//! bit-for-bit no matter how the input sample was permuted.
class DensityEstimate {
 public:
  double evaluate(const UnitVector3& x) const;
  double evaluate(const BallPoint& x) const;
  double evaluate(const EuclidPoint& x) const;

  const TruncatedKernel& kernel() const { return kernel_; }
  Domain domain() const { return kernel_.domain; }
  std::size_t sample_size() const;

  friend DensityEstimate fit(std::vector<UnitVector3> points,
                             const Symbol& symbol, double h, int trunc);
  friend DensityEstimate fit(std::vector<BallPoint> points,
                             const Symbol& symbol, double h, int trunc);
  friend DensityEstimate fit(std::vector<EuclidPoint> points, double h);

 private:
  TruncatedKernel kernel_{Domain::sphere, Symbol{}, 1.0, 0, {}};
  std::variant<std::vector<UnitVector3>, std::vector<BallPoint>,
               std::vector<EuclidPoint>>
      points_;
};

DensityEstimate fit(std::vector<UnitVector3> points, const Symbol& symbol,
                    double h, int trunc);
DensityEstimate fit(std::vector<BallPoint> points, const Symbol& symbol,
                    double h, int trunc);
//! Euclidean backend is Gaussian-only (closed form); no truncation order.
DensityEstimate fit(std::vector<EuclidPoint> points, double h);

//! Density evaluated on a regular latitude-longitude grid of cell centers
//! lat_i = -90 + (i+1/2) 180/n_lat, lon_j = -180 + (j+1/2) 360/n_lon.
//! Values are stored row-major, latitude index outer (south to north).
struct DensityField {
  int n_lat = 0;
  int n_lon = 0;
  std::vector<double> lat;          // cell-center latitudes, size n_lat
  std::vector<double> lon;          // cell-center longitudes, size n_lon
  std::vector<double> density;      // size n_lat * n_lon
  std::vector<double> log_density;  // natural log of density
  bool rectified = true;
  double floor = 1e-3;

  double at(int i, int j) const { return density[static_cast<std::size_t>(i) * n_lon + j]; }
};

//! Evaluate a sphere estimate over the grid; cells are independent and are
//! processed in parallel, each cell writing only its own slot (results do
//! not depend on the thread count).
DensityField evaluate_grid(const DensityEstimate& estimate, int n_lat, int n_lon,
                           bool rectified = true, double floor = 1e-3,
                           unsigned threads = 0);

//! CSV with header lat,lon,density,log_density, row-major by latitude then
//! longitude, 17 significant digits.
void write_density_field_csv(const DensityField& field, std::ostream& out);

}  // namespace skde
