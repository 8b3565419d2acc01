#include "skde/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <tuple>

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

// Canonical sample order: evaluation sums in this order, which makes the
// result independent of the order the sample was supplied in.
void canonical_sort(std::vector<UnitVector3>& pts) {
  std::sort(pts.begin(), pts.end(), [](const UnitVector3& a, const UnitVector3& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
}

void canonical_sort(std::vector<BallPoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const BallPoint& a, const BallPoint& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
}

void canonical_sort(std::vector<EuclidPoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const EuclidPoint& a, const EuclidPoint& b) {
    return a.coords < b.coords;
  });
}

}  // namespace

BandwidthPolicy::BandwidthPolicy(double s_, int d_) : s(s_), d(d_) {
  if (!(s > 0.0)) throw std::invalid_argument("BandwidthPolicy: s must be > 0");
  if (d < 1) throw std::invalid_argument("BandwidthPolicy: d must be >= 1");
}

double bandwidth(std::size_t n, const BandwidthPolicy& policy) {
  if (n < 1) throw std::invalid_argument("bandwidth: n must be >= 1");
  return std::pow(static_cast<double>(n), -1.0 / (2.0 * policy.s + policy.d));
}

double rectify(double value, double floor) {
  if (!(floor > 0.0)) throw std::invalid_argument("rectify: floor must be > 0");
  return std::max(floor, value);
}

DensityEstimate fit(std::vector<UnitVector3> points, const Symbol& symbol,
                    double h, int trunc) {
  if (points.empty()) throw std::invalid_argument("fit: sample must be nonempty");
  DensityEstimate est;
  est.kernel_ = build_sphere_kernel(symbol, h, trunc);
  canonical_sort(points);
  est.points_ = std::move(points);
  return est;
}

DensityEstimate fit(std::vector<BallPoint> points, const Symbol& symbol,
                    double h, int trunc) {
  if (points.empty()) throw std::invalid_argument("fit: sample must be nonempty");
  DensityEstimate est;
  est.kernel_ = build_ball_kernel(symbol, h, trunc);
  canonical_sort(points);
  est.points_ = std::move(points);
  return est;
}

DensityEstimate fit(std::vector<EuclidPoint> points, double h) {
  if (points.empty()) throw std::invalid_argument("fit: sample must be nonempty");
  const std::size_t d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d)
      throw std::invalid_argument("fit: mixed dimensions in euclid sample");
  DensityEstimate est;
  est.kernel_ = build_euclid_gauss_kernel(h);
  canonical_sort(points);
  est.points_ = std::move(points);
  return est;
}

std::size_t DensityEstimate::sample_size() const {
  return std::visit([](const auto& pts) { return pts.size(); }, points_);
}

double DensityEstimate::evaluate(const UnitVector3& x) const {
  const auto* pts = std::get_if<std::vector<UnitVector3>>(&points_);
  if (kernel_.domain != Domain::sphere || pts == nullptr)
    throw std::invalid_argument("evaluate: estimate is not a sphere estimate");
  Kahan acc;
  for (const auto& p : *pts) {
    const double t = std::clamp(dot(p, x), -1.0, 1.0);
    acc.add(eval_sphere_kernel(kernel_, t));
  }
  return acc.sum / static_cast<double>(pts->size());
}

double DensityEstimate::evaluate(const BallPoint& x) const {
  const auto* pts = std::get_if<std::vector<BallPoint>>(&points_);
  if (kernel_.domain != Domain::ball || pts == nullptr)
    throw std::invalid_argument("evaluate: estimate is not a ball estimate");
  Kahan acc;
  for (const auto& p : *pts) acc.add(eval_ball_kernel(kernel_, p, x));
  return acc.sum / static_cast<double>(pts->size());
}

double DensityEstimate::evaluate(const EuclidPoint& x) const {
  const auto* pts = std::get_if<std::vector<EuclidPoint>>(&points_);
  if (kernel_.domain != Domain::euclid || pts == nullptr)
    throw std::invalid_argument("evaluate: estimate is not a euclid estimate");
  Kahan acc;
  for (const auto& p : *pts) acc.add(eval_euclid_gauss_kernel(kernel_.h, p, x));
  return acc.sum / static_cast<double>(pts->size());
}

DensityField evaluate_grid(const DensityEstimate& estimate, int n_lat, int n_lon,
                           bool rectified, double floor, unsigned threads) {
  if (estimate.domain() != Domain::sphere)
    throw std::invalid_argument("evaluate_grid: sphere estimates only");
  if (n_lat < 2 || n_lon < 2)
    throw std::invalid_argument("evaluate_grid: n_lat and n_lon must be >= 2");
  if (!(floor > 0.0)) throw std::invalid_argument("evaluate_grid: floor must be > 0");

  DensityField field;
  field.n_lat = n_lat;
  field.n_lon = n_lon;
  field.rectified = rectified;
  field.floor = floor;
  field.lat.resize(n_lat);
  field.lon.resize(n_lon);
  for (int i = 0; i < n_lat; ++i)
    field.lat[i] = -90.0 + (i + 0.5) * 180.0 / n_lat;
  for (int j = 0; j < n_lon; ++j)
    field.lon[j] = -180.0 + (j + 0.5) * 360.0 / n_lon;

  const std::size_t cells = static_cast<std::size_t>(n_lat) * n_lon;
  field.density.resize(cells);
  field.log_density.resize(cells);

  parallel_for(cells, threads, [&](std::size_t cell) {
    const int i = static_cast<int>(cell) / n_lon;
    const int j = static_cast<int>(cell) % n_lon;
    const UnitVector3 x = geo_to_unit(GeoCoord(field.lat[i], field.lon[j]));
    double value = estimate.evaluate(x);
    if (rectified) value = rectify(value, floor);
    field.density[cell] = value;
    field.log_density[cell] = std::log(value);
  });
  return field;
}

void write_density_field_csv(const DensityField& field, std::ostream& out) {
  out << "lat,lon,density,log_density\n";
  for (int i = 0; i < field.n_lat; ++i) {
    for (int j = 0; j < field.n_lon; ++j) {
      const std::size_t cell = static_cast<std::size_t>(i) * field.n_lon + j;
      out << format_double(field.lat[i]) << ',' << format_double(field.lon[j])
          << ',' << format_double(field.density[cell]) << ','
          << format_double(field.log_density[cell]) << '\n';
    }
  }
}

}  // namespace skde
