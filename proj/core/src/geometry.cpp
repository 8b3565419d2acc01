#include "skde/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace skde {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace

GeoCoord::GeoCoord(double lat_deg, double lon_deg) : lat(lat_deg), lon(lon_deg) {
  if (!(lat >= -90.0 && lat <= 90.0))
    throw std::invalid_argument("latitude out of range [-90, 90]: " +
                                std::to_string(lat_deg));
  if (!(lon >= -180.0 && lon <= 180.0))
    throw std::invalid_argument("longitude out of range [-180, 180]: " +
                                std::to_string(lon_deg));
}

UnitVector3::UnitVector3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw std::invalid_argument("UnitVector3: cannot normalize zero or non-finite vector");
  x /= norm;
  y /= norm;
  z /= norm;
}

double dot(const UnitVector3& a, const UnitVector3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

BallPoint::BallPoint(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  const double norm = std::sqrt(norm_sq());
  if (!std::isfinite(norm))
    throw std::invalid_argument("BallPoint: non-finite coordinates");
  if (norm >= 1.0 - 1e-12)
    throw std::invalid_argument(
        "BallPoint: norm " + std::to_string(norm) +
        " is not strictly interior (the measure weight diverges at the boundary)");
}

double dot(const BallPoint& a, const BallPoint& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

EuclidPoint::EuclidPoint(std::vector<double> coords_) : coords(std::move(coords_)) {
  if (coords.empty()) throw std::invalid_argument("EuclidPoint: dimension must be >= 1");
  for (double c : coords)
    if (!std::isfinite(c))
      throw std::invalid_argument("EuclidPoint: non-finite coordinate");
}

UnitVector3 geo_to_unit(const GeoCoord& g) {
  const double phi = g.lat * kPi / 180.0;
  const double lam = g.lon * kPi / 180.0;
  const double cphi = std::cos(phi);
  return UnitVector3(cphi * std::cos(lam), cphi * std::sin(lam), std::sin(phi));
}

double angular_distance(const UnitVector3& a, const UnitVector3& b) {
  return std::acos(clamp_unit(dot(a, b)));
}

double ball_distance(const BallPoint& a, const BallPoint& b) {
  const double arg =
      dot(a, b) + std::sqrt(1.0 - a.norm_sq()) * std::sqrt(1.0 - b.norm_sq());
  return std::acos(clamp_unit(arg));
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
    double z_prev;
    double deriv = 0.0;
    int iter = 0;
    do {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      deriv = n * (z * p1 - p2) / (z * z - 1.0);
      z_prev = z;
      z = z_prev - p1 / deriv;
    } while (std::abs(z - z_prev) > 1e-15 && ++iter < 100);

    rule.nodes[i - 1] = -z;
    rule.nodes[n - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * deriv * deriv);
    rule.weights[i - 1] = w;
    rule.weights[n - i] = w;
  }
  return rule;
}

double SphereQuadrature::integrate(
    const std::function<double(const UnitVector3&)>& f) const {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double term = weights[i] * f(nodes[i]) - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

SphereQuadrature sphere_quadrature(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1)
    throw std::invalid_argument("sphere_quadrature: n_theta and n_phi must be >= 1");

  const GaussLegendreRule gl = gauss_legendre(n_theta);
  SphereQuadrature quad;
  quad.order = 2 * n_theta - 1;
  quad.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  quad.weights.reserve(static_cast<std::size_t>(n_theta) * n_phi);

  const double w_phi = 2.0 * kPi / n_phi;
  for (int i = 0; i < n_theta; ++i) {
    const double z = gl.nodes[i];
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = w_phi * j;
      quad.nodes.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
      quad.weights.push_back(gl.weights[i] * w_phi);
    }
  }
  return quad;
}

}  // namespace skde
