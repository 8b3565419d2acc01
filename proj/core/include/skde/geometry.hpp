#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace skde {

//! Geographic coordinate in degrees. Construction validates bounds.
struct GeoCoord {
  double lat;  // [-90, 90]
  double lon;  // [-180, 180]

  GeoCoord(double lat_deg, double lon_deg);
};

//! Point on the unit sphere S^2. Construction normalizes; the stored
//! components satisfy |x^2+y^2+z^2 - 1| <= 1e-12.
struct UnitVector3 {
  double x, y, z;

  UnitVector3(double x_, double y_, double z_);
};

double dot(const UnitVector3& a, const UnitVector3& b);

//! Strictly interior point of the unit ball B^3. Points with norm
//! >= 1 - 1e-12 are rejected: the measure weight (1-|x|^2)^{-1/2}
//! diverges at the boundary.
struct BallPoint {
  double x, y, z;

  BallPoint(double x_, double y_, double z_);

  double norm_sq() const { return x * x + y * y + z * z; }
};

double dot(const BallPoint& a, const BallPoint& b);

//! Point of R^d, d >= 1, with finite coordinates.
struct EuclidPoint {
  std::vector<double> coords;

  explicit EuclidPoint(std::vector<double> coords_);

  std::size_t dim() const { return coords.size(); }
};

//! Unit vector for geographic (lat, lon):
//! (cos(phi)cos(lambda), cos(phi)sin(lambda), sin(phi)) in radians.
UnitVector3 geo_to_unit(const GeoCoord& g);

//! Great-circle angle acos(<a,b>), dot clamped to [-1,1].
double angular_distance(const UnitVector3& a, const UnitVector3& b);

//! Ball geodesic distance
//! acos(<a,b> + sqrt(1-|a|^2) sqrt(1-|b|^2)), argument clamped to [-1,1].
double ball_distance(const BallPoint& a, const BallPoint& b);

//! Gauss-Legendre nodes and weights on [-1,1], computed by Newton
//! iteration on the Legendre roots to 1e-15.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

//! Product quadrature on S^2: Gauss-Legendre in cos(theta) x uniform
//! longitudes. Exact for spherical polynomials of degree <= 2*n_theta-1
//! in cos(theta) with longitude harmonics of order < n_phi.
struct SphereQuadrature {
  std::vector<UnitVector3> nodes;
  std::vector<double> weights;  // steradians; sums to 4*pi
  int order;                    // 2*n_theta - 1

  //! Compensated sum of w_i * f(node_i) in node order.
  double integrate(const std::function<double(const UnitVector3&)>& f) const;
};

SphereQuadrature sphere_quadrature(int n_theta, int n_phi);

}  // namespace skde
