#include "skde/simulate.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "skde/csv.hpp"
#include "skde/parallel.hpp"
#include "skde/rng.hpp"

namespace skde {

namespace {

constexpr double kPi = std::numbers::pi;

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

//! Orthonormal tangent pair at mu, chosen deterministically from mu alone.
void tangent_basis(const UnitVector3& mu, double e1[3], double e2[3]) {
  // Cross mu with the axis it is least aligned with.
  double ax = 0.0, ay = 0.0, az = 0.0;
  const double absx = std::abs(mu.x), absy = std::abs(mu.y), absz = std::abs(mu.z);
  if (absx <= absy && absx <= absz)
    ax = 1.0;
  else if (absy <= absz)
    ay = 1.0;
  else
    az = 1.0;

  double cx = ay * mu.z - az * mu.y;
  double cy = az * mu.x - ax * mu.z;
  double cz = ax * mu.y - ay * mu.x;
  const double norm = std::sqrt(cx * cx + cy * cy + cz * cz);
  e1[0] = cx / norm;
  e1[1] = cy / norm;
  e1[2] = cz / norm;
  e2[0] = mu.y * e1[2] - mu.z * e1[1];
  e2[1] = mu.z * e1[0] - mu.x * e1[2];
  e2[2] = mu.x * e1[1] - mu.y * e1[0];
}

}  // namespace

VmfMixture::VmfMixture(std::vector<VmfComponent> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("VmfMixture: needs at least one component");
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.kappa > 0.0))
      throw std::invalid_argument("VmfMixture: kappa must be > 0");
    if (!(c.weight > 0.0))
      throw std::invalid_argument("VmfMixture: weights must be > 0");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("VmfMixture: weights must sum to 1 within 1e-12");
}

double VmfMixture::pdf(const UnitVector3& x) const {
  Kahan acc;
  for (const auto& c : components_)
    acc.add(c.weight * c.kappa * std::exp(c.kappa * dot(x, c.mu)) /
            (4.0 * kPi * std::sinh(c.kappa)));
  return acc.sum;
}

double vmf_mixture_pdf(const VmfMixture& mixture, const UnitVector3& x) {
  return mixture.pdf(x);
}

std::vector<UnitVector3> sample_uniform_sphere(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_uniform_sphere: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<UnitVector3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 2.0 * rng.next_double() - 1.0;
    const double phi = 2.0 * kPi * rng.next_double();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

std::vector<UnitVector3> sample_vmf_mixture(const VmfMixture& mixture,
                                            std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_vmf_mixture: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<UnitVector3> out;
  out.reserve(n);
  const auto& comps = mixture.components();

  for (std::size_t i = 0; i < n; ++i) {
    double pick = rng.next_double();
    std::size_t j = 0;
    for (; j + 1 < comps.size(); ++j) {
      if (pick < comps[j].weight) break;
      pick -= comps[j].weight;
    }
    const auto& c = comps[j];

    // Inverse transform for the cosine to mu; u in (0,1) keeps log finite.
    const double u = rng.next_double();
    const double w =
        1.0 + std::log(u + (1.0 - u) * std::exp(-2.0 * c.kappa)) / c.kappa;
    const double w_clamped = std::max(-1.0, std::min(1.0, w));
    const double phi = 2.0 * kPi * rng.next_double();
    const double r = std::sqrt(std::max(0.0, 1.0 - w_clamped * w_clamped));

    double e1[3], e2[3];
    tangent_basis(c.mu, e1, e2);
    const double ct = std::cos(phi), st = std::sin(phi);
    out.emplace_back(r * (ct * e1[0] + st * e2[0]) + w_clamped * c.mu.x,
                     r * (ct * e1[1] + st * e2[1]) + w_clamped * c.mu.y,
                     r * (ct * e1[2] + st * e2[2]) + w_clamped * c.mu.z);
  }
  return out;
}

MseReport empirical_mse(const VmfMixture& truth, double s,
                        const SymbolRule& symbol_rule, int trunc,
                        const std::vector<std::size_t>& n_list, int replications,
                        const std::vector<UnitVector3>& eval_points,
                        std::uint64_t seed, unsigned threads) {
  if (replications < 30)
    throw std::invalid_argument("empirical_mse: need R >= 30 for stable moments");
  if (eval_points.empty())
    throw std::invalid_argument("empirical_mse: eval_points must be nonempty");
  if (n_list.empty())
    throw std::invalid_argument("empirical_mse: n_list must be nonempty");

  const std::size_t n_sizes = n_list.size();
  const std::size_t n_eval = eval_points.size();
  const auto reps = static_cast<std::size_t>(replications);

  // values[(i_n * R + r) * n_eval + e] = fhat_{n,r}(x_e)
  std::vector<double> values(n_sizes * reps * n_eval);
  const Symbol symbol = symbol_rule(s);

  parallel_for(n_sizes * reps, threads, [&](std::size_t job) {
    const std::size_t i_n = job / reps;
    const std::size_t r = job % reps;
    const std::size_t n = n_list[i_n];
    const std::uint64_t rep_seed = seed + static_cast<std::uint64_t>(i_n) * reps + r;
    const auto sample = sample_vmf_mixture(truth, n, rep_seed);
    const double h = bandwidth(n, BandwidthPolicy(s, 2));
    const DensityEstimate estimate = fit(sample, symbol, h, trunc);
    double* slot = values.data() + job * n_eval;
    for (std::size_t e = 0; e < n_eval; ++e)
      slot[e] = estimate.evaluate(eval_points[e]);
  });

  MseReport report;
  report.replications = replications;
  report.eval_points = eval_points;
  report.rows.reserve(n_sizes);

  for (std::size_t i_n = 0; i_n < n_sizes; ++i_n) {
    Kahan bias_sq_acc, var_acc, mse_acc;
    for (std::size_t e = 0; e < n_eval; ++e) {
      const double f_true = truth.pdf(eval_points[e]);
      Kahan mean_acc;
      for (std::size_t r = 0; r < reps; ++r)
        mean_acc.add(values[(i_n * reps + r) * n_eval + e]);
      const double mean = mean_acc.sum / static_cast<double>(reps);

      Kahan sq_dev_acc, sq_err_acc;
      for (std::size_t r = 0; r < reps; ++r) {
        const double v = values[(i_n * reps + r) * n_eval + e];
        sq_dev_acc.add((v - mean) * (v - mean));
        sq_err_acc.add((v - f_true) * (v - f_true));
      }
      const double bias = mean - f_true;
      bias_sq_acc.add(bias * bias);
      var_acc.add(sq_dev_acc.sum / static_cast<double>(reps - 1));
      mse_acc.add(sq_err_acc.sum / static_cast<double>(reps));
    }
    const double inv_eval = 1.0 / static_cast<double>(n_eval);
    report.rows.push_back(MseRow{n_list[i_n], bias_sq_acc.sum * inv_eval,
                                 var_acc.sum * inv_eval, mse_acc.sum * inv_eval});
  }
  return report;
}

double rate_slope(const MseReport& report) {
  if (report.rows.size() < 3)
    throw std::invalid_argument("rate_slope: need at least 3 sample sizes");
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& row : report.rows) {
    if (!(row.mse > 0.0))
      throw std::domain_error("rate_slope: mse must be positive to take logs");
    mean_x += std::log(static_cast<double>(row.n));
    mean_y += std::log(row.mse);
  }
  const double count = static_cast<double>(report.rows.size());
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& row : report.rows) {
    const double dx = std::log(static_cast<double>(row.n)) - mean_x;
    const double dy = std::log(row.mse) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  return sxy / sxx;
}

void write_mse_csv(const MseReport& report, std::ostream& out) {
  out << "n,bias_sq,variance,mse\n";
  for (const auto& row : report.rows)
    out << row.n << ',' << format_double(row.bias_sq) << ','
        << format_double(row.variance) << ',' << format_double(row.mse) << '\n';
}

}  // namespace skde
