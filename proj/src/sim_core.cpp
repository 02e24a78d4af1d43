#include "vines/sim_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "vines/beam.hpp"
#include "vines/contact.hpp"
#include "vines/impact_event.hpp"

namespace vines {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fraction of the coefficient magnitude below which the quartic minimum
// counts as a tangency (double root).
constexpr double kDoubleRootTol = 4e-12;

double inv_rho(double r) { return 0.5 * kPi * (1.0 + r) / (1.0 - r); }

// Safeguarded Newton on a bracketed sign change of P.
double refine_root(const QuarticCoeffs& c, double lo, double hi, double flo) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 120; ++it) {
    const double f = c.eval(x);
    if (f == 0.0) return x;
    if ((f < 0.0) == (flo < 0.0)) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = c.derivative(x);
    double next = (d != 0.0) ? x - f / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-16 * std::abs(x)) return next;
    x = next;
  }
  return x;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void DimensionlessDesign::validate() const {
  if (!(damping > 0.0 && damping < 1.0 / std::sqrt(2.0)))
    throw std::invalid_argument("DimensionlessDesign: damping in (0, 1/sqrt(2))");
  if (!(modal_cor >= 0.0 && modal_cor < 1.0))
    throw std::invalid_argument("DimensionlessDesign: modal_cor in [0, 1)");
  if (!(mu_gamma >= 0.0))
    throw std::invalid_argument("DimensionlessDesign: mu_gamma >= 0");
}

double rho(double modal_cor) {
  return (2.0 / kPi) * (1.0 - modal_cor) / (1.0 + modal_cor);
}

PsiBounds psi_bounds(double modal_cor) {
  const double p = rho(modal_cor);
  return {std::atan(p), std::acos(-p * p / (1.0 + p * p))};
}

double clearance_ratio(double psi, double modal_cor) {
  return inv_rho(modal_cor) * std::sin(psi) - std::cos(psi);
}

double sim_residual(double rho_value, double absorber_amplitude,
                    double clearance, double contact_amplitude) {
  const double a = rho_value * absorber_amplitude;
  const double b = absorber_amplitude - clearance;
  return a * a + b * b - contact_amplitude * contact_amplitude;
}

double pre_impact_velocity(double Omega, double contact_amplitude,
                           double modal_cor, double psi) {
  if (!(Omega > 0.0))
    throw std::invalid_argument("pre_impact_velocity: Omega must be > 0");
  const double v = Omega * contact_amplitude * 2.0 / (1.0 - modal_cor) *
                   std::sin(psi);
  if (!(v > 0.0))
    throw std::invalid_argument("pre_impact_velocity: non-positive result");
  return v;
}

double QuarticCoeffs::stationary_point() const {
  // Root of 4A eta^2 + 3B eta + 2C with C < 0; the radicand dominates 3B,
  // so the subtraction is benign.
  return (-3.0 * a3 + std::sqrt(9.0 * a3 * a3 - 32.0 * a4 * a2)) / (8.0 * a4);
}

QuarticCoeffs quartic_coefficients(double psi, const DimensionlessDesign& d) {
  const double K = 2.0 * d.mu_gamma / (1.0 - d.modal_cor);
  const double sp = std::sin(psi);
  const double cp = std::cos(psi);
  const double inertia = 1.0 + K * sp * cp;  // in-phase pulse loading
  const double dissip = K * sp * sp;         // quadrature pulse loading
  QuarticCoeffs c;
  c.a4 = inertia * inertia + dissip * dissip;
  c.a3 = 4.0 * d.damping * dissip;
  c.a2 = -2.0 * inertia + 4.0 * d.damping * d.damping;
  const double drive = d.forcing_ratio * clearance_ratio(psi, d.modal_cor);
  c.a0 = 1.0 - drive * drive;
  return c;
}

int positive_real_roots(const QuarticCoeffs& c, double roots[2]) {
  const double eta1 = c.stationary_point();
  const double pmin = c.eval(eta1);
  const double e2 = eta1 * eta1;
  const double scale = c.a4 * e2 * e2 + std::abs(c.a3) * e2 * eta1 +
                       std::abs(c.a2) * e2 + std::abs(c.a0);
  if (std::abs(pmin) <= kDoubleRootTol * scale) {
    roots[0] = eta1;
    return 1;
  }
  if (pmin > 0.0) return 0;

  // P < 0 at the stationary point; one root above it, and one below when
  // P(0) = E > 0.
  double step = std::max(eta1, 1.0);
  double hi = eta1 + step;
  for (int it = 0; it < 200 && c.eval(hi) < 0.0; ++it) {
    step *= 2.0;
    hi += step;
  }
  const double high = refine_root(c, eta1, hi, pmin);
  if (c.a0 > 0.0) {
    roots[0] = refine_root(c, 0.0, eta1, c.a0);
    roots[1] = high;
    return 2;
  }
  roots[0] = high;
  return 1;
}

EfficacyPoint efficacy_point(double psi, double damping, double mu_gamma,
                             double modal_cor) {
  DimensionlessDesign d{damping, mu_gamma, modal_cor, 0.0};
  const QuarticCoeffs c = quartic_coefficients(psi, d);
  // Radical term of the closed form, rewritten free of the B -> 0
  // indeterminacy: with s = 3B/sqrt(32A|C|) and f = sqrt(1+s^2) - s the
  // printed expression equals -(C^2/A) f^3 (f/4 + s/3) exactly.
  const double s = 3.0 * c.a3 / std::sqrt(32.0 * c.a4 * std::abs(c.a2));
  const double f = 1.0 / (std::sqrt(1.0 + s * s) + s);
  const double t =
      -(c.a2 * c.a2 / c.a4) * f * f * f * (0.25 * f + s / 3.0);
  EfficacyPoint p;
  p.psi = psi;
  p.eta = c.stationary_point();
  const double radicand = 1.0 + t;
  p.normalized_amplitude =
      radicand > 0.0 ? 2.0 * damping / std::sqrt(radicand)
                     : std::numeric_limits<double>::infinity();
  p.normalized_clearance =
      p.normalized_amplitude * clearance_ratio(psi, modal_cor);
  return p;
}

std::vector<double> make_psi_grid(double modal_cor, int points,
                                  double stretch) {
  if (points < 2) throw std::invalid_argument("make_psi_grid: points >= 2");
  const PsiBounds b = psi_bounds(modal_cor);
  const double span = b.max - b.min;
  std::vector<double> grid(points);
  const double denom = std::expm1(stretch);
  for (int i = 0; i < points; ++i) {
    const double u = static_cast<double>(i) / (points - 1);
    grid[i] = b.min + span * std::expm1(stretch * u) / denom;
  }
  // Open interval at psi_min where the clearance ratio vanishes.
  grid.front() = b.min + span * 1e-12;
  grid.back() = b.max;
  return grid;
}

OptimumPoint optimum_design(double damping, double mu_gamma, double modal_cor,
                            int grid_points) {
  grid_points = std::max(grid_points, 400);
  const auto grid = make_psi_grid(modal_cor, grid_points);
  const auto clearance_at = [&](double psi) {
    return efficacy_point(psi, damping, mu_gamma, modal_cor)
        .normalized_clearance;
  };
  std::size_t best = 0;
  double best_val = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = clearance_at(grid[i]);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  OptimumPoint opt;
  if (best == 0 || best + 1 == grid.size()) {
    const EfficacyPoint p =
        efficacy_point(grid[best], damping, mu_gamma, modal_cor);
    opt.psi = p.psi;
    opt.eta = p.eta;
    opt.normalized_clearance = p.normalized_clearance;
    opt.normalized_amplitude = p.normalized_amplitude;
    opt.at_boundary = true;
    return opt;
  }

  // Golden-section on the bracketing triple.
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = grid[best - 1], b = grid[best + 1];
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = clearance_at(x1), f2 = clearance_at(x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = clearance_at(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = clearance_at(x1);
    }
  }
  const EfficacyPoint p =
      efficacy_point(0.5 * (a + b), damping, mu_gamma, modal_cor);
  opt.psi = p.psi;
  opt.eta = p.eta;
  opt.normalized_clearance = p.normalized_clearance;
  opt.normalized_amplitude = p.normalized_amplitude;
  opt.at_boundary = false;
  return opt;
}

DesignCurve efficacy_curve(double damping, double mu_gamma, double modal_cor,
                           const std::vector<double>& psi_grid,
                           const ExecPolicy& policy) {
  DesignCurve curve;
  curve.points.resize(psi_grid.size());
  parallel_for(static_cast<std::int64_t>(psi_grid.size()), policy,
               [&](std::int64_t i) {
                 const EfficacyPoint p = efficacy_point(
                     psi_grid[i], damping, mu_gamma, modal_cor);
                 curve.points[i] = DesignPoint{p.psi, p.eta,
                                               p.normalized_clearance,
                                               p.normalized_amplitude, false};
               });
  curve.optimum = optimum_design(damping, mu_gamma, modal_cor);
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    auto& pt = curve.points[i];
    pt.on_max_branch = pt.psi <= curve.optimum.psi;
    const double dist = std::abs(pt.psi - curve.optimum.psi);
    if (dist < best_dist) {
      best_dist = dist;
      curve.optimum_index = i;
    }
  }
  return curve;
}

DesignCurve efficacy_curve(double damping, double mu_gamma, double modal_cor,
                           int psi_points, const ExecPolicy& policy) {
  return efficacy_curve(damping, mu_gamma, modal_cor,
                        make_psi_grid(modal_cor, psi_points), policy);
}

FrequencyResponse frequency_response(double damping, double mu_gamma,
                                     double modal_cor,
                                     double normalized_clearance,
                                     const std::vector<double>& psi_grid,
                                     const ExecPolicy& policy) {
  if (!(normalized_clearance > 0.0))
    throw std::invalid_argument("frequency_response: clearance must be > 0");
  const double forcing_ratio = 2.0 * damping / normalized_clearance;
  DimensionlessDesign d{damping, mu_gamma, modal_cor, forcing_ratio};

  const int m = static_cast<int>(psi_grid.size());
  std::vector<int> count(m, 0);
  std::vector<std::array<double, 2>> eta(m);
  parallel_for(m, policy, [&](std::int64_t i) {
    const QuarticCoeffs c = quartic_coefficients(psi_grid[i], d);
    double roots[2];
    count[i] = positive_real_roots(c, roots);
    eta[i][0] = count[i] > 0 ? roots[0] : 0.0;
    eta[i][1] = count[i] > 1 ? roots[1] : 0.0;
  });

  FrequencyResponse fr;
  fr.normalized_clearance = normalized_clearance;

  // Lay out points in grid order and connect them into branches; folds
  // (root pairs appearing or vanishing between grid columns) join the low
  // and high chains into a single loop.
  std::vector<std::array<int, 2>> pidx(m, {-1, -1});
  const double inv_r = inv_rho(modal_cor);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < count[i]; ++j) {
      const double psi = psi_grid[i];
      PsiPoint p;
      p.psi = psi;
      p.eta = eta[i][j];
      const double ratio = clearance_ratio(psi, modal_cor);
      p.amplitude_over_clearance = 1.0 / ratio;
      p.normalized_amplitude = normalized_clearance / ratio;
      p.absorber_amplitude_ratio = std::sin(psi) / rho(modal_cor);
      // Excitation phase from the complex response equation: the right
      // side is a positive real multiple of exp(-i psi_E).
      {
        const double K = 2.0 * mu_gamma / (1.0 - modal_cor);
        const double sp = std::sin(psi), cp = std::cos(psi);
        const double e2 = p.eta * p.eta;
        const double re = 1.0 - e2 * (1.0 + K * sp * cp);
        const double im = 2.0 * damping * p.eta + e2 * K * sp * sp;
        p.excitation_phase = -std::atan2(im, re);
      }
      pidx[i][j] = static_cast<int>(fr.points.size());
      fr.points.push_back(p);
    }
  }

  const int npts = static_cast<int>(fr.points.size());
  UnionFind uf(npts);
  for (int i = 1; i < m; ++i) {
    const int cp = count[i - 1], cc = count[i];
    if (cp == 2 && cc == 2) {
      uf.unite(pidx[i - 1][0], pidx[i][0]);
      uf.unite(pidx[i - 1][1], pidx[i][1]);
    } else if (cp == 1 && cc == 1) {
      uf.unite(pidx[i - 1][0], pidx[i][0]);
    } else if (cp == 2 && cc == 1) {
      const int j = (std::abs(eta[i][0] - eta[i - 1][0]) <
                     std::abs(eta[i][0] - eta[i - 1][1]))
                        ? 0
                        : 1;
      uf.unite(pidx[i - 1][j], pidx[i][0]);
    } else if (cp == 1 && cc == 2) {
      const int j = (std::abs(eta[i - 1][0] - eta[i][0]) <
                     std::abs(eta[i - 1][0] - eta[i][1]))
                        ? 0
                        : 1;
      uf.unite(pidx[i][j], pidx[i - 1][0]);
    } else if (cp >= 2 && cc == 0) {
      uf.unite(pidx[i - 1][0], pidx[i - 1][1]);  // fold closes to the right
    } else if (cp == 0 && cc >= 2) {
      uf.unite(pidx[i][0], pidx[i][1]);  // fold opens to the left
    }
  }

  // Classify components: a closed loop never reaches the grid ends and has
  // no single-root column (those exit through eta -> 0).
  std::vector<char> touches_end(npts, 0), touches_start(npts, 0),
      single_col(npts, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < count[i]; ++j) {
      const int root = uf.find(pidx[i][j]);
      if (i == 0) touches_start[root] = 1;
      if (i == m - 1) touches_end[root] = 1;
      if (count[i] == 1) single_col[root] = 1;
    }
  std::vector<int> label(npts, -1);
  int next_label = 0;
  for (int p = 0; p < npts; ++p) {
    const int root = uf.find(p);
    if (label[root] < 0) label[root] = next_label++;
    auto& pt = fr.points[p];
    pt.branch_id = label[root];
    pt.on_isola = !touches_start[root] && !touches_end[root] &&
                  !single_col[root];
    fr.has_isola = fr.has_isola || pt.on_isola;
  }
  fr.branch_count = next_label;
  return fr;
}

FrequencyResponse frequency_response(const DimensionlessDesign& d,
                                     double normalized_clearance,
                                     int psi_points, const ExecPolicy& policy) {
  return frequency_response(d.damping, d.mu_gamma, d.modal_cor,
                            normalized_clearance,
                            make_psi_grid(d.modal_cor, psi_points), policy);
}

double frequency_response_residual(double damping, double mu_gamma,
                                   double modal_cor, double forcing_ratio,
                                   const PsiPoint& p) {
  const double K = 2.0 * mu_gamma / (1.0 - modal_cor);
  const double sp = std::sin(p.psi), cp = std::cos(p.psi);
  const double e2 = p.eta * p.eta;
  const std::complex<double> lhs(1.0 - e2 * (1.0 + K * sp * cp),
                                 2.0 * damping * p.eta + e2 * K * sp * sp);
  const std::complex<double> rhs =
      forcing_ratio * clearance_ratio(p.psi, modal_cor) *
      std::exp(std::complex<double>(0.0, -p.excitation_phase));
  return std::abs(lhs - rhs);
}

DimensionlessDesign dimensionless_from_physical(const ModalModel& model,
                                                const ContactSetup& contact,
                                                const PulseParams& pulse,
                                                const ForcingLayout& layout) {
  DimensionlessDesign d;
  d.damping = model.damping_ratio(0);
  const double mu =
      contact.absorber_mass * contact.contact_shape_value *
      contact.contact_shape_value;  // modal mass ratio m_a phi_c^2
  d.mu_gamma = mu * pulse.gamma;
  d.modal_cor = pulse.modal_cor;
  const double omega = model.natural_frequency(0);
  const double modal_force =
      model.shape_at(layout.force_location, 0) * layout.force_amplitude;
  d.forcing_ratio = modal_force * contact.contact_shape_value /
                    (omega * omega * contact.clearance);
  return d;
}

}  // namespace vines
