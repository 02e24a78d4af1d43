#include "vines/beam.hpp"

#include <cmath>
#include <string>

#include "vines/quadrature.hpp"

namespace vines {

namespace {

constexpr double kPi = 3.14159265358979323846;

// cos(x) + sech(x): same roots as cos(x)cosh(x) + 1 but bounded, so the
// bisection stays well conditioned at large x where cosh overflows the
// product form's error budget.
double characteristic(double x) {
  const double e = std::exp(-x);
  return std::cos(x) + 2.0 * e / (1.0 + e * e);
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string("BeamSpec: ") + name +
                                " must be strictly positive");
  }
}

}  // namespace

void BeamSpec::validate() const {
  check_positive(length, "length");
  check_positive(height, "height");
  check_positive(width, "width");
  check_positive(density, "density");
  check_positive(youngs_modulus, "youngs_modulus");
  check_positive(fatigue_bending_strength, "fatigue_bending_strength");
  if (!(poisson > 0.0 && poisson < 0.5)) {
    throw std::invalid_argument("BeamSpec: poisson must lie in (0, 0.5)");
  }
}

BeamSpec BeamSpec::table1() {
  BeamSpec s;
  s.length = 0.21;
  s.height = 0.01;
  s.width = 0.015;
  s.density = 7800.0;
  s.youngs_modulus = 210.0e9;
  s.poisson = 0.3;
  s.fatigue_bending_strength = 255.0e6;
  return s;
}

std::vector<double> solve_mode_wavenumbers(int n) {
  if (n < 1) throw std::invalid_argument("solve_mode_wavenumbers: n >= 1");
  std::vector<double> roots;
  roots.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const double center = (2 * k - 1) * kPi / 2.0;
    double lo = (k == 1) ? 1.2 : center - 0.5;
    double hi = center + 0.5;
    double flo = characteristic(lo);
    double fhi = characteristic(hi);
    if (flo * fhi > 0.0) {
      throw std::runtime_error("solve_mode_wavenumbers: bracketing failed");
    }
    // Bisection to machine precision; ~60 halvings of a unit bracket.
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const double fm = characteristic(mid);
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

ModalModel ModalModel::assemble(const BeamSpec& beam, int mode_count,
                                double damping_ratio) {
  beam.validate();
  if (mode_count < 1) {
    throw std::invalid_argument("ModalModel: mode_count >= 1");
  }
  if (!(damping_ratio >= 0.0 && damping_ratio < 1.0 / std::sqrt(2.0))) {
    throw std::invalid_argument("ModalModel: damping must lie in [0, 1/sqrt(2))");
  }

  ModalModel m;
  m.spec_ = beam;
  m.mass_ = beam.mass();
  const auto bl = solve_mode_wavenumbers(mode_count);
  const double l = beam.length;
  const double wave_speed =
      std::sqrt(beam.youngs_modulus * beam.second_moment() /
                (beam.density * beam.area()));

  m.beta_.resize(mode_count);
  m.sigma_.resize(mode_count);
  m.sigma_defect_.resize(mode_count);
  m.scale_.assign(mode_count, 1.0);
  m.omega_.resize(mode_count);
  m.zeta_.assign(mode_count, damping_ratio);

  const double rho_a = beam.density * beam.area();
  for (int k = 0; k < mode_count; ++k) {
    m.beta_[k] = bl[k] / l;
    const double x = bl[k];
    const double sh = std::sinh(x);
    const double denom = std::sin(x) + sh;
    m.sigma_[k] = (std::cos(x) + std::cosh(x)) / denom;
    // 1 - sigma = (sin - cos - exp(-x)) / (sin + sinh); sinh - cosh = -e^-x.
    m.sigma_defect_[k] = (std::sin(x) - std::cos(x) - std::exp(-x)) / denom;
    m.omega_[k] = x * x * wave_speed / (l * l);
  }

  // Mass normalization: integral of rho A phi^2 over the span equals 1.
  for (int k = 0; k < mode_count; ++k) {
    const double norm2 = gauss_legendre(
        [&](double x) {
          const double p = m.shape_at(x, k);
          return rho_a * p * p;
        },
        0.0, l, 250);
    m.scale_[k] /= std::sqrt(norm2);
    // Orient every mode tip-positive so the benchmark contact weight is > 0.
    if (m.shape_at(l, k) < 0.0) m.scale_[k] = -m.scale_[k];
  }
  return m;
}

// Clamped-free shape cosh - cos - sigma (sinh - sin), rewritten so the
// growing exponential carries the small factor (1 - sigma): the naive form
// loses all significant digits once beta x > 20.
double ModalModel::shape_at(double x, int k) const {
  const double u = beta_[k] * x;
  const double grow = sigma_defect_[k] * std::exp(u);
  const double decay = (1.0 + sigma_[k]) * std::exp(-u);
  return scale_[k] *
         (0.5 * (grow + decay) - std::cos(u) + sigma_[k] * std::sin(u));
}

double ModalModel::curvature_at(double x, int k) const {
  const double u = beta_[k] * x;
  const double grow = sigma_defect_[k] * std::exp(u);
  const double decay = (1.0 + sigma_[k]) * std::exp(-u);
  return scale_[k] * beta_[k] * beta_[k] *
         (0.5 * (grow + decay) + std::cos(u) - sigma_[k] * std::sin(u));
}

double ModalModel::highest_period() const {
  return 2.0 * kPi / omega_.back();
}

double excitation_amplitude_from_fatigue(const ModalModel& model,
                                         const BeamSpec& beam,
                                         const ForcingLayout& layout,
                                         int stress_grid) {
  const double phi_f = model.shape_at(layout.force_location, 0);
  if (std::abs(phi_f) < 1e-12) {
    throw std::invalid_argument(
        "excitation_amplitude_from_fatigue: mode 1 has no leverage at the "
        "forcing location");
  }
  double curv_max = 0.0;
  for (int i = 0; i < stress_grid; ++i) {
    const double x = beam.length * i / (stress_grid - 1);
    curv_max = std::max(curv_max, std::abs(model.curvature_at(x, 0)));
  }
  // Peak stress E (h/2) |phi''| a equals the fatigue strength at the
  // no-absorber resonant amplitude a = phi_1(x_f) F / (2 D omega^2).
  const double a_limit = beam.fatigue_bending_strength /
                         (beam.youngs_modulus * 0.5 * beam.height * curv_max);
  const double omega = model.natural_frequency(0);
  return a_limit * 2.0 * model.damping_ratio(0) * omega * omega /
         std::abs(phi_f);
}

double resonant_amplitude_no_absorber(const ModalModel& model,
                                      const ForcingLayout& layout) {
  const double omega = model.natural_frequency(0);
  return model.shape_at(layout.force_location, 0) * layout.force_amplitude /
         (2.0 * model.damping_ratio(0) * omega * omega);
}

double linear_modal_amplitude(const ModalModel& model,
                              const ForcingLayout& layout, double Omega) {
  const double omega = model.natural_frequency(0);
  const double re = omega * omega - Omega * Omega;
  const double im = 2.0 * model.damping_ratio(0) * omega * Omega;
  return std::abs(model.shape_at(layout.force_location, 0)) *
         layout.force_amplitude / std::hypot(re, im);
}

}  // namespace vines
