#include "vines/contact.hpp"

#include <cmath>
#include <stdexcept>

namespace vines {

namespace {
constexpr double kPi = 3.14159265358979323846;

double pow_3_2(double v) { return v * std::sqrt(v); }
}  // namespace

void ContactSetup::validate() const {
  if (!(absorber_radius > 0.0))
    throw std::invalid_argument("ContactSetup: absorber_radius must be > 0");
  if (!(absorber_mass > 0.0))
    throw std::invalid_argument("ContactSetup: absorber_mass must be > 0");
  if (!(hertz_constant > 0.0))
    throw std::invalid_argument("ContactSetup: hertz_constant must be > 0");
  if (!(clearance > 0.0))
    throw std::invalid_argument("ContactSetup: clearance must be > 0");
  if (!(contact_shape_value > 0.0))
    throw std::invalid_argument(
        "ContactSetup: contact_shape_value must be > 0 (orient the contact "
        "direction accordingly)");
}

double hertz_constant(double absorber_radius, double youngs_absorber,
                      double poisson_absorber, double youngs_host,
                      double poisson_host) {
  if (!(absorber_radius > 0.0 && youngs_absorber > 0.0 && youngs_host > 0.0))
    throw std::invalid_argument("hertz_constant: radius and moduli must be > 0");
  const double compliance =
      (1.0 - poisson_absorber * poisson_absorber) / youngs_absorber +
      (1.0 - poisson_host * poisson_host) / youngs_host;
  return (4.0 / 3.0) * std::sqrt(absorber_radius) / compliance;
}

double contact_force(double delta, double clearance, double hertz_k) {
  if (delta > clearance) return hertz_k * pow_3_2(delta - clearance);
  if (delta < -clearance) return -hertz_k * pow_3_2(-clearance - delta);
  return 0.0;
}

double hertz_potential(double delta, double clearance, double hertz_k) {
  const double pen = std::abs(delta) - clearance;
  if (pen <= 0.0) return 0.0;
  return 0.4 * hertz_k * pen * pen * pow_3_2(pen);
}

double pulse_shape_integral() {
  // = B(5/4, 1/2) / pi.
  static const double value = std::beta(1.25, 0.5) / kPi;
  return value;
}

PulsePrediction hunter_reed(double absorber_mass, double hertz_k, double v_c,
                            double alpha_tilde, double tc_tilde) {
  if (!(v_c > 0.0))
    throw std::invalid_argument("hunter_reed: v_c must be > 0");
  PulsePrediction p;
  p.max_compression_scale =
      std::pow(1.25 * absorber_mass / hertz_k * v_c * v_c, 0.4);
  const double compression = p.max_compression_scale * alpha_tilde;
  p.contact_duration = kHunterReedConstant * compression * tc_tilde / v_c;
  p.peak_force = hertz_k * pow_3_2(compression);
  return p;
}

std::pair<double, double> sphere_from_mass_ratio(double beam_mass,
                                                 double mass_ratio,
                                                 double density) {
  if (!(mass_ratio > 0.0))
    throw std::invalid_argument("sphere_from_mass_ratio: mass_ratio must be > 0");
  const double m_a = mass_ratio * beam_mass;
  const double r_a = std::cbrt(3.0 * m_a / (4.0 * kPi * density));
  return {r_a, m_a};
}

}  // namespace vines
