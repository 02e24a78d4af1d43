#pragma once

// Hertzian unilateral contact between the spherical absorber and the host,
// plus the corrected Hunter-Reed description of a single force pulse.

#include <utility>

namespace vines {

// Leading constant of the Hunter-Reed contact duration, kept at the rounded
// literature value so the pulse shape factor stays consistent with the
// frequency-response algebra built on it.
inline constexpr double kHunterReedConstant = 2.94;

struct ContactSetup {
  double absorber_radius = 0.0;     // R_a [m]
  double absorber_mass = 0.0;       // m_a [kg]
  double hertz_constant = 0.0;      // k_H [N/m^(3/2)]
  double clearance = 0.0;           // g [m], cavity center to either wall
  double contact_shape_value = 0.0; // phi_c > 0 [1/sqrt(kg)]
  double physical_mass_ratio = 0.0; // lambda = m_a/m_s [-]

  void validate() const;  // throws std::invalid_argument
};

struct PulsePrediction {
  double contact_duration = 0.0;      // T_c [s]
  double peak_force = 0.0;            // f_c_hat [N]
  double max_compression_scale = 0.0; // alpha_0 [m]
};

// k_H = (4/3) sqrt(R_a) / ((1-nu_a^2)/E_a + (1-nu_s^2)/E_s), sphere on a
// plane with isotropic elasticity on both sides.
double hertz_constant(double absorber_radius, double youngs_absorber,
                      double poisson_absorber, double youngs_host,
                      double poisson_host);

// Signed contact force [N] for relative displacement delta = w.q_s - q_a.
// Zero inside the clearance band, +/- k_H |.|^(3/2) outside; C1-continuous
// at the walls.
double contact_force(double delta, double clearance, double hertz_k);

// Elastic energy stored in the Hertz spring, (2/5) k_H penetration^(5/2).
double hertz_potential(double delta, double clearance, double hertz_k);

// Integral of sin^(3/2)(pi tau) over one pulse, tau in [0,1]; evaluated
// once through the Beta function and cached.
double pulse_shape_integral();

// Corrected Hunter-Reed pulse for pre-impact velocity v_c > 0. With unit
// correction factors this is the classical sphere-on-half-space result.
PulsePrediction hunter_reed(double absorber_mass, double hertz_k, double v_c,
                            double alpha_tilde = 1.0, double tc_tilde = 1.0);

// Solid sphere sized by the mass ratio: m_a = lambda m_s,
// R_a = (3 m_a / (4 pi rho_a))^(1/3). Returns {R_a, m_a}.
std::pair<double, double> sphere_from_mass_ratio(double beam_mass,
                                                 double mass_ratio,
                                                 double density);

}  // namespace vines
