#pragma once

// Modally truncated Euler-Bernoulli cantilever: analytic clamped-free mode
// shapes, mass-normalized, with the derived quantities the rest of the
// toolkit consumes (natural frequencies, shape/curvature evaluators, the
// fatigue-limited excitation level).

#include <stdexcept>
#include <vector>

namespace vines {

struct BeamSpec {
  double length = 0.0;            // l [m]
  double height = 0.0;            // h [m], bending direction
  double width = 0.0;             // b [m]
  double density = 0.0;           // rho_s [kg/m^3]
  double youngs_modulus = 0.0;    // E [Pa]
  double poisson = 0.0;           // nu [-]
  double fatigue_bending_strength = 0.0;  // sigma_b,W [Pa]

  double area() const { return height * width; }
  double second_moment() const {  // I = b h^3 / 12 [m^4]
    return width * height * height * height / 12.0;
  }
  double mass() const { return density * area() * length; }  // m_s [kg]

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  // Nominal benchmark beam (steel, 0.21 m cantilever).
  static BeamSpec table1();
};

struct ForcingLayout {
  double force_location = 0.0;    // x_f [m]
  double force_amplitude = 0.0;   // F [N]
  double contact_location = 0.0;  // x_c [m], free end for the benchmark
};

// First n roots of cos(x)cosh(x) = -1 (clamped-free characteristic
// equation), ascending. Residual of each root is below 1e-10 in the
// cosh-scaled form |cos(x) + sech(x)|.
std::vector<double> solve_mode_wavenumbers(int n);

class ModalModel {
 public:
  // Equal damping ratio for all modes. Modes are mass-normalized and
  // oriented so the free-end deflection is positive.
  static ModalModel assemble(const BeamSpec& beam, int mode_count,
                             double damping_ratio);

  int mode_count() const { return static_cast<int>(omega_.size()); }
  double natural_frequency(int k) const { return omega_[k]; }   // [rad/s]
  double damping_ratio(int k) const { return zeta_[k]; }
  double beam_mass() const { return mass_; }                     // [kg]
  const BeamSpec& beam() const { return spec_; }

  // Mass-normalized deflection [1/sqrt(kg)] and curvature [1/(m sqrt(kg))]
  // of mode k at position x in [0, l].
  double shape_at(double x, int k) const;
  double curvature_at(double x, int k) const;

  double highest_period() const;  // 2*pi/omega_max [s]

 private:
  BeamSpec spec_;
  double mass_ = 0.0;
  std::vector<double> beta_;         // wavenumber beta_k [1/m]
  std::vector<double> sigma_;        // shape blend coefficient
  std::vector<double> sigma_defect_; // 1 - sigma_k, computed cancellation-free
  std::vector<double> scale_;        // normalization factor [1/sqrt(kg)]
  std::vector<double> omega_;        // [rad/s], ascending
  std::vector<double> zeta_;         // [-]
};

inline ModalModel assemble_modal_model(const BeamSpec& beam, int mode_count,
                                       double damping_ratio) {
  return ModalModel::assemble(beam, mode_count, damping_ratio);
}

// Force amplitude [N] such that the peak bending stress of the steady
// resonant response of mode 1, without absorber, reaches the fatigue
// strength. The stress scan uses `stress_grid` uniform stations along the
// beam (the curvature maximum sits at the clamped end for a cantilever).
double excitation_amplitude_from_fatigue(const ModalModel& model,
                                         const BeamSpec& beam,
                                         const ForcingLayout& layout,
                                         int stress_grid = 2001);

// Modal amplitude of mode 1 at resonance without absorber,
// a_no = phi_1(x_f) F / (2 D_1 omega_1^2)  [m sqrt(kg)].
double resonant_amplitude_no_absorber(const ModalModel& model,
                                      const ForcingLayout& layout);

// Steady-state modal amplitude of mode 1 of the linear system (no
// absorber) under F cos(Omega t):  phi_1(x_f) F / |omega^2 - Omega^2 + 2 i
// D omega Omega|.
double linear_modal_amplitude(const ModalModel& model,
                              const ForcingLayout& layout, double Omega);

}  // namespace vines
