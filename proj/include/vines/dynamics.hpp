#pragma once

// Coupled modal-host / absorber equations of motion and the fixed-step
// third-order Runge-Kutta stepper (Bogacki-Shampine coefficients) shared by
// the impact-event simulator and the time-domain reference simulator.

#include <cmath>
#include <vector>

#include "vines/beam.hpp"
#include "vines/contact.hpp"

namespace vines {

// State layout: [q_a, v_a, q_1..q_n, v_1..v_n]; modal coordinates are
// mass-normalized (units m sqrt(kg)), the absorber coordinate is physical.
class VibroImpactSystem {
 public:
  // `layout` provides the contact location (modal contact weights), the
  // forcing point and amplitude; pass force_amplitude = 0 for free runs.
  // With host_clamped the host is frozen at zero and only the absorber
  // moves against the Hertz spring.
  VibroImpactSystem(const ModalModel& model, const ContactSetup& contact,
                    const ForcingLayout& layout, double drive_omega,
                    bool host_clamped = false);

  int n_modes() const { return n_; }
  int state_size() const { return 2 * n_ + 2; }

  void rhs(double t, const double* y, double* dy) const;

  // delta = w . q_s - q_a, the gap coordinate of the contact law.
  double gap_deflection(const double* y) const;
  double gap_velocity(const double* y) const;
  double contact_force_at(const double* y) const;

  // Modal + absorber mechanical energy plus the Hertz spring potential
  // (excludes forcing work and damping losses).
  double energy(const double* y) const;

  double absorber_mass() const { return mass_a_; }
  double clearance() const { return clearance_; }
  double contact_shape_value() const { return w_.empty() ? 0.0 : w_[0]; }
  double drive_omega() const { return omega_drive_; }

 private:
  int n_ = 0;
  double mass_a_inv_ = 0.0, mass_a_ = 0.0;
  double clearance_ = 0.0, hertz_k_ = 0.0;
  double omega_drive_ = 0.0;
  bool clamped_ = false;
  std::vector<double> omega2_;        // omega_k^2
  std::vector<double> two_zeta_omega_;
  std::vector<double> w_;             // contact weights phi_k(x_c), w_[0] > 0
  std::vector<double> f_modal_;       // phi_k(x_f) * F
};

class Bs3Stepper {
 public:
  explicit Bs3Stepper(int state_size)
      : k1_(state_size), k2_(state_size), k3_(state_size), tmp_(state_size) {}

  template <class Rhs>
  void step(const Rhs& sys, double t, double h, const double* y, double* out) {
    const int n = static_cast<int>(k1_.size());
    sys.rhs(t, y, k1_.data());
    for (int i = 0; i < n; ++i) tmp_[i] = y[i] + 0.5 * h * k1_[i];
    sys.rhs(t + 0.5 * h, tmp_.data(), k2_.data());
    for (int i = 0; i < n; ++i) tmp_[i] = y[i] + 0.75 * h * k2_[i];
    sys.rhs(t + 0.75 * h, tmp_.data(), k3_.data());
    const double c = h / 9.0;
    for (int i = 0; i < n; ++i) {
      out[i] = y[i] + c * (2.0 * k1_[i] + 3.0 * k2_[i] + 4.0 * k3_[i]);
    }
  }

 private:
  std::vector<double> k1_, k2_, k3_, tmp_;
};

}  // namespace vines
