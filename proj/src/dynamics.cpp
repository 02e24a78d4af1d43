#include "vines/dynamics.hpp"

namespace vines {

VibroImpactSystem::VibroImpactSystem(const ModalModel& model,
                                     const ContactSetup& contact,
                                     const ForcingLayout& layout,
                                     double drive_omega, bool host_clamped)
    : n_(host_clamped ? 0 : model.mode_count()),
      mass_a_inv_(1.0 / contact.absorber_mass),
      mass_a_(contact.absorber_mass),
      clearance_(contact.clearance),
      hertz_k_(contact.hertz_constant),
      omega_drive_(drive_omega),
      clamped_(host_clamped) {
  omega2_.resize(n_);
  two_zeta_omega_.resize(n_);
  w_.resize(n_);
  f_modal_.resize(n_);
  // Contact direction chosen so the mode-1 weight is positive.
  const double orient =
      (n_ > 0 && model.shape_at(layout.contact_location, 0) < 0.0) ? -1.0 : 1.0;
  for (int k = 0; k < n_; ++k) {
    const double om = model.natural_frequency(k);
    omega2_[k] = om * om;
    two_zeta_omega_[k] = 2.0 * model.damping_ratio(k) * om;
    w_[k] = orient * model.shape_at(layout.contact_location, k);
    f_modal_[k] =
        model.shape_at(layout.force_location, k) * layout.force_amplitude;
  }
}

void VibroImpactSystem::rhs(double t, const double* y, double* dy) const {
  const double fc = contact_force_at(y);
  dy[0] = y[1];
  dy[1] = fc * mass_a_inv_;
  if (n_ == 0) return;
  const double* q = y + 2;
  const double* v = y + 2 + n_;
  double* dq = dy + 2;
  const double drive = std::cos(omega_drive_ * t);
  for (int k = 0; k < n_; ++k) {
    dq[k] = v[k];
    dq[n_ + k] = f_modal_[k] * drive - omega2_[k] * q[k] -
                 two_zeta_omega_[k] * v[k] - w_[k] * fc;
  }
}

double VibroImpactSystem::gap_deflection(const double* y) const {
  double host = 0.0;
  const double* q = y + 2;
  for (int k = 0; k < n_; ++k) host += w_[k] * q[k];
  return host - y[0];
}

double VibroImpactSystem::gap_velocity(const double* y) const {
  double host = 0.0;
  const double* v = y + 2 + n_;
  for (int k = 0; k < n_; ++k) host += w_[k] * v[k];
  return host - y[1];
}

double VibroImpactSystem::contact_force_at(const double* y) const {
  return contact_force(gap_deflection(y), clearance_, hertz_k_);
}

double VibroImpactSystem::energy(const double* y) const {
  double e = 0.5 * mass_a_ * y[1] * y[1];
  const double* q = y + 2;
  const double* v = y + 2 + n_;
  for (int k = 0; k < n_; ++k) {
    e += 0.5 * (v[k] * v[k] + omega2_[k] * q[k] * q[k]);
  }
  return e + hertz_potential(gap_deflection(y), clearance_, hertz_k_);
}

}  // namespace vines
