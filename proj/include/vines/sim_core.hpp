#pragma once

// Semi-analytical core for the two-symmetric-impacts-per-period regime:
// slow-manifold algebra between absorber amplitude, host amplitude,
// clearance and restitution; the quartic frequency-response polynomial; the
// closed-form efficacy curve; and detection of the optimum clearance where
// the periodic branch folds.

#include <cstddef>
#include <vector>

#include "vines/parallel.hpp"

namespace vines {

struct PulseParams;  // impact_event.hpp
class ModalModel;    // beam.hpp
struct ContactSetup; // contact.hpp
struct ForcingLayout;

// The four dimensionless parameters the design problem reduces to.
struct DimensionlessDesign {
  double damping = 0.0;        // D, resonant-mode damping ratio, in (0, 1/sqrt(2))
  double mu_gamma = 0.0;       // modal mass ratio m_a phi_c^2 times pulse factor
  double modal_cor = 0.0;      // r in [0, 1)
  double forcing_ratio = 0.0;  // f_ex phi_c / (omega^2 g)

  void validate() const;  // throws std::invalid_argument
};

// rho = (2/pi)(1-r)/(1+r), the sawtooth/harmonic velocity-ratio parameter.
double rho(double modal_cor);

struct PsiBounds {
  double min = 0.0;  // atan(rho): amplitude diverges here
  double max = 0.0;  // acos(-rho^2/(1+rho^2)): fold of the slow manifold
};
PsiBounds psi_bounds(double modal_cor);

// g/(phi_c a) = (1/rho) sin(psi) - cos(psi); strictly increasing on the
// valid psi range, so it maps contact phase to normalized amplitude
// bijectively.
double clearance_ratio(double psi, double modal_cor);

// Slow-manifold residual (rho qa)^2 + (qa - g)^2 - (phi_c a)^2.
double sim_residual(double rho_value, double absorber_amplitude,
                    double clearance, double contact_amplitude);

// Pre-impact relative velocity v_c = Omega phi_c a (2/(1-r)) sin(psi).
double pre_impact_velocity(double Omega, double contact_amplitude,
                           double modal_cor, double psi);

// P(eta) = A eta^4 + B eta^3 + C eta^2 + E, the magnitude-squared
// frequency-response equation at contact phase psi.
struct QuarticCoeffs {
  double a4 = 0.0;  // A > 0
  double a3 = 0.0;  // B >= 0
  double a2 = 0.0;  // C < 0 for D < 1/sqrt(2)
  double a0 = 0.0;  // E

  double eval(double eta) const {
    const double e2 = eta * eta;
    return (a4 * e2 + a3 * eta + a2) * e2 + a0;
  }
  double derivative(double eta) const {
    return ((4.0 * a4 * eta + 3.0 * a3) * eta + 2.0 * a2) * eta;
  }
  // Positive stationary point of P, i.e. the candidate double root.
  double stationary_point() const;
};

QuarticCoeffs quartic_coefficients(double psi, const DimensionlessDesign& d);

// Positive real roots of P, ascending; returns 0, 1 or 2. A tangency
// (double root) is reported once.
int positive_real_roots(const QuarticCoeffs& c, double roots[2]);

// Closed-form point of the efficacy curve at contact phase psi:
// normalized clearance g/(phi_c a_no), normalized amplitude a_res/a_no and
// the fold frequency eta. Stable for vanishing mu_gamma or damping (the
// printed radical is evaluated through an equivalent cancellation-free
// form).
struct EfficacyPoint {
  double psi = 0.0;
  double eta = 0.0;
  double normalized_clearance = 0.0;
  double normalized_amplitude = 0.0;
};
EfficacyPoint efficacy_point(double psi, double damping, double mu_gamma,
                             double modal_cor);

struct OptimumPoint {
  double psi = 0.0;
  double eta = 0.0;
  double normalized_clearance = 0.0;
  double normalized_amplitude = 0.0;
  bool at_boundary = false;  // curve monotone up to psi_max, no interior fold
};

struct DesignPoint {
  double psi = 0.0;
  double eta = 0.0;
  double normalized_clearance = 0.0;
  double normalized_amplitude = 0.0;
  bool on_max_branch = false;  // resonant side; the low branch is kept but
                               // excluded from the optimum search
};

struct DesignCurve {
  std::vector<DesignPoint> points;
  OptimumPoint optimum;
  std::size_t optimum_index = 0;  // nearest grid point
};

// Psi grid on (psi_min, psi_max), geometrically refined toward psi_min
// where the amplitude diverges.
std::vector<double> make_psi_grid(double modal_cor, int points,
                                  double stretch = 8.0);

DesignCurve efficacy_curve(double damping, double mu_gamma, double modal_cor,
                           const std::vector<double>& psi_grid,
                           const ExecPolicy& policy = {});
DesignCurve efficacy_curve(double damping, double mu_gamma, double modal_cor,
                           int psi_points = 1000,
                           const ExecPolicy& policy = {});

// Turning point of the efficacy curve: grid scan plus golden-section
// refinement of the normalized clearance over psi (1e-10 psi tolerance).
OptimumPoint optimum_design(double damping, double mu_gamma, double modal_cor,
                            int grid_points = 800);

// One point of the two-impact frequency response at fixed normalized
// clearance: host amplitude parameterized by psi, frequency from the
// quartic, excitation phase recovered from the complex response equation.
struct PsiPoint {
  double psi = 0.0;
  double eta = 0.0;
  double amplitude_over_clearance = 0.0;  // phi_c a / g
  double normalized_amplitude = 0.0;      // a / a_no
  double absorber_amplitude_ratio = 0.0;  // qa_hat / (phi_c a)
  double excitation_phase = 0.0;          // psi_E in (-pi, pi]
  int branch_id = -1;
  bool on_isola = false;
};

struct FrequencyResponse {
  double normalized_clearance = 0.0;
  std::vector<PsiPoint> points;  // grid order, ascending psi; low root first
  int branch_count = 0;
  bool has_isola = false;
};

FrequencyResponse frequency_response(double damping, double mu_gamma,
                                     double modal_cor,
                                     double normalized_clearance,
                                     const std::vector<double>& psi_grid,
                                     const ExecPolicy& policy = {});
FrequencyResponse frequency_response(const DimensionlessDesign& d,
                                     double normalized_clearance,
                                     int psi_points = 1000,
                                     const ExecPolicy& policy = {});

// Complex residual magnitude of the frequency-response equation at a
// solution point (test hook; zero up to root-refinement tolerance).
double frequency_response_residual(double damping, double mu_gamma,
                                   double modal_cor, double forcing_ratio,
                                   const PsiPoint& p);

DimensionlessDesign dimensionless_from_physical(const ModalModel& model,
                                                const ContactSetup& contact,
                                                const PulseParams& pulse,
                                                const ForcingLayout& layout);

}  // namespace vines
