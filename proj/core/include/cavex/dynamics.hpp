// dynamics.hpp — Dissipative dynamics of the two-cavity single-excitation doublet
//
// Moment variables (x, y, u, w) of the two dressed excited states over the
// collective ground state, in scaled time tau = t/tau_1 with
// 1/tau_1 = 2 gamma c1^2 and q = lambda_1 tau_1. The verbatim moment ODE
// system is the primary dynamics; the matrix-exponential closed form is the
// independent oracle; Lindblad-type generators on the 3x3 density matrix
// provide a coefficient-level cross-check.

#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "cavex/hilbert.hpp"

namespace cavex {

// Derived constants of the damped doublet. c1 (c2) is the photonic weight of
// the upper (lower) dressed state; p = c2/c1 in [0, 1] for chi >= 0.
struct DynamicsParams {
    double p{1.0};
    double q{0.0};
    double c1{0.0};
    double c2{0.0};
    double lambda1{0.0};     // half-splitting, sqrt(4 g^2 + chi^2)/2
    double omega_tilde{0.0}; // omega + chi/2
    double gamma{0.0};

    void validate() const;  // throws std::invalid_argument
};

// From the physical couplings: c1, c2 from the single-excitation eigenvectors
// at phi = 0, p = c2/c1, q = lambda_1 * tau_1. Requires g > 0 and gamma > 0;
// throws numerical_error if c1 underflows to zero (degenerate coupling).
DynamicsParams derive_dynamics_params(double g, double chi, double gamma,
                                      double omega = 0.0);

// x, y: populations of the upper/lower dressed states; u, w: real/imaginary
// parts of their coherence. Ground population is 1 - x - y.
struct MomentState {
    double x{0.0};
    double y{0.0};
    double u{0.0};
    double w{0.0};
};

// dx = -x - p u
// dy = -p^2 y - p u
// du = -2 q w - (p^2 + 1) u - (p/2)(x + y)
// dw =  2 q u - (p^2 + 1) w
MomentState moment_rhs(const MomentState& s, double p, double q);

// Coefficient matrix of the system above, ordering (x, y, u, w).
Eigen::Matrix4d moment_matrix(double p, double q);

struct TimeSeriesRow {
    double tau;
    double x, y, u, w;
    double entropy;
    double ground;
};

struct TimeSeries {
    std::vector<TimeSeriesRow> rows;  // fixed step, tau strictly increasing
};

// Classical fixed-step 4th-order integration of moment_rhs, one row per step
// including tau = 0, entropy and ground population appended. Throws
// numerical_error (with the step index) on non-finite state, and propagates
// the entropy positivity check. dt and tau_end must be positive.
TimeSeries integrate_moments(const MomentState& s0, double p, double q, double tau_end,
                             double dt);

// Independent oracle: the system is linear with constant coefficients, so
// exp(A tau) (scaled Padé) applied to s0 is exact up to rounding.
MomentState closed_form_moments(const MomentState& s0, double p, double q, double tau);

// Density matrix over the basis {|0>, |1,1>, |1,-1>}.
struct DensityMatrix3 {
    Eigen::Matrix3cd w;

    // Hermitian and unit trace within 1e-12; eigenvalues >= -positivity_floor
    // (soft positivity). Throws numerical_error on violation.
    void validate(double positivity_floor = 1e-6) const;
};

// diag(1-x-y, x, y) with <1,1|W|1,-1> = u - i w.
DensityMatrix3 reconstruct_density(const MomentState& s);

inline double ground_population(const MomentState& s) { return 1.0 - s.x - s.y; }

// S = -g0 ln g0 - U_e1 ln U_e1 - U_e2 ln U_e2 with
// U_e1,2 = (x+y)/2 ± sqrt((x-y)^2/4 + w^2 + u^2), g0 = 1-x-y, 0 ln 0 = 0.
// Arguments in [-1e-9, 0) are clamped to 0; below -1e-9 throws
// numerical_error carrying the offending value.
double entropy(const MomentState& s);

// `lindblad` is the textbook dissipator with collective jump operator
// L = c1 |0><1,1| + c2 |0><1,-1| at rate 2 gamma plus the coherent splitting
// lambda_1 (|1,1><1,1| - |1,-1><1,-1|). `commutator` transcribes the
// published double-commutator form term by term. The two constructions agree
// to rounding; both are kept so the agreement is measured, not assumed.
enum class GeneratorForm : std::uint8_t { commutator, lindblad };

const char* to_string(GeneratorForm form);

// Linear map W -> dW/dt on 3x3 density matrices.
class DecayGenerator {
public:
    DecayGenerator(const DynamicsParams& params, GeneratorForm form);

    Eigen::Matrix3cd apply(const Eigen::Matrix3cd& w) const;
    GeneratorForm form() const { return form_; }
    const DynamicsParams& params() const { return params_; }

private:
    DynamicsParams params_;
    GeneratorForm form_;
    Eigen::Matrix3cd hamiltonian_;  // lambda_1 (P_aa - P_bb)
    Eigen::Matrix3cd jump_;         // L
};

DecayGenerator build_decay_generator(const DynamicsParams& params, GeneratorForm form);

// Fixed-step 4th-order integration of dW/dt = G[W]; one snapshot per step
// including t = 0. Trace is preserved to rounding (drift <= 1e-12 per unit
// time for the generators above).
std::vector<std::pair<double, DensityMatrix3>> evolve_density(const DensityMatrix3& w0,
                                                              const DecayGenerator& generator,
                                                              double t_end, double dt);

// Moment-space coefficient matrix induced by a generator, rescaled to the
// tau = t/tau_1 units of moment_matrix. Extracted numerically by pushing unit
// moment vectors through the generator.
Eigen::Matrix4d generator_moment_matrix(const DynamicsParams& params, GeneratorForm form);

// Coefficient-level comparison between the verbatim moment system and the
// system induced by a density-matrix generator. The population rows (x, y)
// agree; the coherence decay rate is (p^2+1) verbatim vs (p^2+1)/2 from the
// generator — that gap is the documented deviation, reported here.
struct MomentCoefficientComparison {
    Eigen::Matrix4d verbatim;
    Eigen::Matrix4d generator;
    Eigen::Matrix4d difference;
    double max_population_row_difference{0.0};  // rows x and y
    double coherence_rate_verbatim{0.0};        // p^2 + 1
    double coherence_rate_generator{0.0};       // (p^2 + 1)/2
};

MomentCoefficientComparison compare_moment_coefficients(const DynamicsParams& params,
                                                        GeneratorForm form);

}  // namespace cavex
