// dynamics.cpp

#include "cavex/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cavex/errors.hpp"
#include "cavex/spectra.hpp"

namespace cavex {

void DynamicsParams::validate() const {
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("DynamicsParams: p must be finite and >= 0");
    }
    if (!std::isfinite(q)) {
        throw std::invalid_argument("DynamicsParams: q must be finite");
    }
    if (gamma < 0.0) {
        throw std::invalid_argument("DynamicsParams: gamma must be >= 0");
    }
}

DynamicsParams derive_dynamics_params(double g, double chi, double gamma, double omega) {
    if (!(g > 0.0)) {
        throw std::invalid_argument("derive_dynamics_params: g must be > 0");
    }
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("derive_dynamics_params: gamma must be > 0");
    }
    const auto levels = two_cavity_single_excitation_levels(g, chi, PhaseSelector::zero);
    // levels[0] is the lower branch (index -1), levels[1] the upper (+1);
    // the photonic weight is the second coefficient
    const double c1 = std::abs(levels[1].coefficients[1]);
    const double c2 = std::abs(levels[0].coefficients[1]);
    if (c1 == 0.0) {
        throw numerical_error("derive_dynamics_params: degenerate coupling, c1 = 0");
    }
    DynamicsParams params;
    params.c1 = c1;
    params.c2 = c2;
    params.p = c2 / c1;
    params.lambda1 = 0.5 * std::sqrt(4.0 * g * g + chi * chi);
    params.gamma = gamma;
    const double tau1 = 1.0 / (2.0 * gamma * c1 * c1);
    params.q = params.lambda1 * tau1;
    params.omega_tilde = omega + 0.5 * chi;
    return params;
}

MomentState moment_rhs(const MomentState& s, double p, double q) {
    MomentState d;
    d.x = -s.x - p * s.u;
    d.y = -p * p * s.y - p * s.u;
    d.u = -2.0 * q * s.w - (p * p + 1.0) * s.u - 0.5 * p * (s.x + s.y);
    d.w = 2.0 * q * s.u - (p * p + 1.0) * s.w;
    return d;
}

Eigen::Matrix4d moment_matrix(double p, double q) {
    Eigen::Matrix4d a;
    // ordering (x, y, u, w)
    a << -1.0, 0.0, -p, 0.0,
         0.0, -p * p, -p, 0.0,
         -0.5 * p, -0.5 * p, -(p * p + 1.0), -2.0 * q,
         0.0, 0.0, 2.0 * q, -(p * p + 1.0);
    return a;
}

namespace {

TimeSeriesRow make_row(double tau, const MomentState& s) {
    return TimeSeriesRow{tau, s.x, s.y, s.u, s.w, entropy(s), ground_population(s)};
}

bool finite(const MomentState& s) {
    return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.u) && std::isfinite(s.w);
}

}  // namespace

TimeSeries integrate_moments(const MomentState& s0, double p, double q, double tau_end,
                             double dt) {
    if (!(dt > 0.0) || !(tau_end > 0.0)) {
        throw std::invalid_argument("integrate_moments: dt and tau_end must be > 0");
    }
    const auto steps = static_cast<long>(std::llround(tau_end / dt));
    if (steps < 1) {
        throw std::invalid_argument("integrate_moments: tau_end shorter than one step");
    }
    TimeSeries series;
    series.rows.reserve(static_cast<std::size_t>(steps) + 1);
    MomentState s = s0;
    series.rows.push_back(make_row(0.0, s));
    for (long k = 0; k < steps; ++k) {
        const MomentState k1 = moment_rhs(s, p, q);
        const MomentState s2{s.x + 0.5 * dt * k1.x, s.y + 0.5 * dt * k1.y,
                             s.u + 0.5 * dt * k1.u, s.w + 0.5 * dt * k1.w};
        const MomentState k2 = moment_rhs(s2, p, q);
        const MomentState s3{s.x + 0.5 * dt * k2.x, s.y + 0.5 * dt * k2.y,
                             s.u + 0.5 * dt * k2.u, s.w + 0.5 * dt * k2.w};
        const MomentState k3 = moment_rhs(s3, p, q);
        const MomentState s4{s.x + dt * k3.x, s.y + dt * k3.y, s.u + dt * k3.u,
                             s.w + dt * k3.w};
        const MomentState k4 = moment_rhs(s4, p, q);
        s.x += dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        s.y += dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
        s.u += dt / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u);
        s.w += dt / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w);
        if (!finite(s)) {
            std::ostringstream msg;
            msg << "integrate_moments: non-finite state at step " << (k + 1);
            throw numerical_error(msg.str());
        }
        series.rows.push_back(make_row(static_cast<double>(k + 1) * dt, s));
    }
    return series;
}

MomentState closed_form_moments(const MomentState& s0, double p, double q, double tau) {
    const Eigen::Matrix4d propagator = (moment_matrix(p, q) * tau).exp();
    const Eigen::Vector4d v = propagator * Eigen::Vector4d(s0.x, s0.y, s0.u, s0.w);
    return MomentState{v(0), v(1), v(2), v(3)};
}

void DensityMatrix3::validate(double positivity_floor) const {
    if ((w - w.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw numerical_error("DensityMatrix3: not Hermitian");
    }
    if (std::abs(w.trace().real() - 1.0) > 1e-12 || std::abs(w.trace().imag()) > 1e-12) {
        throw numerical_error("DensityMatrix3: trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(w);
    if (solver.eigenvalues().minCoeff() < -positivity_floor) {
        std::ostringstream msg;
        msg << "DensityMatrix3: eigenvalue " << solver.eigenvalues().minCoeff()
            << " below positivity floor";
        throw numerical_error(msg.str());
    }
}

DensityMatrix3 reconstruct_density(const MomentState& s) {
    DensityMatrix3 density;
    density.w = Eigen::Matrix3cd::Zero();
    density.w(0, 0) = 1.0 - s.x - s.y;
    density.w(1, 1) = s.x;
    density.w(2, 2) = s.y;
    density.w(1, 2) = std::complex<double>(s.u, -s.w);
    density.w(2, 1) = std::complex<double>(s.u, s.w);
    return density;
}

namespace {

constexpr double kEntropyClamp = 1e-9;

double entropy_term(double value) {
    if (value < -kEntropyClamp) {
        std::ostringstream msg;
        msg << "entropy: population " << value << " below -1e-9";
        throw numerical_error(msg.str());
    }
    if (value <= 0.0) return 0.0;  // 0 ln 0 = 0, round-off clamped
    return -value * std::log(value);
}

}  // namespace

double entropy(const MomentState& s) {
    const double root =
        std::sqrt(0.25 * (s.x - s.y) * (s.x - s.y) + s.w * s.w + s.u * s.u);
    const double upper = 0.5 * (s.x + s.y) + root;
    const double lower = 0.5 * (s.x + s.y) - root;
    return entropy_term(ground_population(s)) + entropy_term(upper) + entropy_term(lower);
}

const char* to_string(GeneratorForm form) {
    return form == GeneratorForm::commutator ? "commutator" : "lindblad";
}

DecayGenerator::DecayGenerator(const DynamicsParams& params, GeneratorForm form)
    : params_(params), form_(form) {
    params_.validate();
    hamiltonian_ = Eigen::Matrix3cd::Zero();
    hamiltonian_(1, 1) = params_.lambda1;
    hamiltonian_(2, 2) = -params_.lambda1;
    jump_ = Eigen::Matrix3cd::Zero();
    jump_(0, 1) = params_.c1;
    jump_(0, 2) = params_.c2;
}

Eigen::Matrix3cd DecayGenerator::apply(const Eigen::Matrix3cd& w) const {
    const std::complex<double> i(0.0, 1.0);
    const double gamma = params_.gamma;
    if (form_ == GeneratorForm::lindblad) {
        const Eigen::Matrix3cd ldl = jump_.adjoint() * jump_;
        return -i * (hamiltonian_ * w - w * hamiltonian_) +
               2.0 * gamma * (jump_ * w * jump_.adjoint() - 0.5 * (ldl * w + w * ldl));
    }
    // verbatim double-commutator transcription:
    //   dW/dt = i lambda_1 [W, P_aa - P_bb] - gamma ([W L^†, L] + h.c.)
    Eigen::Matrix3cd pop = Eigen::Matrix3cd::Zero();
    pop(1, 1) = 1.0;
    pop(2, 2) = -1.0;
    const Eigen::Matrix3cd raising = jump_.adjoint();  // c1 |a><0| + c2 |b><0|
    const Eigen::Matrix3cd bracket = w * raising * jump_ - jump_ * w * raising;
    return i * params_.lambda1 * (w * pop - pop * w) - gamma * (bracket + bracket.adjoint());
}

DecayGenerator build_decay_generator(const DynamicsParams& params, GeneratorForm form) {
    return DecayGenerator(params, form);
}

std::vector<std::pair<double, DensityMatrix3>> evolve_density(const DensityMatrix3& w0,
                                                              const DecayGenerator& generator,
                                                              double t_end, double dt) {
    if (!(dt > 0.0) || !(t_end > 0.0)) {
        throw std::invalid_argument("evolve_density: dt and t_end must be > 0");
    }
    const auto steps = static_cast<long>(std::llround(t_end / dt));
    std::vector<std::pair<double, DensityMatrix3>> series;
    series.reserve(static_cast<std::size_t>(steps) + 1);
    Eigen::Matrix3cd w = w0.w;
    series.emplace_back(0.0, DensityMatrix3{w});
    for (long k = 0; k < steps; ++k) {
        const Eigen::Matrix3cd k1 = generator.apply(w);
        const Eigen::Matrix3cd k2 = generator.apply(w + 0.5 * dt * k1);
        const Eigen::Matrix3cd k3 = generator.apply(w + 0.5 * dt * k2);
        const Eigen::Matrix3cd k4 = generator.apply(w + dt * k3);
        w += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!w.allFinite()) {
            std::ostringstream msg;
            msg << "evolve_density: non-finite state at step " << (k + 1);
            throw numerical_error(msg.str());
        }
        series.emplace_back(static_cast<double>(k + 1) * dt, DensityMatrix3{w});
    }
    return series;
}

namespace {

Eigen::Matrix3cd density_of_moments(const Eigen::Vector4d& m) {
    Eigen::Matrix3cd w = Eigen::Matrix3cd::Zero();
    w(1, 1) = m(0);
    w(2, 2) = m(1);
    w(1, 2) = std::complex<double>(m(2), -m(3));
    w(2, 1) = std::complex<double>(m(2), m(3));
    return w;
}

Eigen::Vector4d moments_of_density(const Eigen::Matrix3cd& w) {
    return Eigen::Vector4d(w(1, 1).real(), w(2, 2).real(), w(1, 2).real(), -w(1, 2).imag());
}

}  // namespace

Eigen::Matrix4d generator_moment_matrix(const DynamicsParams& params, GeneratorForm form) {
    DecayGenerator generator(params, form);
    // The generator annihilates |0><0|, so the moment dynamics is linear;
    // push unit moment vectors through and rescale to tau = t/tau_1 units.
    const double scale = 2.0 * params.gamma * params.c1 * params.c1;
    if (!(scale > 0.0)) {
        throw std::invalid_argument("generator_moment_matrix: gamma and c1 must be > 0");
    }
    Eigen::Matrix4d out;
    for (int k = 0; k < 4; ++k) {
        Eigen::Vector4d unit = Eigen::Vector4d::Zero();
        unit(k) = 1.0;
        out.col(k) = moments_of_density(generator.apply(density_of_moments(unit))) / scale;
    }
    return out;
}

MomentCoefficientComparison compare_moment_coefficients(const DynamicsParams& params,
                                                        GeneratorForm form) {
    MomentCoefficientComparison cmp;
    cmp.verbatim = moment_matrix(params.p, params.q);
    cmp.generator = generator_moment_matrix(params, form);
    cmp.difference = cmp.generator - cmp.verbatim;
    cmp.max_population_row_difference =
        cmp.difference.topRows<2>().cwiseAbs().maxCoeff();
    cmp.coherence_rate_verbatim = params.p * params.p + 1.0;
    cmp.coherence_rate_generator = -cmp.generator(2, 2);
    return cmp;
}

}  // namespace cavex
