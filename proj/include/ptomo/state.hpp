// state.hpp — reference quantum states on position grids: presets, density
// matrices, and the dense-matrix trace oracle every tomographic result is
// checked against. Dimensionless units throughout (hbar = m = omega = 1).

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "fourier.hpp"
#include "grid.hpp"
#include "word.hpp"

namespace ptomo {

enum class StateKind { pure, mixed };

inline GridSpec default_position_grid() { return GridSpec(-10.0, 10.0, 256); }

// p-grid whose span matches the bandwidth the Wigner transform can resolve:
// the relative-coordinate samples step by 2*dq, so |p| reaches ~pi/(2*dq)
inline GridSpec nyquist_p_grid(const GridSpec& q_grid) {
    const int n = q_grid.n_points;
    const double dp = pi / (n * q_grid.spacing());
    const double half = 0.5 * (n - 1) * dp;
    return GridSpec(-half, half, n);
}

class QuantumState {
public:
    static constexpr double norm_reject_tol = 1e-6;

    static QuantumState pure(const GridSpec& grid, CVec psi) {
        if (psi.size() != grid.n_points)
            throw domain_error("QuantumState: psi length does not match grid");
        const double norm = psi.squaredNorm() * grid.spacing();
        if (std::abs(norm - 1.0) > norm_reject_tol)
            throw domain_error("QuantumState: norm on grid is " + std::to_string(norm) +
                               "; state not resolved by the grid (rejected, not renormalized)");
        psi /= std::sqrt(norm);
        return QuantumState(grid, StateKind::pure, std::move(psi), CMat());
    }

    // for constructions whose contract includes renormalization
    static QuantumState pure_renormalized(const GridSpec& grid, CVec psi) {
        if (psi.size() != grid.n_points)
            throw domain_error("QuantumState: psi length does not match grid");
        const double norm = psi.squaredNorm() * grid.spacing();
        if (norm < 1e-12)
            throw domain_error("QuantumState: cannot normalize a (near-)zero vector");
        psi /= std::sqrt(norm);
        return QuantumState(grid, StateKind::pure, std::move(psi), CMat());
    }

    static QuantumState mixed(const GridSpec& grid, CMat rho) {
        if (rho.rows() != grid.n_points || rho.cols() != grid.n_points)
            throw domain_error("QuantumState: rho shape does not match grid");
        const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
        if (herm > 1e-12)
            throw domain_error("QuantumState: rho not Hermitian (max dev " + std::to_string(herm) + ")");
        rho = 0.5 * (rho + rho.adjoint()).eval();
        const double tr = rho.trace().real() * grid.spacing();
        if (std::abs(tr - 1.0) > norm_reject_tol)
            throw domain_error("QuantumState: trace on grid is " + std::to_string(tr) +
                               "; state not resolved by the grid (rejected, not renormalized)");
        rho /= tr;
        return QuantumState(grid, StateKind::mixed, CVec(), std::move(rho));
    }

    // degenerate pass-through (e.g. inverting an identically-zero field)
    static QuantumState mixed_unchecked(const GridSpec& grid, CMat rho) {
        return QuantumState(grid, StateKind::mixed, CVec(), std::move(rho));
    }

    const GridSpec& grid() const { return grid_; }
    StateKind kind() const { return kind_; }
    bool is_pure() const { return kind_ == StateKind::pure; }
    const CVec& psi() const {
        if (!is_pure()) throw domain_error("QuantumState: psi requested from a mixed state");
        return psi_;
    }
    // density matrix view; materialized lazily for pure states
    CMat density() const {
        if (is_pure()) return psi_ * psi_.adjoint();
        return rho_;
    }
    const CMat& rho() const {
        if (is_pure()) throw domain_error("QuantumState: rho requested from a pure state");
        return rho_;
    }

    double norm_on_grid() const {
        if (is_pure()) return psi_.squaredNorm() * grid_.spacing();
        return rho_.trace().real() * grid_.spacing();
    }

private:
    QuantumState(const GridSpec& g, StateKind k, CVec psi, CMat rho)
        : grid_(g), kind_(k), psi_(std::move(psi)), rho_(std::move(rho)) {}

    GridSpec grid_;
    StateKind kind_;
    CVec psi_;
    CMat rho_;
};

// ------------------------------- presets -----------------------------------

// normalized Hermite functions h_0..h_nmax sampled on the grid (columns)
inline Mat hermite_functions(const GridSpec& grid, int n_max) {
    const Vec q = grid.points();
    Mat h(grid.n_points, n_max + 1);
    for (int i = 0; i < grid.n_points; ++i)
        h(i, 0) = std::pow(pi, -0.25) * std::exp(-0.5 * q[i] * q[i]);
    if (n_max >= 1)
        for (int i = 0; i < grid.n_points; ++i) h(i, 1) = std::sqrt(2.0) * q[i] * h(i, 0);
    for (int n = 2; n <= n_max; ++n)
        for (int i = 0; i < grid.n_points; ++i)
            h(i, n) = std::sqrt(2.0 / n) * q[i] * h(i, n - 1) -
                      std::sqrt((n - 1.0) / n) * h(i, n - 2);
    return h;
}

inline QuantumState ho_eigenstate(int n, const GridSpec& grid = default_position_grid()) {
    if (n < 0 || n > 12)
        throw domain_error("ho_eigenstate: n must be in [0,12], got " + std::to_string(n));
    const Mat h = hermite_functions(grid, n);
    return QuantumState::pure(grid, h.col(n).cast<cd>());
}

inline QuantumState gaussian_state(double q0, double p0, double sigma,
                                   const GridSpec& grid = default_position_grid()) {
    if (!(sigma > 0.0)) throw domain_error("gaussian_state: sigma must be positive");
    const Vec q = grid.points();
    CVec psi(grid.n_points);
    const double amp = std::pow(pi * sigma * sigma, -0.25);
    for (int i = 0; i < grid.n_points; ++i) {
        const double d = q[i] - q0;
        psi[i] = amp * std::exp(-d * d / (2.0 * sigma * sigma)) *
                 cd(std::cos(p0 * q[i]), std::sin(p0 * q[i]));
    }
    return QuantumState::pure(grid, std::move(psi));
}

inline QuantumState coherent_state(double q0, double p0,
                                   const GridSpec& grid = default_position_grid()) {
    return gaussian_state(q0, p0, 1.0, grid);
}

struct HoPreset { int n = 0; };
struct CoherentPreset { double q0 = 0, p0 = 0; };
struct GaussianPreset { double q0 = 0, p0 = 0, sigma = 1; };
struct SuperpositionTerm {
    cd weight{1.0, 0.0};
    std::variant<HoPreset, CoherentPreset, GaussianPreset> base;
};
struct SuperpositionPreset { std::vector<SuperpositionTerm> terms; };

using StatePreset =
    std::variant<HoPreset, CoherentPreset, GaussianPreset, SuperpositionPreset>;

inline QuantumState state_from_preset(const StatePreset& preset,
                                      const GridSpec& grid = default_position_grid()) {
    return std::visit(
        [&](const auto& p) -> QuantumState {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, HoPreset>) {
                return ho_eigenstate(p.n, grid);
            } else if constexpr (std::is_same_v<T, CoherentPreset>) {
                return coherent_state(p.q0, p.p0, grid);
            } else if constexpr (std::is_same_v<T, GaussianPreset>) {
                return gaussian_state(p.q0, p.p0, p.sigma, grid);
            } else {
                if (p.terms.empty())
                    throw domain_error("superposition: needs at least one component");
                CVec acc = CVec::Zero(grid.n_points);
                for (const auto& term : p.terms) {
                    const QuantumState s = std::visit(
                        [&](const auto& b) { return state_from_preset(StatePreset(b), grid); },
                        term.base);
                    acc += term.weight * s.psi();
                }
                return QuantumState::pure_renormalized(grid, std::move(acc));
            }
        },
        preset);
}

inline QuantumState density_from_state(const QuantumState& state) {
    if (!state.is_pure()) throw domain_error("density_from_state: input must be pure");
    return QuantumState::mixed(state.grid(), state.density());
}

inline QuantumState classical_mixture(
    const std::vector<std::pair<double, QuantumState>>& parts) {
    if (parts.empty()) throw domain_error("classical_mixture: empty component list");
    const GridSpec grid = parts.front().second.grid();
    CMat rho = CMat::Zero(grid.n_points, grid.n_points);
    double wsum = 0.0;
    for (const auto& [w, s] : parts) {
        if (w < 0) throw domain_error("classical_mixture: negative weight");
        if (s.grid() != grid) throw domain_error("classical_mixture: grid mismatch");
        rho += w * s.density();
        wsum += w;
    }
    if (wsum <= 0) throw domain_error("classical_mixture: weights sum to zero");
    return QuantumState::mixed(grid, rho / wsum);
}

// ------------------------- dense-matrix trace oracle ------------------------
// Moments evaluated directly on the density matrix with spectral
// differentiation; independent of every tomographic code path.

inline CMat momentum_operator_matrix(const GridSpec& grid) {
    const double period = grid.n_points * grid.spacing();
    return cd(0, -1) * fourier_diff_matrix(grid.n_points, period).cast<cd>();
}

inline cd trace_word_moment(const QuantumState& state, const std::vector<Atom>& atoms) {
    const GridSpec& g = state.grid();
    CMat op = CMat::Identity(g.n_points, g.n_points);
    const CMat p_op = momentum_operator_matrix(g);
    const Vec q = g.points();
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
        if (*it == Atom::Q)
            op = q.cast<cd>().asDiagonal() * op;
        else
            op = p_op * op;
    }
    return (op * state.density()).trace() * g.spacing();
}

inline double oracle_mean_q(const QuantumState& s) { return trace_word_moment(s, {Atom::Q}).real(); }
inline double oracle_mean_p(const QuantumState& s) { return trace_word_moment(s, {Atom::P}).real(); }
inline double oracle_mean_q2(const QuantumState& s) { return trace_word_moment(s, {Atom::Q, Atom::Q}).real(); }
inline double oracle_mean_p2(const QuantumState& s) { return trace_word_moment(s, {Atom::P, Atom::P}).real(); }
inline double oracle_mean_qp_sym(const QuantumState& s) {
    return (trace_word_moment(s, {Atom::Q, Atom::P}) + trace_word_moment(s, {Atom::P, Atom::Q})).real();
}

inline double purity(const QuantumState& s) {
    if (s.is_pure()) return 1.0;
    const double dq = s.grid().spacing();
    return (s.rho() * s.rho()).trace().real() * dq * dq;
}

// overlap <psi| rho |psi> of a mixed/reconstructed state with a pure target
inline double fidelity_with_pure(const QuantumState& state, const QuantumState& target) {
    if (!target.is_pure()) throw domain_error("fidelity_with_pure: target must be pure");
    if (state.grid() != target.grid()) throw domain_error("fidelity_with_pure: grid mismatch");
    const double dq = state.grid().spacing();
    if (state.is_pure()) {
        const cd ov = (target.psi().adjoint() * state.psi())(0, 0) * dq;
        return std::norm(ov);
    }
    return (target.psi().adjoint() * state.rho() * target.psi())(0, 0).real() * dq * dq;
}

// smallest eigenvalue of rho (positivity check; used by validation suites)
inline double min_density_eigenvalue(const QuantumState& s) {
    if (s.is_pure()) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(s.rho());
    return es.eigenvalues().minCoeff() * s.grid().spacing();
}

// psi in the momentum representation at the requested p values
inline CVec momentum_wavefunction(const QuantumState& state, const Vec& p_values) {
    if (!state.is_pure()) throw domain_error("momentum_wavefunction: pure states only");
    const Vec q = state.grid().points();
    const double dq = state.grid().spacing();
    const CVec& psi = state.psi();
    CVec out(p_values.size());
    const double scale = dq / std::sqrt(2.0 * pi);
    for (Eigen::Index j = 0; j < p_values.size(); ++j) {
        cd acc(0, 0);
        for (Eigen::Index i = 0; i < q.size(); ++i) {
            const double a = -p_values[j] * q[i];
            acc += psi[i] * cd(std::cos(a), std::sin(a));
        }
        out[j] = acc * scale;
    }
    return out;
}

// diagonal of rho in the momentum representation at the requested p values
inline Vec momentum_density(const QuantumState& state, const Vec& p_values) {
    if (state.is_pure()) {
        const CVec f = momentum_wavefunction(state, p_values);
        return f.cwiseAbs2();
    }
    const Vec q = state.grid().points();
    const double dq = state.grid().spacing();
    const CMat& rho = state.rho();
    Vec out(p_values.size());
    for (Eigen::Index j = 0; j < p_values.size(); ++j) {
        CVec ph(q.size());
        for (Eigen::Index i = 0; i < q.size(); ++i) {
            const double a = p_values[j] * q[i];
            ph[i] = cd(std::cos(a), std::sin(a));
        }
        out[j] = ((ph.adjoint() * rho * ph)(0, 0)).real() * dq * dq / (2.0 * pi);
    }
    return out;
}

} // namespace ptomo
