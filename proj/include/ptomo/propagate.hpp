// propagate.hpp — reference Schrödinger evolution used as the dynamics oracle.
// Exact eigenphase path for the harmonic potential, exact spectral propagator
// for the free particle, split-step with step-doubling control otherwise.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "fourier.hpp"
#include "hamiltonian.hpp"
#include "state.hpp"

namespace ptomo {

namespace detail {

inline Vec dual_frequencies(const GridSpec& g) {
    const int n = g.n_points;
    const double dk = 2.0 * pi / (n * g.spacing());
    Vec k(n);
    for (int j = 0; j < n; ++j) k[j] = dk * (j < (n + 1) / 2 ? j : j - n);
    return k;
}

inline CVec free_propagate(const CVec& psi, const GridSpec& g, double t) {
    const Vec k = dual_frequencies(g);
    std::vector<cd> a(psi.data(), psi.data() + psi.size());
    a = dft(std::move(a), -1);
    for (int j = 0; j < g.n_points; ++j) {
        const double ph = -0.5 * k[j] * k[j] * t;
        a[static_cast<std::size_t>(j)] *= cd(std::cos(ph), std::sin(ph));
    }
    a = dft(std::move(a), +1);
    CVec out(g.n_points);
    for (int j = 0; j < g.n_points; ++j) out[j] = a[static_cast<std::size_t>(j)] / double(g.n_points);
    return out;
}

inline CVec harmonic_propagate(const CVec& psi, const GridSpec& g, double t) {
    const int n_max = std::min(g.n_points - 1, 64);
    const Mat h = hermite_functions(g, n_max);
    const double dq = g.spacing();
    CVec coeff(n_max + 1);
    for (int n = 0; n <= n_max; ++n) coeff[n] = (h.col(n).cast<cd>().adjoint() * psi)(0, 0) * dq;
    const double captured = coeff.squaredNorm();
    const double norm = psi.squaredNorm() * dq;
    if (std::abs(captured - norm) > 1e-10 * std::max(1.0, norm))
        throw numerical_error("harmonic oracle: eigenbasis projection incomplete (missing " +
                              std::to_string(norm - captured) + ")");
    CVec out = CVec::Zero(g.n_points);
    for (int n = 0; n <= n_max; ++n) {
        const double ph = -(n + 0.5) * t;
        out += coeff[n] * cd(std::cos(ph), std::sin(ph)) * h.col(n).cast<cd>();
    }
    return out;
}

inline CVec split_step_run(const CVec& psi0, const GridSpec& g, const HamiltonianSpec& h,
                           double t, int steps) {
    const Vec q = g.points();
    const Vec k = dual_frequencies(g);
    const double dt = t / steps;
    CVec half_v(g.n_points), full_t(g.n_points);
    for (int i = 0; i < g.n_points; ++i) {
        const double ph = -0.5 * dt * h.potential_at(q[i]);
        half_v[i] = cd(std::cos(ph), std::sin(ph));
        const double pk = -0.5 * dt * k[i] * k[i];
        full_t[i] = cd(std::cos(pk), std::sin(pk));
    }
    std::vector<cd> a(psi0.data(), psi0.data() + psi0.size());
    const double inv_n = 1.0 / g.n_points;
    for (int s = 0; s < steps; ++s) {
        for (int i = 0; i < g.n_points; ++i) a[static_cast<std::size_t>(i)] *= half_v[i];
        a = dft(std::move(a), -1);
        for (int i = 0; i < g.n_points; ++i) a[static_cast<std::size_t>(i)] *= full_t[i];
        a = dft(std::move(a), +1);
        for (int i = 0; i < g.n_points; ++i) a[static_cast<std::size_t>(i)] *= half_v[i] * inv_n;
    }
    CVec out(g.n_points);
    for (int i = 0; i < g.n_points; ++i) out[i] = a[static_cast<std::size_t>(i)];
    return out;
}

inline CVec split_step_propagate(const CVec& psi, const GridSpec& g,
                                 const HamiltonianSpec& h, double t) {
    int steps = std::max(32, static_cast<int>(std::ceil(std::abs(t) / 1e-3)));
    CVec coarse = split_step_run(psi, g, h, t, steps);
    for (;;) {
        const CVec fine = split_step_run(psi, g, h, t, 2 * steps);
        const double diff = (fine - coarse).cwiseAbs().maxCoeff();
        if (diff < 1e-9) return fine;
        steps *= 2;
        coarse = fine;
        if (steps > (1 << 18))
            throw numerical_error("split-step oracle: no convergence (last step-halving change " +
                                  std::to_string(diff) + ")");
    }
}

inline CVec evolve_pure(const CVec& psi, const GridSpec& g, const HamiltonianSpec& h, double t) {
    if (h.is_free()) return free_propagate(psi, g, t);
    if (h.is_harmonic()) return harmonic_propagate(psi, g, t);
    return split_step_propagate(psi, g, h, t);
}

} // namespace detail

inline QuantumState evolve_state_oracle(const QuantumState& state, const HamiltonianSpec& h,
                                        double t) {
    const GridSpec& g = state.grid();
    if (t == 0.0) return state;
    if (state.is_pure()) {
        CVec psi = detail::evolve_pure(state.psi(), g, h, t);
        const double norm = psi.squaredNorm() * g.spacing();
        if (std::abs(norm - 1.0) > 1e-8)
            throw numerical_error("evolve_state_oracle: norm drifted to " + std::to_string(norm));
        const double edge = std::max(std::abs(psi[0]), std::abs(psi[g.n_points - 1]));
        if (edge > 1e-5)
            throw numerical_error("evolve_state_oracle: state reached the grid boundary (|psi|=" +
                                  std::to_string(edge) + ")");
        return QuantumState::pure(g, std::move(psi));
    }
    // mixed: evolve the spectral decomposition
    Eigen::SelfAdjointEigenSolver<CMat> es(state.rho());
    CMat rho = CMat::Zero(g.n_points, g.n_points);
    for (int k = 0; k < g.n_points; ++k) {
        const double lam = es.eigenvalues()[k];
        if (lam * g.spacing() < 1e-12) continue;
        const CVec v = detail::evolve_pure(es.eigenvectors().col(k), g, h, t);
        rho += lam * (v * v.adjoint());
    }
    return QuantumState::mixed(g, std::move(rho));
}

} // namespace ptomo
