// wigner.hpp — phase-space representation: W(q,p) from the density matrix by
// Fourier transform over the relative coordinate, and its inverse

#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "errors.hpp"
#include "fourier.hpp"
#include "grid.hpp"
#include "state.hpp"

namespace ptomo {

struct PhaseSpaceField {
    GridSpec q_grid;
    GridSpec p_grid;
    Mat values;  // values(i,j) = W(q_i, p_j)

    double integral() const {
        return trapezoid2(values, q_grid.spacing(), p_grid.spacing());
    }
};

// marginal over p (index j), one value per q node
inline Vec marginal_q(const PhaseSpaceField& w) {
    Vec out(w.q_grid.n_points);
    for (int i = 0; i < w.q_grid.n_points; ++i)
        out[i] = trapezoid(w.values.row(i), w.p_grid.spacing());
    return out;
}

inline Vec marginal_p(const PhaseSpaceField& w) {
    Vec out(w.p_grid.n_points);
    for (int j = 0; j < w.p_grid.n_points; ++j)
        out[j] = trapezoid(w.values.col(j), w.q_grid.spacing());
    return out;
}

namespace detail {

// W(q_i, p_j) = (1/2pi) sum_m rho(q_i + m dq, q_i - m dq) e^{-i p u_m} du,
// u_m = 2 m dq. Works for any complex kernel (used for Weyl symbols too).
inline CMat wigner_kernel_transform(const CMat& rho, const GridSpec& q_grid,
                                    const Vec& p_values) {
    const int n = q_grid.n_points;
    const double dq = q_grid.spacing();
    const double du = 2.0 * dq;
    CMat out(n, p_values.size());
    for (int i = 0; i < n; ++i) {
        const int mmax = std::min(i, n - 1 - i);
        for (Eigen::Index j = 0; j < p_values.size(); ++j) {
            const double a = -p_values[j] * du;
            const cd step(std::cos(a), std::sin(a));
            cd ph(1, 0), acc = rho(i, i);
            for (int m = 1; m <= mmax; ++m) {
                ph *= step;
                acc += rho(i + m, i - m) * ph + rho(i - m, i + m) * std::conj(ph);
            }
            out(i, j) = acc * (du / (2.0 * pi));
        }
    }
    return out;
}

} // namespace detail

inline PhaseSpaceField wigner_from_density(const QuantumState& state,
                                           const GridSpec& p_grid) {
    const GridSpec& qg = state.grid();
    const double p_limit = pi / (2.0 * qg.spacing());
    const double p_absmax = std::max(std::abs(p_grid.min), std::abs(p_grid.max));
    if (p_absmax > p_limit * (1.0 + 1e-12))
        throw grid_error("wigner_from_density: |p| up to " + std::to_string(p_absmax) +
                         " exceeds the resolvable bound pi/(2 dq) = " + std::to_string(p_limit));
    const CMat w = detail::wigner_kernel_transform(state.density(), qg, p_grid.points());
    const double imag_res = w.imag().cwiseAbs().maxCoeff();
    if (imag_res > 1e-10)
        throw numerical_error("wigner_from_density: imaginary residue " + std::to_string(imag_res));
    return PhaseSpaceField{qg, p_grid, w.real()};
}

inline PhaseSpaceField wigner_from_density(const QuantumState& state) {
    return wigner_from_density(state, nyquist_p_grid(state.grid()));
}

// Inverse: rho(q+u/2, q-u/2) = \int W(q,p) e^{ipu} dp. Midpoint values of W
// in q (needed when the two position arguments straddle a node) come from
// trigonometric interpolation, which is spectrally accurate for decaying W.
inline QuantumState density_from_wigner(const PhaseSpaceField& w) {
    const int n = w.q_grid.n_points;
    const double dq = w.q_grid.spacing();
    const double dp = w.p_grid.spacing();
    const Vec p = w.p_grid.points();

    if (w.values.cwiseAbs().maxCoeff() == 0.0)
        return QuantumState::mixed_unchecked(w.q_grid, CMat::Zero(n, n));
    const double total = w.integral();
    if (std::abs(total - 1.0) > 1e-4)
        throw domain_error("density_from_wigner: field integrates to " + std::to_string(total));

    // W at integer and half-integer q positions: rows 0..2n-2 <-> q_min + c*dq/2
    Mat wfine(2 * n - 1, w.p_grid.n_points);
    for (int j = 0; j < w.p_grid.n_points; ++j) {
        const Vec col = w.values.col(j);
        const Vec mid = half_shift(col, w.q_grid.min, dq);
        for (int i = 0; i < n; ++i) wfine(2 * i, j) = col[i];
        for (int i = 0; i + 1 < n; ++i) wfine(2 * i + 1, j) = mid[i];
    }

    // E(c, m) = \int W(q_c, p) e^{i p (m dq)} dp for u = m dq, m = -(n-1)..n-1
    CMat rho(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b <= a; ++b) {
            const int c = a + b;            // fine-row index of (q_a+q_b)/2
            const double u = (a - b) * dq;  // relative coordinate
            cd acc(0, 0);
            for (int j = 0; j < w.p_grid.n_points; ++j) {
                const double ang = p[j] * u;
                const double wt = (j == 0 || j == w.p_grid.n_points - 1) ? 0.5 : 1.0;
                acc += wt * wfine(c, j) * cd(std::cos(ang), std::sin(ang));
            }
            rho(a, b) = acc * dp;
            rho(b, a) = std::conj(rho(a, b));
        }
    }
    return QuantumState::mixed(w.q_grid, std::move(rho));
}

} // namespace ptomo
