// fourier.hpp — discrete Fourier transforms, trigonometric interpolation,
// spectral differentiation on uniform grids

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "grid.hpp"

namespace ptomo {

namespace detail {

inline bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

// iterative radix-2 Cooley-Tukey; sign = -1 forward, +1 inverse (unscaled)
inline void fft_radix2(std::vector<cd>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * pi / static_cast<double>(len);
        const cd wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cd u = a[i + k];
                const cd v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

inline std::vector<cd> dft_direct(const std::vector<cd>& a, int sign) {
    const std::size_t n = a.size();
    std::vector<cd> out(n, cd(0, 0));
    for (std::size_t k = 0; k < n; ++k) {
        const double base = sign * 2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
        const cd w(std::cos(base), std::sin(base));
        cd ph(1.0, 0.0);
        cd s(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            s += a[j] * ph;
            ph *= w;
            if ((j & 63u) == 63u)  // kill phase drift on long sums
                ph = cd(std::cos(base * double(j + 1)), std::sin(base * double(j + 1)));
        }
        out[k] = s;
    }
    return out;
}

} // namespace detail

// unscaled DFT: out_k = sum_j a_j exp(sign * 2*pi*i*j*k / n)
inline std::vector<cd> dft(std::vector<cd> a, int sign) {
    if (detail::is_pow2(a.size())) {
        detail::fft_radix2(a, sign);
        return a;
    }
    return detail::dft_direct(a, sign);
}

// Trigonometric interpolant of samples on a uniform grid, treated as one
// period of a periodic function (period n*dx, i.e. one spacing past max).
// Decaying fields make the periodic extension smooth, so evaluation between
// nodes is spectrally accurate.
class TrigInterp {
public:
    TrigInterp(const CVec& samples, double x0, double dx)
        : n_(static_cast<int>(samples.size())), x0_(x0), dx_(dx) {
        std::vector<cd> a(samples.data(), samples.data() + samples.size());
        coeff_ = dft(std::move(a), -1);
        for (auto& c : coeff_) c /= static_cast<double>(n_);
    }

    TrigInterp(const Vec& samples, double x0, double dx)
        : TrigInterp(CVec(samples.cast<cd>()), x0, dx) {}

    cd operator()(double x) const {
        const double t = (x - x0_) / dx_;  // fractional node index
        const double w = 2.0 * pi * t / n_;
        const cd step(std::cos(w), std::sin(w));
        const int half = n_ / 2;
        // positive frequencies k = 0..half-1
        cd acc(0, 0), ph(1, 0);
        for (int k = 0; k < half; ++k) {
            acc += coeff_[static_cast<std::size_t>(k)] * ph;
            ph *= step;
        }
        // negative frequencies k = -1..-(half-1)
        const cd cstep = std::conj(step);
        ph = cstep;
        for (int k = 1; k < half; ++k) {
            acc += coeff_[static_cast<std::size_t>(n_ - k)] * ph;
            ph *= cstep;
        }
        // symmetrized Nyquist term keeps real data real
        if (n_ % 2 == 0)
            acc += coeff_[static_cast<std::size_t>(half)] * std::cos(pi * t);
        return acc;
    }

    // samples of the interpolant on the refined grid x0 + j*dx*n/m, j=0..m-1
    // (m a power-of-two multiple of n); cheap zero-padded inverse transform
    std::vector<cd> upsample(int m) const {
        std::vector<cd> padded(static_cast<std::size_t>(m), cd(0, 0));
        const int half = n_ / 2;
        for (int k = 0; k < half; ++k) padded[static_cast<std::size_t>(k)] = coeff_[static_cast<std::size_t>(k)];
        for (int k = 1; k < half; ++k)
            padded[static_cast<std::size_t>(m - k)] = coeff_[static_cast<std::size_t>(n_ - k)];
        if (n_ % 2 == 0) {
            padded[static_cast<std::size_t>(half)] = 0.5 * coeff_[static_cast<std::size_t>(half)];
            padded[static_cast<std::size_t>(m - half)] = 0.5 * coeff_[static_cast<std::size_t>(half)];
        }
        return dft(std::move(padded), +1);
    }

    // interpolant of the derivative
    CVec derivative_at_nodes() const {
        const double L = n_ * dx_;
        std::vector<cd> d(coeff_.size());
        const int half = n_ / 2;
        for (int k = 0; k < half; ++k)
            d[static_cast<std::size_t>(k)] = coeff_[static_cast<std::size_t>(k)] * cd(0, 2.0 * pi * k / L);
        for (int k = 1; k < half; ++k)
            d[static_cast<std::size_t>(n_ - k)] = coeff_[static_cast<std::size_t>(n_ - k)] * cd(0, -2.0 * pi * k / L);
        if (n_ % 2 == 0) d[static_cast<std::size_t>(half)] = cd(0, 0);  // odd-symmetric Nyquist
        auto vals = dft(std::move(d), +1);
        CVec out(n_);
        for (int i = 0; i < n_; ++i) out[i] = vals[static_cast<std::size_t>(i)];
        return out;
    }

    int size() const { return n_; }
    double x0() const { return x0_; }
    double dx() const { return dx_; }

private:
    int n_;
    double x0_, dx_;
    std::vector<cd> coeff_;
};

// values at the midpoints x_i + dx/2, i = 0..n-2 (spectral accuracy)
inline Vec half_shift(const Vec& samples, double x0, double dx) {
    TrigInterp t(samples, x0, dx);
    Vec out(samples.size() - 1);
    for (Eigen::Index i = 0; i + 1 < samples.size(); ++i)
        out[i] = t(x0 + dx * (static_cast<double>(i) + 0.5)).real();
    return out;
}

// Periodic spectral differentiation matrix (even n): exact for band-limited
// periodic data; used by the density-matrix trace oracle.
inline Mat fourier_diff_matrix(int n, double period) {
    Mat d = Mat::Zero(n, n);
    const double scale = pi / period;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int k = i - j;
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            d(i, j) = scale * sgn / std::tan(pi * k / static_cast<double>(n));
        }
    return d;
}

// e^{i * sign * u_i * v_j}
inline CMat phase_matrix(const Vec& u, const Vec& v, int sign) {
    CMat m(u.size(), v.size());
    for (Eigen::Index i = 0; i < u.size(); ++i)
        for (Eigen::Index j = 0; j < v.size(); ++j) {
            const double a = sign * u[i] * v[j];
            m(i, j) = cd(std::cos(a), std::sin(a));
        }
    return m;
}

inline int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace ptomo
