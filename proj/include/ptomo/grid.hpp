// grid.hpp — uniform 1-D grids and trapezoid quadrature helpers

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

#include "errors.hpp"

namespace ptomo {

using Vec  = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat  = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using cd   = std::complex<double>;

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int n_points = 0;

    GridSpec() = default;
    GridSpec(double lo, double hi, int n) : min(lo), max(hi), n_points(n) {
        if (!(std::isfinite(lo) && std::isfinite(hi)))
            throw domain_error("GridSpec: bounds must be finite");
        if (!(hi > lo))
            throw domain_error("GridSpec: max must exceed min");
        if (n < 8)
            throw domain_error("GridSpec: need at least 8 points, got " + std::to_string(n));
    }

    double spacing() const { return (max - min) / (n_points - 1); }
    double point(int i) const { return min + spacing() * i; }

    Vec points() const {
        Vec q(n_points);
        const double dx = spacing();
        for (int i = 0; i < n_points; ++i) q[i] = min + dx * i;
        return q;
    }

    bool operator==(const GridSpec& o) const {
        return min == o.min && max == o.max && n_points == o.n_points;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }

    // index of the node equal to x (within tol), or -1
    int node_index(double x, double tol = 1e-9) const {
        const double t = (x - min) / spacing();
        const int i = static_cast<int>(std::lround(t));
        if (i < 0 || i >= n_points) return -1;
        return std::abs(point(i) - x) <= tol ? i : -1;
    }
};

// trapezoid quadrature over a uniform grid
template <typename Derived>
auto trapezoid(const Eigen::MatrixBase<Derived>& f, double dx) ->
    typename Derived::Scalar {
    using S = typename Derived::Scalar;
    const Eigen::Index n = f.size();
    if (n < 2) return S(0);
    S s = f.sum() - S(0.5) * (f(0) + f(n - 1));
    return s * dx;
}

// 2-D trapezoid over values(i,j) on x_i (rows) × y_j (cols)
inline double trapezoid2(const Mat& v, double dx, double dy) {
    const Eigen::Index nr = v.rows(), nc = v.cols();
    Vec col(nr);
    for (Eigen::Index i = 0; i < nr; ++i) col[i] = trapezoid(v.row(i), dy);
    return trapezoid(col, dx);
}

inline constexpr double pi = 3.141592653589793238462643383279502884;

} // namespace ptomo
