// tomogram.hpp — quadrature distributions F(X, eta) for the two partial
// symplectic schemes: M1 fixes the position weight to 1 (X = q + nu p),
// M2 fixes the momentum weight to 1 (X = mu q + p).

#pragma once

#include <Eigen/Dense>
#include <string>

#include "errors.hpp"
#include "grid.hpp"

namespace ptomo {

enum class TomKind { M1, M2 };

inline const char* kind_name(TomKind k) { return k == TomKind::M1 ? "M1" : "M2"; }

inline GridSpec default_param_grid() { return GridSpec(-6.0, 6.0, 121); }

struct Tomogram {
    TomKind kind = TomKind::M1;
    GridSpec x_grid;
    GridSpec param_grid;
    Mat values;  // values(i,j) = F(X_i, eta_j)

    double column_integral(int j) const {
        return trapezoid(values.col(j), x_grid.spacing());
    }

    // largest |∫F dX - 1| over columns, with the offending column index
    std::pair<double, int> worst_normalization() const {
        double worst = 0.0;
        int at = 0;
        for (int j = 0; j < param_grid.n_points; ++j) {
            const double d = std::abs(column_integral(j) - 1.0);
            if (d > worst) { worst = d; at = j; }
        }
        return {worst, at};
    }

    double min_value() const { return values.minCoeff(); }
};

struct TomogramColumn {
    TomKind kind = TomKind::M1;
    GridSpec x_grid;
    double eta = 0.0;
    Vec values;

    double integral() const { return trapezoid(values, x_grid.spacing()); }
};

// mu/nu pair realized by a scheme at parameter eta
inline std::pair<double, double> scheme_weights(TomKind kind, double eta) {
    return kind == TomKind::M1 ? std::pair{1.0, eta} : std::pair{eta, 1.0};
}

} // namespace ptomo
