// hamiltonian.hpp — kinetic term p^2/2 plus a polynomial potential of degree <= 4

#pragma once

#include <array>
#include <cmath>

#include "errors.hpp"

namespace ptomo {

struct HamiltonianSpec {
    static constexpr double kinetic_coefficient = 0.5;
    std::array<double, 5> potential{};  // c0 + c1 q + c2 q^2 + c3 q^3 + c4 q^4

    HamiltonianSpec() = default;
    explicit HamiltonianSpec(const std::array<double, 5>& c) : potential(c) {
        for (double v : c)
            if (!std::isfinite(v)) throw domain_error("HamiltonianSpec: non-finite coefficient");
    }

    static HamiltonianSpec free_particle() { return HamiltonianSpec{}; }
    static HamiltonianSpec harmonic() { return HamiltonianSpec({0, 0, 0.5, 0, 0}); }
    static HamiltonianSpec quartic(double c4) { return HamiltonianSpec({0, 0, 0, 0, c4}); }

    int degree() const {
        for (int k = 4; k >= 0; --k)
            if (potential[static_cast<std::size_t>(k)] != 0.0) return k;
        return 0;
    }
    bool is_free() const {
        return potential == std::array<double, 5>{0, 0, 0, 0, 0};
    }
    bool is_harmonic() const {
        return potential == std::array<double, 5>{0, 0, 0.5, 0, 0};
    }

    double potential_at(double q) const {
        return potential[0] + q * (potential[1] + q * (potential[2] + q * (potential[3] + q * potential[4])));
    }
};

} // namespace ptomo
