// word.hpp — polynomial words in the position/momentum operators

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ptomo {

enum class Atom { Q, P };

// coefficient * a1 a2 ... ak, applied right-to-left like an operator product
struct OperatorWord {
    std::vector<Atom> atoms;
    std::complex<double> coefficient{1.0, 0.0};

    OperatorWord() = default;
    OperatorWord(std::vector<Atom> a, std::complex<double> c = {1.0, 0.0})
        : atoms(std::move(a)), coefficient(c) {
        if (atoms.size() > 8)
            throw domain_error("OperatorWord: length > 8 (got " +
                               std::to_string(atoms.size()) + ")");
    }

    std::size_t length() const { return atoms.size(); }
};

} // namespace ptomo
