// Integer univariate polynomials: Horner evaluation and exact derivatives.

#ifndef POLYCOMB_POLY_HPP
#define POLYCOMB_POLY_HPP

#include "polycomb/exact.hpp"

#include <vector>

namespace polycomb {

// Coefficients in ascending degree order: coeffs[i] is the coefficient of t^i.
// The zero polynomial may be represented by an empty vector or by all-zero
// coefficients; degree() is -1 in that case.
struct IntPoly {
    std::vector<Int> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c) : coeffs(std::move(c)) {}

    // Largest i with coeffs[i] != 0, or -1 for the zero polynomial.
    int degree() const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i] != 0) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const IntPoly& other) const;
};

// Exact evaluation at an integer point (Horner scheme).
Int poly_eval(const IntPoly& p, const Int& t);

// k-th derivative; coefficient of t^(i-k) becomes coeffs[i] * i*(i-1)*...*(i-k+1).
// k = 0 returns the polynomial unchanged; differentiating past the degree
// yields the zero polynomial.
IntPoly poly_derivative(const IntPoly& p, std::size_t k = 1);

}  // namespace polycomb

#endif
