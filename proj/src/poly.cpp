#include "polycomb/poly.hpp"

namespace polycomb {

bool IntPoly::operator==(const IntPoly& other) const {
    const std::size_t n = std::max(coeffs.size(), other.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Int& a = i < coeffs.size() ? coeffs[i] : Int(0);
        const Int& b = i < other.coeffs.size() ? other.coeffs[i] : Int(0);
        if (a != b) return false;
    }
    return true;
}

Int poly_eval(const IntPoly& p, const Int& t) {
    Int acc = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * t + p.coeffs[i];
    return acc;
}

IntPoly poly_derivative(const IntPoly& p, std::size_t k) {
    if (k == 0) return p;
    if (p.coeffs.size() <= k) return IntPoly{};
    IntPoly out;
    out.coeffs.resize(p.coeffs.size() - k);
    for (std::size_t i = k; i < p.coeffs.size(); ++i) {
        Int mult = 1;  // falling factorial i * (i-1) * ... * (i-k+1)
        for (std::size_t j = 0; j < k; ++j) mult *= static_cast<unsigned long>(i - j);
        out.coeffs[i - k] = p.coeffs[i] * mult;
    }
    return out;
}

}  // namespace polycomb
