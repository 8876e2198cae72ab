#pragma once

#include <cmath>
#include <stdexcept>

namespace stabsse {

/// Exact value of a matrix element built from CX gates and Pauli projectors:
/// either zero or 2^(-k/2) for a non-negative integer k. Negative values are
/// not representable.
class MatrixElement {
   public:
    static MatrixElement zero() { return MatrixElement(-1); }
    static MatrixElement one() { return MatrixElement(0); }
    static MatrixElement power_of_sqrt_half(int k) {
        if (k < 0) throw std::invalid_argument("matrix element exponent must be non-negative");
        return MatrixElement(k);
    }

    bool is_zero() const { return exponent_ < 0; }
    /// k in 2^(-k/2); only meaningful when !is_zero().
    int exponent() const { return exponent_; }

    double value() const {
        if (is_zero()) return 0.0;
        double base = (exponent_ % 2 != 0) ? M_SQRT1_2 : 1.0;
        return std::ldexp(base, -(exponent_ / 2));
    }

    friend bool operator==(const MatrixElement&, const MatrixElement&) = default;

   private:
    explicit MatrixElement(int exponent) : exponent_(exponent) {}
    int exponent_;
};

/// numerator / denominator, computed from the exponent difference.
inline double ratio(const MatrixElement& numerator, const MatrixElement& denominator) {
    if (denominator.is_zero()) throw std::domain_error("ratio with a zero denominator");
    if (numerator.is_zero()) return 0.0;
    int dk = numerator.exponent() - denominator.exponent();
    // 2^(-dk/2) with dk possibly negative and odd
    int half = dk >= 0 ? dk / 2 : -((-dk + 1) / 2);
    double base = (dk - 2 * half) != 0 ? M_SQRT1_2 : 1.0;
    return std::ldexp(base, -half);
}

}  // namespace stabsse
