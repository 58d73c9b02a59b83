#include "polycomb/matrix.hpp"

#include <utility>

namespace polycomb {

Int parse_decimal(const std::string& text) {
    if (text.empty()) throw ValidationError("empty integer literal");
    std::size_t start = (text[0] == '-') ? 1 : 0;
    if (start == text.size()) throw ValidationError("bare '-' is not an integer");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw ValidationError("invalid integer literal: '" + text + "'");
    return Int(text);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw ValidationError("matrix data size does not match dimensions");
}

namespace {

// Shared Bareiss elimination core. Eliminates in-place, returns the number of
// pivots found; if det_out is non-null the matrix must be square and the
// (signed) determinant is written there when rank == n, 0 otherwise.
std::size_t bareiss(IntMatrix& m, Int* det_out) {
    const std::size_t nr = m.rows(), nc = m.cols();
    Int prev = 1;
    int sign = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && m.at(piv, col) == 0) ++piv;
        if (piv == nr) continue;  // no pivot in this column
        if (piv != row) {
            for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(piv, j), m.at(row, j));
            sign = -sign;
        }
        for (std::size_t i = row + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++row;
    }
    if (det_out != nullptr) {
        if (row == nr && nr > 0) {
            // Bareiss keeps m.at(n-1, n-1) equal to det up to the row-swap sign.
            *det_out = sign > 0 ? m.at(nr - 1, nr - 1) : -m.at(nr - 1, nr - 1);
        } else if (nr == 0) {
            *det_out = 1;
        } else {
            *det_out = 0;
        }
    }
    return row;
}

}  // namespace

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw ValidationError("determinant requires a square matrix, got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    IntMatrix work = m;
    Int d;
    bareiss(work, &d);
    return d;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix work = m;
    return bareiss(work, nullptr);
}

bool det_sum_decomposition_check(const IntMatrix& a, const IntMatrix& b, std::size_t max_n) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("row-selection check requires matrices of equal shape");
    if (a.rows() != a.cols())
        throw ValidationError("row-selection check requires square matrices");
    const std::size_t n = a.rows();
    if (n > max_n)
        throw ResourceError("row-selection check needs 2^" + std::to_string(n) +
                            " determinants, above the cap of n = " + std::to_string(max_n));

    IntMatrix sum(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sum.at(i, j) = a.at(i, j) + b.at(i, j);
    const Int lhs = det(sum);

    Int rhs = 0;
    IntMatrix pick(n, n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) {
            const IntMatrix& src = (mask >> i) & 1 ? a : b;
            for (std::size_t j = 0; j < n; ++j) pick.at(i, j) = src.at(i, j);
        }
        rhs += det(pick);
    }
    return lhs == rhs;
}

}  // namespace polycomb
