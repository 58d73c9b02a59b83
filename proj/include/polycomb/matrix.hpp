// Dense integer matrices and exact determinants.
//
// Determinants use fraction-free Bareiss elimination: every intermediate value
// stays an integer (each division is exact by Sylvester's identity), so entry
// growth is polynomial instead of exponential and no rationals are needed.

#ifndef POLYCOMB_MATRIX_HPP
#define POLYCOMB_MATRIX_HPP

#include "polycomb/exact.hpp"

#include <cstddef>
#include <vector>

namespace polycomb {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Exact determinant via fraction-free Bareiss elimination with row pivoting.
// Throws ValidationError if the matrix is not square. det of the empty 0x0
// matrix is 1.
Int det(const IntMatrix& m);

// Exact rank of an integer matrix (fraction-free elimination).
std::size_t rank(const IntMatrix& m);

// Verifies the row-selection decomposition of det(A+B): summing, over all
// 2^n subsets S of rows, the determinant of the matrix whose row i is taken
// from A when i is in S and from B otherwise, must reproduce det(A+B).
// Throws ValidationError on a size mismatch and ResourceError when n exceeds
// the cap (default 12; the sum has 2^n terms).
bool det_sum_decomposition_check(const IntMatrix& a, const IntMatrix& b,
                                 std::size_t max_n = 12);

}  // namespace polycomb

#endif
