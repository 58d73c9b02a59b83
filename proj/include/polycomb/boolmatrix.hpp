// Dense boolean matrices, used for vertex/facet (non)incidence and as the
// input of the rectangle-cover operations.

#ifndef POLYCOMB_BOOLMATRIX_HPP
#define POLYCOMB_BOOLMATRIX_HPP

#include <cstddef>
#include <vector>

namespace polycomb {

struct BoolMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<char> data;  // row-major, 0/1

    BoolMatrix() = default;
    BoolMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    char& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    char at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::size_t count_ones() const {
        std::size_t n = 0;
        for (char v : data) n += static_cast<unsigned char>(v);
        return n;
    }

    BoolMatrix complement() const {
        BoolMatrix out(rows, cols);
        for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] ? 0 : 1;
        return out;
    }

    bool operator==(const BoolMatrix& other) const = default;
};

}  // namespace polycomb

#endif
