#ifndef LGCY_MATRIX_HPP
#define LGCY_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "lgcy/rational.hpp"

namespace lgcy {

// Dense exact matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const RationalMatrix& x, const RationalMatrix& y) { return !(x == y); }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& s) const;
    RationalMatrix transposed() const;

    // Exact rank by fraction-free style Gaussian elimination.
    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

}  // namespace lgcy

#endif
