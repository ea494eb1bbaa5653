#include "lgcy/matrix.hpp"

#include <stdexcept>

namespace lgcy {

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RationalMatrix: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RationalMatrix: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix w(*this);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
        Rational inv = w.at(rank, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) w.at(rank, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank || w.at(i, col).is_zero()) continue;
            Rational factor = w.at(i, col);
            for (std::size_t j = col; j < cols_; ++j) w.at(i, j) -= factor * w.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace lgcy
