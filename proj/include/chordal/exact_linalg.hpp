#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace chordal {

/// Exact rationals. Expression templates are off so the type composes with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/**
 * Rank by Gaussian elimination over an exact field. Only meaningful for
 * scalars with exact division (Rational); the matrix is taken by value and
 * reduced in place.
 */
template <typename Scalar>
Eigen::Index exact_rank(DenseMatrix<Scalar> m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) m.row(pivot).swap(m.row(rank));
        const Scalar inv = Scalar(1) / m(rank, col);
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            if (m(r, col) == 0) continue;
            const Scalar factor = m(r, col) * inv;
            for (Eigen::Index c = col; c < cols; ++c)
                if (m(rank, c) != 0) m(r, c) -= factor * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

/// Dense matrix over GF(2) with rows packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix(Eigen::Index rows, Eigen::Index cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(static_cast<std::size_t>(rows * words_), 0) {}

    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }

    bool get(Eigen::Index r, Eigen::Index c) const { return (word(r, c / 64) >> (c % 64)) & 1U; }
    void flip(Eigen::Index r, Eigen::Index c) { word(r, c / 64) ^= std::uint64_t{1} << (c % 64); }
    void set(Eigen::Index r, Eigen::Index c, bool v) {
        if (get(r, c) != v) flip(r, c);
    }

    /// Rank by elimination; consumes the matrix contents.
    Eigen::Index rank() &&;

private:
    std::uint64_t& word(Eigen::Index r, Eigen::Index w) { return data_[static_cast<std::size_t>(r * words_ + w)]; }
    std::uint64_t word(Eigen::Index r, Eigen::Index w) const { return data_[static_cast<std::size_t>(r * words_ + w)]; }

    Eigen::Index rows_;
    Eigen::Index cols_;
    Eigen::Index words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace chordal
