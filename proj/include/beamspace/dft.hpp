#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "beamspace/errors.hpp"

namespace beamspace {

template <class Real>
using MatrixXc = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using VectorXc = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

inline bool is_power_of_two(Index n) { return n >= 1 && (n & (n - 1)) == 0; }

// Exact log2 of a power of two; ParameterError otherwise.
inline int log2_exact(Index n) {
    if (!is_power_of_two(n)) throw ParameterError("size must be a power of two, got " + std::to_string(n));
    int lg = 0;
    while ((Index{1} << lg) < n) ++lg;
    return lg;
}

// Unitary DFT of power-of-two size via an iterative radix-2 transform.
// Scaled by 1/sqrt(N) so that F F^H = I and norms are preserved, which keeps
// transformed white noise white.
template <class Real>
class UnitaryDft {
public:
    using Complex = std::complex<Real>;

    explicit UnitaryDft(Index size) : size_(size), log2_size_(log2_exact(size)) {
        scale_ = Real(1) / std::sqrt(static_cast<Real>(size_));
        bitrev_.resize(static_cast<std::size_t>(size_));
        for (Index i = 0; i < size_; ++i) {
            Index r = 0;
            for (int b = 0; b < log2_size_; ++b) r |= ((i >> b) & 1) << (log2_size_ - 1 - b);
            bitrev_[static_cast<std::size_t>(i)] = r;
        }
        // Forward twiddles exp(-i 2 pi k / N) for k = 0 .. N/2 - 1.
        twiddles_.resize(static_cast<std::size_t>(size_ / 2 > 0 ? size_ / 2 : 1));
        for (Index k = 0; k < size_ / 2; ++k) {
            const Real ang = Real(-2) * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(size_);
            twiddles_[static_cast<std::size_t>(k)] = Complex(std::cos(ang), std::sin(ang));
        }
    }

    Index size() const { return size_; }

    VectorXc<Real> forward(const VectorXc<Real>& x) const { return transformed(x, false); }
    VectorXc<Real> inverse(const VectorXc<Real>& x) const { return transformed(x, true); }

    // Transform applied column by column.
    MatrixXc<Real> forward_cols(const MatrixXc<Real>& x) const { return transformed_cols(x, false); }
    MatrixXc<Real> inverse_cols(const MatrixXc<Real>& x) const { return transformed_cols(x, true); }

private:
    VectorXc<Real> transformed(const VectorXc<Real>& x, bool inverse) const {
        if (x.size() != size_)
            throw DimensionError("transform input has length " + std::to_string(x.size()) +
                                 ", expected " + std::to_string(size_));
        VectorXc<Real> y(size_);
        for (Index i = 0; i < size_; ++i) y[bitrev_[static_cast<std::size_t>(i)]] = x[i];
        run(y.data(), inverse);
        return y;
    }

    MatrixXc<Real> transformed_cols(const MatrixXc<Real>& x, bool inverse) const {
        if (x.rows() != size_)
            throw DimensionError("transform input has " + std::to_string(x.rows()) +
                                 " rows, expected " + std::to_string(size_));
        MatrixXc<Real> y(x.rows(), x.cols());
        for (Index c = 0; c < x.cols(); ++c) {
            for (Index i = 0; i < size_; ++i) y(bitrev_[static_cast<std::size_t>(i)], c) = x(i, c);
            run(y.col(c).data(), inverse);
        }
        return y;
    }

    void run(Complex* v, bool inverse) const {
        for (Index len = 2; len <= size_; len <<= 1) {
            const Index half = len >> 1;
            const Index stride = size_ / len;
            for (Index start = 0; start < size_; start += len) {
                for (Index j = 0; j < half; ++j) {
                    Complex w = twiddles_[static_cast<std::size_t>(j * stride)];
                    if (inverse) w = std::conj(w);
                    const Complex t = v[start + j + half] * w;
                    v[start + j + half] = v[start + j] - t;
                    v[start + j] += t;
                }
            }
        }
        for (Index i = 0; i < size_; ++i) v[i] *= scale_;
    }

    Index size_;
    int log2_size_;
    Real scale_;
    std::vector<Index> bitrev_;
    std::vector<Complex> twiddles_;
};

}  // namespace beamspace
