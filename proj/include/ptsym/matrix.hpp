#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ptsym/gaussian.hpp"

namespace ptsym {

/// Dense square matrix over an arbitrary scalar type, zero-initialized.
template <typename T>
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n) : n_(n), e_(n * n) {
        if (n == 0) throw std::invalid_argument("SquareMatrix: dimension must be >= 1");
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t dim() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) = default;

private:
    std::size_t n_;
    std::vector<T> e_;
};

template <typename T>
SquareMatrix<T> operator*(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix product: dimension mismatch");
    const std::size_t n = a.dim();
    SquareMatrix<T> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const T& aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
T trace(const SquareMatrix<T>& m) {
    T t(0);
    for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

/**
 * P·conj(M)·P for the exchange parity P (ones along the anti-diagonal):
 * entry (i, j) of the result is conj(M(n-1-i, n-1-j)). Applying the map
 * twice returns the original matrix.
 */
template <typename T>
SquareMatrix<T> parity_reflect(const SquareMatrix<T>& m) {
    const std::size_t n = m.dim();
    SquareMatrix<T> r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = conj(m(n - 1 - i, n - 1 - j));
    return r;
}

/// True iff M is invariant under parity followed by complex conjugation.
/// Advisory: the analysis itself gates on realness of the characteristic
/// polynomial, which is the property it actually consumes.
template <typename T>
bool check_pt_symmetry(const SquareMatrix<T>& m) {
    return parity_reflect(m) == m;
}

/// Discretized PT-symmetric well on three sites: diagonal (i*xi, 0, -i*xi),
/// nearest-neighbour couplings 1.
SquareMatrix<GaussianRational> pt_well(const Rational& xi);

/// The same well on n sites: tridiagonal with off-diagonals 1; the diagonal
/// carries +i*xi on the first half, -i*xi on the second, 0 at the center
/// site when n is odd. PT-symmetric by construction for every rational xi.
SquareMatrix<GaussianRational> pt_well_n(std::size_t n, const Rational& xi);

SquareMatrix<std::complex<double>> to_float(const SquareMatrix<GaussianRational>& m);

}  // namespace ptsym
