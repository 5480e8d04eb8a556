#include "ptsym/matrix.hpp"

namespace ptsym {

SquareMatrix<GaussianRational> pt_well(const Rational& xi) { return pt_well_n(3, xi); }

SquareMatrix<GaussianRational> pt_well_n(std::size_t n, const Rational& xi) {
    if (n == 0) throw std::invalid_argument("pt_well_n: dimension must be >= 1");
    SquareMatrix<GaussianRational> m(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        m(k, k + 1) = GaussianRational(1);
        m(k + 1, k) = GaussianRational(1);
    }
    // +i*xi on sites left of the center, -i*xi right of it, 0 at the center
    for (std::size_t k = 0; k < n; ++k) {
        if (2 * (k + 1) < n + 1)
            m(k, k) = GaussianRational(Rational(0), xi);
        else if (2 * (k + 1) > n + 1)
            m(k, k) = GaussianRational(Rational(0), -xi);
    }
    return m;
}

SquareMatrix<std::complex<double>> to_float(const SquareMatrix<GaussianRational>& m) {
    SquareMatrix<std::complex<double>> f(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            f(i, j) = {m(i, j).real().to_double(), m(i, j).imag().to_double()};
    return f;
}

}  // namespace ptsym
