#include "ptsym/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "ptsym/charpoly.hpp"

namespace ptsym {

namespace {

using C = std::complex<double>;

double root_scale(const std::vector<double>& coeffs, const C& z) {
    double scale = 0.0;
    double zk = 1.0;
    const double az = std::abs(z);
    for (double c : coeffs) {
        scale += std::fabs(c) * zk;
        zk *= az;
    }
    return std::max(1.0, scale);
}

}  // namespace

Polynomial<double> to_float(const Polynomial<Rational>& p) {
    std::vector<double> c(p.degree() + 1);
    for (std::size_t k = 0; k <= p.degree(); ++k) c[k] = p[k].to_double();
    return Polynomial<double>(std::move(c));
}

std::vector<C> find_roots(const Polynomial<double>& p, std::size_t max_iterations,
                          double residual_tol) {
    if (p.degree() < 1 || p.leading() == 0.0)
        throw std::invalid_argument("find_roots: degree must be >= 1");
    const std::size_t n = p.degree();

    // monic copy
    std::vector<double> a(p.coefficients());
    for (double& c : a) c /= a.back();

    std::vector<C> z(n);
    if (n == 1) {
        z[0] = C(-a[0], 0.0);
    } else {
        // start on a circle of Cauchy-bound radius, angles offset so the
        // initial set is not conjugate-symmetric
        double radius = 0.0;
        for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::fabs(a[k]));
        radius = 1.0 + radius;
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
            z[k] = std::polar(radius, angle);
        }

        const Polynomial<double> mp{std::vector<double>(a)};
        const Polynomial<double> dp = derivative(mp);
        for (std::size_t iter = 0; iter < max_iterations; ++iter) {
            bool converged = true;
            for (std::size_t i = 0; i < n; ++i) {
                const C pv = mp(z[i]);
                if (pv == C(0.0)) continue;
                C pd = dp(z[i]);
                if (pd == C(0.0)) {
                    z[i] += C(1e-8 * (1.0 + std::abs(z[i])), 1e-8);
                    converged = false;
                    continue;
                }
                const C w = pv / pd;
                C sum(0.0);
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) sum += C(1.0) / (z[i] - z[j]);
                const C denom = C(1.0) - w * sum;
                const C delta = denom == C(0.0) ? w : w / denom;
                z[i] -= delta;
                if (std::abs(delta) > 1e-14 * (1.0 + std::abs(z[i]))) converged = false;
            }
            if (converged) break;
        }
    }

    const Polynomial<double> mp{std::vector<double>(a)};
    for (const C& r : z)
        if (std::abs(mp(r)) > residual_tol * root_scale(a, r)) throw NoConvergence(max_iterations);

    std::sort(z.begin(), z.end(), [](const C& x, const C& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return z;
}

ClassifiedRoots classify_roots(const std::vector<C>& roots, double imag_threshold) {
    ClassifiedRoots out;
    out.roots = roots;
    out.imag_threshold = imag_threshold;

    std::vector<C> upper, lower;
    for (const C& r : roots) {
        if (std::fabs(r.imag()) <= imag_threshold * std::max(1.0, std::abs(r)))
            ++out.real_count;
        else if (r.imag() > 0)
            upper.push_back(r);
        else
            lower.push_back(r);
    }
    if (upper.size() != lower.size()) throw ClassificationAmbiguous();

    // greedy conjugate pairing
    std::vector<bool> used(lower.size(), false);
    for (const C& u : upper) {
        const C target = std::conj(u);
        std::size_t best = lower.size();
        double best_dist = 0.0;
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(lower[j] - target);
            if (best == lower.size() || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best == lower.size() || best_dist > 1e-6 * std::max(1.0, std::abs(u)))
            throw ClassificationAmbiguous();
        used[best] = true;
    }
    out.complex_pair_count = upper.size();
    return out;
}

CrossValidation cross_validate(const SquareMatrix<GaussianRational>& m, double imag_threshold) {
    CrossValidation out;
    out.dimension = m.dim();

    const auto p = char_poly(m, ExactMode{});  // NotRealCharPoly propagates

    try {
        out.pipeline = spectrum_of_polynomial(p, ExactMode{}).inertia;
    } catch (const AnalysisError& e) {
        out.notes.push_back(std::string("pipeline: ") + e.what());
    }

    try {
        out.oracle = classify_roots(find_roots(to_float(p)), imag_threshold);
    } catch (const AnalysisError& e) {
        out.notes.push_back(std::string("oracle: ") + e.what());
    }

    if (out.pipeline && out.oracle) {
        const bool agree = out.pipeline->real_count() == out.oracle->real_count &&
                           out.pipeline->complex_pair_count() == out.oracle->complex_pair_count;
        out.verdict = agree ? CrossValidation::Verdict::match : CrossValidation::Verdict::mismatch;
        if (!agree) out.notes.push_back("real/complex counts differ between the two routes");
    } else {
        out.verdict = CrossValidation::Verdict::inconclusive;
    }
    return out;
}

}  // namespace ptsym
