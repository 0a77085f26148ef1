#include "hamc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "hamc/errors.hpp"
#include "hamc/rng.hpp"

namespace hamc {

namespace {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.n();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    return a;
}

struct LanczosResult {
    double lo = 0.0, hi = 0.0; // extreme Ritz values
    bool any = false;
};

// Lanczos with full reorthogonalization on the adjacency operator,
// optionally restricted to the orthogonal complement of the all-ones
// vector.  Returns the extreme Ritz values once successive estimates move
// by less than tol (or the Krylov space is exhausted).
LanczosResult lanczos_extremes(const Graph& g, bool deflate_ones, double tol, int max_iter,
                               std::uint64_t seed) {
    const int n = g.n();
    LanczosResult out;
    if (n == 0 || (deflate_ones && n == 1)) return out;

    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    auto deflate = [&](Eigen::VectorXd& w) {
        if (!deflate_ones) return;
        double s = w.sum() * inv_sqrt_n;
        w.array() -= s * inv_sqrt_n;
    };
    auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
        y.setZero();
        for (int u = 0; u < n; ++u) {
            double acc = 0.0;
            for (int v : g.neighbors(u)) acc += x[v];
            y[u] = acc;
        }
        deflate(y);
    };

    Rng rng(seed);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i)
        v[i] = static_cast<double>(rng.next_u64() >> 11) * 0x1p-53 - 0.5;
    deflate(v);
    double nv = v.norm();
    if (nv < 1e-14) return out;
    v /= nv;

    const int m_cap = std::min(max_iter, deflate_ones ? n - 1 : n);
    std::vector<Eigen::VectorXd> basis;
    basis.reserve(static_cast<std::size_t>(m_cap));
    basis.push_back(v);
    Eigen::VectorXd diag(m_cap), subdiag(std::max(m_cap - 1, 0));
    Eigen::VectorXd w(n);
    double prev_lo = 0.0, prev_hi = 0.0;
    bool have_prev = false;
    int m = 0;

    for (int j = 0; j < m_cap; ++j) {
        apply(basis[static_cast<std::size_t>(j)], w);
        diag[j] = w.dot(basis[static_cast<std::size_t>(j)]);
        // Full reorthogonalization (covers the three-term terms too).
        for (const auto& u : basis) w -= w.dot(u) * u;
        deflate(w);
        m = j + 1;

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag.head(m), subdiag.head(std::max(m - 1, 0)),
                                  Eigen::EigenvaluesOnly);
        out.lo = es.eigenvalues()(0);
        out.hi = es.eigenvalues()(m - 1);
        out.any = true;
        if (have_prev && std::abs(out.lo - prev_lo) < tol && std::abs(out.hi - prev_hi) < tol)
            break;
        prev_lo = out.lo;
        prev_hi = out.hi;
        have_prev = true;

        double beta = w.norm();
        if (beta < 1e-12) break; // Krylov space exhausted: Ritz values exact
        if (j + 1 < m_cap) {
            subdiag[j] = beta;
            basis.push_back(w / beta);
        }
    }
    return out;
}

} // namespace

std::vector<double> dense_spectrum(const Graph& g) {
    if (g.n() > 4000)
        throw resource_limit_error("dense eigensolve limited to 4000 vertices");
    if (g.n() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g),
                                                      Eigen::EigenvaluesOnly);
    std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + g.n());
    std::reverse(vals.begin(), vals.end());
    return vals;
}

std::vector<double> numeric_spectrum(const Graph& g, int k) {
    if (k < 1) throw precondition_error("numeric_spectrum expects k >= 1");
    if (k > g.n()) throw precondition_error("numeric_spectrum expects k <= vertex count");
    auto by_magnitude = [](double a, double b) {
        double ma = std::abs(a), mb = std::abs(b);
        return ma > mb || (ma == mb && a > b);
    };
    if (g.n() <= 4000) {
        std::vector<double> vals = dense_spectrum(g);
        std::sort(vals.begin(), vals.end(), by_magnitude);
        vals.resize(static_cast<std::size_t>(k));
        return vals;
    }
    if (k > 2)
        throw resource_limit_error("iterative spectrum above 4000 vertices is limited to k <= 2");
    LanczosResult r = lanczos_extremes(g, false, 1e-8, 600, 1);
    std::vector<double> vals = {r.hi, r.lo};
    std::sort(vals.begin(), vals.end(), by_magnitude);
    vals.resize(static_cast<std::size_t>(k));
    return vals;
}

double orthogonal_extreme_magnitude(const Graph& g, double tol, int max_iter,
                                    std::uint64_t seed) {
    const int n = g.n();
    if (n == 0) throw precondition_error("empty graph has no spectrum");
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0))
            throw precondition_error(
                "deflated eigensolve requires a regular graph (all-ones must be an eigenvector)");
    LanczosResult r = lanczos_extremes(g, true, tol, max_iter, seed);
    if (!r.any) return 0.0;
    return std::max(std::abs(r.lo), std::abs(r.hi));
}

double max_nontrivial_magnitude(const std::vector<double>& spectrum_desc, double degree) {
    if (spectrum_desc.empty()) return 0.0;
    std::size_t drop = 0;
    for (std::size_t i = 1; i < spectrum_desc.size(); ++i)
        if (std::abs(spectrum_desc[i] - degree) < std::abs(spectrum_desc[drop] - degree))
            drop = i;
    double best = 0.0;
    for (std::size_t i = 0; i < spectrum_desc.size(); ++i)
        if (i != drop) best = std::max(best, std::abs(spectrum_desc[i]));
    return best;
}

} // namespace hamc
