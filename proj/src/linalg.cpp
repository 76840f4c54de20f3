#include "rigged/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rigged/errors.hpp"

namespace rigged {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimMismatch("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimMismatch("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
    return ComplexMatrix(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

std::vector<Complex> ComplexMatrix::col(std::size_t j) const {
    std::vector<Complex> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

namespace {

template <typename Op>
ComplexMatrix elementwise(const ComplexMatrix& a, const ComplexMatrix& b, Op op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimMismatch("elementwise shape mismatch");
    std::vector<Complex> out(a.entries().size());
    std::transform(a.entries().begin(), a.entries().end(), b.entries().begin(), out.begin(), op);
    return ComplexMatrix(a.rows(), a.cols(), std::move(out));
}

} // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return elementwise(a, b, std::plus<>{}); }
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return elementwise(a, b, std::minus<>{}); }

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    std::vector<Complex> out(a.entries());
    for (auto& v : out) v *= s;
    return ComplexMatrix(a.rows(), a.cols(), std::move(out));
}

std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> x) {
    if (a.cols() != x.size()) throw DimMismatch("matrix-vector shape mismatch");
    std::vector<Complex> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{};
        const auto r = a.row(i);
        for (std::size_t j = 0; j < x.size(); ++j) acc += r[j] * x[j];
        y[i] = acc;
    }
    return y;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) { return euclidean_norm(a.entries()); }

double euclidean_norm(std::span<const Complex> x) {
    // Scaled accumulation keeps tiny and huge entries from under/overflowing.
    double scale = 0.0;
    for (const auto& v : x) scale = std::max({scale, std::abs(v.real()), std::abs(v.imag())});
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& v : x) sum += std::norm(v / scale);
    return scale * std::sqrt(sum);
}

bool all_finite(const ComplexMatrix& a) {
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [](const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Unitary 2x2 block J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] that
// diagonalizes the Hermitian block [[app, g], [conj(g), aqq]] via J^dagger B J.
struct Rotation {
    Complex pp, pq, qp, qq;
};

Rotation jacobi_rotation(double app, double aqq, Complex g) {
    const double mag = std::abs(g);
    const Complex phase = std::conj(g) / mag;  // e^{-i phi}
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    return {c, s, -s * phase, c * phase};
}

// M <- M J on columns p, q.
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& j) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
        const Complex mp = m(k, p);
        const Complex mq = m(k, q);
        m(k, p) = mp * j.pp + mq * j.qp;
        m(k, q) = mp * j.pq + mq * j.qq;
    }
}

// M <- J^dagger M on rows p, q.
void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& j) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
        const Complex mp = m(p, k);
        const Complex mq = m(q, k);
        m(p, k) = std::conj(j.pp) * mp + std::conj(j.qp) * mq;
        m(q, k) = std::conj(j.pq) * mp + std::conj(j.qq) * mq;
    }
}

double off_diagonal_mass(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

double column_norm_sq(const ComplexMatrix& m, std::size_t j) {
    double s = 0.0;
    for (std::size_t k = 0; k < m.rows(); ++k) s += std::norm(m(k, j));
    return s;
}

Complex column_inner(const ComplexMatrix& m, std::size_t p, std::size_t q) {
    Complex s{};
    for (std::size_t k = 0; k < m.rows(); ++k) s += std::conj(m(k, p)) * m(k, q);
    return s;
}

SvdResult svd_tall(const ComplexMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double norm_a = frobenius_norm(a);
    const double tol = 4.0 * static_cast<double>(std::max<std::size_t>(m, 1)) * kEps;
    const double negligible = (kEps * norm_a) * (kEps * norm_a);

    bool converged = false;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = column_norm_sq(w, p);
                const double beta = column_norm_sq(w, q);
                if (alpha <= negligible || beta <= negligible) continue;
                const Complex gamma = column_inner(w, p, q);
                if (std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
                converged = false;
                const Rotation j = jacobi_rotation(alpha, beta, gamma);
                rotate_columns(w, p, q, j);
                rotate_columns(v, p, q, j);
            }
        }
    }
    if (!converged) throw NoConvergence("one-sided Jacobi SVD did not converge within 60 sweeps");

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(column_norm_sq(w, j));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SvdResult out;
    out.singular_values.resize(n);
    out.right_vectors = ComplexMatrix(n, n);
    out.left_vectors = ComplexMatrix(m, m);
    const double sigma_max = n == 0 ? 0.0 : sigma[order[0]];
    const double zero_thresh = static_cast<double>(std::max(m, n)) * kEps * sigma_max;

    std::vector<bool> filled(m, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.singular_values[k] = sigma[src];
        for (std::size_t i = 0; i < n; ++i) out.right_vectors(i, k) = v(i, src);
        if (sigma[src] > zero_thresh && sigma[src] > 0.0) {
            for (std::size_t i = 0; i < m; ++i) out.left_vectors(i, k) = w(i, src) / sigma[src];
            filled[k] = true;
        }
    }

    // Complete U to a unitary basis with projected standard vectors. residual[c]
    // tracks |(I - U U^dagger) e_c|^2 so each step takes the best candidate.
    std::vector<double> residual(m, 1.0);
    for (std::size_t c = 0; c < m; ++c) {
        if (!filled[c]) continue;
        for (std::size_t i = 0; i < m; ++i) residual[i] -= std::norm(out.left_vectors(i, c));
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (filled[k]) continue;
        const auto cand = static_cast<std::size_t>(std::max_element(residual.begin(), residual.end()) - residual.begin());
        std::vector<Complex> x(m, Complex{});
        x[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t c = 0; c < m; ++c) {
                if (!filled[c]) continue;
                Complex proj{};
                for (std::size_t i = 0; i < m; ++i) proj += std::conj(out.left_vectors(i, c)) * x[i];
                for (std::size_t i = 0; i < m; ++i) x[i] -= proj * out.left_vectors(i, c);
            }
        }
        const double nx = euclidean_norm(x);
        for (std::size_t i = 0; i < m; ++i) {
            out.left_vectors(i, k) = x[i] / nx;
            residual[i] -= std::norm(out.left_vectors(i, k));
        }
        filled[k] = true;
    }
    return out;
}

} // namespace

HermitianEigenResult hermitian_eig(const ComplexMatrix& a) {
    if (!a.is_square()) throw NotHermitian("eigendecomposition requires a square matrix");
    const std::size_t n = a.rows();
    const double scale = max_abs(a);
    if (max_abs(a - dagger(a)) > 1e-12 * (1.0 + scale)) throw NotHermitian("matrix is not Hermitian");

    ComplexMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = 1e-13 * frobenius_norm(w);

    int sweep = 0;
    while (off_diagonal_mass(w) > target) {
        if (sweep == kMaxJacobiSweeps) {
            throw NoConvergence("Jacobi eigensolver did not converge within 60 sweeps");
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = w(p, q);
                if (g == Complex{}) continue;
                const Rotation j = jacobi_rotation(w(p, p).real(), w(q, q).real(), g);
                rotate_columns(w, p, q, j);
                rotate_rows(w, p, q, j);
                w(p, q) = w(q, p) = Complex{};
                w(p, p) = w(p, p).real();
                w(q, q) = w(q, q).real();
                rotate_columns(v, p, q, j);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return w(x, x).real() < w(y, y).real(); });

    HermitianEigenResult out;
    out.sweeps = sweep;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = w(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

SvdResult svd(const ComplexMatrix& a) {
    if (a.rows() >= a.cols()) return svd_tall(a);
    SvdResult t = svd_tall(dagger(a));
    return {std::move(t.singular_values), std::move(t.right_vectors), std::move(t.left_vectors)};
}

std::size_t numerical_rank(const SvdResult& s, double rank_tol) {
    if (s.singular_values.empty()) return 0;
    const double cutoff = rank_tol * s.singular_values.front();
    return static_cast<std::size_t>(std::count_if(s.singular_values.begin(), s.singular_values.end(),
                                                  [&](double x) { return x > cutoff; }));
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& a, double rank_tol) {
    if (!(rank_tol > 0.0)) throw ValidationError("rank_tol must be positive");
    const SvdResult s = svd(a);
    const std::size_t r = numerical_rank(s, rank_tol);
    ComplexMatrix p(a.cols(), a.rows());
    for (std::size_t k = 0; k < r; ++k) {
        const double inv = 1.0 / s.singular_values[k];
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const Complex vi = s.right_vectors(i, k) * inv;
            for (std::size_t j = 0; j < a.rows(); ++j) p(i, j) += vi * std::conj(s.left_vectors(j, k));
        }
    }
    return p;
}

} // namespace rigged
