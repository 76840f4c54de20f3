#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rigged {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Carrier of every operator in the library.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix column(std::span<const Complex> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::vector<Complex> col(std::size_t j) const;

    const std::vector<Complex>& entries() const noexcept { return data_; }

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> x);

/// Conjugate transpose. Realizes the involution X -> X^dagger on L(D, D^x):
/// <A^dagger eta, xi> = conj(<A xi, eta>).
ComplexMatrix dagger(const ComplexMatrix& a);

double max_abs(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double euclidean_norm(std::span<const Complex> x);
bool all_finite(const ComplexMatrix& a);

struct HermitianEigenResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]
    int sweeps = 0;
};

struct SvdResult {
    std::vector<double> singular_values;  // descending, min(rows, cols) of them
    ComplexMatrix left_vectors;           // rows x rows, unitary
    ComplexMatrix right_vectors;          // cols x cols, unitary
};

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr int kMaxJacobiSweeps = 60;

/// Full spectrum of a Hermitian matrix by cyclic Jacobi rotations.
/// Throws NotHermitian when ||A - A^dagger||_max > 1e-12 (1 + ||A||_max),
/// NoConvergence when 60 sweeps do not reduce the off-diagonal mass below
/// 1e-13 ||A||_F.
HermitianEigenResult hermitian_eig(const ComplexMatrix& a);

/// Singular value decomposition by one-sided (Hestenes) Jacobi, i.e. cyclic
/// Jacobi on A^dagger A applied implicitly through column rotations of A.
SvdResult svd(const ComplexMatrix& a);

/// Moore-Penrose inverse; singular values <= rank_tol * sigma_max are dropped.
ComplexMatrix pseudo_inverse(const ComplexMatrix& a, double rank_tol = kDefaultRankTol);

/// Number of singular values strictly above rank_tol * sigma_max.
std::size_t numerical_rank(const SvdResult& s, double rank_tol = kDefaultRankTol);

} // namespace rigged
