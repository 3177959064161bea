#pragma once

#include <optional>
#include <span>
#include <vector>

namespace laptab {

/// Dense real symmetric matrix. Storage is a full row-major n x n array; every
/// mutator writes both (i,j) and (j,i) so the two halves never disagree.
class SymMatrix {
public:
    explicit SymMatrix(int n = 0);

    /// Builds from rows; only the upper triangle (j >= i) is read and mirrored.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix identity(int n);

    int order() const noexcept { return n_; }

    double operator()(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, double value);
    void add(int i, int j, double value);

    double trace() const;
    double frobenius_norm() const;
    bool all_finite() const;

    SymMatrix principal_submatrix(std::span<const int> rows) const;
    std::vector<double> multiply(std::span<const double> v) const;

    SymMatrix operator+(const SymMatrix& other) const;
    bool operator==(const SymMatrix& other) const = default;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<double> data_;
};

/// Eigenvalues sorted descending with optional eigenvectors.
struct Spectrum {
    std::vector<double> values;
    /// Row-major n x n; column i is the unit eigenvector for values[i].
    std::optional<std::vector<double>> vectors;
    /// max_i |A v_i - lambda_i v_i|_inf when vectors are present, otherwise the
    /// off-diagonal Frobenius norm left after the final sweep.
    double residual = 0.0;

    int size() const noexcept { return static_cast<int>(values.size()); }
    std::vector<double> vector(int i) const;
};

enum class EigenMode { ValuesOnly, WithVectors };

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 50;

/// Cyclic Jacobi with a threshold strategy for the first sweeps. Converged when
/// the off-diagonal Frobenius norm is at most tol * max(1, ||m||_F).
Spectrum jacobi_eigen(const SymMatrix& m, double tol = kJacobiTolerance,
                      EigenMode mode = EigenMode::WithVectors);

/// 1e-9 * max(1, ||m||_F): the comparison tolerance for spectral quantities.
double spectral_tolerance(const SymMatrix& m);

/// Sum of the k largest eigenvalues.
double ky_fan_sum(const Spectrum& s, int k);
double ky_fan_sum(std::span<const double> descending, int k);
/// Sum of the k smallest eigenvalues.
double tail_sum(const Spectrum& s, int k);
double tail_sum(std::span<const double> descending, int k);

/// Cauchy interlacing for the principal submatrix on `rows` (0-based).
bool check_interlacing(const SymMatrix& m, std::span<const int> rows);

/// S_k(a+b) <= S_k(a) + S_k(b), with equality required at k = n.
bool check_subadditivity(const SymMatrix& a, const SymMatrix& b, int k);

/// Q^T m Q for an orthonormal basis Q of v-perp, built from the Householder
/// reflection that sends v/|v| to a multiple of e_1.
SymMatrix restrict_to_complement(const SymMatrix& m, std::span<const double> v);

} // namespace laptab
