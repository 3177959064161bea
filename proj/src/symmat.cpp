#include "laptab/symmat.hpp"

#include "laptab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace laptab {

SymMatrix::SymMatrix(int n)
    : n_(n)
{
    if (n < 0)
        fail(ErrorCode::BadOrder, "negative matrix order");
    data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            fail(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has wrong length");
        for (int j = i; j < n; ++j) {
            if (!std::isfinite(rows[i][j]))
                fail(ErrorCode::NonFinite, "matrix entry is not finite");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

SymMatrix SymMatrix::identity(int n)
{
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1.0);
    return m;
}

void SymMatrix::set(int i, int j, double value)
{
    data_[index(i, j)] = value;
    data_[index(j, i)] = value;
}

void SymMatrix::add(int i, int j, double value)
{
    data_[index(i, j)] += value;
    if (i != j)
        data_[index(j, i)] += value;
}

double SymMatrix::trace() const
{
    double t = 0.0;
    for (int i = 0; i < n_; ++i)
        t += (*this)(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const
{
    double s = 0.0;
    for (double x : data_)
        s += x * x;
    return std::sqrt(s);
}

bool SymMatrix::all_finite() const
{
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

SymMatrix SymMatrix::principal_submatrix(std::span<const int> rows) const
{
    const int m = static_cast<int>(rows.size());
    SymMatrix sub(m);
    for (int a = 0; a < m; ++a) {
        if (rows[a] < 0 || rows[a] >= n_)
            fail(ErrorCode::IndexOutOfRange, "principal submatrix row out of range");
        for (int b = a; b < m; ++b)
            sub.set(a, b, (*this)(rows[a], rows[b]));
    }
    return sub;
}

std::vector<double> SymMatrix::multiply(std::span<const double> v) const
{
    if (static_cast<int>(v.size()) != n_)
        fail(ErrorCode::DimensionMismatch, "vector length does not match matrix order");
    std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j)
            s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

SymMatrix SymMatrix::operator+(const SymMatrix& other) const
{
    if (other.n_ != n_)
        fail(ErrorCode::DimensionMismatch, "matrix orders differ");
    SymMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += other.data_[i];
    return out;
}

std::vector<double> Spectrum::vector(int i) const
{
    if (!vectors)
        fail(ErrorCode::InvalidArgument, "spectrum was computed without eigenvectors");
    const int n = size();
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        v[r] = (*vectors)[static_cast<std::size_t>(r) * n + i];
    return v;
}

namespace {

    double off_diagonal_norm(const std::vector<double>& a, int n)
    {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += 2.0 * a[i * n + j] * a[i * n + j];
        return std::sqrt(s);
    }

    // One Jacobi rotation annihilating a(p,q); updates the full symmetric array
    // and, when present, the accumulated eigenvector columns.
    void rotate(std::vector<double>& a, std::vector<double>* v, int n, int p, int q)
    {
        const double apq = a[p * n + q];
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0)
            t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
            if (k == p || k == q)
                continue;
            const double akp = a[k * n + p];
            const double akq = a[k * n + q];
            const double np = c * akp - s * akq;
            const double nq = s * akp + c * akq;
            a[k * n + p] = np;
            a[p * n + k] = np;
            a[k * n + q] = nq;
            a[q * n + k] = nq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        if (v) {
            auto& vv = *v;
            for (int k = 0; k < n; ++k) {
                const double vkp = vv[k * n + p];
                const double vkq = vv[k * n + q];
                vv[k * n + p] = c * vkp - s * vkq;
                vv[k * n + q] = s * vkp + c * vkq;
            }
        }
    }

} // namespace

Spectrum jacobi_eigen(const SymMatrix& m, double tol, EigenMode mode)
{
    const int n = m.order();
    if (n < 1)
        fail(ErrorCode::BadOrder, "eigensolver needs n >= 1");
    if (!m.all_finite())
        fail(ErrorCode::NonFinite, "matrix has NaN or infinite entries");

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i * n + j] = m(i, j);

    const bool want_vectors = mode == EigenMode::WithVectors;
    std::vector<double> v;
    if (want_vectors) {
        v.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            v[i * n + i] = 1.0;
    }

    const double target = tol * std::max(1.0, m.frobenius_norm());
    double off = off_diagonal_norm(a, n);
    int sweep = 0;
    while (off > target) {
        if (sweep == kJacobiMaxSweeps)
            fail(ErrorCode::NoConvergence, "Jacobi sweep limit exceeded");

        double sum_abs = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                sum_abs += std::abs(a[i * n + j]);
        const double threshold = sweep < 3 ? 0.2 * sum_abs / (static_cast<double>(n) * n) : 0.0;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                const double g = 100.0 * std::abs(apq);
                const double app = std::abs(a[p * n + p]);
                const double aqq = std::abs(a[q * n + q]);
                if (sweep > 3 && app + g == app && aqq + g == aqq) {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                } else if (std::abs(apq) > threshold && apq != 0.0) {
                    rotate(a, want_vectors ? &v : nullptr, n, p, q);
                }
            }
        }
        ++sweep;
        off = off_diagonal_norm(a, n);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a[x * n + x] > a[y * n + y]; });

    Spectrum s;
    s.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        s.values[i] = a[order[i] * n + order[i]];

    if (!want_vectors) {
        s.residual = off;
        return s;
    }

    std::vector<double> sorted(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            sorted[r * n + c] = v[r * n + order[c]];

    double residual = 0.0;
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            double av = 0.0;
            for (int k = 0; k < n; ++k)
                av += m(r, k) * sorted[k * n + c];
            residual = std::max(residual, std::abs(av - s.values[c] * sorted[r * n + c]));
        }
    }
    s.vectors = std::move(sorted);
    s.residual = residual;
    return s;
}

double spectral_tolerance(const SymMatrix& m)
{
    return 1e-9 * std::max(1.0, m.frobenius_norm());
}

double ky_fan_sum(std::span<const double> descending, int k)
{
    if (k < 1 || k > static_cast<int>(descending.size()))
        fail(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " outside [1, n]");
    return std::accumulate(descending.begin(), descending.begin() + k, 0.0);
}

double ky_fan_sum(const Spectrum& s, int k)
{
    return ky_fan_sum(std::span<const double>(s.values), k);
}

double tail_sum(std::span<const double> descending, int k)
{
    if (k < 1 || k > static_cast<int>(descending.size()))
        fail(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " outside [1, n]");
    return std::accumulate(descending.end() - k, descending.end(), 0.0);
}

double tail_sum(const Spectrum& s, int k)
{
    return tail_sum(std::span<const double>(s.values), k);
}

bool check_interlacing(const SymMatrix& m, std::span<const int> rows)
{
    if (rows.empty())
        fail(ErrorCode::EmptySubset, "interlacing needs a nonempty row subset");
    const int n = m.order();
    const int k = static_cast<int>(rows.size());
    const auto whole = jacobi_eigen(m, kJacobiTolerance, EigenMode::ValuesOnly);
    const auto part = jacobi_eigen(m.principal_submatrix(rows), kJacobiTolerance, EigenMode::ValuesOnly);
    const double tol = spectral_tolerance(m);
    for (int i = 0; i < k; ++i) {
        if (whole.values[i] < part.values[i] - tol)
            return false;
        if (part.values[i] < whole.values[n - k + i] - tol)
            return false;
    }
    return true;
}

bool check_subadditivity(const SymMatrix& a, const SymMatrix& b, int k)
{
    if (a.order() != b.order())
        fail(ErrorCode::DimensionMismatch, "subadditivity needs equal orders");
    const int n = a.order();
    if (k < 1 || k > n)
        fail(ErrorCode::KOutOfRange, "k outside [1, n]");
    const double sum_ab = ky_fan_sum(jacobi_eigen(a + b, kJacobiTolerance, EigenMode::ValuesOnly), k);
    const double sum_a = ky_fan_sum(jacobi_eigen(a, kJacobiTolerance, EigenMode::ValuesOnly), k);
    const double sum_b = ky_fan_sum(jacobi_eigen(b, kJacobiTolerance, EigenMode::ValuesOnly), k);
    const double tol = 1e-9 * std::max(1.0, a.frobenius_norm() + b.frobenius_norm());
    if (k == n)
        return std::abs(sum_ab - (sum_a + sum_b)) <= tol;
    return sum_ab <= sum_a + sum_b + tol;
}

SymMatrix restrict_to_complement(const SymMatrix& m, std::span<const double> v)
{
    const int n = m.order();
    if (n < 2)
        fail(ErrorCode::BadOrder, "restriction to a complement needs n >= 2");
    if (static_cast<int>(v.size()) != n)
        fail(ErrorCode::DimensionMismatch, "vector length does not match matrix order");

    double norm = 0.0;
    for (double x : v)
        norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0 || !std::isfinite(norm))
        fail(ErrorCode::ZeroVector, "cannot restrict to the complement of a zero vector");

    // w = v_hat + sign(v_hat_0) e_0, so H = I - 2 w w^T / (w^T w) maps v_hat to -sign e_0.
    std::vector<double> w(v.begin(), v.end());
    for (double& x : w)
        x /= norm;
    w[0] += w[0] >= 0.0 ? 1.0 : -1.0;
    double wtw = 0.0;
    for (double x : w)
        wtw += x * x;
    const double beta = 2.0 / wtw;

    // H m H = m - w z^T - z w^T with p = beta m w, z = p - (beta w^T p / 2) w.
    std::vector<double> p = m.multiply(w);
    double wtp = 0.0;
    for (int i = 0; i < n; ++i) {
        p[i] *= beta;
        wtp += w[i] * p[i];
    }
    const double half = 0.5 * beta * wtp;
    std::vector<double> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        z[i] = p[i] - half * w[i];

    SymMatrix out(n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j)
            out.set(i - 1, j - 1, m(i, j) - w[i] * z[j] - z[i] * w[j]);
    return out;
}

} // namespace laptab
