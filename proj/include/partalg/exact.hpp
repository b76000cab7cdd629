#pragma once

// Exact integer/rational linear algebra used by every verdict in the engine.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace partalg {

using Int = mpz_class;
using Rat = mpq_class;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& o) const {
        Matrix out(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T, class U>
Matrix<U> convert(const Matrix<T>& m) {
    Matrix<U> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = U(m(i, j));
    return out;
}

/// Dense univariate polynomial over Q, coefficients low degree first.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(std::size_t degree, const Rat& coeff = 1);
    /// prod_i (x - roots[i])
    static Poly from_roots(const std::vector<Rat>& roots);

    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    bool is_integral() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Poly monic() const;
    /// x^deg * p(1/x)
    Poly reversed() const;
    Rat eval(const Rat& x) const;
    /// Integer roots with multiplicity (rational root scan over divisors of the constant term).
    std::vector<Int> integer_roots() const;

    Poly operator*(const Poly& o) const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// "c0 + c1*x + c2*x^2"
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Int bareiss_determinant(IntMatrix m);

Rat determinant(const RatMatrix& m);

/// Solves m * x = b exactly; throws VerificationError when m is singular.
RatMatrix solve(const RatMatrix& m, const RatMatrix& b);

RatMatrix inverse(const RatMatrix& m);

/// Characteristic polynomial det(x I - m) of an integer matrix (Faddeev-LeVerrier,
/// exact integer divisions).
Poly charpoly(const IntMatrix& m);

/// Characteristic polynomial of a rational matrix; denominators are cleared first and
/// the integer routine is rescaled.
Poly charpoly(const RatMatrix& m);

template <class T>
Matrix<T> poly_eval_matrix(const Poly& p, const Matrix<T>& m) {
    const std::size_t n = m.rows();
    Matrix<T> acc(n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += T(p.coeff(static_cast<std::size_t>(k)));
    }
    return acc;
}

Int lcm(const Int& a, const Int& b);

}  // namespace partalg
