#pragma once

// Exact arithmetic over small finite fields F_{p^n} and dense linear algebra
// on top of it.
//
// Elements are stored as their index sum_i c_i p^i, where (c_0, ..., c_{n-1})
// are the coefficients of the residue class modulo the field's modulus. With
// this encoding the prime subfield F_p occupies the indices 0..p-1 in every
// extension, so embedding F_p into F_{p^n} is the identity on indices.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hallforge::gf {

using Elem = std::uint8_t;

/// Largest field order the tables are built for.
inline constexpr int kMaxFieldOrder = 81;

class FieldCtx {
public:
    int p() const noexcept { return p_; }
    int degree() const noexcept { return n_; }
    int order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return n_ == 1; }

    /// Monic modulus, coefficients low degree first (size degree()+1).
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const int> coeffs) const;
    /// Image of the integer c under Z -> F_p -> F_{p^n}.
    Elem from_int(long long c) const noexcept;

    /// "3" for prime fields, "c0,c1,..." otherwise.
    std::string format(Elem a) const;

private:
    friend std::shared_ptr<const FieldCtx> make_field(int p, int n);
    FieldCtx(int p, int n, std::vector<int> modulus);

    int p_;
    int n_;
    int q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Canonical field of order p^n; repeated calls with equal (p, n) return the
/// same object. The modulus is the lexicographically least monic irreducible
/// of degree n (coefficients compared from the constant term upwards).
FieldPtr make_field(int p, int n);

bool is_prime(long long v);

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(FieldPtr field, std::size_t n);
    /// Entries given as integers reduced into the prime subfield.
    static Matrix from_ints(FieldPtr field, std::size_t rows, std::size_t cols,
                            std::initializer_list<int> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return field_; }

    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Elem>& entries() const noexcept { return data_; }

    bool is_zero() const noexcept;
    bool is_square() const noexcept { return rows_ == cols_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(Elem s) const;
    Matrix transposed() const;
    std::vector<Elem> apply(std::span<const Elem> v) const;

    /// Same entries read over another field of the same characteristic; only
    /// valid when every entry lies in the prime subfield or the fields agree.
    Matrix with_field(FieldPtr field) const;

    /// Stack rows of `below` under this matrix.
    Matrix stacked(const Matrix& below) const;

    bool operator==(const Matrix& rhs) const noexcept;

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct RrefResult {
    int rank = 0;
    Matrix reduced;
    std::vector<std::vector<Elem>> kernel_basis;
    std::vector<int> pivot_cols;
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

/// Reduced row-echelon basis (as rows) of the row space of m.
Matrix row_space(const Matrix& m);
/// Basis (as rows) of { v : m v = 0 }.
Matrix kernel_rows(const Matrix& m);
/// Basis (as rows, RREF) of the column space of m.
Matrix column_space(const Matrix& m);

/// Calls visit once per s-dimensional subspace of F^d, passing its RREF basis
/// (s x d). Order: pivot sets lexicographically, then free entries as an
/// odometer with the last free position varying fastest.
void for_each_subspace(const FieldPtr& field, int d, int s,
                       const std::function<void(const Matrix&)>& visit);
std::vector<Matrix> enumerate_subspaces(const FieldPtr& field, int d, int s);

} // namespace hallforge::gf
