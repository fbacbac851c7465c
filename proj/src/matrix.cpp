#include "hallforge/error.hpp"
#include "hallforge/gf.hpp"

#include <utility>

namespace hallforge::gf {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows_ * cols_)
        throw Error(ErrorCode::DimensionError, "entry count does not match shape");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n)
{
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_ints(FieldPtr field, std::size_t rows, std::size_t cols,
                         std::initializer_list<int> entries)
{
    if (entries.size() != rows * cols)
        throw Error(ErrorCode::DimensionError, "entry count does not match shape");
    Matrix m(field, rows, cols);
    std::size_t i = 0;
    for (int v : entries)
        m.data_[i++] = field->from_int(v);
    return m;
}

bool Matrix::is_zero() const noexcept
{
    for (Elem e : data_)
        if (e != 0)
            return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error(ErrorCode::DimensionError, "matrix product shape mismatch");
    Matrix out(field_ ? field_ : rhs.field_, rows_, rhs.cols_);
    const FieldCtx& f = *out.field_;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Elem b = rhs(k, j);
                if (b != 0)
                    out(i, j) = f.add(out(i, j), f.mul(a, b));
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorCode::DimensionError, "matrix sum shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_->add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorCode::DimensionError, "matrix difference shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_->sub(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::scaled(Elem s) const
{
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_->mul(s, data_[i]);
    return out;
}

Matrix Matrix::transposed() const
{
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> v) const
{
    if (v.size() != cols_)
        throw Error(ErrorCode::DimensionError, "vector length does not match matrix");
    std::vector<Elem> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc = field_->add(acc, field_->mul((*this)(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::with_field(FieldPtr field) const
{
    return Matrix(std::move(field), rows_, cols_, data_);
}

Matrix Matrix::stacked(const Matrix& below) const
{
    if (rows_ == 0)
        return below.rows_ > 0 ? below : *this;
    if (below.rows_ == 0)
        return *this;
    if (below.cols_ != cols_)
        throw Error(ErrorCode::DimensionError, "stacking matrices with different widths");
    Matrix out(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const noexcept
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_ &&
           (field_ == rhs.field_ || data_.empty());
}

RrefResult rref(const Matrix& m)
{
    RrefResult result;
    result.reduced = m;
    Matrix& a = result.reduced;
    const FieldPtr& fp = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(pivot, j), a(r, j));
        const FieldCtx& f = *fp;
        const Elem scale = f.inv(a(r, c));
        for (std::size_t j = c; j < cols; ++j)
            a(r, j) = f.mul(a(r, j), scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            const Elem factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (a(r, j) != 0)
                    a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
        }
        result.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    result.rank = static_cast<int>(r);

    std::vector<bool> is_pivot(cols, false);
    for (int c : result.pivot_cols)
        is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Elem> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < result.pivot_cols.size(); ++i)
            v[result.pivot_cols[i]] = fp->neg(a(i, free));
        result.kernel_basis.push_back(std::move(v));
    }
    return result;
}

int rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return rref(m).rank;
}

bool is_invertible(const Matrix& m)
{
    return m.is_square() && rank(m) == static_cast<int>(m.rows());
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw Error(ErrorCode::DimensionError, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto red = rref(aug);
    if (red.rank < static_cast<int>(n) || (n > 0 && red.pivot_cols[n - 1] != static_cast<int>(n - 1)))
        throw Error(ErrorCode::DivideByZero, "matrix is singular");
    Matrix out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = red.reduced(i, n + j);
    return out;
}

Matrix row_space(const Matrix& m)
{
    auto red = rref(m);
    Matrix out(m.field(), red.rank, m.cols());
    for (int i = 0; i < red.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = red.reduced(i, j);
    return out;
}

Matrix kernel_rows(const Matrix& m)
{
    auto red = rref(m);
    Matrix out(m.field(), red.kernel_basis.size(), m.cols());
    for (std::size_t i = 0; i < red.kernel_basis.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = red.kernel_basis[i][j];
    return row_space(out);
}

Matrix column_space(const Matrix& m)
{
    return row_space(m.transposed());
}

namespace {

bool next_combination(std::vector<int>& comb, int n)
{
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i)
        --i;
    if (i < 0)
        return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j)
        comb[j] = comb[j - 1] + 1;
    return true;
}

} // namespace

void for_each_subspace(const FieldPtr& field, int d, int s,
                       const std::function<void(const Matrix&)>& visit)
{
    if (s < 0 || d < 0 || s > d)
        throw Error(ErrorCode::DimensionError,
                    "subspace dimension " + std::to_string(s) + " exceeds ambient " + std::to_string(d));
    if (s == 0) {
        visit(Matrix(field, 0, d));
        return;
    }
    const int q = field->order();
    std::vector<int> pivots(s);
    for (int i = 0; i < s; ++i)
        pivots[i] = i;
    do {
        std::vector<bool> is_pivot(d, false);
        for (int c : pivots)
            is_pivot[c] = true;
        std::vector<std::pair<int, int>> free_slots;
        for (int r = 0; r < s; ++r)
            for (int c = pivots[r] + 1; c < d; ++c)
                if (!is_pivot[c])
                    free_slots.emplace_back(r, c);

        Matrix basis(field, s, d);
        for (int r = 0; r < s; ++r)
            basis(r, pivots[r]) = 1;
        std::vector<int> digits(free_slots.size(), 0);
        while (true) {
            for (std::size_t k = 0; k < free_slots.size(); ++k)
                basis(free_slots[k].first, free_slots[k].second) = static_cast<Elem>(digits[k]);
            visit(basis);
            int k = static_cast<int>(digits.size()) - 1;
            while (k >= 0 && digits[k] == q - 1)
                digits[k--] = 0;
            if (k < 0)
                break;
            ++digits[k];
        }
    } while (next_combination(pivots, d));
}

std::vector<Matrix> enumerate_subspaces(const FieldPtr& field, int d, int s)
{
    std::vector<Matrix> out;
    for_each_subspace(field, d, s, [&](const Matrix& m) { out.push_back(m); });
    return out;
}

} // namespace hallforge::gf
