#include "hallforge/rep.hpp"

#include "hallforge/error.hpp"

#include <numeric>

namespace hallforge {

using gf::Elem;
using gf::FieldPtr;
using gf::Matrix;

namespace {

void check_shapes(const Algebra& alg, const gf::FieldPtr& field, const std::vector<int>& dims,
                  const std::vector<Matrix>& mats)
{
    if (!field)
        throw Error(ErrorCode::InvalidArgument, "module without a field");
    if (field->p() != alg.base()->p())
        throw Error(ErrorCode::CharacteristicMismatch,
                    "module field has characteristic " + std::to_string(field->p()) + ", algebra has " +
                        std::to_string(alg.base()->p()));
    const Quiver& q = alg.quiver();
    if (static_cast<int>(dims.size()) != q.vertex_count())
        throw Error(ErrorCode::DimensionError, "dimension vector length differs from the vertex count");
    for (int d : dims)
        if (d < 0)
            throw Error(ErrorCode::DimensionError, "negative dimension");
    if (static_cast<int>(mats.size()) != q.arrow_count())
        throw Error(ErrorCode::DimensionError, "one matrix per arrow expected");
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        const Matrix& m = mats[a];
        if (m.rows() != static_cast<std::size_t>(dims[arr.target]) ||
            m.cols() != static_cast<std::size_t>(dims[arr.source]))
            throw Error(ErrorCode::DimensionError, "matrix of arrow " + arr.name + " has shape " +
                                                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                                       ", expected " + std::to_string(dims[arr.target]) + "x" +
                                                       std::to_string(dims[arr.source]));
        if (m.field() && m.field() != field)
            throw Error(ErrorCode::MixedContext, "matrix of arrow " + arr.name + " lives over another field");
    }
}

// Matrices built with a null field (0x0 and similar) are re-homed so that
// every arrow matrix carries the module's field.
std::vector<Matrix> adopt(const FieldPtr& field, std::vector<Matrix> mats)
{
    for (auto& m : mats)
        if (!m.field())
            m = Matrix(field, m.rows(), m.cols(), m.entries());
    return mats;
}

} // namespace

Rep::Rep(AlgebraPtr algebra, gf::FieldPtr field, std::vector<int> dims, std::vector<Matrix> mats)
{
    if (!algebra)
        throw Error(ErrorCode::InvalidArgument, "module without an algebra");
    mats = adopt(field, std::move(mats));
    check_shapes(*algebra, field, dims, mats);
    algebra_ = std::move(algebra);
    field_ = std::move(field);
    dims_ = std::move(dims);
    mats_ = std::move(mats);
    for (const auto& rel : algebra_->resolved_relations())
        if (dims_[rel.source] > 0 && dims_[rel.target] > 0) {
            Matrix sum(field_, dims_[rel.target], dims_[rel.source]);
            for (const auto& [coeff, arrows] : rel.terms)
                sum = sum + path_action({rel.source, rel.target, arrows}).scaled(coeff);
            if (!sum.is_zero())
                throw Error(ErrorCode::RelationViolated, "the arrow matrices violate a relation");
        }
}

Rep Rep::unchecked(AlgebraPtr algebra, gf::FieldPtr field, std::vector<int> dims, std::vector<Matrix> mats)
{
    Rep r;
    r.algebra_ = std::move(algebra);
    r.mats_ = adopt(field, std::move(mats));
    r.field_ = std::move(field);
    r.dims_ = std::move(dims);
    return r;
}

Rep Rep::zero(AlgebraPtr algebra, gf::FieldPtr field)
{
    const int n = algebra->vertex_count();
    std::vector<Matrix> mats(algebra->quiver().arrow_count(), Matrix(field, 0, 0));
    return unchecked(std::move(algebra), std::move(field), std::vector<int>(n, 0), std::move(mats));
}

int Rep::total_dim() const noexcept
{
    return std::accumulate(dims_.begin(), dims_.end(), 0);
}

Matrix Rep::path_action(const Path& path) const
{
    Matrix acc = Matrix::identity(field_, dims_.at(path.source));
    for (int a : path.arrows)
        acc = mats_.at(a) * acc;
    return acc;
}

bool Rep::satisfies_relations() const
{
    for (const auto& rel : algebra_->resolved_relations()) {
        if (dims_[rel.source] == 0 || dims_[rel.target] == 0)
            continue;
        Matrix sum(field_, dims_[rel.target], dims_[rel.source]);
        for (const auto& [coeff, arrows] : rel.terms)
            sum = sum + path_action({rel.source, rel.target, arrows}).scaled(coeff);
        if (!sum.is_zero())
            return false;
    }
    return true;
}

std::vector<Elem> Rep::encoding() const
{
    std::vector<Elem> out;
    for (const auto& m : mats_)
        out.insert(out.end(), m.entries().begin(), m.entries().end());
    return out;
}

bool Rep::operator==(const Rep& rhs) const
{
    return algebra_ == rhs.algebra_ && field_ == rhs.field_ && dims_ == rhs.dims_ && mats_ == rhs.mats_;
}

void require_same_context(const Rep& a, const Rep& b)
{
    if (a.algebra() != b.algebra())
        throw Error(ErrorCode::MixedContext, "modules over different algebras");
    if (a.field() != b.field())
        throw Error(ErrorCode::MixedContext, "modules over different fields");
}

namespace {

FieldPtr resolve_field(const AlgebraPtr& alg, FieldPtr field)
{
    if (!field)
        return alg->base();
    if (field->p() != alg->base()->p())
        throw Error(ErrorCode::CharacteristicMismatch, "field characteristic differs from the algebra's");
    return field;
}

void check_vertex(const Algebra& alg, int v)
{
    if (v < 0 || v >= alg.vertex_count())
        throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " is outside the quiver");
}

} // namespace

Rep simple(const AlgebraPtr& alg, int vertex, FieldPtr field)
{
    check_vertex(*alg, vertex);
    field = resolve_field(alg, std::move(field));
    std::vector<int> dims(alg->vertex_count(), 0);
    dims[vertex] = 1;
    std::vector<Matrix> mats;
    for (const auto& a : alg->quiver().arrows())
        mats.emplace_back(field, dims[a.target], dims[a.source]);
    return Rep::unchecked(alg, field, std::move(dims), std::move(mats));
}

Rep projective(const AlgebraPtr& alg, int vertex, FieldPtr field)
{
    check_vertex(*alg, vertex);
    field = resolve_field(alg, std::move(field));
    const int n = alg->vertex_count();
    std::vector<int> dims(n);
    for (int j = 0; j < n; ++j)
        dims[j] = static_cast<int>(alg->path_basis(vertex, j).size());
    std::vector<Matrix> mats;
    const Quiver& q = alg->quiver();
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        Matrix m(field, dims[arr.target], dims[arr.source]);
        const auto from = alg->path_basis(vertex, arr.source);
        for (std::size_t c = 0; c < from.size(); ++c) {
            const auto& coords = alg->right_arrow(from[c], a);
            for (std::size_t r = 0; r < coords.size(); ++r)
                m(r, c) = coords[r];
        }
        mats.push_back(std::move(m));
    }
    return Rep::unchecked(alg, field, std::move(dims), std::move(mats));
}

Rep injective(const AlgebraPtr& alg, int vertex, FieldPtr field)
{
    check_vertex(*alg, vertex);
    field = resolve_field(alg, std::move(field));
    const int n = alg->vertex_count();
    std::vector<int> dims(n);
    for (int j = 0; j < n; ++j)
        dims[j] = static_cast<int>(alg->path_basis(j, vertex).size());
    std::vector<Matrix> mats;
    const Quiver& q = alg->quiver();
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        // Left multiplication x -> a.x maps paths t->i to paths s->i; the
        // arrow acts on the duals by its transpose.
        Matrix m(field, dims[arr.target], dims[arr.source]);
        const auto from = alg->path_basis(arr.target, vertex);
        for (std::size_t c = 0; c < from.size(); ++c) {
            const auto& coords = alg->left_arrow(a, from[c]);
            for (std::size_t r = 0; r < coords.size(); ++r)
                m(c, r) = coords[r];
        }
        mats.push_back(std::move(m));
    }
    return Rep::unchecked(alg, field, std::move(dims), std::move(mats));
}

Rep direct_sum(const Rep& a, const Rep& b)
{
    require_same_context(a, b);
    const Rep parts[] = {a, b};
    return direct_sum(parts, a.algebra(), a.field());
}

Rep direct_sum(std::span<const Rep> parts, const AlgebraPtr& alg, const FieldPtr& field)
{
    const int n = alg->vertex_count();
    std::vector<int> dims(n, 0);
    for (const auto& part : parts) {
        if (part.algebra() != alg || part.field() != field)
            throw Error(ErrorCode::MixedContext, "direct sum of modules from different contexts");
        for (int v = 0; v < n; ++v)
            dims[v] += part.dim(v);
    }
    const Quiver& q = alg->quiver();
    std::vector<Matrix> mats;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        Matrix m(field, dims[arr.target], dims[arr.source]);
        std::size_t r0 = 0;
        std::size_t c0 = 0;
        for (const auto& part : parts) {
            const Matrix& pm = part.mat(a);
            for (std::size_t r = 0; r < pm.rows(); ++r)
                for (std::size_t c = 0; c < pm.cols(); ++c)
                    m(r0 + r, c0 + c) = pm(r, c);
            r0 += pm.rows();
            c0 += pm.cols();
        }
        mats.push_back(std::move(m));
    }
    return Rep::unchecked(alg, field, std::move(dims), std::move(mats));
}

Rep base_change(const Rep& m, const FieldPtr& extension)
{
    if (!m.field()->is_prime_field())
        throw Error(ErrorCode::NotPrimeBase, "base change starts from a module over the prime field");
    if (extension->p() != m.field()->p())
        throw Error(ErrorCode::CharacteristicMismatch, "extension has a different characteristic");
    std::vector<Matrix> mats;
    for (const auto& mat : m.mats())
        mats.push_back(mat.with_field(extension));
    return Rep::unchecked(m.algebra(), extension, m.dims(), std::move(mats));
}

Rep sub_rep(const Rep& m, const std::vector<Matrix>& bases)
{
    const Algebra& alg = *m.algebra();
    const FieldPtr& field = m.field();
    const int n = alg.vertex_count();
    std::vector<int> dims(n);
    std::vector<std::vector<int>> pivots(n);
    for (int v = 0; v < n; ++v) {
        const Matrix& b = bases.at(v);
        dims[v] = static_cast<int>(b.rows());
        for (std::size_t r = 0; r < b.rows(); ++r) {
            std::size_t c = 0;
            while (c < b.cols() && b(r, c) == 0)
                ++c;
            pivots[v].push_back(static_cast<int>(c));
        }
    }
    std::vector<Matrix> mats;
    for (int a = 0; a < alg.quiver().arrow_count(); ++a) {
        const Arrow& arr = alg.quiver().arrow(a);
        Matrix out(field, dims[arr.target], dims[arr.source]);
        const Matrix& bs = bases[arr.source];
        for (int k = 0; k < dims[arr.source]; ++k) {
            // image of the k-th basis vector, read off at the target pivots
            const auto image = m.mat(a).apply(bs.row(k));
            for (int r = 0; r < dims[arr.target]; ++r)
                out(r, k) = image[pivots[arr.target][r]];
        }
        mats.push_back(std::move(out));
    }
    return Rep::unchecked(m.algebra(), field, std::move(dims), std::move(mats));
}

Rep quotient_rep(const Rep& m, const std::vector<Matrix>& bases)
{
    const Algebra& alg = *m.algebra();
    const FieldPtr& field = m.field();
    const int n = alg.vertex_count();
    std::vector<int> dims(n);
    std::vector<std::vector<int>> free_cols(n);
    std::vector<std::vector<int>> pivot_cols(n);
    for (int v = 0; v < n; ++v) {
        const Matrix& b = bases.at(v);
        std::vector<bool> is_pivot(m.dim(v), false);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            std::size_t c = 0;
            while (c < b.cols() && b(r, c) == 0)
                ++c;
            is_pivot[c] = true;
            pivot_cols[v].push_back(static_cast<int>(c));
        }
        for (int c = 0; c < m.dim(v); ++c)
            if (!is_pivot[c])
                free_cols[v].push_back(c);
        dims[v] = static_cast<int>(free_cols[v].size());
    }
    std::vector<Matrix> mats;
    for (int a = 0; a < alg.quiver().arrow_count(); ++a) {
        const Arrow& arr = alg.quiver().arrow(a);
        const int s = arr.source;
        const int t = arr.target;
        Matrix out(field, dims[t], dims[s]);
        const Matrix& bt = bases[t];
        for (int k = 0; k < dims[s]; ++k) {
            std::vector<Elem> e(m.dim(s), 0);
            e[free_cols[s][k]] = 1;
            auto image = m.mat(a).apply(e);
            // reduce modulo the submodule: clear pivot coordinates
            for (std::size_t r = 0; r < bt.rows(); ++r) {
                const Elem c = image[pivot_cols[t][r]];
                if (c == 0)
                    continue;
                for (int j = 0; j < m.dim(t); ++j)
                    image[j] = field->sub(image[j], field->mul(c, bt(r, j)));
            }
            for (int r = 0; r < dims[t]; ++r)
                out(r, k) = image[free_cols[t][r]];
        }
        mats.push_back(std::move(out));
    }
    return Rep::unchecked(m.algebra(), field, std::move(dims), std::move(mats));
}

Morphism compose(const Morphism& g, const Morphism& f)
{
    Morphism out;
    out.reserve(f.size());
    for (std::size_t v = 0; v < f.size(); ++v)
        out.push_back(g[v] * f[v]);
    return out;
}

bool is_isomorphism(const Morphism& f)
{
    for (const auto& m : f)
        if (!m.is_square() || (m.rows() > 0 && !gf::is_invertible(m)))
            return false;
    return true;
}

bool is_nilpotent(const Morphism& f)
{
    for (const auto& m : f) {
        if (m.rows() == 0)
            continue;
        Matrix power = m;
        for (std::size_t k = 1; k < m.rows() && !power.is_zero(); ++k)
            power = power * m;
        if (!power.is_zero())
            return false;
    }
    return true;
}

Morphism identity_morphism(const Rep& m)
{
    Morphism out;
    for (int d : m.dims())
        out.push_back(Matrix::identity(m.field(), d));
    return out;
}

Morphism add(const Morphism& f, const Morphism& g)
{
    Morphism out;
    for (std::size_t v = 0; v < f.size(); ++v)
        out.push_back(f[v] + g[v]);
    return out;
}

Morphism scale(const Morphism& f, Elem s)
{
    Morphism out;
    for (const auto& m : f)
        out.push_back(m.scaled(s));
    return out;
}

std::vector<Elem> flatten(const Morphism& f)
{
    std::vector<Elem> out;
    for (const auto& m : f)
        out.insert(out.end(), m.entries().begin(), m.entries().end());
    return out;
}

} // namespace hallforge
