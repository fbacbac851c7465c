#include "hallforge/gf.hpp"

#include "hallforge/error.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace hallforge::gf {

namespace {

using IntPoly = std::vector<int>; // low degree first, coefficients in [0,p)

void trim(IntPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

// Remainder of f modulo a monic g over F_p.
IntPoly remainder_mod(IntPoly f, const IntPoly& g, int p)
{
    const std::size_t dg = g.size() - 1;
    trim(f);
    while (f.size() > dg) {
        const int lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i)
            f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p) % p;
        trim(f);
    }
    return f;
}

IntPoly monic_from_index(int index, int degree, int p)
{
    IntPoly f(degree + 1, 0);
    for (int i = 0; i < degree; ++i) {
        f[i] = index % p;
        index /= p;
    }
    f[degree] = 1;
    return f;
}

bool irreducible_over_prime(const IntPoly& f, int p)
{
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1)
        return true;
    for (int d = 1; d <= n / 2; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (int idx = 0; idx < count; ++idx) {
            if (remainder_mod(f, monic_from_index(idx, d, p), p).empty())
                return false;
        }
    }
    return true;
}

IntPoly least_irreducible(int p, int n)
{
    int count = 1;
    for (int i = 0; i < n; ++i)
        count *= p;
    // Lexicographic from the constant term: c0 is the most significant digit.
    for (int t = 0; t < count; ++t) {
        IntPoly f(n + 1, 0);
        int rest = t;
        for (int i = n - 1; i >= 0; --i) {
            f[i] = rest % p;
            rest /= p;
        }
        f[n] = 1;
        if (irreducible_over_prime(f, p))
            return f;
    }
    throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

} // namespace

bool is_prime(long long v)
{
    if (v < 2)
        return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

FieldCtx::FieldCtx(int p, int n, std::vector<int> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus))
{
    for (int i = 0; i < n_; ++i)
        q_ *= p_;
    const auto qs = static_cast<std::size_t>(q_);
    add_.resize(qs * qs);
    mul_.resize(qs * qs);
    neg_.resize(qs);
    inv_.assign(qs, 0);

    std::vector<IntPoly> polys(qs);
    for (int a = 0; a < q_; ++a)
        polys[a] = coeffs(static_cast<Elem>(a));

    auto to_index = [&](const IntPoly& f) {
        int idx = 0;
        for (int i = n_ - 1; i >= 0; --i)
            idx = idx * p_ + (i < static_cast<int>(f.size()) ? f[i] : 0);
        return static_cast<Elem>(idx);
    };

    for (int a = 0; a < q_; ++a) {
        IntPoly na(n_);
        for (int i = 0; i < n_; ++i)
            na[i] = (p_ - polys[a][i]) % p_;
        neg_[a] = to_index(na);
        for (int b = 0; b < q_; ++b) {
            IntPoly s(n_);
            for (int i = 0; i < n_; ++i)
                s[i] = (polys[a][i] + polys[b][i]) % p_;
            add_[a * qs + b] = to_index(s);

            IntPoly prod(2 * n_, 0);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p_;
            mul_[a * qs + b] = to_index(remainder_mod(prod, modulus_, p_));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * qs + b] == 1) {
                inv_[a] = static_cast<Elem>(b);
                break;
            }
}

Elem FieldCtx::inv(Elem a) const
{
    if (a == 0)
        throw Error(ErrorCode::DivideByZero, "inverse of zero");
    return inv_[a];
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const noexcept
{
    Elem result = 1;
    Elem base = a;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<int> FieldCtx::coeffs(Elem a) const
{
    std::vector<int> c(n_);
    int v = a;
    for (int i = 0; i < n_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

Elem FieldCtx::from_coeffs(std::span<const int> c) const
{
    if (static_cast<int>(c.size()) != n_)
        throw Error(ErrorCode::DimensionError, "coefficient tuple has wrong length");
    int idx = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= p_)
            throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
        idx = idx * p_ + c[i];
    }
    return static_cast<Elem>(idx);
}

Elem FieldCtx::from_int(long long c) const noexcept
{
    return static_cast<Elem>(((c % p_) + p_) % p_);
}

std::string FieldCtx::format(Elem a) const
{
    if (n_ == 1)
        return std::to_string(static_cast<int>(a));
    std::ostringstream out;
    const auto c = coeffs(a);
    for (int i = 0; i < n_; ++i)
        out << (i ? "," : "") << c[i];
    return out.str();
}

FieldPtr make_field(int p, int n)
{
    if (n < 1)
        throw Error(ErrorCode::DegreeZero, "extension degree must be at least 1");
    if (!is_prime(p))
        throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    long long order = 1;
    for (int i = 0; i < n; ++i) {
        order *= p;
        if (order > kMaxFieldOrder)
            throw Error(ErrorCode::FieldTooLarge, "field order " + std::to_string(p) + "^" +
                                                      std::to_string(n) + " exceeds " +
                                                      std::to_string(kMaxFieldOrder));
    }

    static std::mutex mutex;
    static std::map<std::pair<int, int>, FieldPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{p, n}];
    if (!slot)
        slot = FieldPtr(new FieldCtx(p, n, least_irreducible(p, n)));
    return slot;
}

} // namespace hallforge::gf
