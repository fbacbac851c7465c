#include "hallforge/gf_poly.hpp"

#include "hallforge/error.hpp"

namespace hallforge::gf::poly {

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int degree(const Poly& f)
{
    Poly g = f;
    trim(g);
    return static_cast<int>(g.size()) - 1;
}

Poly add(const FieldCtx& k, const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = k.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(out);
    return out;
}

Poly sub(const FieldCtx& k, const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = k.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(out);
    return out;
}

Poly mul(const FieldCtx& k, const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
    trim(out);
    return out;
}

std::pair<Poly, Poly> divmod(const FieldCtx& k, const Poly& a, const Poly& b)
{
    Poly divisor = b;
    trim(divisor);
    if (divisor.empty())
        throw Error(ErrorCode::DivideByZero, "polynomial division by zero");
    Poly rem = a;
    trim(rem);
    const std::size_t db = divisor.size() - 1;
    Poly quot(rem.size() >= divisor.size() ? rem.size() - db : 0, 0);
    const Elem lead_inv = k.inv(divisor.back());
    while (rem.size() >= divisor.size()) {
        const std::size_t shift = rem.size() - 1 - db;
        const Elem c = k.mul(rem.back(), lead_inv);
        quot[shift] = c;
        for (std::size_t i = 0; i <= db; ++i)
            rem[shift + i] = k.sub(rem[shift + i], k.mul(c, divisor[i]));
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

Poly monic(const FieldCtx& k, const Poly& f)
{
    Poly g = f;
    trim(g);
    if (g.empty())
        return g;
    const Elem s = k.inv(g.back());
    for (auto& c : g)
        c = k.mul(c, s);
    return g;
}

Poly gcd(const FieldCtx& k, Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(k, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(k, a);
}

Poly derivative(const FieldCtx& k, const Poly& f)
{
    if (f.size() <= 1)
        return {};
    Poly out(f.size() - 1, 0);
    for (std::size_t i = 1; i < f.size(); ++i)
        out[i - 1] = k.mul(k.from_int(static_cast<long long>(i)), f[i]);
    trim(out);
    return out;
}

Poly powmod(const FieldCtx& k, Poly base, std::uint64_t e, const Poly& m)
{
    Poly result{1};
    base = divmod(k, base, m).second;
    while (e) {
        if (e & 1)
            result = divmod(k, mul(k, result, base), m).second;
        base = divmod(k, mul(k, base, base), m).second;
        e >>= 1;
    }
    return result;
}

namespace {

// f = h(x^p): return h with every coefficient replaced by its p-th root.
Poly pth_root(const FieldCtx& k, const Poly& f)
{
    const int p = k.p();
    // a^(1/p) = a^(q/p) since a^q = a.
    const std::uint64_t root_exp = static_cast<std::uint64_t>(k.order() / p);
    Poly out;
    for (std::size_t i = 0; i < f.size(); i += p)
        out.push_back(k.pow(f[i], root_exp));
    trim(out);
    return out;
}

} // namespace

Poly radical(const FieldCtx& k, const Poly& f)
{
    Poly rest = monic(k, f);
    Poly rad{1};
    while (degree(rest) > 0) {
        Poly d = derivative(k, rest);
        if (d.empty()) {
            rest = monic(k, pth_root(k, rest));
            continue;
        }
        Poly g = gcd(k, rest, d);
        Poly w = monic(k, divmod(k, rest, g).first);
        rad = mul(k, rad, w);
        // strip every factor of w from rest; what remains has multiplicities divisible by p
        while (true) {
            Poly c = gcd(k, rest, w);
            if (degree(c) <= 0)
                break;
            rest = divmod(k, rest, c).first;
        }
        rest = monic(k, rest);
    }
    return monic(k, rad);
}

std::vector<int> factor_degrees(const FieldCtx& k, const Poly& squarefree)
{
    Poly f = monic(k, squarefree);
    std::vector<int> degrees;
    const Poly x{0, 1};
    Poly h = x;
    for (int i = 1; degree(f) > 0; ++i) {
        if (2 * i > degree(f)) {
            degrees.push_back(degree(f));
            break;
        }
        h = powmod(k, h, static_cast<std::uint64_t>(k.order()), f);
        Poly g = gcd(k, f, sub(k, h, x));
        const int dg = degree(g);
        for (int c = 0; c < dg / i; ++c)
            degrees.push_back(i);
        if (dg > 0) {
            f = divmod(k, f, g).first;
            h = divmod(k, h, f).second;
        }
    }
    return degrees;
}

Poly minimal_polynomial(const Matrix& a)
{
    if (!a.is_square())
        throw Error(ErrorCode::DimensionError, "minimal polynomial of a non-square matrix");
    const FieldCtx& k = *a.field();
    const std::size_t n = a.rows();
    // Krylov sequence I, A, A^2, ... flattened; stop at the first dependency.
    std::vector<Matrix> powers{Matrix::identity(a.field(), n)};
    for (std::size_t deg = 1; deg <= n; ++deg) {
        powers.push_back(powers.back() * a);
        Matrix system(a.field(), n * n, powers.size());
        for (std::size_t j = 0; j < powers.size(); ++j)
            for (std::size_t e = 0; e < n * n; ++e)
                system(e, j) = powers[j].entries()[e];
        auto red = rref(system);
        if (red.kernel_basis.empty())
            continue;
        // Only the newest column can be free, so the kernel is one-dimensional
        // with coefficient 1 on A^deg.
        Poly mu(red.kernel_basis.front().begin(), red.kernel_basis.front().end());
        return monic(k, mu);
    }
    return Poly{1}; // n == 0
}

} // namespace hallforge::gf::poly
