#include "hallforge/error.hpp"
#include "hallforge/hall.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hallforge {

using Rational = boost::multiprecision::cpp_rational;

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0)
            continue;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (mag != 1 || i == 0)
            out += mag.str();
        if (i >= 1)
            out += "T";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

std::string_view to_string(FitStatus s)
{
    switch (s) {
    case FitStatus::Fitted:
        return "Fitted";
    case FitStatus::ValidationFailed:
        return "ValidationFailed";
    case FitStatus::InsufficientPoints:
        return "InsufficientPoints";
    }
    return "?";
}

namespace {

// Exact Lagrange interpolation through the given points, coefficients low
// degree first.
std::vector<Rational> interpolate(const std::vector<FitPoint>& pts)
{
    const std::size_t n = pts.size();
    std::vector<Rational> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> basis{1};
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            // basis *= (T - x_j)
            std::vector<Rational> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * Rational(pts[j].x);
            }
            basis = std::move(next);
            denom *= Rational(pts[i].x - pts[j].x);
        }
        for (std::size_t k = 0; k < basis.size(); ++k)
            out[k] += basis[k] * Rational(pts[i].y) / denom;
    }
    return out;
}

} // namespace

IntegerFit fit_integer_polynomial(const std::vector<FitPoint>& points, int degree_cap)
{
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].x == points[j].x)
                throw Error(ErrorCode::InvalidArgument, "interpolation points must have distinct abscissae");
    IntegerFit result;
    for (int d = 0; d <= degree_cap; ++d) {
        const std::size_t used = static_cast<std::size_t>(d) + 1;
        if (points.size() < used + 2) {
            result.status = FitStatus::InsufficientPoints;
            result.fit_points = static_cast<int>(std::min(used, points.size()));
            return result;
        }
        const auto rat = interpolate({points.begin(), points.begin() + static_cast<std::ptrdiff_t>(used)});
        bool integral = true;
        std::vector<BigInt> coeffs;
        for (const auto& c : rat) {
            if (denominator(c) != 1) {
                integral = false;
                break;
            }
            coeffs.push_back(numerator(c));
        }
        if (!integral)
            continue;
        IntPolynomial poly(std::move(coeffs));
        bool matches = true;
        for (std::size_t k = used; k < points.size() && matches; ++k)
            matches = poly(points[k].x) == points[k].y;
        if (matches) {
            result.polynomial = std::move(poly);
            result.status = FitStatus::Fitted;
            result.fit_points = static_cast<int>(used);
            return result;
        }
    }
    result.status = FitStatus::ValidationFailed;
    result.fit_points = 0;
    return result;
}

} // namespace hallforge
