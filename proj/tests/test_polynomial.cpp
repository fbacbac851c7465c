#include "hallforge/hall.hpp"

#include <doctest.h>

#include <random>

using namespace hallforge;

namespace {

IntPolynomial poly(std::vector<BigInt> c) { return IntPolynomial(std::move(c)); }

std::vector<FitPoint> sample(const IntPolynomial& f, std::vector<int> xs)
{
    std::vector<FitPoint> out;
    for (int x : xs)
        out.push_back({BigInt(x), f(BigInt(x))});
    return out;
}

} // namespace

TEST_SUITE("polynomial")
{
    TEST_CASE("printing")
    {
        CHECK(poly({1, 2, 1}).to_string() == "T^2+2T+1");
        CHECK(poly({0, 1}).to_string() == "T");
        CHECK(poly({}).to_string() == "0");
        CHECK(poly({0, 0}).is_zero());
        CHECK(poly({-1, 1}).to_string() == "T-1");
        CHECK(poly({3, 0, -2}).to_string() == "-2T^2+3");
        CHECK(poly({5, 0, 0}).degree() == 0);
    }

    TEST_CASE("line count example")
    {
        const auto fit = fit_integer_polynomial({{2, 3}, {3, 4}, {4, 5}, {5, 6}}, 4);
        CHECK(fit.status == FitStatus::Fitted);
        CHECK(fit.polynomial == poly({1, 1}));
        CHECK(fit.fit_points == 2);
    }

    TEST_CASE("constant counts")
    {
        const auto fit = fit_integer_polynomial({{2, 1}, {4, 1}, {8, 1}}, 2);
        CHECK(fit.status == FitStatus::Fitted);
        CHECK(fit.polynomial.to_string() == "1");
    }

    TEST_CASE("too few points to validate")
    {
        const auto fit = fit_integer_polynomial({{3, 4}, {9, 10}, {27, 28}}, 2);
        CHECK(fit.status == FitStatus::InsufficientPoints);
        CHECK(fit_integer_polynomial({{2, 7}}, 0).status == FitStatus::InsufficientPoints);
    }

    TEST_CASE("non-polynomial data fails validation")
    {
        // 2^x at x = 1..6 is not a polynomial of degree <= 2
        std::vector<FitPoint> pts;
        for (int x = 1; x <= 6; ++x)
            pts.push_back({x, BigInt(1) << x});
        CHECK(fit_integer_polynomial(pts, 2).status == FitStatus::ValidationFailed);
        // non-integral interpolant
        CHECK(fit_integer_polynomial({{0, 0}, {2, 1}, {4, 2}, {6, 3}}, 1).status == FitStatus::ValidationFailed);
    }

    TEST_CASE("random integer polynomials are recovered exactly")
    {
        std::mt19937_64 rng(12345);
        std::uniform_int_distribution<int> coeff(-50, 50);
        for (int trial = 0; trial < 200; ++trial) {
            const int deg = trial % 5;
            std::vector<BigInt> c;
            for (int i = 0; i <= deg; ++i)
                c.push_back(coeff(rng));
            if (c.back() == 0)
                c.back() = 1;
            const IntPolynomial f(c);
            const auto fit = fit_integer_polynomial(sample(f, {2, 4, 8, 16, 32, 64, 128}), 4);
            CHECK(fit.status == FitStatus::Fitted);
            CHECK(fit.polynomial == f);
        }
    }

    TEST_CASE("coefficients beyond 64 bits stay exact")
    {
        const BigInt big("123456789012345678901234567890");
        const IntPolynomial f = poly({big, -big, BigInt(1)});
        const auto fit = fit_integer_polynomial(sample(f, {3, 9, 27, 81, 243}), 4);
        CHECK(fit.status == FitStatus::Fitted);
        CHECK(fit.polynomial == f);
        CHECK(f(BigInt(81)) == big - big * 81 + 81 * 81);
    }
}
