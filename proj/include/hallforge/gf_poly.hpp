#pragma once

// Univariate polynomials over a FieldCtx, low degree first. Only what the
// residue-degree computation needs: gcd, squarefree radical, irreducibility.

#include "hallforge/gf.hpp"

#include <vector>

namespace hallforge::gf::poly {

using Poly = std::vector<Elem>;

void trim(Poly& f);
int degree(const Poly& f); // -1 for the zero polynomial

Poly add(const FieldCtx& k, const Poly& a, const Poly& b);
Poly sub(const FieldCtx& k, const Poly& a, const Poly& b);
Poly mul(const FieldCtx& k, const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const FieldCtx& k, const Poly& a, const Poly& b);
Poly monic(const FieldCtx& k, const Poly& f);
Poly gcd(const FieldCtx& k, Poly a, Poly b);
Poly derivative(const FieldCtx& k, const Poly& f);
Poly powmod(const FieldCtx& k, Poly base, std::uint64_t e, const Poly& m);

/// Product of the distinct monic irreducible factors of f.
Poly radical(const FieldCtx& k, const Poly& f);
/// f must be squarefree. Returns the degrees of its irreducible factors
/// (distinct-degree factorization, with multiplicities per degree).
std::vector<int> factor_degrees(const FieldCtx& k, const Poly& squarefree);

/// Minimal polynomial (monic) of a square matrix.
Poly minimal_polynomial(const Matrix& a);

} // namespace hallforge::gf::poly
