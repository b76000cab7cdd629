#pragma once

// Arithmetic over Z/p for the modular eigen solver: scalars, dense polynomials,
// matrices, and root finding by gcd with x^p - x followed by equal-degree splitting.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "partalg/exact.hpp"

namespace partalg::modp {

using u64 = std::uint64_t;

class Field {
public:
    explicit Field(u64 p);
    u64 p() const { return p_; }
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p_); }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 pow(u64 a, u64 e) const;
    u64 inv(u64 a) const;
    /// Reduction of an integer (any sign).
    u64 from(long long v) const;
    u64 from(const Int& v) const;
    /// Reduction of a rational; throws when p divides the denominator.
    u64 from(const Rat& v) const;
    /// Least nonnegative residue lifted to [-(p-1)/2, (p-1)/2].
    long long symmetric(u64 a) const;
    /// Some element of exact multiplicative order e (requires e | p-1).
    u64 primitive_root_of_unity(u64 e) const;

private:
    u64 p_;
};

bool is_prime(u64 n);

/// Smallest prime q > lower_bound with q = 1 (mod modulus).
u64 prime_congruent_one(u64 modulus, u64 lower_bound);

using PolyP = std::vector<u64>;  // low degree first, trimmed

void trim(PolyP& a);
PolyP poly_mul(const Field& f, const PolyP& a, const PolyP& b);
PolyP poly_sub(const Field& f, const PolyP& a, const PolyP& b);
/// Returns remainder; quotient written to *q when non-null.
PolyP poly_divmod(const Field& f, const PolyP& a, const PolyP& b, PolyP* q = nullptr);
PolyP poly_gcd(const Field& f, PolyP a, PolyP b);
PolyP poly_powmod(const Field& f, const PolyP& base, u64 e, const PolyP& mod);
u64 poly_eval(const Field& f, const PolyP& a, u64 x);

/// Distinct roots in Z/p of a, sorted ascending.
std::vector<u64> distinct_roots(const Field& f, const PolyP& a, std::mt19937_64& rng);

/// Multiplicity of the root r in a (a nonzero).
unsigned root_multiplicity(const Field& f, PolyP a, u64 r);

using MatP = Matrix<u64>;

MatP matmul(const Field& f, const MatP& a, const MatP& b);
/// det(x I - a), Hessenberg reduction.
PolyP charpoly(const Field& f, MatP a);
/// Basis of the right null space as columns of the returned matrix.
MatP kernel(const Field& f, MatP a);
std::size_t rank(const Field& f, MatP a);
u64 determinant(const Field& f, MatP a);
/// Solves a x = b for square invertible a; nullopt when singular.
std::optional<MatP> solve(const Field& f, MatP a, MatP b);

}  // namespace partalg::modp
