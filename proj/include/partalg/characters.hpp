#pragma once

// One-dimensional representations of a partition algebra computed modulo a prime,
// exact (cyclotomic) ordinary character tables lifted from them, the partition
// characters obtained by block sums, and the orthogonality/counting identity suite.

#include <optional>
#include <string>
#include <vector>

#include "partalg/class_algebra.hpp"
#include "partalg/cyclotomic.hpp"
#include "partalg/modp.hpp"
#include "partalg/partitions.hpp"

namespace partalg {

/// Smallest prime p = 1 (mod exponent) with p > max(order, 2).
modp::u64 default_prime(std::size_t order, unsigned exponent);

/// Joint eigenvalue columns of commuting matrices over Z/p: result(k, t) is the
/// eigenvalue of mats[k] on the t-th joint eigenline. nullopt when the matrices are not
/// simultaneously diagonalizable over Z/p with one-dimensional joint eigenspaces.
std::optional<modp::MatP> joint_eigencolumns(const modp::Field& f, const std::vector<modp::MatP>& mats);

struct EigenSystemModP {
    modp::u64 p = 0;
    modp::MatP lambda;  // lambda(i, t): eigenvalue of block sum i on column t

    std::size_t n() const { return lambda.rows(); }
    std::vector<modp::u64> column(std::size_t t) const;
};

/// Columns ordered: the column with lambda_i = l_i first, then lexicographically.
/// With prime == 0 the default prime is used and later primes are tried on failure.
EigenSystemModP eigen_system_mod_p(const RegularRep& r, const GoodPartition& p, unsigned exponent,
                                   modp::u64 prime = 0);

struct DegreeData {
    std::vector<Int> d;  // chi_t(1) e_t
    bool split = false;  // f, e, o available (trivial / galois / rational kinds)
    std::vector<Int> f, e, o;
};

/// d_t from the Gram traces, lifted from Z/p. For Galois kinds `trivial` must be the
/// trivial-partition system of the same group over the same prime; it supplies o_t.
DegreeData degrees_and_multiplicities(const EigenSystemModP& es, const GramMatrix& gm, const GoodPartition& p,
                                      const EigenSystemModP* trivial = nullptr);

struct CharacterTable {
    std::size_t order = 0;
    unsigned exponent = 1;
    std::vector<std::size_t> class_sizes;
    std::vector<std::size_t> inverse_class;
    std::vector<unsigned> class_orders;
    std::vector<std::vector<std::size_t>> power;  // power[i][t mod exponent]
    std::vector<unsigned> degrees;
    std::vector<std::vector<Cyclotomic>> chi;     // chi[t][i], order `exponent`
    modp::u64 p = 0;
    modp::u64 omega = 0;                          // image of E(exponent) in Z/p

    std::size_t n() const { return degrees.size(); }
    /// l_i chi_t(g_i) / chi_t(1)
    Cyclotomic eigenvalue(std::size_t t, std::size_t i) const;
    /// Values of chi_t under xi -> xi^s, computed through the power maps.
    std::vector<Cyclotomic> galois_conjugate(std::size_t t, long long s) const;
};

/// Fourier lift of the trivial-partition eigen system (needs degrees f_t).
CharacterTable lift_character_table(const EigenSystemModP& es, const std::vector<Int>& degrees, const ClassData& cd,
                                    std::size_t order);

/// Full pipeline on the trivial partition: tensor, Gram, eigen system, degrees, lift.
CharacterTable compute_character_table(const FiniteGroup& g, const ClassData& cd);

/// Raises VerificationError when the exact table fails the classical orthogonality
/// relations or the degree conditions.
void verify_character_table(const CharacterTable& ct);

struct PartitionCharacters {
    std::vector<std::vector<Cyclotomic>> lambda;        // lambda[t][block]
    std::vector<std::vector<std::size_t>> constituents; // irreducibles collapsing onto t
    DegreeData degrees;

    std::size_t n() const { return lambda.size(); }
};

/// Block sums of the ordinary table; irreducibles with equal vectors are merged and
/// vanishing vectors dropped.
PartitionCharacters partition_characters(const CharacterTable& ct, const GoodPartition& p, const GramMatrix& gm);

/// True when the reductions of the exact columns are exactly the columns of `es`.
bool matches_eigen_system(const PartitionCharacters& pc, const CharacterTable& ct, const EigenSystemModP& es);

struct CheckEntry {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Report {
    std::vector<CheckEntry> entries;

    void add(std::string name, bool pass, std::string detail = {});
    bool ok() const;
    std::string to_text() const;
};

/// Orthogonality (i)-(vi), weighted solution counts for r <= 3 (sampled for r = 4),
/// Gram traces from characters; for the trivial partition also the ordinary variants,
/// class sizes from the table and structure constants re-derived from the table.
Report identity_suite(const CharacterTable& ct, const PartitionCharacters& pc, const GoodPartition& p,
                      const StructTensor& t, const GramMatrix& gm, std::uint64_t seed = 1);

}  // namespace partalg
