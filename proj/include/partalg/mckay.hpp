#pragma once

// p'-degree polynomials of G and of a Sylow normalizer, residue-class degree counts,
// Galois-fixed character counts and the F-characters of a Galois partition.

#include <string>
#include <vector>

#include "partalg/characters.hpp"
#include "partalg/polynomials.hpp"

namespace partalg {

/// (i, M_i) for i in 1..max(1, (p-1)/2): characters with degree = +-i (mod p).
using ResidueCounts = std::vector<std::pair<unsigned, std::size_t>>;

/// Also asserts M_i against the multiplicity of (x - i^2) in the p'-part of the
/// polynomial with roots chi(1)^2; VerificationError on mismatch.
ResidueCounts residue_degree_counts(const CharacterTable& ct, unsigned p);

struct GaloisFixed {
    long long t = 1;              // residue, reduced mod the group's exponent
    std::size_t direct = 0;       // p'-degree chi with chi^t = chi, by value permutation
    std::size_t from_partition = 0;  // p'-degree partition characters with o = 1 on <t>
};

GaloisFixed galois_fixed_count(const FiniteGroup& g, const ClassData& cd, const CharacterTable& ct, unsigned p,
                               long long t);

struct FCharacterData {
    std::vector<std::vector<std::size_t>> orbits;  // irreducibles per Galois orbit
    std::vector<std::size_t> o;                    // orbit lengths
    std::vector<std::vector<Cyclotomic>> chi_k;    // orbit sums, per class
    bool fixed_by_t = true;                        // every chi_k value fixed by the Galois group
    bool block_relation = true;                    // o_j * (block average of chi) = chi_k
};

/// Orbits of Irr(G) under the closed residue group of `p` (trivial, galois or rational kind).
FCharacterData f_character_data(const CharacterTable& ct, const GoodPartition& p);

/// 1, the residue acting as x -> x^p on p'-roots of unity and trivially on p-power
/// roots, and a p-power-order residue fixing p'-roots of unity (duplicates removed).
std::vector<long long> default_automorphisms(unsigned exponent, unsigned p);

/// Restriction of a subfield spec to a group of exponent e (residues taken mod e).
PartitionSpec restrict_field(const PartitionSpec& t, unsigned exponent);

struct McKaySide {
    std::size_t order = 0;
    std::size_t n_classes = 0;
    Poly degree_polynomial;
    PPrimePart pprime;
    ResidueCounts m_table;
    std::vector<GaloisFixed> galois_fixed;
};

struct McKayVerdict {
    std::string group;
    unsigned p = 0;
    std::string field;
    std::uint64_t seed = 0;
    std::size_t sylow_order = 0;
    std::size_t normalizer_order = 0;
    McKaySide g, n;
    bool equal = false;
    bool galois_agree = false;  // G and N fix the same number for every tested residue

    std::string csv_row() const;
    static std::string csv_header();
};

/// p must be a prime divisor of |G|. The residues in `automorphisms` (default_automorphisms when empty)
/// are tested for fixed-character counts on both sides.
McKayVerdict mckay_check(const FiniteGroup& g, const std::string& group_id, unsigned p, const PartitionSpec& field,
                         std::uint64_t seed = 0, std::vector<long long> automorphisms = {});

}  // namespace partalg
