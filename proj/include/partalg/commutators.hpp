#pragma once

// Generalized-commutator counts p_{i1..ir}, power-sum forms, Newton's identities and
// recovery of the Frobenius polynomial from the triple counts.

#include <string>
#include <vector>

#include "partalg/class_algebra.hpp"
#include "partalg/modp.hpp"
#include "partalg/polynomials.hpp"

namespace partalg {

/// Partition: weight of g is sum_i #{(x, y) in B_i x B_i' : xy = g} / l_i.
/// Ordinary: weight of g is #{(s, r) : s^-1 r^-1 s r = g}; trivial partition only.
enum class Convention { Partition, Ordinary };

std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

struct CommutatorCounts {
    Convention convention = Convention::Partition;
    std::size_t n = 0;
    unsigned max_r = 0;
    std::vector<Rat> weight;  // per element of block j
    std::vector<Int> p1;      // p_i
    std::vector<Int> p2;      // p_{ij}, row-major
    std::vector<Int> p3;      // p_{ijl}, row-major

    const Int& at(std::size_t i, std::size_t j) const { return p2[i * n + j]; }
    const Int& at(std::size_t i, std::size_t j, std::size_t l) const { return p3[(i * n + j) * n + l]; }
    bool operator==(const CommutatorCounts& o) const {
        return convention == o.convention && n == o.n && p1 == o.p1 && p2 == o.p2 && p3 == o.p3;
    }
};

/// From the tensor: p_I = sum_j l_{j' I} w_j with w_j the block weight. max_r <= 3.
CommutatorCounts commutator_counts(const GoodPartition& p, const StructTensor& t, Convention c, unsigned max_r = 3);

/// Element-level counting through the kernels (serial reference when parallel is false).
CommutatorCounts commutator_counts_brute(const FiniteGroup& g, const GoodPartition& p, Convention c,
                                         unsigned max_r = 3, bool parallel = true);

/// Constant k with p_I = k Tr(A_I): 1 for the partition convention, l for the ordinary one.
Int trace_constant(Convention c, std::size_t group_order);

/// Coefficients of s_r(gamma_1(x), ..., gamma_n(x)): s[r-1][i1..ir] = Tr(A_i1 ... A_ir), r <= 4.
struct PowerSumForms {
    std::size_t n = 0;
    std::vector<std::vector<Int>> s;

    const Int& coeff(const std::vector<std::size_t>& idx) const;
    /// s_r evaluated at x.
    Rat eval(unsigned r, const std::vector<Rat>& x) const;
};

PowerSumForms power_sum_forms(const RegularRep& r, unsigned max_r = 3);

/// sigma_1..sigma_n from s_1..s_n (Newton), and back.
std::vector<Rat> newton_elementary(const std::vector<Rat>& s);
std::vector<Rat> newton_power_sums(const std::vector<Rat>& sigma);

struct TripleReconstruction {
    StructTensor tensor;          // a_{lij} = (M_j)_{il}, M_l = T_l P^-1
    modp::u64 prime = 0;          // p = 1 (mod l), p > l
    modp::MatP columns;           // columns(i, t) = gamma_t(e_i) mod p, trivial column first
    std::vector<Int> multiplicities;
};

/// Needs partition-convention counts (ordinary ones are divided by l first).
TripleReconstruction reconstruct_from_triples(const CommutatorCounts& c, std::size_t group_order,
                                              const std::vector<std::size_t>& block_sizes);

/// True when the forms of `f`, reduced modulo the reconstruction prime, are the recovered
/// columns with the same multiplicities, up to the order of the forms.
bool matches_frobenius(const TripleReconstruction& rec, const LinearFormProduct& f);

}  // namespace partalg
