#pragma once

// Good partitions of the conjugacy classes, their structure-constant tensors and the
// multi-index solution counts l_{i1...ir}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partalg/exact.hpp"
#include "partalg/group.hpp"

namespace partalg {

enum class PartitionKind { Trivial, Galois, Rational, Coset, Subgroup, Custom };

std::string to_string(PartitionKind k);

/// Parsed form of `trivial`, `rational`, `galois=t1,t2`, `coset=c1,c2`,
/// `subgroup=c1,c2`, `custom=b;b;...` (class indices are 0-based).
struct PartitionSpec {
    PartitionKind kind = PartitionKind::Trivial;
    std::vector<long long> residues;                // galois
    std::vector<std::size_t> classes;               // coset / subgroup
    std::vector<std::vector<std::size_t>> blocks;   // custom

    static PartitionSpec parse(const std::string& text);
    static PartitionSpec trivial() { return {}; }
    static PartitionSpec galois(std::vector<long long> t);
    std::string to_string() const;
};

struct GoodPartition {
    PartitionSpec spec;
    std::size_t group_order = 0;
    std::size_t n_classes = 0;
    /// Blocks as sorted class lists, ordered by smallest class; block 0 holds the identity class.
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<long> block_of;                  // class -> block, kUncovered outside
    std::vector<std::size_t> sizes;              // elements per block
    std::vector<std::size_t> inverse_block;
    std::vector<std::vector<Elem>> elements;     // block -> elements, representative first
    std::vector<long> elem_block;                // element -> block, kUncovered outside
    std::vector<unsigned> galois_group;          // closed residue group, galois/rational only
    std::vector<Rat> identity_coeffs;            // filled by build_partition

    std::size_t n() const { return blocks.size(); }
    PartitionKind kind() const { return spec.kind; }
    /// Identity block is exactly {e}.
    bool identity_is_singleton() const { return sizes[0] == 1; }
};

struct StructTensor {
    std::size_t n = 0;
    std::vector<std::int64_t> a;  // a[(l * n + i) * n + j]

    std::int64_t at(std::size_t l, std::size_t i, std::size_t j) const { return a[(l * n + i) * n + j]; }
    bool operator==(const StructTensor& o) const { return n == o.n && a == o.a; }
};

struct ValidationReport {
    bool inverse_closed = true;
    bool product_closed = true;
    bool has_identity = true;
    std::string inverse_witness, product_witness, identity_witness;

    bool ok() const { return inverse_closed && product_closed && has_identity; }
    std::string describe() const;
};

/// Blocks only (no identity solved, nothing validated).
GoodPartition make_blocks(const FiniteGroup& g, const ClassData& cd, const PartitionSpec& spec);

/// Checks the three good-partition conditions on a block layout; never throws.
ValidationReport validate_good_partition(const GoodPartition& p, const FiniteGroup& g);

/// make_blocks + validate + identity; throws InputError for bad specs or invalid partitions.
GoodPartition build_partition(const FiniteGroup& g, const ClassData& cd, const PartitionSpec& spec);

/// a_{lij}; throws VerificationError when a tensor invariant fails.
StructTensor structure_constants(const FiniteGroup& g, const GoodPartition& p, bool parallel = true);

/// Solves sum_i c_i a_{lij} = delta_{lj}; nullopt when no identity exists.
std::optional<std::vector<Rat>> algebra_identity(const StructTensor& t);

/// Number of solutions of g_1...g_r = 1 with g_k in block indices[k], r >= 1.
Int solution_count(const GoodPartition& p, const StructTensor& t, const std::vector<std::size_t>& indices);

/// Raises VerificationError unless symmetry, row sums and cyclic invariance hold.
void check_tensor_invariants(const GoodPartition& p, const StructTensor& t);

}  // namespace partalg
