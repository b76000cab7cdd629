#pragma once

// Glue shared by the command-line tool and the acceptance run: the full per-partition
// computation, partitions derived from normal subgroups and the verify-all suite.

#include <cstdint>
#include <vector>

#include "partalg/commutators.hpp"
#include "partalg/mckay.hpp"

namespace partalg {

struct PartitionAnalysis {
    GoodPartition part;
    StructTensor tensor;
    RegularRep rep;
    GramMatrix gram;
    PartitionCharacters chars;
    LinearFormProduct frob;
};

PartitionAnalysis analyze_partition(const FiniteGroup& g, const CharacterTable& ct, GoodPartition part,
                                    StructTensor tensor);
PartitionAnalysis analyze_partition(const FiniteGroup& g, const ClassData& cd, const CharacterTable& ct,
                                    const PartitionSpec& spec);

/// For every normal subgroup N (lattice node): coset=N, subgroup=N and the layered
/// partition {e} | N - e | G - N. Duplicate specs removed; validity is left to the caller.
std::vector<PartitionSpec> normal_subgroup_partitions(const Lattice& l, std::size_t n_classes);

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::size_t brute_bound = 200;   // element-level commutator counts
    std::size_t lattice_bound = 100; // subset enumeration of normal subgroups
    std::size_t triples_max_blocks = 12;
    bool mckay = true;
};

/// Every invariant the engine knows on the trivial and rational partitions and on the
/// partitions derived from normal subgroups.
Report verify_all(const FiniteGroup& g, const ClassData& cd, const CharacterTable& ct, const VerifyOptions& opt);

}  // namespace partalg
