#pragma once

// Element-level counting kernels. Each kernel has an OpenMP version (namespace
// kernels) and a plain serial reference (namespace kernels::serial) with identical
// results; tests compare the two and bench/ times them.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "partalg/group.hpp"

namespace partalg::kernels {

inline constexpr long kUncovered = -1;

struct BlockProducts {
    std::size_t n = 0;
    std::vector<std::uint64_t> a;  // a[(l * n + i) * n + j] = #{(x,y) in B_i x B_j : xy = rep(B_l)}

    /// Set when some product count is not constant on a block (or lands outside the
    /// covered classes): elements x, y of block `block` with differing counts for (i, j).
    struct Witness {
        std::size_t i = 0, j = 0;
        long block = 0;
        Elem x = 0, y = 0;
        std::uint64_t count_x = 0, count_y = 0;
    };
    std::optional<Witness> witness;

    std::uint64_t at(std::size_t l, std::size_t i, std::size_t j) const { return a[(l * n + i) * n + j]; }
};

/// elem_block[x] is the block of x or kUncovered; blocks[b] lists its elements,
/// blocks[b][0] being the representative.
BlockProducts block_products(const FiniteGroup& g, const std::vector<std::vector<Elem>>& blocks,
                             const std::vector<long>& elem_block);

/// c[g] = #{(s, r) : s^-1 r^-1 s r = g}.
std::vector<std::uint64_t> commutator_multiplicity(const FiniteGroup& g);

/// w[g] = sum_j (scale / |B_j|) * #{(x, y) in B_j x B_j' : xy = g}; scale is the lcm of
/// the block sizes so that every entry is an integer.
std::vector<std::uint64_t> pair_weights(const FiniteGroup& g, const std::vector<std::vector<Elem>>& blocks,
                                        const std::vector<std::size_t>& inverse_block, std::uint64_t& scale);

/// t[i1..ir] = sum over g_k in B_{i_k} of weight[g_1 ... g_r], r in {1, 2, 3}; row-major n^r.
std::vector<std::uint64_t> tuple_sums(const FiniteGroup& g, const std::vector<long>& elem_block, std::size_t n,
                                      const std::vector<std::uint64_t>& weight, unsigned r);

/// First (a, b, c) with (ab)c != a(bc); exhaustive for order <= 512, else `samples` random triples.
std::optional<std::array<Elem, 3>> associativity_violation(std::size_t order, const std::vector<Elem>& table,
                                                           std::uint64_t samples, std::uint64_t seed);

namespace serial {

BlockProducts block_products(const FiniteGroup& g, const std::vector<std::vector<Elem>>& blocks,
                             const std::vector<long>& elem_block);
std::vector<std::uint64_t> commutator_multiplicity(const FiniteGroup& g);
std::vector<std::uint64_t> pair_weights(const FiniteGroup& g, const std::vector<std::vector<Elem>>& blocks,
                                        const std::vector<std::size_t>& inverse_block, std::uint64_t& scale);
std::vector<std::uint64_t> tuple_sums(const FiniteGroup& g, const std::vector<long>& elem_block, std::size_t n,
                                      const std::vector<std::uint64_t>& weight, unsigned r);
std::optional<std::array<Elem, 3>> associativity_violation(std::size_t order, const std::vector<Elem>& table,
                                                           std::uint64_t samples, std::uint64_t seed);

}  // namespace serial

}  // namespace partalg::kernels
