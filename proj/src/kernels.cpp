#include "partalg/kernels.hpp"

#include <numeric>
#include <random>

#include <omp.h>

namespace partalg::kernels {

namespace {

using Witness = BlockProducts::Witness;

// Reads the per-element counts of one (i, j) pair into the tensor and checks that they
// are constant on blocks and vanish outside the covered elements.
std::optional<Witness> harvest(const std::vector<std::uint64_t>& counts, const std::vector<std::vector<Elem>>& blocks,
                               const std::vector<long>& elem_block, std::size_t i, std::size_t j, BlockProducts& out) {
    const std::size_t n = blocks.size();
    std::optional<Witness> w;
    for (std::size_t l = 0; l < n; ++l) {
        const std::uint64_t v = counts[blocks[l][0]];
        out.a[(l * n + i) * n + j] = v;
        if (w) continue;
        for (Elem y : blocks[l])
            if (counts[y] != v) {
                w = Witness{i, j, static_cast<long>(l), blocks[l][0], y, v, counts[y]};
                break;
            }
    }
    if (!w)
        for (std::size_t z = 0; z < counts.size(); ++z)
            if (elem_block[z] == kUncovered && counts[z] != 0) {
                w = Witness{i, j, kUncovered, static_cast<Elem>(z), static_cast<Elem>(z), 0, counts[z]};
                break;
            }
    return w;
}

}  // namespace

BlockProducts block_products(const FiniteGroup& g, const std::vector<std::vector<Elem>>& blocks,
                             const std::vector<long>& elem_block) {
    const std::size_t n = blocks.size();
    const std::size_t order = g.order();
    BlockProducts out;
    out.n = n;
    out.a.assign(n * n * n, 0);
    std::vector<std::optional<Witness>> witnesses(n * n);
    const long pairs = static_cast<long>(n * n);
#pragma omp parallel
    {
        std::vector<std::uint64_t> counts(order, 0);
#pragma omp for schedule(dynamic)
        for (long pij = 0; pij < pairs; ++pij) {
            const std::size_t i = static_cast<std::size_t>(pij) / n;
            const std::size_t j = static_cast<std::size_t>(pij) % n;
            std::fill(counts.begin(), counts.end(), 0);
            for (Elem x : blocks[i])
                for (Elem y : blocks[j]) ++counts[g.mul(x, y)];
            witnesses[static_cast<std::size_t>(pij)] = harvest(counts, blocks, elem_block, i, j, out);
        }
    }
    for (auto& w : witnesses)
        if (w) {
            out.witness = w;
            break;
        }
    return out;
}

std::vector<std::uint64_t> commutator_multiplicity(const FiniteGroup& g) {
    const std::size_t order = g.order();
    std::vector<std::uint64_t> total(order, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(order, 0);
#pragma omp for schedule(static)
        for (long s = 0; s < static_cast<long>(order); ++s) {
            const Elem si = g.inv(static_cast<Elem>(s));
            for (Elem r = 0; r < order; ++r) {
                const Elem c = g.mul(g.mul(si, g.inv(r)), g.mul(static_cast<Elem>(s), r));
                ++local[c];
            }
        }
#pragma omp critical
        for (std::size_t k = 0; k < order; ++k) total[k] += local[k];
    }
    return total;
}

std::vector<std::uint64_t> pair_weights(const FiniteGroup& g, const std::vector<std::vector<Elem>>& blocks,
                                        const std::vector<std::size_t>& inverse_block, std::uint64_t& scale) {
    scale = 1;
    for (const auto& b : blocks) scale = std::lcm(scale, static_cast<std::uint64_t>(b.size()));
    const std::size_t order = g.order();
    std::vector<std::uint64_t> total(order, 0);
    const long n = static_cast<long>(blocks.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(order, 0);
#pragma omp for schedule(dynamic)
        for (long j = 0; j < n; ++j) {
            const std::uint64_t wj = scale / blocks[static_cast<std::size_t>(j)].size();
            for (Elem x : blocks[static_cast<std::size_t>(j)])
                for (Elem y : blocks[inverse_block[static_cast<std::size_t>(j)]]) local[g.mul(x, y)] += wj;
        }
#pragma omp critical
        for (std::size_t k = 0; k < order; ++k) total[k] += local[k];
    }
    return total;
}

std::vector<std::uint64_t> tuple_sums(const FiniteGroup& g, const std::vector<long>& elem_block, std::size_t n,
                                      const std::vector<std::uint64_t>& weight, unsigned r) {
    if (r < 1 || r > 3) throw std::invalid_argument("tuple_sums: r must be 1, 2 or 3");
    std::size_t size = 1;
    for (unsigned k = 0; k < r; ++k) size *= n;
    std::vector<std::uint64_t> total(size, 0);
    const long order = static_cast<long>(g.order());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(size, 0);
#pragma omp for schedule(dynamic)
        for (long a = 0; a < order; ++a) {
            const long ba = elem_block[static_cast<std::size_t>(a)];
            if (ba == kUncovered) continue;
            if (r == 1) {
                local[static_cast<std::size_t>(ba)] += weight[static_cast<std::size_t>(a)];
                continue;
            }
            for (Elem b = 0; b < static_cast<Elem>(order); ++b) {
                const long bb = elem_block[b];
                if (bb == kUncovered) continue;
                const Elem ab = g.mul(static_cast<Elem>(a), b);
                const std::size_t base = static_cast<std::size_t>(ba) * n + static_cast<std::size_t>(bb);
                if (r == 2) {
                    local[base] += weight[ab];
                    continue;
                }
                for (Elem c = 0; c < static_cast<Elem>(order); ++c) {
                    const long bc = elem_block[c];
                    if (bc == kUncovered) continue;
                    local[base * n + static_cast<std::size_t>(bc)] += weight[g.mul(ab, c)];
                }
            }
        }
#pragma omp critical
        for (std::size_t k = 0; k < size; ++k) total[k] += local[k];
    }
    return total;
}

std::optional<std::array<Elem, 3>> associativity_violation(std::size_t order, const std::vector<Elem>& table,
                                                           std::uint64_t samples, std::uint64_t seed) {
    auto mul = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * order + b]; };
    std::optional<std::array<Elem, 3>> found;
    if (order <= 512) {
        std::vector<std::optional<std::array<Elem, 3>>> per_a(order);
#pragma omp parallel for schedule(dynamic)
        for (long a = 0; a < static_cast<long>(order); ++a) {
            for (Elem b = 0; b < order && !per_a[a]; ++b) {
                const Elem ab = mul(static_cast<Elem>(a), b);
                for (Elem c = 0; c < order; ++c)
                    if (mul(ab, c) != mul(static_cast<Elem>(a), mul(b, c))) {
                        per_a[a] = std::array<Elem, 3>{static_cast<Elem>(a), b, c};
                        break;
                    }
            }
        }
        for (auto& v : per_a)
            if (v) return v;
        return std::nullopt;
    }
    // each thread draws from its own stream derived from the seed
    const int threads = omp_get_max_threads();
    std::vector<std::optional<std::array<Elem, 3>>> per_thread(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(tid + 1));
        std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(order - 1));
        const std::uint64_t share = samples / static_cast<std::uint64_t>(threads) + 1;
        for (std::uint64_t s = 0; s < share; ++s) {
            const Elem a = dist(rng), b = dist(rng), c = dist(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                per_thread[static_cast<std::size_t>(tid)] = std::array<Elem, 3>{a, b, c};
                break;
            }
        }
    }
    for (auto& v : per_thread)
        if (v) return v;
    return found;
}

namespace serial {

BlockProducts block_products(const FiniteGroup& g, const std::vector<std::vector<Elem>>& blocks,
                             const std::vector<long>& elem_block) {
    const std::size_t n = blocks.size();
    BlockProducts out;
    out.n = n;
    out.a.assign(n * n * n, 0);
    std::vector<std::uint64_t> counts(g.order(), 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::fill(counts.begin(), counts.end(), 0);
            for (Elem x : blocks[i])
                for (Elem y : blocks[j]) ++counts[g.mul(x, y)];
            auto w = harvest(counts, blocks, elem_block, i, j, out);
            if (w && !out.witness) out.witness = w;
        }
    return out;
}

std::vector<std::uint64_t> commutator_multiplicity(const FiniteGroup& g) {
    std::vector<std::uint64_t> total(g.order(), 0);
    for (Elem s = 0; s < g.order(); ++s)
        for (Elem r = 0; r < g.order(); ++r) ++total[g.mul(g.mul(g.inv(s), g.inv(r)), g.mul(s, r))];
    return total;
}

std::vector<std::uint64_t> pair_weights(const FiniteGroup& g, const std::vector<std::vector<Elem>>& blocks,
                                        const std::vector<std::size_t>& inverse_block, std::uint64_t& scale) {
    scale = 1;
    for (const auto& b : blocks) scale = std::lcm(scale, static_cast<std::uint64_t>(b.size()));
    std::vector<std::uint64_t> total(g.order(), 0);
    for (std::size_t j = 0; j < blocks.size(); ++j)
        for (Elem x : blocks[j])
            for (Elem y : blocks[inverse_block[j]]) total[g.mul(x, y)] += scale / blocks[j].size();
    return total;
}

std::vector<std::uint64_t> tuple_sums(const FiniteGroup& g, const std::vector<long>& elem_block, std::size_t n,
                                      const std::vector<std::uint64_t>& weight, unsigned r) {
    if (r < 1 || r > 3) throw std::invalid_argument("tuple_sums: r must be 1, 2 or 3");
    std::size_t size = 1;
    for (unsigned k = 0; k < r; ++k) size *= n;
    std::vector<std::uint64_t> total(size, 0);
    const Elem order = static_cast<Elem>(g.order());
    for (Elem a = 0; a < order; ++a) {
        if (elem_block[a] == kUncovered) continue;
        if (r == 1) {
            total[static_cast<std::size_t>(elem_block[a])] += weight[a];
            continue;
        }
        for (Elem b = 0; b < order; ++b) {
            if (elem_block[b] == kUncovered) continue;
            const std::size_t base = static_cast<std::size_t>(elem_block[a]) * n + static_cast<std::size_t>(elem_block[b]);
            if (r == 2) {
                total[base] += weight[g.mul(a, b)];
                continue;
            }
            for (Elem c = 0; c < order; ++c) {
                if (elem_block[c] == kUncovered) continue;
                total[base * n + static_cast<std::size_t>(elem_block[c])] += weight[g.mul(g.mul(a, b), c)];
            }
        }
    }
    return total;
}

std::optional<std::array<Elem, 3>> associativity_violation(std::size_t order, const std::vector<Elem>& table,
                                                           std::uint64_t samples, std::uint64_t seed) {
    auto mul = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * order + b]; };
    if (order <= 512) {
        for (Elem a = 0; a < order; ++a)
            for (Elem b = 0; b < order; ++b)
                for (Elem c = 0; c < order; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return std::array<Elem, 3>{a, b, c};
        return std::nullopt;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(order - 1));
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Elem a = dist(rng), b = dist(rng), c = dist(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return std::array<Elem, 3>{a, b, c};
    }
    return std::nullopt;
}

}  // namespace serial

}  // namespace partalg::kernels
