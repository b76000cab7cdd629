#include "partalg/commutators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "partalg/kernels.hpp"

namespace partalg {

using modp::Field;
using modp::MatP;
using modp::u64;

std::string to_string(Convention c) { return c == Convention::Partition ? "partition" : "ordinary"; }

Convention parse_convention(const std::string& s) {
    if (s == "partition") return Convention::Partition;
    if (s == "ordinary") return Convention::Ordinary;
    throw InputError("unknown convention '" + s + "' (expected partition or ordinary)");
}

Int trace_constant(Convention c, std::size_t group_order) {
    return c == Convention::Partition ? Int(1) : Int(static_cast<unsigned long>(group_order));
}

namespace {

Int as_count(const Rat& v, const char* what) {
    if (v.get_den() != 1 || v < 0) throw VerificationError(std::string(what) + " is not a nonnegative integer");
    return v.get_num();
}

// Calls fn on every nondecreasing index tuple of length r over [0, n).
void for_sorted_tuples(std::size_t n, unsigned r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(r, 0);
    std::function<void(unsigned, std::size_t)> rec = [&](unsigned k, std::size_t lo) {
        if (k == r) {
            fn(idx);
            return;
        }
        for (std::size_t i = lo; i < n; ++i) {
            idx[k] = i;
            rec(k + 1, i);
        }
    };
    rec(0, 0);
}

// Writes v at every permutation of idx in a row-major n^r array.
void fill_symmetric(std::vector<Int>& out, std::size_t n, std::vector<std::size_t> idx, const Int& v) {
    std::sort(idx.begin(), idx.end());
    do {
        std::size_t pos = 0;
        for (std::size_t i : idx) pos = pos * n + i;
        out[pos] = v;
    } while (std::next_permutation(idx.begin(), idx.end()));
}

std::size_t ipow(std::size_t n, unsigned r) {
    std::size_t v = 1;
    while (r--) v *= n;
    return v;
}

void check_convention(const GoodPartition& p, Convention c, unsigned max_r) {
    if (c == Convention::Ordinary && p.kind() != PartitionKind::Trivial)
        throw InputError("the ordinary convention needs the trivial partition");
    if (max_r < 1 || max_r > 3) throw InputError("max_r must lie in 1..3");
}

}  // namespace

CommutatorCounts commutator_counts(const GoodPartition& p, const StructTensor& t, Convention c, unsigned max_r) {
    check_convention(p, c, max_r);
    const std::size_t n = p.n();
    const Rat ell(static_cast<unsigned long>(p.group_order));
    CommutatorCounts out;
    out.convention = c;
    out.n = n;
    out.max_r = max_r;
    for (std::size_t j = 0; j < n; ++j) {
        Rat w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Int l3 = solution_count(p, t, {j, i, p.inverse_block[i]});
            w += Rat(l3) / Rat(static_cast<unsigned long>(p.sizes[j] * p.sizes[i]));
        }
        if (c == Convention::Ordinary) w *= ell;
        out.weight.push_back(w);
    }
    auto count = [&](const std::vector<std::size_t>& idx) {
        Rat acc = 0;
        std::vector<std::size_t> full(idx.size() + 1);
        std::copy(idx.begin(), idx.end(), full.begin() + 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (out.weight[j] == 0) continue;
            full[0] = p.inverse_block[j];
            acc += Rat(solution_count(p, t, full)) * out.weight[j];
        }
        return as_count(acc, "commutator count");
    };
    std::vector<Int>* dest[3] = {&out.p1, &out.p2, &out.p3};
    for (unsigned r = 1; r <= max_r; ++r) {
        dest[r - 1]->assign(ipow(n, r), 0);
        for_sorted_tuples(n, r, [&](const std::vector<std::size_t>& idx) {
            fill_symmetric(*dest[r - 1], n, idx, count(idx));
        });
    }
    return out;
}

CommutatorCounts commutator_counts_brute(const FiniteGroup& g, const GoodPartition& p, Convention c, unsigned max_r,
                                         bool parallel) {
    check_convention(p, c, max_r);
    const std::size_t n = p.n();
    CommutatorCounts out;
    out.convention = c;
    out.n = n;
    out.max_r = max_r;
    std::vector<std::uint64_t> w;
    std::uint64_t scale = 1;
    if (c == Convention::Partition) {
        w = parallel ? kernels::pair_weights(g, p.elements, p.inverse_block, scale)
                     : kernels::serial::pair_weights(g, p.elements, p.inverse_block, scale);
    } else {
        w = parallel ? kernels::commutator_multiplicity(g) : kernels::serial::commutator_multiplicity(g);
    }
    const Rat sc(static_cast<unsigned long>(scale));
    for (std::size_t j = 0; j < n; ++j) out.weight.push_back(Rat(static_cast<unsigned long>(w[p.elements[j][0]])) / sc);
    std::vector<Int>* dest[3] = {&out.p1, &out.p2, &out.p3};
    for (unsigned r = 1; r <= max_r; ++r) {
        const auto sums = parallel ? kernels::tuple_sums(g, p.elem_block, n, w, r)
                                   : kernels::serial::tuple_sums(g, p.elem_block, n, w, r);
        dest[r - 1]->clear();
        for (std::uint64_t v : sums) dest[r - 1]->push_back(as_count(Rat(static_cast<unsigned long>(v)) / sc, "count"));
    }
    return out;
}

const Int& PowerSumForms::coeff(const std::vector<std::size_t>& idx) const {
    std::size_t pos = 0;
    for (std::size_t i : idx) pos = pos * n + i;
    return s.at(idx.size() - 1).at(pos);
}

Rat PowerSumForms::eval(unsigned r, const std::vector<Rat>& x) const {
    Rat acc = 0;
    const auto& c = s.at(r - 1);
    for (std::size_t pos = 0; pos < c.size(); ++pos) {
        Rat term = Rat(c[pos]);
        std::size_t q = pos;
        for (unsigned k = 0; k < r; ++k, q /= n) term *= x[q % n];
        acc += term;
    }
    return acc;
}

PowerSumForms power_sum_forms(const RegularRep& r, unsigned max_r) {
    if (max_r < 1 || max_r > 4) throw InputError("power sums are stored for r <= 4");
    PowerSumForms out;
    const std::size_t n = r.n();
    out.n = n;
    for (unsigned k = 1; k <= max_r; ++k) {
        std::vector<Int> c(ipow(n, k), 0);
        // depth-first over sorted tuples with cached prefix products
        std::vector<std::size_t> idx;
        std::function<void(const IntMatrix*, std::size_t)> rec = [&](const IntMatrix* prefix, std::size_t lo) {
            for (std::size_t i = lo; i < n; ++i) {
                idx.push_back(i);
                if (idx.size() == k) {
                    Int tr = 0;
                    if (!prefix) {
                        tr = r.A[i].trace();
                    } else {
                        for (std::size_t a = 0; a < n; ++a)
                            for (std::size_t b = 0; b < n; ++b)
                                if ((*prefix)(a, b) != 0 && r.A[i](b, a) != 0) tr += (*prefix)(a, b) * r.A[i](b, a);
                    }
                    fill_symmetric(c, n, idx, tr);
                } else {
                    const IntMatrix next = prefix ? *prefix * r.A[i] : r.A[i];
                    rec(&next, i);
                }
                idx.pop_back();
            }
        };
        rec(nullptr, 0);
        out.s.push_back(std::move(c));
    }
    return out;
}

std::vector<Rat> newton_elementary(const std::vector<Rat>& s) {
    std::vector<Rat> sigma(s.size() + 1, 0);
    sigma[0] = 1;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        Rat acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            const Rat term = sigma[k - i] * s[i - 1];
            if (i % 2) acc += term;
            else acc -= term;
        }
        sigma[k] = acc / Rat(static_cast<unsigned long>(k));
    }
    sigma.erase(sigma.begin());
    return sigma;
}

std::vector<Rat> newton_power_sums(const std::vector<Rat>& sigma) {
    std::vector<Rat> s(sigma.size(), 0);
    for (std::size_t k = 1; k <= sigma.size(); ++k) {
        Rat acc = Rat(static_cast<unsigned long>(k)) * sigma[k - 1];
        if (k % 2 == 0) acc = -acc;
        for (std::size_t i = 1; i < k; ++i) {
            const Rat term = sigma[i - 1] * s[k - i - 1];
            if (i % 2) acc += term;
            else acc -= term;
        }
        s[k - 1] = acc;
    }
    return s;
}

TripleReconstruction reconstruct_from_triples(const CommutatorCounts& c, std::size_t group_order,
                                              const std::vector<std::size_t>& block_sizes) {
    const std::size_t n = c.n;
    if (c.max_r < 3) throw InputError("reconstruction needs the triple counts");
    if (block_sizes.size() != n) throw InputError("block sizes do not match the counts");
    const Rat k(trace_constant(c.convention, group_order));
    RatMatrix pm(n, n), rhs(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            pm(i, j) = Rat(c.at(i, j)) / k;
            for (std::size_t l = 0; l < n; ++l) rhs(i, l * n + j) = Rat(c.at(i, j, l)) / k;
        }
    if (determinant(pm) == 0) throw VerificationError("pair-count matrix is singular");
    const RatMatrix x = solve(pm, rhs);  // x(:, l*n + :) = P^-1 T_l = M_l^T
    TripleReconstruction out;
    out.tensor.n = n;
    out.tensor.a.assign(n * n * n, 0);
    const Rat ell(static_cast<unsigned long>(group_order));
    for (std::size_t kk = 0; kk < n; ++kk)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const Rat& v = x(kk, l * n + i);
                if (v.get_den() != 1 || v < 0 || v > ell)
                    throw VerificationError("recovered structure constant is not an integer in [0, l]");
                out.tensor.a[(kk * n + i) * n + l] = v.get_num().get_si();
            }
    u64 prime = modp::prime_congruent_one(group_order, std::max<u64>(group_order, 2));
    for (int attempt = 0; attempt < 32; ++attempt, prime = modp::prime_congruent_one(group_order, prime)) {
        const Field f(prime);
        std::vector<MatP> mats;
        for (std::size_t l = 0; l < n; ++l) {
            MatP m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t kk = 0; kk < n; ++kk) m(i, kk) = f.from(x(kk, l * n + i));
            mats.push_back(std::move(m));
        }
        const auto cols = joint_eigencolumns(f, mats);
        if (!cols) continue;
        std::vector<std::vector<u64>> colv(n);
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t i = 0; i < n; ++i) colv[t].push_back((*cols)(i, t));
        std::vector<u64> triv;
        for (std::size_t s : block_sizes) triv.push_back(f.from(static_cast<long long>(s)));
        std::sort(colv.begin(), colv.end(), [&](const auto& a, const auto& b) {
            if ((a == triv) != (b == triv)) return a == triv;
            return a < b;
        });
        if (colv[0] != triv) throw VerificationError("no trivial column among the recovered eigen columns");
        out.prime = prime;
        out.columns = MatP(n, n);
        for (std::size_t t = 0; t < n; ++t) {
            u64 denom = 0;
            for (std::size_t g = 0; g < n; ++g) {
                const Rat tr = Rat(c.p1[g]) / k / Rat(static_cast<unsigned long>(block_sizes[g]));
                denom = f.add(denom, f.mul(colv[t][g], f.from(tr)));
            }
            if (denom == 0) throw VerificationError("degree product vanishes mod p");
            const u64 d = f.mul(f.from(static_cast<long long>(group_order)), f.inv(denom));
            if (d == 0 || d > group_order) throw VerificationError("recovered multiplicity does not lift");
            out.multiplicities.emplace_back(static_cast<unsigned long>(d));
            for (std::size_t i = 0; i < n; ++i) out.columns(i, t) = colv[t][i];
        }
        return out;
    }
    throw VerificationError("recovered matrices do not split over the tried primes");
}

bool matches_frobenius(const TripleReconstruction& rec, const LinearFormProduct& f) {
    const std::size_t n = rec.columns.rows();
    if (f.forms.size() != n || f.n_vars() != n) return false;
    unsigned order = 1;
    for (const auto& form : f.forms)
        for (const auto& c : form) order = std::lcm(order, c.order());
    if ((rec.prime - 1) % order != 0) return false;
    const Field fld(rec.prime);
    const u64 omega = fld.primitive_root_of_unity(order);
    std::multiset<std::pair<std::vector<u64>, Int>> a, b;
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<u64> col, red;
        for (std::size_t i = 0; i < n; ++i) {
            col.push_back(rec.columns(i, t));
            red.push_back(f.forms[t][i].lift_to(order).reduce(fld, omega));
        }
        a.emplace(std::move(col), rec.multiplicities[t]);
        b.emplace(std::move(red), f.multiplicities[t]);
    }
    return a == b;
}

}  // namespace partalg
