#include "partalg/characters.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace partalg {

using modp::Field;
using modp::MatP;
using modp::u64;

modp::u64 default_prime(std::size_t order, unsigned exponent) {
    return modp::prime_congruent_one(exponent, std::max<u64>(order, 2));
}

namespace {

// Rows of b (n x d, full column rank) forming an invertible d x d block.
std::vector<std::size_t> pivot_rows(const Field& f, const MatP& b) {
    MatP t = b.transpose();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < t.cols() && r < t.rows(); ++c) {
        std::size_t k = r;
        while (k < t.rows() && t(k, c) == 0) ++k;
        if (k == t.rows()) continue;
        for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t(k, j), t(r, j));
        const u64 inv = f.inv(t(r, c));
        for (std::size_t j = 0; j < t.cols(); ++j) t(r, j) = f.mul(t(r, j), inv);
        for (std::size_t i = 0; i < t.rows(); ++i) {
            if (i == r || t(i, c) == 0) continue;
            const u64 m = t(i, c);
            for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = f.sub(t(i, j), f.mul(m, t(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

MatP to_modp(const Field& f, const IntMatrix& m) {
    MatP out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f.from(m(i, j));
    return out;
}

Int isqrt_exact(const Int& v, const char* what) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    if (r * r != v) throw VerificationError(std::string(what) + " is not a perfect square: " + v.get_str());
    return r;
}

Int lift_small(const Field& f, u64 v, std::size_t bound, const std::string& what) {
    if (v < 1 || v > bound)
        throw VerificationError(what + " residue " + std::to_string(v) + " does not lift into [1, " +
                                std::to_string(bound) + "] modulo " + std::to_string(f.p()));
    return Int(static_cast<unsigned long>(v));
}

}  // namespace

std::optional<MatP> joint_eigencolumns(const Field& f, const std::vector<MatP>& mats) {
    if (mats.empty()) return std::nullopt;
    const std::size_t n = mats[0].rows();
    std::mt19937_64 rng(0x7a11);
    std::vector<MatP> spaces{MatP::identity(n)};
    for (const MatP& m : mats) {
        std::vector<MatP> next;
        for (const MatP& b : spaces) {
            const std::size_t d = b.cols();
            if (d == 1) {
                next.push_back(b);
                continue;
            }
            const MatP ab = matmul(f, m, b);
            const auto rows = pivot_rows(f, b);
            if (rows.size() != d) return std::nullopt;
            MatP br(d, d), abr(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    br(i, j) = b(rows[i], j);
                    abr(i, j) = ab(rows[i], j);
                }
            const auto c = modp::solve(f, br, abr);
            if (!c) return std::nullopt;
            const modp::PolyP cp = modp::charpoly(f, *c);
            const auto roots = modp::distinct_roots(f, cp, rng);
            unsigned total_mult = 0;
            for (u64 r : roots) total_mult += modp::root_multiplicity(f, cp, r);
            if (total_mult != d) return std::nullopt;  // does not split over Z/p
            if (roots.size() == 1) {
                // must act as a scalar on a semisimple algebra
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        if ((*c)(i, j) != (i == j ? roots[0] : 0)) return std::nullopt;
                next.push_back(b);
                continue;
            }
            std::size_t found = 0;
            for (u64 r : roots) {
                MatP shifted = *c;
                for (std::size_t i = 0; i < d; ++i) shifted(i, i) = f.sub(shifted(i, i), r);
                const MatP k = modp::kernel(f, shifted);
                found += k.cols();
                next.push_back(matmul(f, b, k));
            }
            if (found != d) return std::nullopt;  // not diagonalizable
        }
        spaces = std::move(next);
    }
    MatP out(mats.size(), spaces.size());
    for (std::size_t t = 0; t < spaces.size(); ++t) {
        const MatP& v = spaces[t];
        if (v.cols() != 1) return std::nullopt;  // joint eigenspace of dimension > 1
        std::size_t piv = 0;
        while (v(piv, 0) == 0) ++piv;
        const u64 inv = f.inv(v(piv, 0));
        for (std::size_t k = 0; k < mats.size(); ++k) {
            u64 acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(mats[k](piv, j), v(j, 0)));
            out(k, t) = f.mul(acc, inv);
        }
    }
    return out;
}

std::vector<u64> EigenSystemModP::column(std::size_t t) const {
    std::vector<u64> c(lambda.rows());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = lambda(i, t);
    return c;
}

EigenSystemModP eigen_system_mod_p(const RegularRep& r, const GoodPartition& p, unsigned exponent, u64 prime) {
    const std::size_t n = r.n();
    const bool fixed = prime != 0;
    u64 q = fixed ? prime : default_prime(p.group_order, exponent);
    for (int attempt = 0; attempt < 32; ++attempt) {
        const Field f(q);
        std::vector<MatP> mats;
        for (const auto& a : r.A) mats.push_back(to_modp(f, a));
        if (auto cols = joint_eigencolumns(f, mats)) {
            std::vector<std::vector<u64>> columns(n, std::vector<u64>(n));
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t i = 0; i < n; ++i) columns[t][i] = (*cols)(i, t);
            std::vector<u64> trivial(n);
            for (std::size_t i = 0; i < n; ++i) trivial[i] = f.from(static_cast<long long>(p.sizes[i]));
            std::sort(columns.begin(), columns.end(), [&](const auto& a, const auto& b) {
                const bool ta = a == trivial, tb = b == trivial;
                if (ta != tb) return ta;
                return a < b;
            });
            EigenSystemModP es;
            es.p = q;
            es.lambda = MatP(n, n);
            for (std::size_t t = 0; t < n; ++t) {
                // identity acts as 1; definition equations lambda_j lambda_l = sum_i a_{ijl} lambda_i
                u64 id = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    es.lambda(i, t) = columns[t][i];
                    if (!p.identity_coeffs.empty())
                        id = f.add(id, f.mul(f.from(p.identity_coeffs[i]), columns[t][i]));
                }
                if (!p.identity_coeffs.empty() && id != 1)
                    throw VerificationError("eigen column does not send the identity to 1");
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t l = 0; l < n; ++l) {
                        u64 rhs = 0;
                        for (std::size_t i = 0; i < n; ++i)
                            rhs = f.add(rhs, f.mul(f.from(r.A[l](i, j)), columns[t][i]));
                        if (f.mul(columns[t][j], columns[t][l]) != rhs)
                            throw VerificationError("eigen column violates the product equations");
                    }
            }
            return es;
        }
        if (fixed) break;
        q = modp::prime_congruent_one(exponent, q);
    }
    throw VerificationError("simultaneous diagonalization failed modulo " + std::to_string(q));
}

DegreeData degrees_and_multiplicities(const EigenSystemModP& es, const GramMatrix& gm, const GoodPartition& p,
                                      const EigenSystemModP* trivial) {
    const Field f(es.p);
    const std::size_t n = es.n();
    DegreeData out;
    const u64 ell = f.from(static_cast<long long>(p.group_order));
    for (std::size_t t = 0; t < n; ++t) {
        u64 denom = 0;
        for (std::size_t g = 0; g < n; ++g)
            denom = f.add(denom, f.mul(f.mul(es.lambda(g, t), f.from(gm.p1[g])),
                                       f.inv(f.from(static_cast<long long>(p.sizes[g])))));
        if (denom == 0) throw VerificationError("degree denominator vanishes (algebra not semisimple?)");
        out.d.push_back(lift_small(f, f.mul(ell, f.inv(denom)), p.group_order, "degree product"));
    }
    if (p.kind() == PartitionKind::Trivial) {
        out.split = true;
        for (const Int& d : out.d) {
            out.f.push_back(isqrt_exact(d, "degree product"));
            out.e.push_back(out.f.back());
            out.o.push_back(1);
        }
    } else if (p.kind() == PartitionKind::Galois || p.kind() == PartitionKind::Rational) {
        if (!trivial || trivial->p != es.p)
            throw std::invalid_argument("galois degree split needs the trivial system over the same prime");
        out.split = true;
        std::vector<unsigned> count(n, 0);
        std::map<std::vector<u64>, std::size_t> col_index;
        for (std::size_t t = 0; t < n; ++t) col_index[es.column(t)] = t;
        for (std::size_t s = 0; s < trivial->n(); ++s) {
            std::vector<u64> v(n, 0);
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c : p.blocks[b]) v[b] = f.add(v[b], trivial->lambda(c, s));
            auto it = col_index.find(v);
            if (it == col_index.end()) throw VerificationError("block sum of an ordinary column is not a column");
            ++count[it->second];
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (count[t] == 0 || out.d[t] % count[t] != 0)
                throw VerificationError("orbit length does not divide the degree product");
            out.o.push_back(count[t]);
            out.f.push_back(isqrt_exact(out.d[t] / count[t], "degree product / orbit length"));
            out.e.push_back(out.f.back() * count[t]);
        }
    }
    return out;
}

Cyclotomic CharacterTable::eigenvalue(std::size_t t, std::size_t i) const {
    return chi[t][i] * Rat(Rat(static_cast<unsigned long>(class_sizes[i])) / Rat(degrees[t]));
}

std::vector<Cyclotomic> CharacterTable::galois_conjugate(std::size_t t, long long s) const {
    std::vector<Cyclotomic> out;
    for (std::size_t i = 0; i < class_sizes.size(); ++i) {
        long long e = s % static_cast<long long>(exponent);
        if (e < 0) e += exponent;
        out.push_back(chi[t][power[i][static_cast<std::size_t>(e)]]);
    }
    return out;
}

CharacterTable lift_character_table(const EigenSystemModP& es, const std::vector<Int>& degrees, const ClassData& cd,
                                    std::size_t order) {
    const Field f(es.p);
    const std::size_t n = es.n();
    if (n != cd.n_classes || degrees.size() != n) throw std::invalid_argument("lift: trivial partition data expected");
    const unsigned e = cd.exponent;
    const u64 omega = f.primitive_root_of_unity(e);

    // residues chi_t(g_i) = f_t lambda_it / l_i
    std::vector<std::vector<u64>> res(n, std::vector<u64>(n));
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < n; ++i)
            res[t][i] = f.mul(f.mul(f.from(degrees[t]), es.lambda(i, t)),
                              f.inv(f.from(static_cast<long long>(cd.sizes[i]))));

    std::vector<std::size_t> idx(n);
    for (std::size_t t = 0; t < n; ++t) idx[t] = t;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const bool ta = std::all_of(res[a].begin(), res[a].end(), [](u64 v) { return v == 1; });
        const bool tb = std::all_of(res[b].begin(), res[b].end(), [](u64 v) { return v == 1; });
        if (ta != tb) return ta;
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        return res[a] < res[b];
    });

    CharacterTable ct;
    ct.order = order;
    ct.exponent = e;
    ct.class_sizes = cd.sizes;
    ct.inverse_class = cd.inverse_class;
    ct.class_orders = cd.rep_order;
    ct.power = cd.power;
    ct.p = es.p;
    ct.omega = omega;
    for (std::size_t t : idx) {
        const unsigned deg = static_cast<unsigned>(degrees[t].get_ui());
        ct.degrees.push_back(deg);
        std::vector<Cyclotomic> row;
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned o = cd.rep_order[i];
            const unsigned step = e / o;
            const u64 w = f.pow(omega, step);  // order o
            const u64 winv = f.inv(w);
            const u64 oinv = f.inv(f.from(static_cast<long long>(o)));
            Cyclotomic val(e);
            std::vector<Rat> coeffs(e, Rat(0));
            unsigned total = 0;
            for (unsigned k = 0; k < o; ++k) {
                // m_k = (1/o) sum_j chi(g^j) w^{-jk}
                u64 acc = 0;
                const u64 wk = f.pow(winv, k);
                u64 wjk = 1;
                for (unsigned j = 0; j < o; ++j) {
                    acc = f.add(acc, f.mul(res[t][cd.power_class(i, j)], wjk));
                    wjk = f.mul(wjk, wk);
                }
                const u64 m = f.mul(acc, oinv);
                if (m > deg)
                    throw VerificationError("Fourier multiplicity " + std::to_string(m) + " exceeds degree " +
                                            std::to_string(deg));
                coeffs[k * step] = static_cast<unsigned long>(m);
                total += static_cast<unsigned>(m);
            }
            if (total != deg) throw VerificationError("Fourier multiplicities do not sum to the degree");
            row.emplace_back(e, std::move(coeffs));
        }
        ct.chi.push_back(std::move(row));
    }
    verify_character_table(ct);
    return ct;
}

CharacterTable compute_character_table(const FiniteGroup& g, const ClassData& cd) {
    const GoodPartition p = build_partition(g, cd, PartitionSpec::trivial());
    const StructTensor t = structure_constants(g, p);
    const RegularRep r = regular_representation(t);
    const GramMatrix gm = gram_matrix(r);
    const EigenSystemModP es = eigen_system_mod_p(r, p, cd.exponent);
    const DegreeData dd = degrees_and_multiplicities(es, gm, p);
    return lift_character_table(es, dd.f, cd, g.order());
}

void verify_character_table(const CharacterTable& ct) {
    const std::size_t n = ct.n();
    unsigned long sq = 0;
    for (unsigned d : ct.degrees) {
        if (ct.order % d != 0) throw VerificationError("character degree does not divide the group order");
        sq += static_cast<unsigned long>(d) * d;
    }
    if (sq != ct.order) throw VerificationError("squared degrees do not sum to the group order");
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s; t < n; ++t) {
            Cyclotomic acc(ct.exponent);
            for (std::size_t i = 0; i < n; ++i)
                acc.add_product(ct.chi[s][i], ct.chi[t][ct.inverse_class[i]],
                                Rat(static_cast<unsigned long>(ct.class_sizes[i])));
            const Rat want = s == t ? Rat(static_cast<unsigned long>(ct.order)) : Rat(0);
            if (!(acc - Cyclotomic(ct.exponent, want)).is_zero())
                throw VerificationError("row orthogonality fails for characters " + std::to_string(s) + ", " +
                                        std::to_string(t));
        }
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < n; ++i)
            if (ct.chi[t][ct.inverse_class[i]] != ct.chi[t][i].conj())
                throw VerificationError("chi(g^-1) differs from the complex conjugate of chi(g)");
}

PartitionCharacters partition_characters(const CharacterTable& ct, const GoodPartition& p, const GramMatrix& gm) {
    const std::size_t nb = p.n();
    std::vector<std::vector<Cyclotomic>> vecs;
    std::vector<std::vector<std::size_t>> groups;
    std::map<std::vector<std::vector<Rat>>, std::size_t> seen;
    for (std::size_t s = 0; s < ct.n(); ++s) {
        std::vector<Cyclotomic> v;
        bool zero = true;
        std::vector<std::vector<Rat>> key;
        for (std::size_t b = 0; b < nb; ++b) {
            Cyclotomic acc(ct.exponent);
            for (std::size_t c : p.blocks[b]) acc += ct.eigenvalue(s, c);
            acc = acc.canonical();
            if (!acc.is_zero()) zero = false;
            key.push_back(acc.coeffs());
            v.push_back(std::move(acc));
        }
        if (zero) continue;
        auto it = seen.find(key);
        if (it != seen.end()) {
            groups[it->second].push_back(s);
            continue;
        }
        seen.emplace(std::move(key), vecs.size());
        vecs.push_back(std::move(v));
        groups.push_back({s});
    }
    if (vecs.size() != nb)
        throw VerificationError("partition has " + std::to_string(nb) + " blocks but " +
                                std::to_string(vecs.size()) + " distinct characters");
    PartitionCharacters pc;
    pc.lambda = std::move(vecs);
    pc.constituents = std::move(groups);
    const Rat ell(static_cast<unsigned long>(p.group_order));
    for (std::size_t t = 0; t < nb; ++t) {
        Cyclotomic denom(ct.exponent);
        for (std::size_t g = 0; g < nb; ++g)
            denom += pc.lambda[t][g] * Rat(Rat(gm.p1[g]) / Rat(static_cast<unsigned long>(p.sizes[g])));
        if (!denom.is_rational()) throw VerificationError("degree product is not rational");
        const Rat d = ell / denom.to_rational();
        if (d.get_den() != 1) throw VerificationError("degree product is not an integer");
        pc.degrees.d.push_back(d.get_num());
    }
    const bool split = p.kind() == PartitionKind::Trivial || p.kind() == PartitionKind::Galois ||
                       p.kind() == PartitionKind::Rational;
    if (split) {
        pc.degrees.split = true;
        for (std::size_t t = 0; t < nb; ++t) {
            const unsigned f = ct.degrees[pc.constituents[t][0]];
            for (std::size_t s : pc.constituents[t])
                if (ct.degrees[s] != f) throw VerificationError("Galois orbit mixes degrees");
            const Int o(static_cast<unsigned long>(pc.constituents[t].size()));
            pc.degrees.f.push_back(Int(f));
            pc.degrees.o.push_back(o);
            pc.degrees.e.push_back(Int(f) * o);
            if (Int(f) * Int(f) * o != pc.degrees.d[t]) throw VerificationError("d_t differs from f_t^2 o_t");
        }
    }
    return pc;
}

bool matches_eigen_system(const PartitionCharacters& pc, const CharacterTable& ct, const EigenSystemModP& es) {
    const Field f(es.p);
    const u64 omega = es.p == ct.p ? ct.omega : f.primitive_root_of_unity(ct.exponent);
    std::vector<std::vector<u64>> a, b;
    for (std::size_t t = 0; t < pc.n(); ++t) {
        std::vector<u64> col;
        for (const auto& v : pc.lambda[t]) col.push_back(v.reduce(f, omega));
        a.push_back(std::move(col));
        b.push_back(es.column(t));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

void Report::add(std::string name, bool pass, std::string detail) {
    entries.push_back({std::move(name), pass, std::move(detail)});
}

bool Report::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.pass ? "PASS " : "FAIL ") << e.name;
        if (!e.detail.empty()) os << "  (" << e.detail << ")";
        os << '\n';
    }
    return os.str();
}

Report identity_suite(const CharacterTable& ct, const PartitionCharacters& pc, const GoodPartition& p,
                      const StructTensor& t, const GramMatrix& gm, std::uint64_t seed) {
    Report rep;
    const std::size_t n = pc.n();
    const unsigned e = ct.exponent;
    const Rat ell(static_cast<unsigned long>(p.group_order));
    auto size = [&](std::size_t i) { return Rat(static_cast<unsigned long>(p.sizes[i])); };
    // chi = f lambda; without a degree split f := 1 and e := d
    std::vector<Rat> fv(n), ev(n), dv(n);
    for (std::size_t l = 0; l < n; ++l) {
        dv[l] = Rat(pc.degrees.d[l]);
        fv[l] = pc.degrees.split ? Rat(pc.degrees.f[l]) : Rat(1);
        ev[l] = pc.degrees.split ? Rat(pc.degrees.e[l]) : dv[l];
    }
    std::vector<std::vector<Cyclotomic>> chi(n);  // chi[l][i]
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i) chi[l].push_back(pc.lambda[l][i] * fv[l]);
    auto is_value = [&](const Cyclotomic& c, const Rat& v) { return (c - Cyclotomic(e, v)).is_zero(); };
    const auto& inv = p.inverse_block;

    bool ok1 = true, ok2 = true, ok3 = true, ok4 = true;
    std::string w1, w2, w3, w4;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = j; l < n; ++l) {
            Cyclotomic acc(e);
            for (std::size_t i = 0; i < n; ++i) acc.add_product(chi[j][i], chi[l][inv[i]], 1 / size(i));
            if (j != l && !acc.is_zero() && ok1) ok1 = false, w1 = "characters " + std::to_string(j) + "," + std::to_string(l);
            if (j == l && !is_value(acc, ell * fv[j] / ev[j]) && ok2) ok2 = false, w2 = "character " + std::to_string(j);
        }
    // cached products lambda_il lambda_jl
    std::vector<Cyclotomic> pair(n * n * n, Cyclotomic(e));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                pair[(i * n + j) * n + l] = (pc.lambda[l][i] * pc.lambda[l][j]);
                pair[(j * n + i) * n + l] = pair[(i * n + j) * n + l];
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // sum_l (e_l / f_l) chi_il chi_jl = sum_l d_l lambda_il lambda_jl
            Cyclotomic acc(e);
            for (std::size_t l = 0; l < n; ++l) acc += pair[(i * n + j) * n + l] * dv[l];
            if (j != inv[i] && !acc.is_zero() && ok3) ok3 = false, w3 = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (j == inv[i] && !is_value(acc, ell * size(i)) && ok4) ok4 = false, w4 = "block " + std::to_string(i);
        }
    rep.add("orthogonality (i): sum_i chi_ij chi_i'l / l_i = 0", ok1, w1);
    rep.add("orthogonality (ii): sum_i chi_ij chi_i'j / l_i = l chi_j(1) / e_j", ok2, w2);
    rep.add("orthogonality (iii): sum_l (e_l/chi_l(1)) chi_il chi_jl = 0 for j != i'", ok3, w3);
    rep.add("orthogonality (iv): sum_l (e_l/chi_l(1)) chi_il chi_i'l = l l_i", ok4, w4);
    if (p.identity_is_singleton()) {
        bool ok5 = true;
        std::string w5;
        for (std::size_t i = 1; i < n; ++i) {
            Cyclotomic acc(e);
            for (std::size_t l = 0; l < n; ++l) acc += chi[l][i] * ev[l];
            if (!acc.is_zero() && ok5) ok5 = false, w5 = "block " + std::to_string(i);
        }
        Rat s6 = 0;
        for (std::size_t l = 0; l < n; ++l) s6 += ev[l] * fv[l];
        rep.add("orthogonality (v): sum_l e_l chi_il = 0 for i != 1", ok5, w5);
        rep.add("orthogonality (vi): sum_l e_l chi_l(1) = l", s6 == ell, s6.get_str());
    }

    // weighted solution counts: l l_I = sum_l d_l prod lambda
    bool ok_r2 = true, ok_r3 = true, ok_r4 = true;
    std::string wr;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Cyclotomic acc(e);
            for (std::size_t l = 0; l < n; ++l) acc += pair[(i * n + j) * n + l] * dv[l];
            if (!is_value(acc, ell * Rat(solution_count(p, t, {i, j})))) ok_r2 = false;
            for (std::size_t k = j; k < n; ++k) {
                Cyclotomic a3(e);
                for (std::size_t l = 0; l < n; ++l) a3.add_product(pair[(i * n + j) * n + l], pc.lambda[l][k], dv[l]);
                if (!is_value(a3, ell * Rat(solution_count(p, t, {i, j, k})))) {
                    if (ok_r3) wr = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                    ok_r3 = false;
                }
            }
        }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t exhaustive = n * n * n * n;
    const std::size_t samples = std::min<std::size_t>(exhaustive, 200);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<std::size_t> idx(4);
        if (exhaustive <= 200)
            for (std::size_t k = 0, v = s; k < 4; ++k, v /= n) idx[k] = v % n;
        else
            for (auto& v : idx) v = pick(rng);
        Cyclotomic acc(e);
        for (std::size_t l = 0; l < n; ++l)
            acc.add_product(pair[(idx[0] * n + idx[1]) * n + l], pair[(idx[2] * n + idx[3]) * n + l], dv[l]);
        if (!is_value(acc, ell * Rat(solution_count(p, t, idx)))) ok_r4 = false;
    }
    rep.add("solution counts r=2: l l_ij = sum_l (e_l/chi_l(1)) chi_il chi_jl", ok_r2);
    rep.add("solution counts r=3 (all index triples)", ok_r3, wr);
    rep.add("solution counts r=4 (" + std::string(exhaustive <= 200 ? "all" : "200 sampled") + " tuples, seed " +
                std::to_string(seed) + ")",
            ok_r4);

    bool okp = true;
    for (std::size_t i = 0; i < n && okp; ++i)
        for (std::size_t j = 0; j < n && okp; ++j) {
            Cyclotomic acc(e);
            for (std::size_t l = 0; l < n; ++l) acc += pair[(i * n + j) * n + l];
            if (!is_value(acc, Rat(gm.p(i, j)))) okp = false;
        }
    rep.add("Gram entries p_ij = sum_l chi_il chi_jl / chi_l(1)^2", okp);

    if (p.kind() == PartitionKind::Trivial) {
        // ordinary values: chi_l(g_i)
        const auto& X = ct.chi;
        bool ok_o2 = true, ok_o3 = true, ok_sz = true, ok_a = true;
        for (std::size_t i = 0; i < n; ++i) {
            Cyclotomic col(e);
            for (std::size_t l = 0; l < n; ++l) col.add_product(X[l][i], X[l][ct.inverse_class[i]]);
            if (!is_value(col, ell / size(i))) ok_sz = false;
            for (std::size_t j = i; j < n; ++j) {
                std::vector<Cyclotomic> xij(n);
                for (std::size_t l = 0; l < n; ++l) xij[l] = X[l][i] * X[l][j];
                Cyclotomic a2(e);
                for (std::size_t l = 0; l < n; ++l) a2 += xij[l];
                if (!is_value(a2, ell * Rat(solution_count(p, t, {i, j})) / (size(i) * size(j)))) ok_o2 = false;
                for (std::size_t k = 0; k < n; ++k) {
                    Cyclotomic a3(e);
                    for (std::size_t l = 0; l < n; ++l) a3.add_product(xij[l], X[l][k], Rat(1, ct.degrees[l]));
                    if (k >= j &&
                        !is_value(a3, ell * Rat(solution_count(p, t, {i, j, k})) / (size(i) * size(j) * size(k))))
                        ok_o3 = false;
                    // a_{kij} = (l_i l_j / l) sum_t chi(g_i) chi(g_j) conj chi(g_k) / chi(1)
                    Cyclotomic ak(e);
                    for (std::size_t l = 0; l < n; ++l)
                        ak.add_product(xij[l], X[l][ct.inverse_class[k]], Rat(1, ct.degrees[l]));
                    if (!is_value(ak * (size(i) * size(j) / ell), Rat(static_cast<long>(t.at(k, i, j))))) ok_a = false;
                }
            }
        }
        rep.add("ordinary counts r=2: l l_ij / (l_i l_j) = sum_l chi_l(g_i) chi_l(g_j)", ok_o2);
        rep.add("ordinary counts r=3: l l_ijk / (l_i l_j l_k) = sum_l chi_l(g_i) chi_l(g_j) chi_l(g_k) / chi_l(1)", ok_o3);
        rep.add("class sizes from the table: l_i = l / sum_l |chi_l(g_i)|^2", ok_sz);
        rep.add("structure constants re-derived from the table", ok_a);
    }
    return rep;
}

}  // namespace partalg
