#include "partalg/mckay.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace partalg {

namespace {

long long reduce_residue(long long t, unsigned e) {
    const long long m = static_cast<long long>(e);
    return ((t % m) + m) % m;
}

std::string m_table_text(const ResidueCounts& m) {
    std::string s;
    for (const auto& [i, c] : m) {
        if (!s.empty()) s += ';';
        s += std::to_string(i) + ':' + std::to_string(c);
    }
    return s;
}

}  // namespace

ResidueCounts residue_degree_counts(const CharacterTable& ct, unsigned p) {
    if (!modp::is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    ResidueCounts out;
    const unsigned top = std::max(1u, (p - 1) / 2);
    for (unsigned i = 1; i <= top; ++i) {
        std::size_t c = 0;
        for (unsigned d : ct.degrees)
            if (d % p == i || d % p == p - i) ++c;
        out.emplace_back(i, c);
    }
    std::vector<Rat> squares;
    for (unsigned d : ct.degrees) squares.emplace_back(static_cast<unsigned long>(d) * d);
    const PPrimePart pp = p_prime_part(Poly::from_roots(squares), p);
    for (const auto& [i, c] : out)
        if (pp.multiplicity(static_cast<modp::u64>(i) * i % p) != c)
            throw VerificationError("M_" + std::to_string(i) + " differs from the root multiplicity in the p'-part");
    return out;
}

GaloisFixed galois_fixed_count(const FiniteGroup& g, const ClassData& cd, const CharacterTable& ct, unsigned p,
                               long long t) {
    GaloisFixed out;
    out.t = reduce_residue(t, cd.exponent);
    if (cd.exponent > 1 && std::gcd(out.t, static_cast<long long>(cd.exponent)) != 1)
        throw InputError("residue " + std::to_string(t) + " is not a unit mod " + std::to_string(cd.exponent));
    for (std::size_t u = 0; u < ct.n(); ++u)
        if (ct.degrees[u] % p != 0 && ct.galois_conjugate(u, out.t) == ct.chi[u]) ++out.direct;

    // modular route: orbit lengths of the <t>-Galois partition against the trivial one
    const auto spec = cd.exponent == 1 ? PartitionSpec::trivial() : PartitionSpec::galois({out.t});
    const GoodPartition triv = build_partition(g, cd, PartitionSpec::trivial());
    const GoodPartition gal = build_partition(g, cd, spec);
    const RegularRep rt = regular_representation(structure_constants(g, triv));
    const RegularRep rg = regular_representation(structure_constants(g, gal));
    const GramMatrix gg = gram_matrix(rg);
    const auto es_t = eigen_system_mod_p(rt, triv, cd.exponent);
    const auto es_g = eigen_system_mod_p(rg, gal, cd.exponent, es_t.p);
    const DegreeData dd = degrees_and_multiplicities(es_g, gg, gal, &es_t);
    for (std::size_t k = 0; k < dd.d.size(); ++k)
        if (dd.o[k] == 1 && dd.f[k] % p != 0) ++out.from_partition;
    return out;
}

FCharacterData f_character_data(const CharacterTable& ct, const GoodPartition& p) {
    if (p.kind() != PartitionKind::Trivial && p.kind() != PartitionKind::Galois && p.kind() != PartitionKind::Rational)
        throw InputError("F-characters need a trivial, galois or rational partition");
    std::vector<unsigned> tg = p.galois_group;
    if (tg.empty()) tg = {1};
    FCharacterData out;
    const std::size_t n = ct.n();
    std::vector<bool> seen(n, false);
    for (std::size_t u = 0; u < n; ++u) {
        if (seen[u]) continue;
        std::vector<std::size_t> orbit;
        for (unsigned s : tg) {
            const auto conj = ct.galois_conjugate(u, s);
            std::size_t hit = n;
            for (std::size_t v = 0; v < n && hit == n; ++v)
                if (ct.chi[v] == conj) hit = v;
            if (hit == n) throw VerificationError("Galois conjugate is not an irreducible character");
            if (!seen[hit]) {
                seen[hit] = true;
                orbit.push_back(hit);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        std::vector<Cyclotomic> sum;
        for (std::size_t c = 0; c < ct.class_sizes.size(); ++c) {
            Cyclotomic acc(ct.exponent);
            for (std::size_t v : orbit) acc += ct.chi[v][c];
            sum.push_back(acc.canonical());
        }
        for (const auto& v : sum)
            for (unsigned s : tg)
                if (v.galois(s) != v) out.fixed_by_t = false;
        const Rat o(static_cast<unsigned long>(orbit.size()));
        for (const auto& block : p.blocks) {
            Cyclotomic avg(ct.exponent);
            std::size_t size = 0;
            for (std::size_t c : block) {
                avg += ct.chi[u][c] * Rat(static_cast<unsigned long>(ct.class_sizes[c]));
                size += ct.class_sizes[c];
            }
            avg *= o / Rat(static_cast<unsigned long>(size));
            for (std::size_t c : block)
                if (avg != sum[c]) out.block_relation = false;
        }
        out.o.push_back(orbit.size());
        out.orbits.push_back(std::move(orbit));
        out.chi_k.push_back(std::move(sum));
    }
    return out;
}

std::vector<long long> default_automorphisms(unsigned exponent, unsigned p) {
    unsigned ep = 1;
    while (exponent % (ep * p) == 0) ep *= p;
    const unsigned eq = exponent / ep;
    // t = target_p (mod ep), t = target_q (mod eq), t in [1, exponent]
    auto crt = [&](unsigned target_p, unsigned target_q) -> long long {
        for (unsigned t = 1; t <= exponent; ++t)
            if (t % ep == target_p % ep && t % eq == target_q % eq) return t;
        return 1;
    };
    std::vector<long long> out{1};
    auto add = [&](long long t) {
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    };
    add(crt(1, p));                                 // Frobenius on p'-roots of unity
    add(crt(p == 2 ? ep - 1 : 1 + p, 1));           // p-power order, fixing p'-roots of unity
    return out;
}

PartitionSpec restrict_field(const PartitionSpec& t, unsigned exponent) {
    switch (t.kind) {
        case PartitionKind::Trivial:
        case PartitionKind::Rational:
            return t;
        case PartitionKind::Galois: {
            if (exponent == 1) return PartitionSpec::trivial();
            std::vector<long long> r;
            for (long long x : t.residues) r.push_back(reduce_residue(x, exponent));
            return PartitionSpec::galois(r);
        }
        default:
            throw InputError("a subfield is given as trivial, rational or galois=t1,...");
    }
}

namespace {

McKaySide side(const FiniteGroup& x, unsigned p, const PartitionSpec& field, const std::vector<long long>& autos) {
    McKaySide s;
    const ClassData cd = conjugacy_classes(x);
    s.order = x.order();
    s.n_classes = cd.n_classes;
    const GoodPartition part = build_partition(x, cd, restrict_field(field, cd.exponent));
    const RegularRep r = regular_representation(structure_constants(x, part));
    s.degree_polynomial = degree_polynomial_casimir(casimir_matrix(r, part));
    s.pprime = p_prime_part(s.degree_polynomial, p);
    const CharacterTable ct = compute_character_table(x, cd);
    s.m_table = residue_degree_counts(ct, p);
    for (long long t : autos) {
        s.galois_fixed.push_back(galois_fixed_count(x, cd, ct, p, t));
        if (s.galois_fixed.back().direct != s.galois_fixed.back().from_partition)
            throw VerificationError("fixed-character counts disagree between the table and the Galois partition");
    }
    return s;
}

}  // namespace

McKayVerdict mckay_check(const FiniteGroup& g, const std::string& group_id, unsigned p, const PartitionSpec& field,
                         std::uint64_t seed, std::vector<long long> automorphisms) {
    if (!modp::is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (g.order() % p != 0) throw InputError(std::to_string(p) + " does not divide the group order");
    if (automorphisms.empty()) automorphisms = default_automorphisms(conjugacy_classes(g).exponent, p);
    McKayVerdict v;
    v.group = group_id;
    v.p = p;
    v.field = field.to_string();
    v.seed = seed;
    const Subgroup s = sylow_subgroup(g, p, seed);
    const Subgroup nrm = normalizer(g, s);
    v.sylow_order = s.order();
    v.normalizer_order = nrm.order();
    const FiniteGroup h = induced_group(g, nrm);
    v.g = side(g, p, field, automorphisms);
    v.n = side(h, p, field, automorphisms);
    v.equal = v.g.pprime == v.n.pprime;
    v.galois_agree = true;
    for (std::size_t k = 0; k < automorphisms.size(); ++k)
        if (v.g.galois_fixed[k].direct != v.n.galois_fixed[k].direct) v.galois_agree = false;
    return v;
}

std::string McKayVerdict::csv_header() {
    return "group,order,p,field,sylow_order,normalizer_order,D_G_pprime,D_N_pprime,equal,M_G,M_N,galois_agree";
}

std::string McKayVerdict::csv_row() const {
    std::ostringstream os;
    os << group << ',' << g.order << ',' << p << ",\"" << field << "\"," << sylow_order << ',' << normalizer_order << ','
       << g.pprime.to_string() << ',' << n.pprime.to_string() << ',' << (equal ? "yes" : "no") << ','
       << m_table_text(g.m_table) << ',' << m_table_text(n.m_table) << ',' << (galois_agree ? "yes" : "no");
    return os.str();
}

}  // namespace partalg
