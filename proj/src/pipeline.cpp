#include "partalg/pipeline.hpp"

#include <algorithm>
#include <set>

namespace partalg {

PartitionAnalysis analyze_partition(const FiniteGroup& g, const CharacterTable& ct, GoodPartition part,
                                    StructTensor tensor) {
    (void)g;
    PartitionAnalysis a{std::move(part), std::move(tensor), {}, {}, {}, {}};
    a.rep = regular_representation(a.tensor);
    a.gram = gram_matrix(a.rep);
    a.chars = partition_characters(ct, a.part, a.gram);
    a.frob = frobenius_polynomial(a.chars);
    return a;
}

PartitionAnalysis analyze_partition(const FiniteGroup& g, const ClassData& cd, const CharacterTable& ct,
                                    const PartitionSpec& spec) {
    GoodPartition part = build_partition(g, cd, spec);
    StructTensor t = structure_constants(g, part);
    return analyze_partition(g, ct, std::move(part), std::move(t));
}

std::vector<PartitionSpec> normal_subgroup_partitions(const Lattice& l, std::size_t n_classes) {
    std::vector<PartitionSpec> out;
    std::set<std::string> seen;
    auto add = [&](const PartitionSpec& s) {
        if (seen.insert(s.to_string()).second) out.push_back(s);
    };
    for (const auto& node : l.nodes) {
        PartitionSpec c;
        c.kind = PartitionKind::Coset;
        c.classes = node;
        add(c);
        PartitionSpec s;
        s.kind = PartitionKind::Subgroup;
        s.classes = node;
        add(s);
        PartitionSpec layered;
        layered.kind = PartitionKind::Custom;
        std::vector<bool> in(n_classes, false);
        for (std::size_t k : node) in[k] = true;
        std::vector<std::size_t> inner, outer;
        for (std::size_t k = 1; k < n_classes; ++k) (in[k] ? inner : outer).push_back(k);
        layered.blocks.push_back({0});
        if (!inner.empty()) layered.blocks.push_back(inner);
        if (!outer.empty()) layered.blocks.push_back(outer);
        add(layered);
    }
    return out;
}

namespace {

template <class F>
void guarded(Report& r, const std::string& name, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        r.add(name, false, e.what());
    }
}

void partition_checks(Report& r, const FiniteGroup& g, const ClassData& cd, const CharacterTable& ct,
                      const PartitionSpec& spec, const VerifyOptions& opt) {
    const std::string tag = spec.to_string() + ": ";
    guarded(r, tag + "analysis", [&] {
        GoodPartition part = build_partition(g, cd, spec);
        const StructTensor serial = structure_constants(g, part, false);
        StructTensor t = structure_constants(g, part, true);
        r.add(tag + "tensor parallel = serial", serial == t);
        check_tensor_invariants(part, t);
        r.add(tag + "tensor invariants", true);
        const PartitionAnalysis a = analyze_partition(g, ct, std::move(part), std::move(t));
        r.add(tag + "Gram determinant nonzero", a.gram.determinant != 0, "det = " + a.gram.determinant.get_str());

        const auto es = eigen_system_mod_p(a.rep, a.part, cd.exponent, ct.p);
        r.add(tag + "modular eigen columns = reduced partition characters", matches_eigen_system(a.chars, ct, es));

        const Poly cas = degree_polynomial_casimir(casimir_matrix(a.rep, a.part));
        const Poly chr = degree_polynomial_from_degrees(a.chars.degrees.d);
        r.add(tag + "degree polynomial: Casimir = characters", cas == chr, render_factored(cas));

        const Report ids = identity_suite(ct, a.chars, a.part, a.tensor, a.gram, opt.seed + 1);
        for (const auto& e : ids.entries) r.add(tag + e.name, e.pass, e.detail);

        const auto rec = table_from_frobenius(a.frob, g.order());
        r.add(tag + "Frobenius polynomial -> tensor", rec.tensor == a.tensor);
        r.add(tag + "Frobenius polynomial -> Gram", rec.gram.p == a.gram.p);
        r.add(tag + "Frobenius polynomial -> degree polynomial", rec.degree_polynomial == cas);

        const auto det = group_determinant_check(g, a.part, a.frob);
        if (det.applicable) r.add(tag + "collapsed group determinant", det.pass, det.detail);

        if (g.order() <= opt.brute_bound) {
            for (Convention c : {Convention::Partition, Convention::Ordinary}) {
                if (c == Convention::Ordinary && a.part.kind() != PartitionKind::Trivial) continue;
                const auto tc = commutator_counts(a.part, a.tensor, c);
                const auto bc = commutator_counts_brute(g, a.part, c);
                r.add(tag + "commutator counts (" + to_string(c) + "): tensor = elements", tc == bc);
            }
        }
        const auto counts = commutator_counts(a.part, a.tensor, Convention::Partition);
        const auto ps = power_sum_forms(a.rep, 2);
        bool pins = true;
        for (std::size_t i = 0; i < a.part.n(); ++i)
            for (std::size_t j = 0; j < a.part.n(); ++j) pins = pins && counts.at(i, j) == ps.coeff({i, j});
        r.add(tag + "pair counts = Tr(A_i A_j)", pins);
        if (a.part.n() <= opt.triples_max_blocks) {
            const auto tr = reconstruct_from_triples(counts, g.order(), a.part.sizes);
            r.add(tag + "triple counts -> tensor", tr.tensor == a.tensor);
            r.add(tag + "triple counts -> Frobenius polynomial", matches_frobenius(tr, a.frob));
        }
        if (a.part.kind() == PartitionKind::Rational || a.part.kind() == PartitionKind::Galois) {
            const auto fd = f_character_data(ct, a.part);
            r.add(tag + "F-characters fixed by the Galois group", fd.fixed_by_t);
            r.add(tag + "F-characters: o * block average = orbit sum", fd.block_relation);
        }
    });
}

}  // namespace

Report verify_all(const FiniteGroup& g, const ClassData& cd, const CharacterTable& ct, const VerifyOptions& opt) {
    Report r;
    std::size_t total = 0;
    for (std::size_t s : cd.sizes) total += s;
    r.add("class equation", total == g.order());
    guarded(r, "character table", [&] {
        verify_character_table(ct);
        r.add("character table orthogonality", true);
    });
    const GoodPartition triv = build_partition(g, cd, PartitionSpec::trivial());
    const StructTensor t = structure_constants(g, triv);
    const Lattice lat = normal_subgroup_lattice(t, cd.sizes);
    if (g.order() <= opt.lattice_bound && cd.n_classes <= 26) {
        const auto brute = normal_subgroups_brute(g, cd);
        const std::set<std::vector<std::size_t>> a(lat.nodes.begin(), lat.nodes.end()), b(brute.begin(), brute.end());
        r.add("normal-subgroup lattice = subset enumeration", a == b,
              std::to_string(a.size()) + " closed subsets");
    }
    std::vector<PartitionSpec> specs{PartitionSpec::trivial(), PartitionSpec::parse("rational")};
    for (const auto& s : normal_subgroup_partitions(lat, cd.n_classes)) specs.push_back(s);
    std::set<std::vector<std::vector<std::size_t>>> done;
    for (const auto& s : specs) {
        std::vector<std::vector<std::size_t>> blocks;
        try {
            blocks = build_partition(g, cd, s).blocks;
        } catch (const std::exception& e) {
            r.add(s.to_string() + ": good partition", false, e.what());
            continue;
        }
        if (!done.insert(blocks).second) continue;
        partition_checks(r, g, cd, ct, s, opt);
    }
    if (opt.mckay) {
        for (unsigned p : prime_divisors(g.order())) {
            guarded(r, "McKay p=" + std::to_string(p), [&] {
                const auto v = mckay_check(g, g.origin(), p, PartitionSpec::trivial(), opt.seed);
                r.add("McKay p=" + std::to_string(p) + ": D_G = D_N (p')", v.equal,
                      v.g.pprime.to_string() + " vs " + v.n.pprime.to_string());
                r.add("McKay p=" + std::to_string(p) + ": Galois-fixed counts agree", v.galois_agree);
            });
        }
    }
    return r;
}

}  // namespace partalg
