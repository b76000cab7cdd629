#include "doctest.h"

#include <functional>
#include <map>
#include <random>

#include "partalg/commutators.hpp"
#include "partalg/kernels.hpp"

using namespace partalg;

namespace {

struct Full {
    FiniteGroup g;
    ClassData cd;
    GoodPartition p;
    StructTensor t;
    RegularRep r;
    GramMatrix gm;
    Full(const std::string& grp, const std::string& spec)
        : g(builtin_group(grp)), cd(conjugacy_classes(g)), p(build_partition(g, cd, PartitionSpec::parse(spec))),
          t(structure_constants(g, p)), r(regular_representation(t)), gm(gram_matrix(r)) {}
};

// (-1)^l sigma_l = sum over partitions lambda of l of eps_lambda prod s_i^{m_i} / z_lambda
Rat sigma_by_partitions(const std::vector<Rat>& s, unsigned l) {
    Rat total = 0;
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned maxp) {
        if (rest == 0) {
            std::map<unsigned, unsigned> m;
            for (unsigned q : parts) ++m[q];
            Rat term = parts.size() % 2 ? Rat(-1) : Rat(1);
            Int z = 1;
            for (auto [q, mult] : m) {
                for (unsigned k = 0; k < mult; ++k) term *= s[q - 1];
                for (unsigned k = 1; k <= mult; ++k) z *= q * k;
            }
            total += term / Rat(z);
            return;
        }
        for (unsigned q = std::min(rest, maxp); q >= 1; --q) {
            parts.push_back(q);
            rec(rest - q, q);
            parts.pop_back();
        }
    };
    rec(l, l);
    return l % 2 ? Rat(-total) : total;
}

}  // namespace

TEST_CASE("commutator counts: pinned values") {
    Full s3("Sn:3", "trivial");
    const auto o = commutator_counts(s3.p, s3.t, Convention::Ordinary);
    CHECK(o.weight == std::vector<Rat>{18, 0, 9});  // identity, transpositions, 3-cycles
    const auto c = kernels::commutator_multiplicity(s3.g);
    CHECK(c[0] == 18);
    CHECK(c[s3.cd.members[2][0]] == 9);

    Full z2("Zn:2", "trivial");
    const auto pc = commutator_counts(z2.p, z2.t, Convention::Partition);
    CHECK(pc.p1 == std::vector<Int>{2, 0});
    CHECK(pc.at(0, 0) == 2);
    CHECK(pc.at(1, 1) == 2);
    CHECK(pc.at(0, 1) == 0);
    CHECK_THROWS_AS(commutator_counts(Full("Zn:5", "rational").p, Full("Zn:5", "rational").t, Convention::Ordinary),
                    InputError);
    CHECK_THROWS_AS(parse_convention("weird"), InputError);
}

TEST_CASE("commutator counts: tensor route equals brute force and traces") {
    for (auto [grp, spec] : std::vector<std::pair<std::string, std::string>>{
             {"Sn:3", "trivial"}, {"Sn:3", "coset=0,2"}, {"Q8", "trivial"}, {"Q8", "rational"}, {"D:10", "galois=3"},
             {"An:4", "trivial"}, {"An:4", "subgroup=0,1"}, {"SL2:3", "trivial"}, {"Zn:6", "rational"},
             {"Sn:4", "trivial"}}) {
        CAPTURE(grp);
        CAPTURE(spec);
        Full x(grp, spec);
        const auto ps = power_sum_forms(x.r, 3);
        for (Convention c : {Convention::Partition, Convention::Ordinary}) {
            if (c == Convention::Ordinary && x.p.kind() != PartitionKind::Trivial) continue;
            const auto tensor = commutator_counts(x.p, x.t, c);
            const auto brute = commutator_counts_brute(x.g, x.p, c);
            CHECK(tensor == brute);
            CHECK(tensor.weight == brute.weight);
            CHECK(brute == commutator_counts_brute(x.g, x.p, c, 3, false));
            const Int k = trace_constant(c, x.g.order());
            const std::size_t n = x.p.n();
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(tensor.p1[i] == k * ps.coeff({i}));
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK(tensor.at(i, j) == k * ps.coeff({i, j}));
                    if (c == Convention::Partition) CHECK(tensor.at(i, j) == x.gm.p(i, j));
                    for (std::size_t l = 0; l < n; ++l) CHECK(tensor.at(i, j, l) == k * ps.coeff({i, j, l}));
                }
            }
        }
    }
}

TEST_CASE("ordinary closed form per class equals element-level commutator multiplicity") {
    for (const char* grp : {"Sn:3", "D:8", "Q8", "An:4", "SL2:3", "Sn:4", "An:5", "Zn:2xZn:2xZn:3"}) {
        CAPTURE(grp);
        Full x(grp, "trivial");
        const auto o = commutator_counts(x.p, x.t, Convention::Ordinary, 1);
        const auto c = kernels::serial::commutator_multiplicity(x.g);
        for (std::size_t j = 0; j < x.cd.n_classes; ++j)
            for (Elem e : x.cd.members[j]) CHECK(o.weight[j] == Rat(static_cast<unsigned long>(c[e])));
    }
}

TEST_CASE("power sums") {
    Full s3("Sn:3", "trivial");
    const auto ps = power_sum_forms(s3.r, 4);
    CHECK(ps.coeff({1, 1}) == 18);
    CHECK(ps.coeff({1, 1, 2}) == 36);
    CHECK(ps.coeff({2, 1, 1}) == 36);
    CHECK(ps.coeff({0}) == 3);
    // s_r at x equals the trace of (sum x_i A_i)^r
    const std::vector<Rat> x{Rat(2), Rat(-1), Rat(3)};
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) m(a, b) += s3.r.A[i](a, b) * x[i].get_num();
    }
    IntMatrix pw = IntMatrix::identity(3);
    for (unsigned r = 1; r <= 4; ++r) {
        pw = pw * m;
        CHECK(ps.eval(r, x) == Rat(pw.trace()));
    }
}

TEST_CASE("Newton identities") {
    CHECK(newton_elementary({Rat(5), Rat(13)}) == std::vector<Rat>{5, 6});
    // eigenvalues (3, -3, 0) of the transposition class sum in S3
    const auto sig = newton_elementary({Rat(0), Rat(18), Rat(0)});
    CHECK(sig == std::vector<Rat>{0, -9, 0});
    Full s3("Sn:3", "trivial");
    const Poly cp = char_poly_of_element(s3.r, {Rat(0), Rat(1), Rat(0)});
    CHECK(cp.coeff(1) == sig[1]);  // x^3 - sigma_1 x^2 + sigma_2 x - sigma_3
    CHECK(cp.coeff(2) == -sig[0]);
    CHECK(cp.coeff(0) == -sig[2]);

    CHECK(newton_elementary({Rat(4), Rat(4), Rat(4), Rat(4)}) == std::vector<Rat>{4, 6, 4, 1});

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> s;
        for (int k = 0; k < 6; ++k) s.push_back(Rat(d(rng)) / Rat(1 + std::abs(d(rng))));
        for (auto& v : s) v.canonicalize();
        const auto sigma = newton_elementary(s);
        for (unsigned l = 1; l <= 6; ++l) CHECK(sigma[l - 1] == sigma_by_partitions(s, l));
        CHECK(newton_power_sums(sigma) == s);
        CHECK(newton_elementary(newton_power_sums(s)) == s);
    }
}

TEST_CASE("Frobenius polynomial from the triple counts") {
    for (auto [grp, spec] : std::vector<std::pair<std::string, std::string>>{
             {"Sn:3", "trivial"}, {"Zn:2", "trivial"}, {"Zn:5", "rational"}, {"Q8", "trivial"}, {"An:4", "trivial"},
             {"D:10", "galois=3"}, {"Sn:3", "coset=0,2"}, {"SL2:3", "rational"}, {"Zn:7", "trivial"}}) {
        CAPTURE(grp);
        CAPTURE(spec);
        Full x(grp, spec);
        const auto ct = compute_character_table(x.g, x.cd);
        const auto f = frobenius_polynomial(partition_characters(ct, x.p, x.gm));
        for (Convention c : {Convention::Partition, Convention::Ordinary}) {
            if (c == Convention::Ordinary && x.p.kind() != PartitionKind::Trivial) continue;
            const auto rec = reconstruct_from_triples(commutator_counts(x.p, x.t, c), x.g.order(), x.p.sizes);
            CHECK(rec.tensor == x.t);
            CHECK(matches_frobenius(rec, f));
        }
    }
    Full z2("Zn:2", "trivial");
    const auto rec = reconstruct_from_triples(commutator_counts(z2.p, z2.t, Convention::Partition), 2, {1, 1});
    CHECK(rec.prime == 3);
    CHECK(rec.columns(0, 1) == 1);
    CHECK(rec.columns(1, 1) == 2);  // -1 mod 3
    // a perturbed count is rejected
    Full s3("Sn:3", "trivial");
    auto bad = commutator_counts(s3.p, s3.t, Convention::Partition);
    bad.p3[0] += 1;
    CHECK_THROWS_AS(reconstruct_from_triples(bad, 6, s3.p.sizes), VerificationError);
    // mismatch against a different product
    Full z6("Zn:6", "trivial"), s3b("Sn:3", "trivial");
    const auto ct6 = compute_character_table(z6.g, z6.cd);
    const auto rec3 = reconstruct_from_triples(commutator_counts(s3b.p, s3b.t, Convention::Partition), 6, s3b.p.sizes);
    CHECK_FALSE(matches_frobenius(rec3, frobenius_polynomial(partition_characters(ct6, z6.p, z6.gm))));
}
