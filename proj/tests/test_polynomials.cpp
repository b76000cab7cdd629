#include "doctest.h"

#include <algorithm>
#include <set>

#include "partalg/polynomials.hpp"

using namespace partalg;

namespace {

struct Full {
    FiniteGroup g;
    ClassData cd;
    GoodPartition p;
    StructTensor t;
    RegularRep r;
    GramMatrix gm;
    CharacterTable ct;
    PartitionCharacters pc;
    LinearFormProduct f;
    Full(const std::string& grp, const std::string& spec)
        : g(builtin_group(grp)), cd(conjugacy_classes(g)), p(build_partition(g, cd, PartitionSpec::parse(spec))),
          t(structure_constants(g, p)), r(regular_representation(t)), gm(gram_matrix(r)),
          ct(compute_character_table(g, cd)), pc(partition_characters(ct, p, gm)), f(frobenius_polynomial(pc)) {}
};

// Class subsets (containing the identity class) whose union is closed under products.
std::set<std::vector<std::size_t>> brute_normal_subgroups(const FiniteGroup& g, const ClassData& cd) {
    std::set<std::vector<std::size_t>> out;
    const std::size_t n = cd.n_classes;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); mask += 2) {
        std::size_t size = 0;
        std::vector<bool> in(g.order(), false);
        std::vector<std::size_t> cls;
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1) {
                cls.push_back(c);
                size += cd.sizes[c];
                for (Elem x : cd.members[c]) in[x] = true;
            }
        if (g.order() % size) continue;
        bool closed = true;
        for (Elem a = 0; a < g.order() && closed; ++a)
            for (Elem b = 0; b < g.order() && closed; ++b)
                if (in[a] && in[b] && !in[g.mul(a, b)]) closed = false;
        if (closed) out.insert(cls);
    }
    return out;
}

}  // namespace

TEST_CASE("degree polynomials") {
    Full s3("Sn:3", "trivial");
    const Poly d1 = degree_polynomial_casimir(casimir_matrix(s3.r, s3.p));
    const Poly d2 = degree_polynomial_from_degrees(s3.pc.degrees.d);
    CHECK(d1 == d2);
    CHECK(render_factored(d1) == "(x-1)^2*(x-4)");

    Full z5("Zn:5", "rational");
    CHECK(render_factored(degree_polynomial_casimir(casimir_matrix(z5.r, z5.p))) == "(x-1)*(x-4)");

    for (int n : {2, 6, 9}) {
        Full zn("Zn:" + std::to_string(n), "trivial");
        CHECK(render_factored(degree_polynomial_casimir(casimir_matrix(zn.r, zn.p))) ==
              "(x-1)^" + std::to_string(n));
    }
    for (const char* grp : {"Q8", "An:4", "SL2:3", "D:10"}) {
        Full x(grp, "trivial");
        CHECK(degree_polynomial_casimir(casimir_matrix(x.r, x.p)) == degree_polynomial_from_degrees(x.pc.degrees.d));
    }
}

TEST_CASE("p-prime parts") {
    Full s3("Sn:3", "trivial");
    const Poly d = degree_polynomial_casimir(casimir_matrix(s3.r, s3.p));
    const auto two = p_prime_part(d, 2);
    CHECK(two.stripped == 1);
    CHECK(two.to_string() == "(x+1)^2");
    CHECK(two.multiplicity(1) == 2);
    const auto three = p_prime_part(d, 3);
    CHECK(three.stripped == 0);
    CHECK(three.to_string() == "(x+2)^3");
    CHECK(p_prime_part(Poly::from_roots({Rat(1), Rat(1)}), 2) == two);
}

TEST_CASE("equality up to a permutation of variables") {
    Full d8("D:8", "trivial"), q8("Q8", "trivial");
    const auto v = equal_by_permutation(d8.f, q8.f);
    CHECK(v.equal);
    REQUIRE(v.sigma.size() == 5);
    CHECK(v.sigma[0] == 0);
    // check the returned bijection directly
    std::multiset<std::pair<std::vector<std::string>, std::string>> a, b;
    for (std::size_t t = 0; t < 5; ++t) {
        std::vector<std::string> fa, fb;
        for (std::size_t i = 0; i < 5; ++i) {
            fa.push_back(d8.f.forms[t][v.sigma[i]].canonical().to_string());
            fb.push_back(q8.f.forms[t][i].canonical().to_string());
        }
        a.emplace(fa, d8.f.multiplicities[t].get_str());
        b.emplace(fb, q8.f.multiplicities[t].get_str());
    }
    CHECK(a == b);

    Full s3("Sn:3", "trivial"), z6("Zn:6", "trivial");
    CHECK_FALSE(equal_by_permutation(s3.f, z6.f).equal);

    Full z4("Zn:4", "trivial"), v4("Zn:2xZn:2", "trivial");
    CHECK_FALSE(equal_by_permutation(z4.f, v4.f).equal);

    const auto self = equal_by_permutation(s3.f, s3.f);
    CHECK(self.equal);
    CHECK(self.sigma == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("reconstruction from the Frobenius polynomial") {
    for (auto [grp, spec] : std::vector<std::pair<std::string, std::string>>{
             {"Sn:3", "trivial"}, {"Zn:2", "trivial"}, {"Zn:5", "rational"}, {"Q8", "trivial"},
             {"An:4", "rational"}, {"SL2:3", "trivial"}, {"Zn:7", "galois=2"}}) {
        CAPTURE(grp);
        CAPTURE(spec);
        Full x(grp, spec);
        const auto rec = table_from_frobenius(x.f, x.g.order());
        CHECK(rec.tensor == x.t);
        CHECK(rec.gram.p == x.gm.p);
        CHECK(rec.layout.sizes == x.p.sizes);
        CHECK(rec.degree_polynomial == degree_polynomial_from_degrees(x.pc.degrees.d));
    }
}

TEST_CASE("collapsed group determinant") {
    Full z2("Zn:2", "trivial");
    auto c = group_determinant_check(z2.g, z2.p, z2.f);
    CHECK(c.applicable);
    CHECK(c.pass);
    CHECK(c.trials == 20);

    Full s3("Sn:3", "trivial");
    CHECK(s3.f.eval({Rat(1), Rat(1), Rat(1)}).to_rational() == 0);
    CHECK(s3.f.eval({Rat(1), Rat(0), Rat(0)}).to_rational() == 1);
    CHECK(s3.f.eval({Rat(0), Rat(0), Rat(1)}).to_rational() == 4);  // det of the 3-cycle sum
    c = group_determinant_check(s3.g, s3.p, s3.f);
    CHECK(c.pass);

    for (const char* grp : {"Q8", "D:10", "An:4"}) {
        Full x(grp, "rational");
        CHECK(group_determinant_check(x.g, x.p, x.f).pass);
    }
    Full coset("Sn:3", "coset=0,2");
    CHECK_FALSE(group_determinant_check(coset.g, coset.p, coset.f).applicable);
}

TEST_CASE("normal subgroup lattice") {
    Full s3("Sn:3", "trivial");
    const auto l = normal_subgroup_lattice(s3.t, s3.cd.sizes);
    CHECK(l.sizes == std::vector<std::size_t>{1, 3, 6});
    CHECK(l.edges.size() == 2);

    Full a5("An:5", "trivial");
    CHECK(normal_subgroup_lattice(a5.t, a5.cd.sizes).sizes == std::vector<std::size_t>{1, 60});

    Full z4("Zn:4", "trivial");
    CHECK(normal_subgroup_lattice(z4.t, z4.cd.sizes).sizes == std::vector<std::size_t>{1, 2, 4});

    for (const char* grp : {"Sn:4", "D:12", "Q8", "An:4", "Zn:12", "SL2:3", "Zn:2xZn:2xZn:2"}) {
        CAPTURE(grp);
        Full x(grp, "trivial");
        const auto lat = normal_subgroup_lattice(x.t, x.cd.sizes);
        const std::set<std::vector<std::size_t>> got(lat.nodes.begin(), lat.nodes.end());
        CHECK(got == brute_normal_subgroups(x.g, x.cd));
    }
}
