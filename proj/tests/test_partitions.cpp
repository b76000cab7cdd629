#include "doctest.h"

#include "partalg/class_algebra.hpp"
#include "partalg/kernels.hpp"
#include "partalg/partitions.hpp"

using namespace partalg;

namespace {

struct Setup {
    FiniteGroup g;
    ClassData cd;
    GoodPartition p;
    StructTensor t;
    explicit Setup(const std::string& grp, const std::string& spec = "trivial")
        : g(builtin_group(grp)), cd(conjugacy_classes(g)), p(build_partition(g, cd, PartitionSpec::parse(spec))),
          t(structure_constants(g, p)) {}
};

// Counts tuples (x_1..x_r) with x_k in block idx[k] and x_1...x_r = 1.
long brute_solutions(const FiniteGroup& g, const GoodPartition& p, const std::vector<std::size_t>& idx,
                     std::size_t depth = 0, Elem acc = 0) {
    if (depth == idx.size()) return acc == 0 ? 1 : 0;
    long total = 0;
    for (Elem x : p.elements[idx[depth]]) total += brute_solutions(g, p, idx, depth + 1, g.mul(acc, x));
    return total;
}

// Class-algebra constants by multiplying every pair of class members.
std::vector<std::vector<std::vector<long>>> brute_constants(const FiniteGroup& g, const ClassData& cd) {
    const std::size_t n = cd.n_classes;
    std::vector<std::vector<std::vector<long>>> a(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (Elem x : cd.members[i])
                for (Elem y : cd.members[j]) {
                    const Elem z = g.mul(x, y);
                    const std::size_t l = cd.class_of[z];
                    if (z == cd.reps[l]) ++a[l][i][j];
                }
    return a;
}

}  // namespace

TEST_CASE("partition spec parsing") {
    CHECK(PartitionSpec::parse("trivial").kind == PartitionKind::Trivial);
    CHECK(PartitionSpec::parse("galois=1,5").residues == std::vector<long long>{1, 5});
    CHECK(PartitionSpec::parse("custom=0;1,2;3").blocks.size() == 3);
    CHECK(PartitionSpec::parse("coset=0,2").to_string() == "coset=0,2");
    CHECK_THROWS_AS(PartitionSpec::parse("bogus"), InputError);
    CHECK_THROWS_AS(PartitionSpec::parse("galois=x"), InputError);
}

TEST_CASE("partition kinds on small groups") {
    const FiniteGroup z5 = builtin_group("Zn:5");
    const ClassData z5c = conjugacy_classes(z5);
    const GoodPartition rat = build_partition(z5, z5c, PartitionSpec::parse("rational"));
    CHECK(rat.sizes == std::vector<std::size_t>{1, 4});
    CHECK(rat.identity_coeffs == std::vector<Rat>{1, 0});
    const StructTensor zt = structure_constants(z5, rat);
    CHECK(zt.at(0, 1, 1) == 4);
    CHECK(zt.at(1, 1, 1) == 3);

    const FiniteGroup s3 = builtin_group("Sn:3");
    const ClassData s3c = conjugacy_classes(s3);
    const GoodPartition triv = build_partition(s3, s3c, PartitionSpec::trivial());
    CHECK(triv.sizes == std::vector<std::size_t>{1, 3, 2});
    const GoodPartition coset = build_partition(s3, s3c, PartitionSpec::parse("coset=0,2"));
    CHECK(coset.sizes == std::vector<std::size_t>{3, 3});
    CHECK(coset.identity_coeffs == std::vector<Rat>{Rat(1, 3), 0});
    const GoodPartition sub = build_partition(s3, s3c, PartitionSpec::parse("subgroup=0,2"));
    CHECK(sub.sizes == std::vector<std::size_t>{1, 2});

    // galois residues are closed to the group they generate; non-units are rejected
    CHECK(build_partition(z5, z5c, PartitionSpec::parse("galois=2")).n() == 2);
    CHECK(build_partition(z5, z5c, PartitionSpec::parse("galois=4")).n() == 3);
    CHECK_THROWS_AS(build_partition(s3, s3c, PartitionSpec::parse("galois=2")), InputError);
    CHECK_THROWS_AS(build_partition(s3, s3c, PartitionSpec::parse("coset=0,1")), InputError);
}

TEST_CASE("validation reports a witness for a bad grouping") {
    const FiniteGroup s3 = builtin_group("Sn:3");
    const ClassData cd = conjugacy_classes(s3);
    const GoodPartition ok = make_blocks(s3, cd, PartitionSpec::trivial());
    CHECK(validate_good_partition(ok, s3).ok());
    const GoodPartition bad = make_blocks(s3, cd, PartitionSpec::parse("custom=0,1;2"));
    const ValidationReport r = validate_good_partition(bad, s3);
    CHECK(r.inverse_closed);
    CHECK_FALSE(r.product_closed);
    CHECK_FALSE(r.product_witness.empty());
    CHECK_THROWS_AS(build_partition(s3, cd, PartitionSpec::parse("custom=0,1;2")), InputError);
}

TEST_CASE("structure constants of S3 and Z/2") {
    Setup s("Sn:3");
    CHECK(s.t.at(0, 1, 1) == 3);
    CHECK(s.t.at(2, 1, 1) == 3);
    CHECK(s.t.at(1, 1, 2) == 2);
    CHECK(s.t.at(0, 2, 2) == 2);
    CHECK(s.t.at(2, 2, 2) == 1);
    CHECK(s.t.at(1, 1, 1) == 0);
    Setup z2("Zn:2");
    CHECK(z2.t.at(0, 1, 1) == 1);
    CHECK(structure_constants(s.g, s.p, false) == s.t);
}

TEST_CASE("trivial-partition constants match the element-pair oracle") {
    for (const char* grp : {"Sn:4", "Q8", "D:10", "SL2:3", "An:5"}) {
        Setup s(grp);
        const auto a = brute_constants(s.g, s.cd);
        for (std::size_t l = 0; l < s.t.n; ++l)
            for (std::size_t i = 0; i < s.t.n; ++i)
                for (std::size_t j = 0; j < s.t.n; ++j) CHECK(s.t.at(l, i, j) == a[l][i][j]);
    }
}

TEST_CASE("solution counts match brute force") {
    Setup s("Sn:3");
    CHECK(solution_count(s.p, s.t, {1, 1, 2}) == 6);
    CHECK(solution_count(s.p, s.t, {1, 1, 1, 1}) == 27);
    for (const char* grp : {"Sn:3", "Q8", "D:8", "An:4"}) {
        for (const char* spec : {"trivial", "rational"}) {
            Setup u(grp, spec);
            const std::size_t n = u.t.n;
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(solution_count(u.p, u.t, {i, u.p.inverse_block[i]}) == static_cast<long>(u.p.sizes[i]));
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        const Int c3 = solution_count(u.p, u.t, {i, j, k});
                        CHECK(c3 == brute_solutions(u.g, u.p, {i, j, k}));
                        CHECK(c3 == solution_count(u.p, u.t, {j, k, i}));
                        CHECK(c3 == solution_count(u.p, u.t, {u.p.inverse_block[i], u.p.inverse_block[j],
                                                              u.p.inverse_block[k]}));
                        for (std::size_t m = 0; m < n; ++m) {
                            const Int c4 = solution_count(u.p, u.t, {i, j, k, m});
                            CHECK(c4 == brute_solutions(u.g, u.p, {i, j, k, m}));
                            CHECK(c4 == solution_count(u.p, u.t, {k, j, i, m}));
                        }
                        // summing out the last index gives the product of sizes
                        Int total = 0;
                        for (std::size_t m = 0; m < n; ++m) total += solution_count(u.p, u.t, {i, j, m});
                        CHECK(total == static_cast<long>(u.p.sizes[i] * u.p.sizes[j]));
                    }
            }
        }
    }
}

TEST_CASE("algebra identity") {
    Setup s("Sn:3");
    CHECK(*algebra_identity(s.t) == std::vector<Rat>{1, 0, 0});
}

TEST_CASE("regular representation, Gram matrix and Casimir") {
    Setup s("Sn:3");
    const RegularRep r = regular_representation(s.t);
    IntMatrix a2(3, 3);
    const long v[9] = {0, 3, 0, 1, 0, 2, 0, 3, 0};
    for (int k = 0; k < 9; ++k) a2(k / 3, k % 3) = v[k];
    CHECK(r.A[1] == a2);
    CHECK(r.A[0] == IntMatrix::identity(3));
    const GramMatrix gm = gram_matrix(r);
    CHECK(gm.p(0, 0) == 3);
    CHECK(gm.p(1, 1) == 18);
    CHECK(gm.p(2, 2) == 9);
    CHECK(gm.determinant != 0);
    CHECK(char_poly_of_element(r, {0, 1, 0}) == Poly({0, -9, 0, 1}));
    CHECK(char_poly_of_element(r, {1, 0, 0}) == Poly::from_roots({1, 1, 1}));
    CHECK(char_poly_of_element(r, {0, 0, 0}) == Poly::monomial(3));
    const Casimir k = casimir_matrix(r, s.p);
    CHECK(k.K.trace() == Rat(9, 4));
    CHECK(k.charpoly == Poly::from_roots({1, 1, Rat(1, 4)}));
    // Cayley-Hamilton on a generic element
    const Poly cp = char_poly_of_element(r, {2, -1, 3});
    RatMatrix gen(3, 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) gen(a, b) = 2 * r.A[0](a, b) - r.A[1](a, b) + 3 * r.A[2](a, b);
    CHECK(poly_eval_matrix(cp, gen) == RatMatrix(3, 3));

    Setup z2("Zn:2");
    const GramMatrix g2 = gram_matrix(regular_representation(z2.t));
    CHECK(g2.determinant == 4);
    CHECK(casimir_matrix(regular_representation(z2.t), z2.p).K == RatMatrix::identity(2));

    Setup z5("Zn:5", "rational");
    const RegularRep r5 = regular_representation(z5.t);
    const GramMatrix g5 = gram_matrix(r5);
    CHECK(g5.p(0, 0) == 2);
    CHECK(g5.p(1, 1) == 17);
    CHECK(g5.p(0, 1) == 3);
    CHECK(g5.determinant == 25);
    CHECK(casimir_matrix(r5, z5.p).charpoly == Poly::from_roots({1, Rat(1, 4)}));
}
