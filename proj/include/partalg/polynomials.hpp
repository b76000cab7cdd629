#pragma once

// Frobenius polynomial as a product of linear forms, degree polynomial by two routes,
// p'-parts, equality up to a permutation of variables, reconstruction of the tensor
// from the forms, the collapsed group-determinant check and the normal-subgroup lattice.

#include <cstdint>
#include <string>
#include <vector>

#include "partalg/characters.hpp"
#include "partalg/class_algebra.hpp"
#include "partalg/modp.hpp"

namespace partalg {

/// prod_t gamma_t(x)^{m_t}, gamma_t(x) = sum_i forms[t][i] x_i. Never expanded.
struct LinearFormProduct {
    std::vector<std::vector<Cyclotomic>> forms;
    std::vector<Int> multiplicities;

    std::size_t n_vars() const { return forms.empty() ? 0 : forms[0].size(); }
    Cyclotomic eval_form(std::size_t t, const std::vector<Rat>& x) const;
    Cyclotomic eval(const std::vector<Rat>& x) const;
    std::string to_string() const;
};

/// Forms are the partition-character columns, multiplicities d_t = chi_t(1) e_t.
LinearFormProduct frobenius_polynomial(const PartitionCharacters& pc);

/// Reversed, monic characteristic polynomial of the Casimir matrix.
Poly degree_polynomial_casimir(const Casimir& c);
Poly degree_polynomial_from_degrees(const std::vector<Int>& d);

/// "(x-1)^2*(x-4)" when every root is an integer, otherwise the expanded form.
std::string render_factored(const Poly& p);

struct PPrimePart {
    modp::u64 p = 0;
    unsigned stripped = 0;   // power of x removed
    modp::PolyP reduced;     // monic-free reduction, nonzero constant term

    bool operator==(const PPrimePart& o) const { return p == o.p && reduced == o.reduced; }
    /// Factored over Z/p, e.g. "(x+1)^4"; roots shown as x + c with 0 <= c < p.
    std::string to_string() const;
    /// Multiplicity of (x - r).
    unsigned multiplicity(modp::u64 r) const;
};

/// Integer polynomial reduced mod p with the maximal power of x stripped.
PPrimePart p_prime_part(const Poly& d, modp::u64 p);

struct PermutationVerdict {
    bool equal = false;
    std::vector<std::size_t> sigma;  // variable i of the second product maps to sigma[i] of the first
    std::string reason;
};

/// Search for a variable bijection (fixing the identity variable) that carries the
/// multiset of (form, multiplicity) pairs of `h` onto that of `f`.
PermutationVerdict equal_by_permutation(const LinearFormProduct& f, const LinearFormProduct& h);

struct FrobeniusReconstruction {
    StructTensor tensor;
    GoodPartition layout;  // sizes, inverse map and order only
    GramMatrix gram;
    Poly degree_polynomial;
};

/// Solves lambda_i lambda_j = sum_l a_{lij} lambda_l for the tensor (mod p, lifted, then
/// verified exactly) and rebuilds Gram matrix and degree polynomial from it.
FrobeniusReconstruction table_from_frobenius(const LinearFormProduct& f, std::size_t group_order);

struct DeterminantCheck {
    bool applicable = false;
    bool pass = false;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string detail;
};

/// Compares det(x_{PQ^-1}) with prod gamma_t(x)^{m_t} at random block-constant points
/// drawn from [-9, 9]. Needs order <= 60, full cover and a singleton identity block.
DeterminantCheck group_determinant_check(const FiniteGroup& g, const GoodPartition& p, const LinearFormProduct& f,
                                         std::size_t trials = 20, std::uint64_t seed = 20240607);

struct Lattice {
    std::vector<std::vector<std::size_t>> nodes;  // class lists, sorted by size then classes
    std::vector<std::size_t> sizes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (smaller, covering larger)
};

/// Closed class subsets of the trivial-partition tensor: a_{gab} = 0 whenever a, b lie
/// in the subset and g does not.
Lattice normal_subgroup_lattice(const StructTensor& t, const std::vector<std::size_t>& class_sizes);

/// Element-level oracle: class unions containing the identity that are closed under
/// multiplication (sorted class lists). Exponential in the number of classes.
std::vector<std::vector<std::size_t>> normal_subgroups_brute(const FiniteGroup& g, const ClassData& cd);

}  // namespace partalg
