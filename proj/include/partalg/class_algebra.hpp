#pragma once

// Regular representation of a partition algebra, Gram matrix, characteristic polynomials
// of elements and the generalized Casimir matrix.

#include <vector>

#include "partalg/exact.hpp"
#include "partalg/partitions.hpp"

namespace partalg {

struct RegularRep {
    std::vector<IntMatrix> A;  // (A_j)_{l,i} = a_{lij}

    std::size_t n() const { return A.size(); }
};

/// Throws VerificationError when the matrices fail to commute.
RegularRep regular_representation(const StructTensor& t);

struct GramMatrix {
    IntMatrix p;  // p_{ij} = Tr(A_i A_j)
    Int determinant;
    std::vector<Int> p1;  // Tr(A_i)
    bool semisimple = false;
};

/// Throws VerificationError when the determinant vanishes (a good partition always
/// yields a semisimple algebra in characteristic zero).
GramMatrix gram_matrix(const RegularRep& r);

/// det(x I - sum_i coeffs_i A_i).
Poly char_poly_of_element(const RegularRep& r, const std::vector<Rat>& coeffs);

struct Casimir {
    RatMatrix K;  // sum_i A_i A_{i'} / (l_i l)
    Poly charpoly;
};

Casimir casimir_matrix(const RegularRep& r, const GoodPartition& p);

}  // namespace partalg
