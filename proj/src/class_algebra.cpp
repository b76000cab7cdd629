#include "partalg/class_algebra.hpp"

namespace partalg {

RegularRep regular_representation(const StructTensor& t) {
    const std::size_t n = t.n;
    RegularRep r;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix m(n, n);
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i) m(l, i) = static_cast<long>(t.at(l, i, j));
        r.A.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(r.A[i] * r.A[j] == r.A[j] * r.A[i]))
                throw VerificationError("regular representation: A_" + std::to_string(i) + " and A_" +
                                        std::to_string(j) + " do not commute");
    return r;
}

GramMatrix gram_matrix(const RegularRep& r) {
    const std::size_t n = r.n();
    GramMatrix g;
    g.p = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g.p1.push_back(r.A[i].trace());
        for (std::size_t j = i; j < n; ++j) {
            // Tr(A_i A_j) without forming the product
            Int tr = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) tr += r.A[i](a, b) * r.A[j](b, a);
            g.p(i, j) = tr;
            g.p(j, i) = tr;
        }
    }
    g.determinant = bareiss_determinant(g.p);
    g.semisimple = g.determinant != 0;
    if (!g.semisimple) throw VerificationError("Gram determinant vanishes: the algebra is not semisimple");
    return g;
}

Poly char_poly_of_element(const RegularRep& r, const std::vector<Rat>& coeffs) {
    const std::size_t n = r.n();
    if (coeffs.size() != n) throw std::invalid_argument("char_poly_of_element: coefficient length");
    RatMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (coeffs[k] == 0) continue;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) m(a, b) += coeffs[k] * r.A[k](a, b);
    }
    return charpoly(m);
}

Casimir casimir_matrix(const RegularRep& r, const GoodPartition& p) {
    const std::size_t n = r.n();
    Casimir c;
    c.K = RatMatrix(n, n);
    const Rat ell(static_cast<unsigned long>(p.group_order));
    for (std::size_t i = 0; i < n; ++i) {
        const IntMatrix prod = r.A[i] * r.A[p.inverse_block[i]];
        const Rat w = 1 / (Rat(static_cast<unsigned long>(p.sizes[i])) * ell);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (prod(a, b) != 0) c.K(a, b) += w * Rat(prod(a, b));
    }
    c.charpoly = charpoly(c.K);
    return c;
}

}  // namespace partalg
