#include "partalg/exact.hpp"

#include <algorithm>
#include <sstream>

namespace partalg {

Poly Poly::monomial(std::size_t degree, const Rat& coeff) {
    std::vector<Rat> c(degree + 1, Rat(0));
    c[degree] = coeff;
    return Poly(std::move(c));
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
    Poly acc(std::vector<Rat>{Rat(1)});
    for (const Rat& r : roots) acc = acc * Poly(std::vector<Rat>{-r, Rat(1)});
    return acc;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.get_den() == 1; });
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    std::vector<Rat> c(c_);
    const Rat lead = c_.back();
    for (Rat& x : c) x /= lead;
    return Poly(std::move(c));
}

Poly Poly::reversed() const {
    std::vector<Rat> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Int> Poly::integer_roots() const {
    std::vector<Int> roots;
    if (!is_integral() || c_.empty()) return roots;
    Poly p = *this;
    while (p.degree() > 0 && p.coeff(0) == 0) {
        roots.push_back(0);
        p = Poly(std::vector<Rat>(p.c_.begin() + 1, p.c_.end()));
    }
    if (p.degree() <= 0) return roots;
    Int c0 = abs(p.coeff(0).get_num());
    // divisors of c0 are candidate roots
    std::vector<Int> cands;
    if (c0.fits_ulong_p()) {
        unsigned long v = c0.get_ui();
        for (unsigned long d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                cands.emplace_back(d);
                if (d * d != v) cands.emplace_back(v / d);
            }
    }
    std::sort(cands.begin(), cands.end());
    for (const Int& d : cands) {
        for (int sign : {1, -1}) {
            Rat r(d * sign);
            while (p.degree() > 0 && p.eval(r) == 0) {
                roots.push_back(r.get_num());
                // synthetic division by (x - r)
                std::vector<Rat> q(p.c_.size() - 1);
                Rat carry(0);
                for (std::size_t k = p.c_.size(); k-- > 1;) {
                    carry = p.c_[k] + carry * r;
                    q[k - 1] = carry;
                }
                p = Poly(std::move(q));
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return Poly(std::move(c));
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k].get_str();
        if (k == 1) os << '*' << var;
        if (k > 1) os << '*' << var << '^' << k;
    }
    return os.str();
}

Int bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// Clears denominators row-free: returns integer matrix B and D with m = B / D.
IntMatrix clear_denominators(const RatMatrix& m, Int& denom) {
    denom = 1;
    for (const Rat& x : m.data()) denom = lcm(denom, x.get_den());
    IntMatrix b(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat scaled = m(i, j) * denom;
            b(i, j) = scaled.get_num();
        }
    return b;
}

}  // namespace

Int lcm(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Rat determinant(const RatMatrix& m) {
    Int d;
    IntMatrix b = clear_denominators(m, d);
    Rat det(bareiss_determinant(std::move(b)));
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), m.rows());
    det /= Rat(scale);
    det.canonicalize();
    return det;
}

RatMatrix solve(const RatMatrix& m, const RatMatrix& b) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t k = b.cols();
    RatMatrix a(n, n + k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        for (std::size_t j = 0; j < k; ++j) a(i, n + j) = b(i, j);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw VerificationError("solve: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n + k; ++j) std::swap(a(piv, j), a(col, j));
        const Rat inv = 1 / a(col, col);
        for (std::size_t j = col; j < n + k; ++j) a(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rat f = a(i, col);
            for (std::size_t j = col; j < n + k; ++j) a(i, j) -= f * a(col, j);
        }
    }
    RatMatrix x(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) x(i, j) = a(i, n + j);
    return x;
}

RatMatrix inverse(const RatMatrix& m) { return solve(m, RatMatrix::identity(m.rows())); }

Poly charpoly(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("charpoly of non-square matrix");
    // c[n] = 1; M_1 = I; c_{n-k} = -tr(A M_k) / k; M_{k+1} = A M_k + c_{n-k} I
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = m * mk;
        Int tr = -am.trace();
        mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), k);
        c[n - k] = tr;
        if (k < n) {
            for (std::size_t i = 0; i < n; ++i) am(i, i) += tr;
            mk = std::move(am);
        }
    }
    std::vector<Rat> rc(c.begin(), c.end());
    return Poly(std::move(rc));
}

Poly charpoly(const RatMatrix& m) {
    Int d;
    IntMatrix b = clear_denominators(m, d);
    Poly pb = charpoly(b);
    // det(xI - B/D) = D^{-n} det(D x I - B) = D^{-n} pb(D x)
    const std::size_t n = m.rows();
    std::vector<Rat> c(n + 1);
    Int dpow = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        c[k] = pb.coeff(k) * dpow;
        dpow *= d;
    }
    Int dn;
    mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), n);
    for (Rat& x : c) {
        x /= Rat(dn);
        x.canonicalize();
    }
    return Poly(std::move(c));
}

}  // namespace partalg
