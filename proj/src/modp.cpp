#include "partalg/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace partalg::modp {

Field::Field(u64 p) : p_(p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
}

u64 Field::pow(u64 a, u64 e) const {
    u64 r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Field::inv(u64 a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p_ - 2);
}

u64 Field::from(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(p_) : r);
}

u64 Field::from(const Int& v) const {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return r.get_ui();
}

u64 Field::from(const Rat& v) const {
    const u64 den = from(v.get_den());
    if (den == 0) throw std::domain_error("denominator divisible by p");
    return mul(from(v.get_num()), inv(den));
}

long long Field::symmetric(u64 a) const {
    a %= p_;
    return a > p_ / 2 ? static_cast<long long>(a) - static_cast<long long>(p_) : static_cast<long long>(a);
}

u64 Field::primitive_root_of_unity(u64 e) const {
    if ((p_ - 1) % e != 0) throw std::invalid_argument("e does not divide p-1");
    std::vector<u64> primes;
    u64 m = e;
    for (u64 q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            primes.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) primes.push_back(m);
    for (u64 g = 2; g < p_ || e == 1; ++g) {
        u64 cand = pow(g % p_, (p_ - 1) / e);
        if (e == 1) return 1;
        bool ok = true;
        for (u64 q : primes)
            if (pow(cand, e / q) == 1) { ok = false; break; }
        if (ok) return cand;
    }
    throw std::runtime_error("no root of unity found");
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 prime_congruent_one(u64 modulus, u64 lower_bound) {
    if (modulus == 0) throw std::invalid_argument("modulus must be positive");
    u64 q = (lower_bound / modulus) * modulus + 1;
    if (q <= lower_bound) q += modulus;
    while (!is_prime(q)) q += modulus;
    return q;
}

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_mul(const Field& f, const PolyP& a, const PolyP& b) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

PolyP poly_sub(const Field& f, const PolyP& a, const PolyP& b) {
    PolyP c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.sub(c[i], b[i]);
    trim(c);
    return c;
}

PolyP poly_divmod(const Field& f, const PolyP& a, const PolyP& b, PolyP* q) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    PolyP r = a;
    trim(r);
    const u64 inv_lead = f.inv(b.back());
    PolyP quot;
    if (r.size() >= b.size()) quot.assign(r.size() - b.size() + 1, 0);
    while (r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const u64 factor = f.mul(r.back(), inv_lead);
        quot[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(factor, b[i]));
        trim(r);
    }
    if (q) {
        trim(quot);
        *q = std::move(quot);
    }
    return r;
}

PolyP poly_gcd(const Field& f, PolyP a, PolyP b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = poly_divmod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const u64 inv_lead = f.inv(a.back());
        for (u64& x : a) x = f.mul(x, inv_lead);
    }
    return a;
}

PolyP poly_powmod(const Field& f, const PolyP& base, u64 e, const PolyP& mod) {
    PolyP result{1};
    result = poly_divmod(f, result, mod);
    PolyP b = poly_divmod(f, base, mod);
    while (e) {
        if (e & 1) result = poly_divmod(f, poly_mul(f, result, b), mod);
        b = poly_divmod(f, poly_mul(f, b, b), mod);
        e >>= 1;
    }
    return result;
}

u64 poly_eval(const Field& f, const PolyP& a, u64 x) {
    u64 acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

namespace {

// g is monic, squarefree, a product of distinct linear factors.
void split_linear(const Field& f, const PolyP& g, std::mt19937_64& rng, std::vector<u64>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
        return;
    }
    if (f.p() == 2) {
        for (u64 x = 0; x < 2; ++x)
            if (poly_eval(f, g, x) == 0) out.push_back(x);
        return;
    }
    std::uniform_int_distribution<u64> dist(0, f.p() - 1);
    for (;;) {
        const PolyP shifted{dist(rng), 1};
        PolyP h = poly_powmod(f, shifted, (f.p() - 1) / 2, g);
        h = poly_sub(f, h, PolyP{1});
        PolyP d = poly_gcd(f, g, h);
        if (d.size() > 1 && d.size() < g.size()) {
            PolyP q;
            poly_divmod(f, g, d, &q);
            split_linear(f, d, rng, out);
            split_linear(f, poly_gcd(f, q, q), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<u64> distinct_roots(const Field& f, const PolyP& a, std::mt19937_64& rng) {
    PolyP g = a;
    trim(g);
    if (g.size() <= 1) return {};
    const u64 inv_lead = f.inv(g.back());
    for (u64& x : g) x = f.mul(x, inv_lead);
    // gcd(a, x^p - x) isolates the product of the distinct linear factors
    PolyP xp = poly_powmod(f, PolyP{0, 1}, f.p(), g);
    PolyP lin = poly_gcd(f, g, poly_sub(f, xp, PolyP{0, 1}));
    std::vector<u64> roots;
    split_linear(f, lin, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

unsigned root_multiplicity(const Field& f, PolyP a, u64 r) {
    trim(a);
    unsigned m = 0;
    const PolyP lin{f.neg(r), 1};
    while (!a.empty()) {
        PolyP q;
        PolyP rem = poly_divmod(f, a, lin, &q);
        if (!rem.empty()) break;
        ++m;
        a = std::move(q);
    }
    return m;
}

MatP matmul(const Field& f, const MatP& a, const MatP& b) {
    MatP out(a.rows(), b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const u64 x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
        }
    return out;
}

PolyP charpoly(const Field& f, MatP a) {
    const std::size_t n = a.rows();
    // similarity reduction to upper Hessenberg form
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && a(piv, m - 1) == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(m, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, piv), a(i, m));
        }
        const u64 inv_p = f.inv(a(m, m - 1));
        for (std::size_t i = m + 1; i < n; ++i) {
            const u64 u = f.mul(a(i, m - 1), inv_p);
            if (u == 0) continue;
            for (std::size_t j = 0; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(u, a(m, j)));
            for (std::size_t r = 0; r < n; ++r) a(r, m) = f.add(a(r, m), f.mul(u, a(r, i)));
        }
    }
    std::vector<PolyP> p(n + 1);
    p[0] = PolyP{1};
    for (std::size_t k = 1; k <= n; ++k) {
        // (x - h_kk) p_{k-1}
        PolyP cur = poly_mul(f, PolyP{f.neg(a(k - 1, k - 1)), 1}, p[k - 1]);
        u64 prod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod = f.mul(prod, a(i, i - 1));
            const u64 coef = f.mul(a(i - 1, k - 1), prod);
            if (coef != 0) {
                PolyP term = p[i - 1];
                for (u64& x : term) x = f.mul(x, coef);
                cur = poly_sub(f, cur, term);
            }
        }
        trim(cur);
        p[k] = std::move(cur);
    }
    return p[n];
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, MatP& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        const u64 inv = f.inv(a(row, col));
        for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            const u64 factor = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

MatP kernel(const Field& f, MatP a) {
    const std::vector<std::size_t> pivots = rref(f, a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    MatP basis(a.cols(), free_cols.size(), 0);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = f.neg(a(r, fc));
    }
    return basis;
}

std::size_t rank(const Field& f, MatP a) { return rref(f, a).size(); }

u64 determinant(const Field& f, MatP a) {
    const std::size_t n = a.rows();
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = f.neg(det);
        }
        det = f.mul(det, a(col, col));
        const u64 inv = f.inv(a(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            const u64 factor = f.mul(a(i, col), inv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(col, j)));
        }
    }
    return det;
}

std::optional<MatP> solve(const Field& f, MatP a, MatP b) {
    const std::size_t n = a.rows();
    MatP aug(n, n + b.cols(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    const auto pivots = rref(f, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    MatP x(n, b.cols(), 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
    return x;
}

}  // namespace partalg::modp
