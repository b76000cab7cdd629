#include "partalg/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace partalg {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<long long>& cyclotomic_polynomial(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<long long>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (unsigned d : divisors) {
        if (cache.count(d)) continue;
        std::vector<long long> num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        for (unsigned e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            const auto& den = cache.at(e);
            // exact division by a monic polynomial
            std::vector<long long> q(num.size() - den.size() + 1, 0);
            for (std::size_t k = q.size(); k-- > 0;) {
                const long long coef = num[k + den.size() - 1];
                q[k] = coef;
                for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= coef * den[i];
            }
            num = std::move(q);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (c_.size() != order_) throw std::invalid_argument("cyclotomic coefficient length mismatch");
}

Cyclotomic Cyclotomic::root_power(unsigned order, long long k) {
    Cyclotomic r(order);
    long long m = k % static_cast<long long>(order);
    if (m < 0) m += order;
    r.c_[static_cast<std::size_t>(m)] = 1;
    return r;
}

namespace {

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

}  // namespace

Cyclotomic Cyclotomic::lift_to(unsigned order) const {
    if (order == order_) return *this;
    if (order % order_ != 0) throw std::invalid_argument("lift_to: order is not a multiple");
    Cyclotomic r(order);
    const unsigned step = order / order_;
    for (unsigned k = 0; k < order_; ++k) r.c_[k * step] = c_[k];
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.order_ != order_) {
        const unsigned l = lcm_u(order_, o.order_);
        *this = lift_to(l);
        return *this += o.lift_to(l);
    }
    for (unsigned k = 0; k < order_; ++k)
        if (o.c_[k] != 0) c_[k] += o.c_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (o.order_ != order_) {
        const unsigned l = lcm_u(order_, o.order_);
        *this = lift_to(l);
        return *this -= o.lift_to(l);
    }
    for (unsigned k = 0; k < order_; ++k)
        if (o.c_[k] != 0) c_[k] -= o.c_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rat& s) {
    for (Rat& x : c_)
        if (x != 0) x *= s;
    return *this;
}

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b, const Rat& scale) {
    if (a.order_ != order_ || b.order_ != order_) {
        *this += (a * b) * scale;
        return;
    }
    Rat tmp;
    for (unsigned i = 0; i < order_; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; j < order_; ++j) {
            if (b.c_[j] == 0) continue;
            unsigned k = i + j;
            if (k >= order_) k -= order_;
            tmp = a.c_[i] * b.c_[j];
            if (scale != 1) tmp *= scale;
            c_[k] += tmp;
        }
    }
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (o.order_ != order_) {
        const unsigned l = lcm_u(order_, o.order_);
        return lift_to(l) * o.lift_to(l);
    }
    Cyclotomic r(order_);
    r.add_product(*this, o);
    return r;
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
    Cyclotomic result(order_, Rat(1));
    Cyclotomic base = *this;
    while (e) {
        if (e & 1) result = (result * base).canonical();
        e >>= 1;
        if (e) base = (base * base).canonical();
    }
    return result;
}

Cyclotomic Cyclotomic::galois(long long t) const {
    Cyclotomic r(order_);
    long long tt = t % static_cast<long long>(order_);
    if (tt < 0) tt += order_;
    if (std::gcd(static_cast<unsigned long long>(tt), static_cast<unsigned long long>(order_)) != 1 && order_ > 1)
        throw std::invalid_argument("galois exponent not coprime to order");
    for (unsigned k = 0; k < order_; ++k)
        if (c_[k] != 0) r.c_[(static_cast<unsigned long long>(k) * tt) % order_] += c_[k];
    return r;
}

Cyclotomic Cyclotomic::canonical() const {
    const auto& phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1;
    std::vector<Rat> r = c_;
    for (std::size_t k = r.size(); k-- > deg;) {
        if (r[k] == 0) continue;
        const Rat coef = r[k];
        const std::size_t shift = k - deg;
        for (std::size_t i = 0; i < phi.size(); ++i)
            if (phi[i] != 0) r[shift + i] -= coef * Rat(static_cast<long>(phi[i]));
    }
    return Cyclotomic(order_, std::move(r));
}

bool Cyclotomic::is_zero() const {
    const Cyclotomic c = canonical();
    for (const Rat& x : c.c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    const Cyclotomic c = canonical();
    for (unsigned k = 1; k < order_; ++k)
        if (c.c_[k] != 0) return false;
    return true;
}

Rat Cyclotomic::to_rational() const {
    const Cyclotomic c = canonical();
    for (unsigned k = 1; k < order_; ++k)
        if (c.c_[k] != 0) throw std::domain_error("cyclotomic number is not rational");
    return c.c_[0];
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0, 0);
    for (unsigned k = 0; k < order_; ++k) {
        if (c_[k] == 0) continue;
        const double ang = 2.0 * std::numbers::pi * k / order_;
        acc += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

modp::u64 Cyclotomic::reduce(const modp::Field& f, modp::u64 omega) const {
    modp::u64 acc = 0;
    modp::u64 w = 1;
    for (unsigned k = 0; k < order_; ++k) {
        if (c_[k] != 0) acc = f.add(acc, f.mul(f.from(c_[k]), w));
        w = f.mul(w, omega);
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    const Cyclotomic c = canonical();
    if (c.is_rational()) return c.c_[0].get_str();
    // the stored form is often sparser than the canonical one (E(3)^2 vs -1-E(3))
    auto terms = [](const Cyclotomic& x) {
        return std::count_if(x.c_.begin(), x.c_.end(), [](const Rat& r) { return r != 0; });
    };
    const Cyclotomic& shown = terms(*this) < terms(c) ? *this : c;
    std::ostringstream os;
    bool first = true;
    for (unsigned k = 0; k < order_; ++k) {
        const Rat& x = shown.c_[k];
        if (x == 0) continue;
        if (!first) os << (x < 0 ? "-" : "+");
        else if (x < 0) os << "-";
        first = false;
        const Rat ax = abs(x);
        if (k == 0) {
            os << ax.get_str();
            continue;
        }
        if (ax != 1) os << ax.get_str() << "*";
        os << "E(" << order_ << ")";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace partalg
