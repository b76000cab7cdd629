#pragma once

#include <complex>
#include <string>
#include <vector>

#include "partalg/exact.hpp"
#include "partalg/modp.hpp"

namespace partalg {

/// Element of Q(xi_e) in the power basis 1, xi, ..., xi^{e-1}, kept reduced modulo
/// x^e - 1 only. canonical() divides by the e-th cyclotomic polynomial, after which
/// equal numbers have equal coefficient vectors.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(unsigned order) : order_(order), c_(order, Rat(0)) {}
    Cyclotomic(unsigned order, const Rat& value) : Cyclotomic(order) { c_[0] = value; }
    Cyclotomic(unsigned order, std::vector<Rat> coeffs);

    /// xi_e^k
    static Cyclotomic root_power(unsigned order, long long k);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(unsigned k) const { return c_[k]; }

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rat& s);
    Cyclotomic operator+(const Cyclotomic& o) const { Cyclotomic r(*this); r += o; return r; }
    Cyclotomic operator-(const Cyclotomic& o) const { Cyclotomic r(*this); r -= o; return r; }
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rat& s) const { Cyclotomic r(*this); r *= s; return r; }
    Cyclotomic operator-() const { Cyclotomic r(*this); r *= Rat(-1); return r; }
    /// this += a * b without temporaries.
    void add_product(const Cyclotomic& a, const Cyclotomic& b, const Rat& scale = Rat(1));

    Cyclotomic pow(unsigned long e) const;
    /// Galois automorphism xi -> xi^t (t coprime to the order).
    Cyclotomic galois(long long t) const;
    Cyclotomic conj() const { return galois(-1); }
    /// Same number written over a multiple of the order.
    Cyclotomic lift_to(unsigned order) const;

    /// Unique representative of degree < phi(order) (padded to order).
    Cyclotomic canonical() const;
    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rat to_rational() const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;
    /// Image under xi -> omega in Z/p (omega of order exactly order()).
    modp::u64 reduce(const modp::Field& f, modp::u64 omega) const;

    /// Compact rendering in GAP's E(n) notation.
    std::string to_string() const;

private:
    unsigned order_;
    std::vector<Rat> c_;
};

/// Coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long long>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

}  // namespace partalg
