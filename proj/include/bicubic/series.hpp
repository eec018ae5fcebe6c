#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace bicubic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Truncated power series with exact coefficients 0..order.
class ExactSeries {
public:
    explicit ExactSeries(int order);
    ExactSeries(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    const Rational& operator[](int i) const { return c_[i]; }
    Rational& operator[](int i) { return c_[i]; }
    const std::vector<Rational>& coefficients() const { return c_; }

    ExactSeries operator+(const ExactSeries& o) const;
    ExactSeries operator*(const ExactSeries& o) const;
    ExactSeries pow(int k) const;
    // this(inner(x)); inner must have zero constant term.
    ExactSeries compose(const ExactSeries& inner) const;

    bool operator==(const ExactSeries& o) const { return c_ == o.c_; }

private:
    int order_;
    std::vector<Rational> c_;
};

BigInt f_closed(int n);
std::vector<BigInt> f_sequence(int n);

// B_{n,k}(x_1, x_2, ...), with args[i - 1] = x_i.
Rational partial_bell(int n, int k, const std::vector<Rational>& args);
// Full triangle: table[n][k] for 0 <= k <= n <= nmax.
std::vector<std::vector<Rational>> bell_table(int nmax, const std::vector<Rational>& args);

// binom(top, k) for any integer top.
Rational generalized_binomial(long top, int k);

BigInt g_bell(int n);
std::vector<BigInt> g_sequence(int n);

bool verify_functional_equation(int order);

} // namespace bicubic
