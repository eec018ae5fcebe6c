#include "bicubic/series.hpp"

#include "bicubic/map.hpp"

#include <algorithm>

namespace bicubic {

ExactSeries::ExactSeries(int order) : order_(order), c_(order + 1) {
    if (order < 0)
        throw DomainError("negative series order");
}

ExactSeries::ExactSeries(int order, std::vector<Rational> coeffs) : ExactSeries(order) {
    for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i)
        c_[i] = coeffs[i];
}

ExactSeries ExactSeries::operator+(const ExactSeries& o) const {
    ExactSeries r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i)
        r.c_[i] = c_[i] + o.c_[i];
    return r;
}

ExactSeries ExactSeries::operator*(const ExactSeries& o) const {
    ExactSeries r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if (c_[i] == 0)
            continue;
        for (int j = 0; i + j <= r.order_; ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

ExactSeries ExactSeries::pow(int k) const {
    if (k < 0)
        throw DomainError("negative power of a series");
    ExactSeries r(order_);
    r.c_[0] = 1;
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

ExactSeries ExactSeries::compose(const ExactSeries& inner) const {
    if (inner.c_[0] != 0)
        throw DomainError("composition needs an inner series without constant term");
    const int n = std::min(order_, inner.order_);
    ExactSeries r(n);
    for (int i = n; i >= 0; --i) {
        r = r * inner;
        r.c_[0] += c_[i];
    }
    return r;
}

BigInt f_closed(int n) {
    if (n < 1)
        throw DomainError("f_n needs n >= 1");
    BigInt num = 3, den = 1;
    for (int i = 2; i <= 2 * n - 1; ++i)
        num *= i;
    num <<= n;
    for (int i = 2; i <= n - 1; ++i)
        den *= i;
    for (int i = 2; i <= n + 2; ++i)
        den *= i;
    return num / den;
}

std::vector<BigInt> f_sequence(int n) {
    std::vector<BigInt> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(f_closed(i));
    return out;
}

std::vector<std::vector<Rational>> bell_table(int nmax, const std::vector<Rational>& args) {
    if (static_cast<int>(args.size()) < nmax)
        throw DomainError("too few arguments for the Bell table");
    // B_{n,k} = sum_{i=1}^{n-k+1} binom(n-1, i-1) x_i B_{n-i,k-1}
    std::vector<std::vector<Rational>> b(nmax + 1);
    std::vector<std::vector<BigInt>> binom(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        binom[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
        b[n].assign(n + 1, 0);
    }
    b[0][0] = 1;
    for (int n = 1; n <= nmax; ++n)
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= n - k + 1; ++i)
                b[n][k] += Rational(binom[n - 1][i - 1]) * args[i - 1] * b[n - i][k - 1];
    return b;
}

Rational partial_bell(int n, int k, const std::vector<Rational>& args) {
    if (n < 0 || k < 0 || k > n)
        throw DomainError("partial Bell index out of range");
    if (n == 0)
        return 1;
    if (k == 0)
        return 0;
    if (static_cast<int>(args.size()) < n - k + 1)
        throw DomainError("partial Bell needs arguments x_1..x_{n-k+1}");
    std::vector<Rational> a(args.begin(), args.begin() + (n - k + 1));
    a.resize(n, 0);
    return bell_table(n, a)[n][k];
}

Rational generalized_binomial(long top, int k) {
    if (k < 0)
        return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= top - i;
        den *= i + 1;
    }
    return Rational(num, den);
}

BigInt g_bell(int n) {
    if (n < 1)
        throw DomainError("g_n needs n >= 1");
    std::vector<Rational> args;
    BigInt fact = 1;
    for (int i = 1; i <= n; ++i) {
        fact *= i;
        args.push_back(Rational(fact * f_closed(i)));
    }
    auto b = bell_table(n, args);
    Rational sum = 0;
    BigInt kfact = 1;   // (k-1)!
    for (int k = 1; k <= n; ++k) {
        if (k > 1)
            kfact *= k - 1;
        sum += generalized_binomial(-3L * n, k - 1) * Rational(kfact) * b[n][k];
    }
    sum /= Rational(fact);
    if (denominator(sum) != 1)
        throw DomainError("g_n is not an integer");
    return numerator(sum);
}

std::vector<BigInt> g_sequence(int n) {
    std::vector<BigInt> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(g_bell(i));
    return out;
}

bool verify_functional_equation(int order) {
    if (order < 1)
        throw DomainError("order must be positive");
    ExactSeries f(order), g(order), x(order);
    for (int i = 1; i <= order; ++i) {
        f[i] = Rational(f_closed(i));
        g[i] = Rational(g_bell(i));
    }
    x[1] = 1;
    ExactSeries one(order);
    one[0] = 1;
    ExactSeries rhs = g.compose(x * (one + f).pow(3));
    for (int i = 1; i <= order; ++i)
        if (rhs[i] != f[i])
            return false;
    return true;
}

} // namespace bicubic
