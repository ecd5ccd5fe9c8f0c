#ifndef CYCIND_SERIES_HPP
#define CYCIND_SERIES_HPP

// Truncated power series with exact coefficients.

#include <string>
#include <vector>

#include "core.hpp"

namespace cycind
{

// a + b eps with eps^2 = 0; carries a first derivative alongside a value.
struct Dual {
    Rational v = 0;
    Rational d = 0;

    Dual() = default;
    Dual(Rational value, Rational deriv = 0) : v(std::move(value)), d(std::move(deriv)) {}
    Dual(long value) : v(value) {}

    Dual& operator+=(const Dual& o)
    {
        v += o.v;
        d += o.d;
        return *this;
    }
    Dual& operator-=(const Dual& o)
    {
        v -= o.v;
        d -= o.d;
        return *this;
    }
    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(const Dual& a, const Dual& b) { return Dual(a.v * b.v, a.v * b.d + a.d * b.v); }
    friend Dual operator*(const Dual& a, const Rational& s) { return Dual(a.v * s, a.d * s); }
    friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
};

inline Rational scalar_of(const Rational& x)
{
    return x;
}
inline Rational scalar_of(const Dual& x)
{
    return x.v;
}

template <class T>
class TruncSeries
{
public:
    explicit TruncSeries(int N = 0) : c_(N + 1, T(0))
    {
        if (N < 0)
            throw DomainError("truncation degree must be non-negative");
    }

    static TruncSeries one(int N)
    {
        TruncSeries s(N);
        s.c_[0] = T(1);
        return s;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int i) const { return c_.at(i); }
    T& operator[](int i) { return c_.at(i); }
    const std::vector<T>& coeffs() const { return c_; }

    TruncSeries& operator+=(const TruncSeries& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        a.check(b);
        TruncSeries r(a.degree());
        int N = a.degree();
        for (int i = 0; i <= N; ++i) {
            if (a.c_[i] == T(0))
                continue;
            for (int j = 0; i + j <= N; ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    TruncSeries scaled(const Rational& s) const
    {
        TruncSeries r = *this;
        for (auto& x : r.c_)
            x = x * s;
        return r;
    }

    // f(u) -> f(s u)
    TruncSeries dilated(const Rational& s) const
    {
        TruncSeries r = *this;
        Rational p = 1;
        for (auto& x : r.c_) {
            x = x * p;
            p *= s;
        }
        return r;
    }

    TruncSeries derivative() const
    {
        TruncSeries r(degree());
        for (int i = 1; i <= degree(); ++i)
            r.c_[i - 1] = c_[i] * Rational(i);
        return r;
    }

    // f^e for f(0) = 1 and any integer e, via the recurrence
    // n g_n = sum_{k=1}^n ((e+1)k - n) f_k g_{n-k}.
    TruncSeries pow(const Integer& e) const
    {
        if (!(c_[0] == T(1)))
            throw DomainError("series power needs constant term 1");
        int N = degree();
        TruncSeries g(N);
        g.c_[0] = T(1);
        for (int n = 1; n <= N; ++n) {
            T acc(0);
            for (int k = 1; k <= n; ++k) {
                if (c_[k] == T(0))
                    continue;
                Integer w = (e + 1) * k - n;
                if (w == 0)
                    continue;
                acc += c_[k] * g.c_[n - k] * Rational(w);
            }
            g.c_[n] = acc * frac(Integer(1), Integer(n));
        }
        return g;
    }

    // 1/f for f(0) = 1
    TruncSeries inverse() const { return pow(Integer(-1)); }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

private:
    void check(const TruncSeries& o) const
    {
        if (o.c_.size() != c_.size())
            throw DomainError("series truncation degrees differ");
    }

    std::vector<T> c_;
};

using RSeries = TruncSeries<Rational>;
using DSeries = TruncSeries<Dual>;

inline RSeries value_part(const DSeries& s)
{
    RSeries r(s.degree());
    for (int i = 0; i <= s.degree(); ++i)
        r[i] = s[i].v;
    return r;
}

inline RSeries derivative_part(const DSeries& s)
{
    RSeries r(s.degree());
    for (int i = 0; i <= s.degree(); ++i)
        r[i] = s[i].d;
    return r;
}

// 1 / (1 - a u^k), truncated
inline RSeries geometric(int N, const Rational& a, int k)
{
    RSeries r(N);
    Rational p = 1;
    for (int i = 0; i <= N; i += k) {
        r[i] = p;
        p *= a;
    }
    return r;
}

} // namespace cycind

#endif
