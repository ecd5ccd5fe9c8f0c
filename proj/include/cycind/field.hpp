#ifndef CYCIND_FIELD_HPP
#define CYCIND_FIELD_HPP

// Finite field F_q, q = p^k, realized as F_p[x]/(f) with f the smallest
// monic irreducible of degree k (coefficient vectors compared low to high).
// Elements are integer codes: the coefficient vector c_0 + c_1 p + ... of
// the residue. Code 0 is zero and code 1 is one in every realization.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "core.hpp"

namespace cycind
{

using Elem = std::uint32_t;

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::uint32_t q = 2;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline constexpr std::uint32_t max_field_size = 1u << 16;

// Splits q into p^k; throws DomainError unless q is a prime power within
// the supported range.
inline FieldSpec field_spec(std::uint64_t q)
{
    if (q < 2 || q > max_field_size)
        throw DomainError("field size " + std::to_string(q) + " outside [2, 65536]");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint64_t r = q;
    std::uint32_t k = 0;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1)
        throw DomainError(std::to_string(q) + " is not a prime power");
    return FieldSpec{p, k, static_cast<std::uint32_t>(q)};
}

namespace detail
{

// Coefficient-vector arithmetic over F_p used only to bootstrap the
// extension modulus and the log tables.
struct PrimePoly {
    static std::vector<std::uint32_t> mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                             const std::vector<std::uint32_t>& mod, std::uint32_t p)
    {
        std::size_t k = mod.size() - 1;
        std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
        for (std::size_t d = prod.size(); d-- > k;) {
            std::uint64_t c = prod[d];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j <= k; ++j)
                prod[d - k + j] = (prod[d - k + j] + (p - c) * mod[j]) % p;
        }
        std::vector<std::uint32_t> out(k, 0);
        for (std::size_t i = 0; i < k && i < prod.size(); ++i)
            out[i] = static_cast<std::uint32_t>(prod[i]);
        return out;
    }

    // Remainder of monic-or-not `a` modulo monic `m`.
    static std::vector<std::uint32_t> rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                                          std::uint32_t p)
    {
        std::size_t dm = m.size() - 1;
        for (std::size_t d = a.size(); d-- > dm;) {
            std::uint64_t c = a[d];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j <= dm; ++j)
                a[d - dm + j] = static_cast<std::uint32_t>((a[d - dm + j] + (p - c) * std::uint64_t(m[j])) % p);
        }
        a.resize(dm);
        return a;
    }

    // Trial division by every monic polynomial of degree <= deg/2.
    static bool irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p)
    {
        std::size_t n = f.size() - 1;
        for (std::size_t d = 1; 2 * d <= n; ++d) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < d; ++i)
                count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> g(d + 1, 0);
                std::uint64_t c = code;
                for (std::size_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(c % p);
                    c /= p;
                }
                g[d] = 1;
                auto r = rem(f, g, p);
                bool zero = true;
                for (auto x : r)
                    zero = zero && x == 0;
                if (zero)
                    return false;
            }
        }
        return true;
    }
};

struct FieldTables {
    FieldSpec spec;
    std::vector<std::uint32_t> modulus; // low to high, monic, size k+1
    std::vector<Elem> exp;              // exp[i] = g^i for i in [0, 2(q-1))
    std::vector<std::uint32_t> log;     // log[x] for x != 0
    std::vector<Elem> add;              // q*q table when q is small, else empty
    std::vector<Elem> neg;
    Elem generator = 1;
};

inline std::shared_ptr<const FieldTables> build_tables(const FieldSpec& spec)
{
    auto t = std::make_shared<FieldTables>();
    t->spec = spec;
    const std::uint32_t p = spec.p, k = spec.k, q = spec.q;

    if (k == 1) {
        t->modulus = {0, 1};
    } else {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i)
            count *= p;
        // Smallest lexicographic (c_0, ..., c_{k-1}) first.
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> f(k + 1, 0);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < k; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            f[k] = 1;
            if (f[0] != 0 && PrimePoly::irreducible(f, p)) {
                t->modulus = f;
                break;
            }
        }
    }

    auto decode = [&](Elem x) {
        std::vector<std::uint32_t> v(k, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
            v[i] = x % p;
            x /= p;
        }
        return v;
    };
    auto encode = [&](const std::vector<std::uint32_t>& v) {
        Elem x = 0;
        for (std::uint32_t i = k; i-- > 0;)
            x = x * p + v[i];
        return x;
    };
    auto mul = [&](Elem a, Elem b) -> Elem {
        if (k == 1)
            return static_cast<Elem>((std::uint64_t(a) * b) % p);
        return encode(PrimePoly::mulmod(decode(a), decode(b), t->modulus, p));
    };

    // Smallest generator of the multiplicative group.
    std::vector<Elem> powers;
    for (Elem g = 1; g < q; ++g) {
        powers.clear();
        powers.reserve(q - 1);
        Elem x = 1;
        bool ok = true;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            if (i > 0 && x == 1) {
                ok = false;
                break;
            }
            powers.push_back(x);
            x = mul(x, g);
        }
        if (ok && x == 1) {
            t->generator = g;
            break;
        }
    }
    t->exp.resize(2 * (q - 1));
    t->log.assign(q, 0);
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        t->exp[i] = powers[i];
        t->exp[i + q - 1] = powers[i];
        t->log[powers[i]] = i;
    }

    t->neg.resize(q);
    for (Elem x = 0; x < q; ++x) {
        auto v = decode(x);
        for (auto& c : v)
            c = (p - c) % p;
        t->neg[x] = encode(v);
    }
    if (q <= 256) {
        t->add.resize(std::size_t(q) * q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                auto va = decode(a), vb = decode(b);
                for (std::uint32_t i = 0; i < k; ++i)
                    va[i] = (va[i] + vb[i]) % p;
                t->add[std::size_t(a) * q + b] = encode(va);
            }
    }
    return t;
}

} // namespace detail

// Arithmetic handle over shared immutable tables. Cheap to copy.
class Field
{
public:
    explicit Field(std::uint64_t q) : Field(field_spec(q)) {}

    explicit Field(const FieldSpec& spec) : t_(cached(spec)) {}

    const FieldSpec& spec() const { return t_->spec; }
    std::uint32_t p() const { return t_->spec.p; }
    std::uint32_t k() const { return t_->spec.k; }
    std::uint32_t q() const { return t_->spec.q; }
    std::uint32_t size() const { return t_->spec.q; }
    const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
    Elem generator() const { return t_->generator; }

    static constexpr Elem zero() { return 0; }
    static constexpr Elem one() { return 1; }

    Elem add(Elem a, Elem b) const
    {
        if (!t_->add.empty())
            return t_->add[std::size_t(a) * q() + b];
        if (k() == 1)
            return (a + b) % p();
        Elem r = 0, scale = 1;
        while (a || b) {
            r += ((a % p() + b % p()) % p()) * scale;
            a /= p();
            b /= p();
            scale *= p();
        }
        return r;
    }
    Elem neg(Elem a) const { return t_->neg[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return t_->exp[t_->log[a] + t_->log[b]];
    }
    Elem inv(Elem a) const
    {
        if (a == 0)
            throw DomainError("inverse of zero");
        std::uint32_t l = t_->log[a];
        return t_->exp[l == 0 ? 0 : (q() - 1) - l];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const
    {
        if (e == 0)
            return 1;
        if (a == 0)
            return 0;
        std::uint64_t l = (std::uint64_t(t_->log[a]) * (e % (q() - 1))) % (q() - 1);
        return t_->exp[l];
    }
    // Discrete log with respect to generator(); a must be nonzero.
    std::uint32_t log(Elem a) const { return t_->log[a]; }
    Elem exp(std::uint64_t i) const { return t_->exp[i % (q() - 1)]; }

    // Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const
    {
        std::uint64_t n = q() - 1;
        std::uint64_t l = log(a);
        std::uint64_t g = n, b = l;
        while (b) {
            std::uint64_t t = g % b;
            g = b;
            b = t;
        }
        return n / g;
    }

    bool is_square(Elem a) const { return a == 0 || p() == 2 || t_->log[a] % 2 == 0; }

    // Smallest (by code) non-square; only meaningful for odd q.
    Elem nonsquare() const
    {
        for (Elem x = 1; x < q(); ++x)
            if (!is_square(x))
                return x;
        throw DomainError("every element of F_" + std::to_string(q()) + " is a square");
    }

    // Image of the integer n under Z -> F_p -> F_q.
    Elem from_int(long long n) const
    {
        long long r = n % static_cast<long long>(p());
        if (r < 0)
            r += p();
        return static_cast<Elem>(r);
    }

    friend bool operator==(const Field& a, const Field& b) { return a.spec() == b.spec(); }

private:
    static std::shared_ptr<const detail::FieldTables> cached(const FieldSpec& spec)
    {
        static std::mutex mutex;
        static std::map<std::uint32_t, std::shared_ptr<const detail::FieldTables>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(spec.q);
        if (it != cache.end())
            return it->second;
        auto t = detail::build_tables(spec);
        cache.emplace(spec.q, t);
        return t;
    }

    std::shared_ptr<const detail::FieldTables> t_;
};

} // namespace cycind

#endif
