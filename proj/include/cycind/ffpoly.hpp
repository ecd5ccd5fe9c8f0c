#ifndef CYCIND_FFPOLY_HPP
#define CYCIND_FFPOLY_HPP

// Polynomials over F_q: arithmetic, irreducibility, enumeration, the tilde
// and bar involutions, and the closed-form polynomial counts.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "field.hpp"

namespace cycind
{

// Coefficients low to high degree, trailing zeros trimmed. The zero
// polynomial has no coefficients.
struct Poly {
    std::vector<Elem> c;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly monomial(int degree, Elem coeff = 1)
    {
        std::vector<Elem> v(degree + 1, 0);
        v[degree] = coeff;
        return Poly(std::move(v));
    }
    // z - a
    static Poly linear(const Field& F, Elem a) { return Poly({F.neg(a), 1}); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    Elem lead() const { return c.empty() ? 0 : c.back(); }
    Elem constant() const { return c.empty() ? 0 : c.front(); }
    Elem operator[](std::size_t i) const { return i < c.size() ? c[i] : 0; }

    void trim()
    {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

// Canonical order: degree first, then (c_0, c_1, ...) lexicographically by
// element code.
inline bool operator<(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

namespace poly
{

inline Poly add(const Field& F, const Poly& a, const Poly& b)
{
    std::vector<Elem> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(a[i], b[i]);
    return Poly(std::move(r));
}

inline Poly sub(const Field& F, const Poly& a, const Poly& b)
{
    std::vector<Elem> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(a[i], b[i]);
    return Poly(std::move(r));
}

inline Poly scale(const Field& F, const Poly& a, Elem s)
{
    std::vector<Elem> r(a.c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.mul(a.c[i], s);
    return Poly(std::move(r));
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Elem> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(r));
}

inline Poly pow(const Field& F, const Poly& a, unsigned e)
{
    Poly r({1});
    for (unsigned i = 0; i < e; ++i)
        r = mul(F, r, a);
    return r;
}

// Quotient and remainder; b must be nonzero.
inline std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    std::vector<Elem> r = a.c;
    std::vector<Elem> quo(a.c.size() - b.c.size() + 1, 0);
    Elem lead_inv = F.inv(b.lead());
    int db = b.degree();
    for (int d = a.degree(); d >= db; --d) {
        Elem coef = r[d];
        if (coef == 0)
            continue;
        Elem f = F.mul(coef, lead_inv);
        quo[d - db] = f;
        for (int j = 0; j <= db; ++j)
            r[d - db + j] = F.sub(r[d - db + j], F.mul(f, b.c[j]));
    }
    return {Poly(std::move(quo)), Poly(std::move(r))};
}

inline Poly rem(const Field& F, const Poly& a, const Poly& b)
{
    return divmod(F, a, b).second;
}

inline Poly make_monic(const Field& F, const Poly& a)
{
    if (a.is_zero() || a.is_monic())
        return a;
    return scale(F, a, F.inv(a.lead()));
}

// Monic gcd (zero when both inputs are zero).
inline Poly gcd(const Field& F, Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

inline Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m)
{
    return rem(F, mul(F, a, b), m);
}

inline Poly powmod(const Field& F, Poly base, Integer e, const Poly& m)
{
    Poly result = rem(F, Poly({1}), m);
    base = rem(F, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = mulmod(F, result, base, m);
        e >>= 1;
        if (e > 0)
            base = mulmod(F, base, base, m);
    }
    return result;
}

inline Elem eval(const Field& F, const Poly& a, Elem x)
{
    Elem r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;)
        r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

// Coefficientwise x -> x^e.
inline Poly frobenius_coeffs(const Field& F, const Poly& a, std::uint64_t e)
{
    std::vector<Elem> r(a.c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.pow(a.c[i], e);
    return Poly(std::move(r));
}

} // namespace poly

namespace nt
{

inline int mobius(std::uint64_t n)
{
    int result = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0)
                return 0;
            result = -result;
        }
    }
    if (n > 1)
        result = -result;
    return result;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> d;
    for (std::uint64_t i = 1; i <= n; ++i)
        if (n % i == 0)
            d.push_back(i);
    return d;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

// Prime factorization of an arbitrary-precision integer by trial division,
// stopping as soon as the cofactor is a probable prime.
inline std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n, const Budgets& budgets = {})
{
    if (n < 1)
        throw DomainError("factor_integer requires n >= 1");
    std::vector<std::pair<Integer, unsigned>> out;
    bool changed = true;
    for (std::uint64_t d = 2; n > 1; ++d) {
        // primality is only rechecked after a division
        if (changed && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
            out.emplace_back(n, 1);
            break;
        }
        changed = false;
        if (d > budgets.trial_division)
            throw BudgetExceeded("totient: trial division budget exhausted factoring " + n.get_str());
        if (Integer(d) * d > n) {
            out.emplace_back(n, 1);
            break;
        }
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            n /= d;
            ++e;
        }
        if (e) {
            out.emplace_back(Integer(d), e);
            changed = true;
        }
    }
    return out;
}

// Euler's totient.
inline Integer totient(const Integer& n, const Budgets& budgets = {})
{
    if (n == 1)
        return 1;
    Integer r = n;
    for (auto& [p, e] : factor_integer(n, budgets))
        r = r / p * (p - 1);
    return r;
}

// Multiplicative order of `a` modulo n (gcd(a, n) must be 1).
inline std::uint64_t multiplicative_order(const Integer& a, const Integer& n)
{
    if (n == 1)
        return 1;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    if (g != 1)
        throw DomainError("multiplicative_order: arguments not coprime");
    Integer x = a % n;
    Integer cur = x;
    for (std::uint64_t k = 1;; ++k) {
        if (cur == 1)
            return k;
        cur = (cur * x) % n;
    }
}

} // namespace nt

// ---------------------------------------------------------------------------
// Irreducibility

// Rabin test: z^{q^m} = z mod f and gcd(z^{q^{m/r}} - z, f) = 1 for every
// prime r dividing m.
inline bool is_irreducible(const Field& F, const Poly& f)
{
    int m = f.degree();
    if (m < 1)
        return false;
    if (m == 1)
        return true;
    if (f.constant() == 0)
        return false;
    const Poly z = Poly::monomial(1);
    std::vector<Poly> frob(m + 1);
    frob[0] = poly::rem(F, z, f);
    for (int i = 1; i <= m; ++i)
        frob[i] = poly::powmod(F, frob[i - 1], Integer(F.q()), f);
    if (!(frob[m] == frob[0]))
        return false;
    for (auto r : nt::prime_factors(static_cast<std::uint64_t>(m))) {
        Poly g = poly::gcd(F, poly::sub(F, frob[m / r], z), f);
        if (g.degree() != 0)
            return false;
    }
    return true;
}

namespace detail
{

inline std::uint64_t checked_power(std::uint64_t q, int m, std::uint64_t budget, const char* what)
{
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        if (total > budget / q)
            throw BudgetExceeded(std::string(what) + ": q^m = " + std::to_string(q) + "^" + std::to_string(m) +
                                 " exceeds enumeration budget");
        total *= q;
    }
    return total;
}

// Monic degree-m polynomial whose coefficient tuple (c_0, ..., c_{m-1}) is
// the base-q expansion of `code` with c_0 most significant.
inline Poly monic_from_code(std::uint32_t q, int m, std::uint64_t code)
{
    std::vector<Elem> v(m + 1, 0);
    for (int i = m - 1; i >= 0; --i) {
        v[i] = static_cast<Elem>(code % q);
        code /= q;
    }
    v[m] = 1;
    return Poly(std::move(v));
}

} // namespace detail

// All monic degree-m polynomials, in canonical order.
inline std::vector<Poly> enumerate_monic(const Field& F, int m, const Budgets& budgets = {})
{
    if (m < 0)
        throw DomainError("degree must be non-negative");
    std::uint64_t total = detail::checked_power(F.q(), m, budgets.poly_enumeration, "enumerate_monic");
    std::vector<Poly> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code)
        out.push_back(detail::monic_from_code(F.q(), m, code));
    return out;
}

// Monic irreducible polynomials of degree m, in canonical order; includes z
// when m = 1.
inline std::vector<Poly> enumerate_monic_irreducibles(const Field& F, int m, const Budgets& budgets = {})
{
    if (m < 1)
        throw DomainError("enumerate_monic_irreducibles requires m >= 1");
    std::uint64_t total = detail::checked_power(F.q(), m, budgets.poly_enumeration, "enumerate_monic_irreducibles");
    std::vector<Poly> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        Poly f = detail::monic_from_code(F.q(), m, code);
        if (is_irreducible(F, f))
            out.push_back(std::move(f));
    }
    return out;
}

// I_{m,q}: monic irreducibles of degree m; with exclude_z the polynomial z
// is not counted (only affects m = 1).
inline Integer irreducible_count(std::uint64_t q, int m, bool exclude_z)
{
    if (m < 1)
        throw DomainError("irreducible_count requires m >= 1");
    Integer sum = 0;
    for (auto k : nt::divisors(static_cast<std::uint64_t>(m)))
        sum += nt::mobius(k) * ipow(Integer(static_cast<unsigned long>(q)), m / k);
    sum /= m;
    if (exclude_z && m == 1)
        sum -= 1;
    return sum;
}

// ---------------------------------------------------------------------------
// Involutions

// z^m phi^q(1/z) / phi(0)^q. With `frobenius_exponent` = 1 this is the
// normalized reciprocal.
inline Poly conjugate_reciprocal(const Field& F, const Poly& phi, std::uint64_t frobenius_exponent)
{
    if (phi.is_zero() || phi.constant() == 0)
        throw DomainError("involution requires a nonvanishing constant term");
    if (!phi.is_monic())
        throw DomainError("involution requires a monic polynomial");
    int m = phi.degree();
    Elem a0_inv = F.inv(phi.constant());
    std::vector<Elem> r(m + 1, 0);
    for (int i = 0; i <= m; ++i)
        r[m - i] = F.pow(F.mul(phi.c[i], a0_inv), frobenius_exponent);
    return Poly(std::move(r));
}

// Unitary involution on polynomials over F_{q^2}; `F` must have square size
// and `q` is the size of the fixed subfield.
inline Poly tilde(const Field& F, std::uint32_t q, const Poly& phi)
{
    if (std::uint64_t(q) * q != F.q())
        throw DomainError("tilde requires a field of size q^2");
    return conjugate_reciprocal(F, phi, q);
}

// Symplectic/orthogonal involution on polynomials over F_q.
inline Poly bar(const Field& F, const Poly& phi)
{
    return conjugate_reciprocal(F, phi, 1);
}

// Number of monic irreducible phi of degree m over F_{q^2} with
// phi = tilde(phi).
inline Integer self_tilde_count(std::uint64_t q, int m)
{
    if (m < 1)
        throw DomainError("self_tilde_count requires m >= 1");
    if (m % 2 == 0)
        return 0;
    Integer sum = 0;
    for (auto d : nt::divisors(static_cast<std::uint64_t>(m)))
        sum += nt::mobius(d) * (ipow(Integer(static_cast<unsigned long>(q)), m / d) + 1);
    return sum / m;
}

// Number of monic irreducible phi of degree m over F_q (q odd) with
// phi = bar(phi).
inline Integer self_bar_count(std::uint64_t q, int m)
{
    if (m < 1)
        throw DomainError("self_bar_count requires m >= 1");
    if (q % 2 == 0)
        throw DomainError("self_bar_count is stated for odd q only");
    if (m == 1)
        return 2;
    if (m % 2 == 1)
        return 0;
    int m0 = m;
    while (m0 % 2 == 0)
        m0 /= 2;
    Integer sum = 0;
    for (auto d : nt::divisors(static_cast<std::uint64_t>(m0)))
        sum += nt::mobius(d) * (ipow(Integer(static_cast<unsigned long>(q)), m / (2 * d)) - 1);
    return sum / m;
}

namespace detail
{

// Monic polynomials of degree m fixed by the involution
// c_{m-i} = (c_i / c_0)^e, generated from their free coefficients.
inline std::vector<Poly> self_reciprocal_candidates(const Field& F, int m, std::uint64_t e, const Budgets& budgets)
{
    std::vector<Elem> constants;
    for (Elem a = 1; a < F.q(); ++a)
        if (F.pow(F.inv(a), e) == a)
            constants.push_back(a);
    int free_count = (m - 1) / 2;
    std::vector<Elem> middles;
    std::vector<Poly> out;
    std::uint64_t total = checked_power(F.q(), free_count, budgets.poly_enumeration, "self-reciprocal enumeration");
    for (Elem a0 : constants) {
        Elem a0_inv = F.inv(a0);
        middles.clear();
        if (m % 2 == 0) {
            for (Elem x = 0; x < F.q(); ++x)
                if (F.pow(F.mul(x, a0_inv), e) == x)
                    middles.push_back(x);
        } else {
            middles.push_back(0);
        }
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<Elem> c(m + 1, 0);
            c[0] = a0;
            c[m] = 1;
            std::uint64_t x = code;
            for (int i = 1; i <= free_count; ++i) {
                c[i] = static_cast<Elem>(x % F.q());
                x /= F.q();
                c[m - i] = F.pow(F.mul(c[i], a0_inv), e);
            }
            for (Elem mid : middles) {
                if (m % 2 == 0 && m > 0)
                    c[m / 2] = mid;
                out.emplace_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

// Monic irreducible phi of degree m over F_{q^2} with phi = tilde(phi),
// found by generating the tilde-fixed polynomials directly.
inline std::vector<Poly> enumerate_self_tilde(const Field& F, std::uint32_t q, int m, const Budgets& budgets = {})
{
    if (std::uint64_t(q) * q != F.q())
        throw DomainError("enumerate_self_tilde requires a field of size q^2");
    std::vector<Poly> out;
    for (auto& f : detail::self_reciprocal_candidates(F, m, q, budgets))
        if (is_irreducible(F, f))
            out.push_back(f);
    return out;
}

inline std::vector<Poly> enumerate_self_bar(const Field& F, int m, const Budgets& budgets = {})
{
    std::vector<Poly> out;
    for (auto& f : detail::self_reciprocal_candidates(F, m, 1, budgets))
        if (is_irreducible(F, f))
            out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Factorization

struct Factor {
    Poly poly;
    int multiplicity = 0;
};

// Monic factorization by trial division with monic polynomials of
// increasing degree; each divisor found this way is irreducible.
inline std::vector<Factor> factor(const Field& F, const Poly& f, const Budgets& budgets = {})
{
    if (f.degree() < 1)
        throw DomainError("factor requires degree >= 1");
    Poly rest = poly::make_monic(F, f);
    std::vector<Factor> out;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        std::uint64_t total = detail::checked_power(F.q(), d, budgets.poly_enumeration, "factor");
        for (std::uint64_t code = 0; code < total && 2 * d <= rest.degree(); ++code) {
            Poly g = detail::monic_from_code(F.q(), d, code);
            int mult = 0;
            for (;;) {
                auto [quo, r] = poly::divmod(F, rest, g);
                if (!r.is_zero())
                    break;
                rest = std::move(quo);
                ++mult;
            }
            if (mult)
                out.push_back({g, mult});
        }
    }
    if (rest.degree() >= 1) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Factor& x) { return x.poly == rest; });
        if (it != out.end())
            ++it->multiplicity;
        else
            out.push_back({rest, 1});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    return out;
}

// ---------------------------------------------------------------------------
// Root orders

// Number of monic irreducible polynomials over F_Q whose roots have
// multiplicative order exactly N, where N divides Q^n - 1. Those
// polynomials have degree ord_N(Q) and there are totient(N)/ord_N(Q) of them.
inline Integer polys_with_root_order(std::uint64_t field_size, int n, const Integer& N, const Budgets& budgets = {})
{
    if (n < 1 || N < 1)
        throw DomainError("polys_with_root_order requires n >= 1 and N >= 1");
    Integer group = ipow(Integer(static_cast<unsigned long>(field_size)), n) - 1;
    if (group % N != 0)
        throw DomainError("N = " + N.get_str() + " does not divide Q^n - 1 = " + group.get_str());
    std::uint64_t d = nt::multiplicative_order(Integer(static_cast<unsigned long>(field_size)), N);
    return nt::totient(N, budgets) / Integer(static_cast<unsigned long>(d));
}

// ---------------------------------------------------------------------------
// Serialization: coefficients low to high, comma separated. Prime-field
// elements are integers; extension-field elements are bracketed coefficient
// vectors over F_p such as "[0 1]".

inline std::string element_to_string(const Field& F, Elem x)
{
    if (F.k() == 1)
        return std::to_string(x);
    std::string s = "[";
    for (std::uint32_t i = 0; i < F.k(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(x % F.p());
        x /= F.p();
    }
    return s + "]";
}

inline std::string to_string(const Field& F, const Poly& f)
{
    std::string s;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i)
            s += ',';
        s += element_to_string(F, f.c[i]);
    }
    return s;
}

inline Elem parse_element(const Field& F, std::string tok)
{
    auto strip = [](std::string& t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
            t.erase(t.begin());
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
            t.pop_back();
    };
    strip(tok);
    if (tok.empty())
        throw DomainError("empty field element");
    if (tok.front() == '[') {
        if (tok.back() != ']')
            throw DomainError("unterminated element vector: " + tok);
        std::istringstream in(tok.substr(1, tok.size() - 2));
        std::vector<long long> digits;
        long long v;
        while (in >> v)
            digits.push_back(v);
        if (digits.size() > F.k())
            throw DomainError("element vector longer than extension degree: " + tok);
        Elem x = 0;
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (digits[i] < 0 || digits[i] >= static_cast<long long>(F.p()))
                throw DomainError("element digit out of range: " + tok);
            x = x * F.p() + static_cast<Elem>(digits[i]);
        }
        return x;
    }
    long long v;
    try {
        std::size_t used = 0;
        v = std::stoll(tok, &used);
        if (used != tok.size())
            throw DomainError("bad field element: " + tok);
    } catch (const std::logic_error&) {
        throw DomainError("bad field element: " + tok);
    }
    if (F.k() == 1)
        return F.from_int(v);
    if (v < 0 || v >= static_cast<long long>(F.q()))
        throw DomainError("element code out of range: " + tok);
    return static_cast<Elem>(v);
}

// Inverse of to_string; splits on commas outside brackets.
inline Poly parse_poly(const Field& F, const std::string& text)
{
    std::vector<Elem> coeffs;
    std::string tok;
    int depth = 0;
    for (char ch : text) {
        if (ch == '[')
            ++depth;
        if (ch == ']')
            --depth;
        if (ch == ',' && depth == 0) {
            coeffs.push_back(parse_element(F, tok));
            tok.clear();
        } else {
            tok += ch;
        }
    }
    coeffs.push_back(parse_element(F, tok));
    return Poly(std::move(coeffs));
}

} // namespace cycind

#endif
