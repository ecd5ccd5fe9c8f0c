#ifndef CYCIND_CENTRALIZER_HPP
#define CYCIND_CENTRALIZER_HPP

// Orders of the classical groups and the per-polynomial centralizer factors.

#include <array>
#include <cstdlib>

#include "core.hpp"
#include "partition.hpp"

namespace cycind
{

namespace orders
{

// |GL(n,Q)| = prod_{i<n} (Q^n - Q^i); Q may be negative.
inline Integer gl(int n, const Integer& Q)
{
    Integer r = 1;
    Integer qn = ipow(Q, n);
    for (int i = 0; i < n; ++i)
        r *= qn - ipow(Q, i);
    return r;
}

inline Integer mat(int n, const Integer& q)
{
    return ipow(q, static_cast<unsigned long>(n) * n);
}

inline Integer u(int n, const Integer& q)
{
    Integer r = ipow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        r *= ipow(q, i) - (i % 2 ? -1 : 1);
    return r;
}

// |Sp(dim,q)| for even dim
inline Integer sp(int dim, const Integer& q)
{
    if (dim % 2)
        throw DomainError("symplectic groups need even dimension");
    int n = dim / 2;
    Integer r = ipow(q, static_cast<unsigned long>(n) * n);
    for (int i = 1; i <= n; ++i)
        r *= ipow(q, 2 * i) - 1;
    return r;
}

// |O^sign(dim,q)|, sign = +1 or -1. O(0) is the trivial group.
inline Integer o(int dim, int sign, const Integer& q)
{
    if (dim == 0)
        return 1;
    int l = dim / 2;
    Integer r = 2;
    if (dim % 2) {
        r *= ipow(q, static_cast<unsigned long>(l) * l);
        for (int i = 1; i <= l; ++i)
            r *= ipow(q, 2 * i) - 1;
    } else {
        r *= ipow(q, static_cast<unsigned long>(l) * l - l);
        r *= ipow(q, l) - sign;
        for (int i = 1; i < l; ++i)
            r *= ipow(q, 2 * i) - 1;
    }
    return r;
}

} // namespace orders

namespace detail
{

// 2 sum_{h<i} h m_h m_i + sum_i (i-1) m_i^2
inline long wall_exponent(const Partition& p)
{
    auto m = p.multiplicities();
    long e = 0;
    for (auto it = m.begin(); it != m.end(); ++it) {
        long i = it->first, mi = it->second;
        e += (i - 1) * mi * mi;
        for (auto jt = m.begin(); jt != it; ++jt)
            e += 2 * jt->first * jt->second * mi;
    }
    return e;
}

} // namespace detail

// c_GL(lambda, Q) = prod_i prod_{k=1}^{m_i} (Q^{d_i} - Q^{d_i - k}).
inline Integer c_gl(const Partition& p, const Integer& Q)
{
    if (Q == 0 || Q == 1 || Q == -1)
        throw DomainError("c_gl needs Q outside {0, 1, -1}");
    Integer r = 1;
    for (auto& [i, mi] : p.multiplicities()) {
        long di = p.d(i);
        Integer top = ipow(Q, di);
        for (int k = 1; k <= mi; ++k)
            r *= top - ipow(Q, di - k);
    }
    return r;
}

struct CglForms {
    Rational product;
    Rational wall_form;
    Rational pochhammer_form;
};

// The defining product and the two rewritten forms of c_GL.
inline CglForms c_gl_rewrites(const Partition& p, const Integer& Q)
{
    CglForms f;
    f.product = Rational(c_gl(p, Q));

    Integer w = ipow(Q, detail::wall_exponent(p));
    for (auto& [i, mi] : p.multiplicities())
        w *= orders::gl(mi, Q);
    f.wall_form = Rational(w);

    // Q^{sum lambda'^2} prod_i (1/Q)_{m_i}, (x)_m = (1-x)...(1-x^m)
    Rational poch = 1;
    for (auto& [i, mi] : p.multiplicities())
        for (int k = 1; k <= mi; ++k)
            poch *= 1 - rpow(Q, -k);
    f.pochhammer_form = Rational(ipow(Q, p.dual_square_sum())) * poch;
    return f;
}

namespace detail
{

inline void require_odd_q(const Integer& q)
{
    if (q % 2 == 0)
        throw DomainError("symplectic and orthogonal data need odd q");
}

// q^{half_exponent/2} * rest, requiring an integral result.
inline Integer half_power_times(const Integer& q, long half_exponent, const Rational& rest)
{
    if (half_exponent % 2)
        throw DomainError("centralizer exponent is not integral");
    Rational r = rpow(q, half_exponent / 2) * rest;
    r.canonicalize();
    if (r.get_den() != 1)
        throw DomainError("centralizer order is not integral");
    return r.get_num();
}

} // namespace detail

// B(z +- 1) for a symplectic signed partition.
inline Integer c_sp(const SignedPartition& sp, const Integer& q)
{
    detail::require_odd_q(q);
    if (sp.kind != SignKind::Symplectic)
        throw DomainError("c_sp needs a symplectic signed partition");
    auto why = sp.invalid_reason();
    if (!why.empty())
        throw DomainError("invalid symplectic signed partition: " + why);
    long half = detail::wall_exponent(sp.shape);
    Rational rest = 1;
    for (auto& [i, mi] : sp.shape.multiplicities()) {
        if (i % 2) {
            rest *= orders::sp(mi, q);
        } else {
            half += mi;
            rest *= orders::o(mi, sp.sign(i), q);
        }
    }
    return detail::half_power_times(q, half, rest);
}

// B(z +- 1) for an orthogonal signed partition.
inline Integer c_o(const SignedPartition& sp, const Integer& q)
{
    detail::require_odd_q(q);
    if (sp.kind != SignKind::Orthogonal)
        throw DomainError("c_o needs an orthogonal signed partition");
    auto why = sp.invalid_reason();
    if (!why.empty())
        throw DomainError("invalid orthogonal signed partition: " + why);
    long half = detail::wall_exponent(sp.shape);
    Rational rest = 1;
    for (auto& [i, mi] : sp.shape.multiplicities()) {
        if (i % 2) {
            rest *= orders::o(mi, sp.sign(i), q);
        } else {
            half -= mi;
            rest *= orders::sp(mi, q);
        }
    }
    return detail::half_power_times(q, half, rest);
}

} // namespace cycind

#endif
