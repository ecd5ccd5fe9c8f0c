#ifndef CYCIND_CYCLE_INDEX_HPP
#define CYCIND_CYCLE_INDEX_HPP

// Cycle-index series of the classical groups and what is read off them:
// finite-n and limiting probabilities, characteristic polynomial counts,
// Jordan block means, factorization-type distributions and average-order
// lower bounds.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "centralizer.hpp"
#include "classdata.hpp"
#include "ffpoly.hpp"
#include "partition.hpp"
#include "series.hpp"

namespace cycind
{

enum class SeriesFamily { GL, Mat, U, Sp, OSum };

inline std::string series_family_name(SeriesFamily f)
{
    switch (f) {
    case SeriesFamily::GL: return "GL";
    case SeriesFamily::Mat: return "Mat";
    case SeriesFamily::U: return "U";
    case SeriesFamily::Sp: return "Sp";
    case SeriesFamily::OSum: return "O";
    }
    return "?";
}

inline SeriesFamily parse_series_family(const std::string& s)
{
    if (s == "GL")
        return SeriesFamily::GL;
    if (s == "Mat")
        return SeriesFamily::Mat;
    if (s == "U")
        return SeriesFamily::U;
    if (s == "Sp")
        return SeriesFamily::Sp;
    if (s == "O" || s == "O-sum" || s == "O-avg")
        return SeriesFamily::OSum;
    throw DomainError("unknown series family '" + s + "' (GL, Mat, U, Sp, O)");
}

inline void check_series_q(SeriesFamily f, std::uint64_t q)
{
    if (f == SeriesFamily::U)
        field_spec(q * q);
    else
        field_spec(q);
    if ((f == SeriesFamily::Sp || f == SeriesFamily::OSum) && q % 2 == 0)
        throw DomainError("Sp and O need odd q");
}

// ---------------------------------------------------------------------------
// Weights

enum class Property { Semisimple, Regular, RegularSemisimple };

inline std::string property_name(Property p)
{
    switch (p) {
    case Property::Semisimple: return "semisimple";
    case Property::Regular: return "regular";
    case Property::RegularSemisimple: return "regular-semisimple";
    }
    return "?";
}

inline Property parse_property(const std::string& s)
{
    if (s == "semisimple" || s == "ss")
        return Property::Semisimple;
    if (s == "regular" || s == "reg")
        return Property::Regular;
    if (s == "regular-semisimple" || s == "rss")
        return Property::RegularSemisimple;
    throw DomainError("unknown property '" + s + "'");
}

// Slotwise form of each property.
inline bool holds(Property p, const Partition& lam)
{
    switch (p) {
    case Property::Semisimple: return lam.largest() <= 1;
    case Property::Regular: return lam.length() <= 1;
    case Property::RegularSemisimple: return lam.size() <= 1;
    }
    return false;
}

struct WeightSpec {
    enum class Kind { Unit, Predicate, Marking };
    Kind kind = Kind::Unit;
    std::function<bool(const Partition&)> predicate;

    static WeightSpec unit() { return {}; }
    static WeightSpec marking() { return {Kind::Marking, {}}; }
    static WeightSpec of(Property p)
    {
        return {Kind::Predicate, [p](const Partition& l) { return holds(p, l); }};
    }

    // Weight of one slot; `copies` is 2 for a pair {phi, involution(phi)}
    // that shares one partition.
    Dual at(const Partition& lam, int copies = 1) const
    {
        switch (kind) {
        case Kind::Unit: return Dual(1);
        case Kind::Predicate:
            if (lam.empty())
                return Dual(1);
            return Dual(predicate(lam) ? 1 : 0);
        case Kind::Marking: return Dual(Rational(1), Rational(copies * lam.size()));
        }
        return Dual(0);
    }
};

namespace detail
{

// sum_lambda w(lambda) u^{unit |lambda|} / c_gl(lambda, Q), |c| when abs_c
inline DSeries gl_slot(int N, const Integer& Q, int unit, bool abs_c, int copies, const WeightSpec& w)
{
    DSeries s(N);
    for (int k = 0; k * unit <= N; ++k)
        for (auto& lam : enumerate_partitions(k)) {
            Dual wt = w.at(lam, copies);
            if (wt == Dual(0))
                continue;
            Integer c = c_gl(lam, Q);
            if (abs_c)
                c = abs(c);
            s[k * unit] += wt * frac(Integer(1), c);
        }
    return s;
}

inline DSeries signed_slot(int N, const Integer& q, SignKind kind, const WeightSpec& w)
{
    DSeries s(N);
    for (int k = 0; k <= N; ++k)
        for (auto& sp : enumerate_signed(kind, k)) {
            Dual wt = w.at(sp.shape);
            if (wt == Dual(0))
                continue;
            Integer c = kind == SignKind::Symplectic ? c_sp(sp, q) : c_o(sp, q);
            s[k] += wt * frac(Integer(1), c);
        }
    return s;
}

// Number of bar-stable irreducibles of degree m other than z +- 1
inline Integer self_bar_nontrivial(std::uint64_t q, int m)
{
    return m == 1 ? Integer(0) : self_bar_count(q, m);
}

} // namespace detail

// Cycle index truncated at u^N, normalized so that the coefficient of u^n
// is the average weight over the group of dimension n. For OSum the
// coefficient is the sum of the O+ and O- averages. Each slot factor only
// depends on degree and kind, so the product is a product of powers.
inline DSeries marked_cycle_index(SeriesFamily fam, std::uint64_t q, const WeightSpec& w, int N,
                                  const Budgets& budgets = default_budgets())
{
    check_series_q(fam, q);
    if (N > budgets.series_degree)
        throw BudgetExceeded("truncation " + std::to_string(N) + " exceeds series budget " +
                             std::to_string(budgets.series_degree));
    Integer Q = static_cast<unsigned long>(q);
    DSeries z = DSeries::one(N);
    switch (fam) {
    case SeriesFamily::GL:
    case SeriesFamily::Mat: {
        bool exclude_z = fam == SeriesFamily::GL;
        for (int m = 1; m <= N; ++m) {
            Integer count = irreducible_count(q, m, exclude_z);
            z *= detail::gl_slot(N, ipow(Q, m), m, false, 1, w).pow(count);
        }
        if (fam == SeriesFamily::Mat)
            for (int n = 0; n <= N; ++n)
                z[n] = z[n] * frac(orders::gl(n, Q), orders::mat(n, Q));
        break;
    }
    case SeriesFamily::U:
        for (int m = 1; m <= N; ++m) {
            Integer self = self_tilde_count(q, m);
            if (self != 0)
                z *= detail::gl_slot(N, -ipow(Q, m), m, true, 1, w).pow(self);
            if (2 * m <= N) {
                Integer pairs = (irreducible_count(q * q, m, true) - self) / 2;
                if (pairs != 0)
                    z *= detail::gl_slot(N, ipow(Q, 2 * m), 2 * m, false, 2, w).pow(pairs);
            }
        }
        break;
    case SeriesFamily::Sp:
    case SeriesFamily::OSum: {
        SignKind kind = fam == SeriesFamily::Sp ? SignKind::Symplectic : SignKind::Orthogonal;
        DSeries trivial = detail::signed_slot(N, Q, kind, w);
        z = trivial * trivial;
        for (int m = 1; m <= N; ++m) {
            Integer self = detail::self_bar_nontrivial(q, m);
            if (self != 0)
                z *= detail::gl_slot(N, -ipow(Q, m / 2), m, true, 1, w).pow(self);
            if (2 * m <= N) {
                Integer all_self = m == 1 ? Integer(2) : self;
                Integer pairs = (irreducible_count(q, m, true) - all_self) / 2;
                if (pairs != 0)
                    z *= detail::gl_slot(N, ipow(Q, m), 2 * m, false, 2, w).pow(pairs);
            }
        }
        break;
    }
    }
    return z;
}

inline RSeries cycle_index_series(SeriesFamily fam, std::uint64_t q, const WeightSpec& w, int N,
                                  const Budgets& budgets = default_budgets())
{
    if (w.kind == WeightSpec::Kind::Marking)
        throw DomainError("the x-marked index has dual coefficients; use marked_cycle_index");
    return value_part(marked_cycle_index(fam, q, w, N, budgets));
}

// Probability that a uniform element has the property; for OSum the
// average over O+ and O- (n >= 1). n is the matrix dimension.
inline Rational finite_n_probability(SeriesFamily fam, int n, std::uint64_t q, Property p,
                                     const Budgets& budgets = default_budgets())
{
    if (n < 0)
        throw DomainError("n must be non-negative");
    if (fam == SeriesFamily::Sp && n % 2)
        throw DomainError("Sp needs even dimension");
    Rational c = cycle_index_series(fam, q, WeightSpec::of(p), n, budgets)[n];
    if (fam == SeriesFamily::OSum && n > 0)
        c /= 2;
    return c;
}

// The same probability by summing class sizes (a single O+ or O- group).
inline Rational probability_by_classes(const GroupId& g, Property p, const Budgets& budgets = default_budgets())
{
    Integer total = 0, hit = 0;
    for (auto& c : enumerate_classes(g, budgets)) {
        total += c.size;
        bool ok = true;
        for (auto& [phi, lam] : unsigned_view(c.datum))
            ok = ok && holds(p, lam);
        if (ok)
            hit += c.size;
    }
    return frac(hit, total);
}

// ---------------------------------------------------------------------------
// Limits

enum class LimitKind { SsMat, SsGL, RssMat, RegMat, RssGL, RegGL };

inline const std::vector<LimitKind>& all_limit_kinds()
{
    static const std::vector<LimitKind> k = {LimitKind::SsMat, LimitKind::SsGL,  LimitKind::RssMat,
                                             LimitKind::RegMat, LimitKind::RssGL, LimitKind::RegGL};
    return k;
}

inline std::string limit_kind_name(LimitKind k)
{
    switch (k) {
    case LimitKind::SsMat: return "ss-Mat";
    case LimitKind::SsGL: return "ss-GL";
    case LimitKind::RssMat: return "rss-Mat";
    case LimitKind::RegMat: return "reg-Mat";
    case LimitKind::RssGL: return "rss-GL";
    case LimitKind::RegGL: return "reg-GL";
    }
    return "?";
}

inline LimitKind parse_limit_kind(const std::string& s)
{
    for (auto k : all_limit_kinds())
        if (limit_kind_name(k) == s)
            return k;
    throw DomainError("unknown limit kind '" + s + "'");
}

inline SeriesFamily limit_family(LimitKind k)
{
    return k == LimitKind::SsGL || k == LimitKind::RssGL || k == LimitKind::RegGL ? SeriesFamily::GL
                                                                                   : SeriesFamily::Mat;
}

inline Property limit_property(LimitKind k)
{
    switch (k) {
    case LimitKind::SsMat:
    case LimitKind::SsGL: return Property::Semisimple;
    case LimitKind::RssMat:
    case LimitKind::RssGL: return Property::RegularSemisimple;
    default: return Property::Regular;
    }
}

// Certified enclosure lower <= P <= upper.
struct LimitValue {
    Rational lower;
    Rational upper;
    int terms = 0; // factors kept in the truncated product (0 when exact)

    bool exact() const { return lower == upper; }
    Rational midpoint() const { return (lower + upper) / 2; }
    Rational error_bound() const { return (upper - lower) / 2; }
};

inline LimitValue limit_probability(LimitKind kind, std::uint64_t q, const Rational& eps)
{
    if (q < 2)
        throw DomainError("q must be at least 2");
    if (eps <= 0)
        throw DomainError("precision must be positive");
    Integer Q = static_cast<unsigned long>(q);
    auto inv = [&](long e) { return rpow(Q, -e); };
    if (kind == LimitKind::RssGL) {
        Rational v = 1 - inv(1);
        return {v, v, 0};
    }
    if (kind == LimitKind::RegGL) {
        Rational v = (1 - inv(5)) / (1 + inv(3));
        return {v, v, 0};
    }
    for (int R = 8;; R *= 2) {
        Rational P = 1;
        for (int r = 1; r <= R; ++r) {
            int res = r % 5;
            switch (kind) {
            case LimitKind::SsMat:
                if (res == 0 || res == 2 || res == 3)
                    P *= 1 - inv(r - 1);
                break;
            case LimitKind::SsGL:
                if (res == 0 || res == 2 || res == 3)
                    P *= (1 - inv(r - 1)) / (1 - inv(r));
                break;
            case LimitKind::RssMat: P *= 1 - inv(r); break;
            case LimitKind::RegMat:
                if (r >= 3)
                    P *= 1 - inv(r);
                break;
            default: break;
            }
        }
        if (kind == LimitKind::RegMat)
            P *= 1 - inv(5);
        // every omitted factor is (1 - x) or 1/(1 - x) with x <= q^{-(r-1)}, r > R
        Rational S = inv(R) / (1 - inv(1));
        LimitValue v{P * (1 - S), P / (1 - S), R};
        if (v.upper - v.lower < eps)
            return v;
    }
}

// ---------------------------------------------------------------------------
// Product form for one polynomial: sum_lambda t^{|lambda|}/c_gl(lambda,Q)
// against prod_{r>=1} 1/(1 - t/Q^r).

struct SeriesPair {
    RSeries lhs;
    RSeries rhs;
    bool equal() const { return lhs == rhs; }
};

inline SeriesPair sum_inverse_c_series(const Integer& Q, int N)
{
    if (abs(Q) < 2)
        throw DomainError("Q must satisfy |Q| >= 2");
    SeriesPair out{RSeries(N), RSeries(N)};
    for (int k = 0; k <= N; ++k) {
        for (auto& lam : enumerate_partitions(k))
            out.lhs[k] += frac(Integer(1), c_gl(lam, Q));
        // t^k collects Q^{-(r_1+...+r_k)} over 1 <= r_1 <= ... <= r_k,
        // which sums to Q^{-k} / prod_{i<=k} (1 - Q^{-i})
        Rational c = rpow(Q, -k);
        for (int i = 1; i <= k; ++i)
            c /= 1 - rpow(Q, -i);
        out.rhs[k] = c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gordon's identities

struct GordonResult {
    RSeries lhs;
    RSeries rhs;
    bool equal() const { return lhs == rhs; }
};

inline GordonResult gordon_check(int k, int i, int M)
{
    if (k < 2 || i < 1 || i > k || M < 0)
        throw DomainError("gordon_check needs k >= 2, 1 <= i <= k, M >= 0");
    // 1/(x)_n for n up to M
    std::vector<RSeries> inv_poch{RSeries::one(M)};
    for (int n = 1; n <= M; ++n)
        inv_poch.push_back(inv_poch.back() * geometric(M, 1, n));

    GordonResult r{RSeries(M), RSeries::one(M)};
    // N_1 >= ... >= N_{k-1} >= 0, n_j = N_j - N_{j+1}
    std::vector<int> Nv(k - 1, 0);
    std::function<void(int, int, long)> rec = [&](int j, int cap, long sq) {
        if (j == k - 1) {
            long e = sq;
            for (int t = i - 1; t < k - 1; ++t)
                e += Nv[t];
            if (e > M)
                return;
            RSeries term = RSeries::one(M);
            for (int t = 0; t < k - 1; ++t) {
                int n = Nv[t] - (t + 1 < k - 1 ? Nv[t + 1] : 0);
                term *= inv_poch[n];
            }
            for (int d = M; d >= 0; --d)
                r.lhs[d] += d >= e ? term[d - e] : Rational(0);
            return;
        }
        for (int v = 0; v <= cap && sq + long(v) * v <= M; ++v) {
            Nv[j] = v;
            rec(j + 1, v, sq + long(v) * v);
        }
    };
    rec(0, M, 0);

    for (int m = 1; m <= M; ++m) {
        int res = m % (2 * k + 1);
        if (res == 0 || res == i || res == 2 * k + 1 - i)
            continue;
        r.rhs *= geometric(M, 1, m);
    }
    return r;
}

// The c_GL form at x = 1/q, numerically: prod_r (1 - q^{-r}) times the sum
// of 1/c_gl over lambda_1 < k, against prod_{r = 0, +-k mod 2k+1} (1 - q^{-r}).
// Both sides are truncated so the neglected mass is far below q^{-digits}.
struct CentralizerFormResult {
    Rational lhs;
    Rational rhs;
    Rational tolerance;
    bool ok() const { return abs(lhs - rhs) < tolerance; }
};

inline CentralizerFormResult gordon_centralizer_check(int k, std::uint64_t q, int digits = 30)
{
    if (k < 2 || q < 2)
        throw DomainError("gordon_centralizer_check needs k >= 2 and q >= 2");
    Integer Q = static_cast<unsigned long>(q);
    const int cutoff = 2 * digits + 20;
    CentralizerFormResult res;
    res.tolerance = rpow(Q, -digits);
    Rational sum = 0;
    // lambda_1 < k: the dual has at most k-1 parts
    std::vector<int> dual;
    std::function<void(int, int, long)> rec = [&](int j, int cap, long sq) {
        std::vector<int> parts;
        for (int x : dual)
            if (x > 0)
                parts.push_back(x);
        if (j == k - 1) {
            Partition lam = Partition(parts).dual();
            sum += frac(Integer(1), c_gl(lam, Q));
            return;
        }
        for (int v = 0; v <= cap && sq + long(v) * v <= cutoff; ++v) {
            dual.push_back(v);
            rec(j + 1, v, sq + long(v) * v);
            dual.pop_back();
        }
    };
    rec(0, cutoff, 0);
    Rational prod_all = 1, prod_sel = 1;
    for (int r = 1; r <= cutoff; ++r) {
        Rational f = 1 - rpow(Q, -r);
        prod_all *= f;
        int m = r % (2 * k + 1);
        if (m == 0 || m == k || m == k + 1)
            prod_sel *= f;
    }
    res.lhs = prod_all * sum;
    res.rhs = prod_sel;
    return res;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials

namespace detail
{

// Q^{j(j-1)} / |GL(j,Q)|
inline Rational gl_share(const Integer& Q, int j)
{
    return frac(ipow(Q, static_cast<unsigned long>(j) * (j - 1)), orders::gl(j, Q));
}
// Q^{j(j-1)} / |U(j,Q)|
inline Rational u_share(const Integer& Q, int j)
{
    return frac(ipow(Q, static_cast<unsigned long>(j) * (j - 1)), orders::u(j, Q));
}
// the orthogonal F(n)
inline Rational o_share(const Integer& q, int n)
{
    int e = n % 2 ? n - 1 : n;
    return frac(ipow(q, static_cast<unsigned long>(e) * e / 2), orders::sp(e, q));
}
inline Rational sp_share(const Integer& q, int a)
{
    return frac(ipow(q, 2ul * a * a), orders::sp(2 * a, q));
}

} // namespace detail

// Shape of a characteristic polynomial relative to an involution.
struct CharShape {
    int a = 0; // multiplicity of z - 1
    int b = 0; // multiplicity of z + 1
    struct Part {
        int m;     // degree of phi
        int j;     // multiplicity of phi (of each member for a pair)
        bool self; // phi equals its involution image
    };
    std::vector<Part> parts;
    bool compatible = true;
    bool has_z = false;
};

inline CharShape char_shape(SeriesFamily fam, std::uint64_t q, const Poly& phi, const Budgets& budgets)
{
    Field F(fam == SeriesFamily::U ? q * q : q);
    CharShape s;
    auto fs = factor(F, phi, budgets);
    std::map<Poly, int> mult;
    for (auto& f : fs)
        mult[f.poly] = f.multiplicity;
    const bool signed_family = fam == SeriesFamily::Sp || fam == SeriesFamily::OSum;
    Poly zm1 = z_minus_one(F), zp1 = z_plus_one(F);
    for (auto& [f, j] : mult) {
        if (f.constant() == 0) {
            s.has_z = true;
            if (fam != SeriesFamily::Mat)
                s.compatible = false;
            s.parts.push_back({1, j, true});
            continue;
        }
        if (fam == SeriesFamily::GL || fam == SeriesFamily::Mat) {
            s.parts.push_back({f.degree(), j, true});
            continue;
        }
        if (signed_family && (f == zm1 || f == zp1)) {
            (f == zm1 ? s.a : s.b) = j;
            continue;
        }
        Poly g = fam == SeriesFamily::U ? tilde(F, static_cast<std::uint32_t>(q), f) : bar(F, f);
        if (g == f) {
            s.parts.push_back({f.degree(), j, true});
        } else {
            auto it = mult.find(g);
            if (it == mult.end() || it->second != j)
                s.compatible = false;
            else if (f < g)
                s.parts.push_back({f.degree(), j, false});
        }
    }
    return s;
}

// Count of elements with characteristic polynomial phi (GL, Mat, U, Sp),
// or for OSum half the sum of the O+ and O- proportions. Incompatible
// polynomials give 0. Closed forms.
inline Rational charpoly_from_shape(SeriesFamily fam, std::uint64_t q, int n, const CharShape& s)
{
    if (!s.compatible)
        return 0;
    Integer Q = static_cast<unsigned long>(q);
    Rational r = 1;
    switch (fam) {
    case SeriesFamily::GL:
    case SeriesFamily::Mat:
        r = orders::gl(n, Q);
        for (auto& p : s.parts)
            r *= detail::gl_share(ipow(Q, p.m), p.j);
        return r;
    case SeriesFamily::U:
        r = orders::u(n, Q);
        for (auto& p : s.parts)
            r *= p.self ? detail::u_share(ipow(Q, p.m), p.j) : detail::gl_share(ipow(Q, 2 * p.m), p.j);
        return r;
    case SeriesFamily::Sp:
        if (s.a % 2 || s.b % 2)
            return 0;
        r = orders::sp(n, Q) * detail::sp_share(Q, s.a / 2) * detail::sp_share(Q, s.b / 2);
        break;
    case SeriesFamily::OSum: r = detail::o_share(Q, s.a) * detail::o_share(Q, s.b) / 2; break;
    }
    for (auto& p : s.parts) {
        if (p.self) {
            if (p.m % 2)
                return 0;
            r *= detail::u_share(ipow(Q, p.m / 2), p.j);
        } else {
            r *= detail::gl_share(ipow(Q, p.m), p.j);
        }
    }
    return r;
}

inline Rational charpoly_count(SeriesFamily fam, std::uint64_t q, const Poly& phi,
                               const Budgets& budgets = default_budgets())
{
    check_series_q(fam, q);
    if (!phi.is_monic() || phi.degree() < 1)
        throw DomainError("characteristic polynomial must be monic of positive degree");
    if (fam == SeriesFamily::Sp && phi.degree() % 2)
        return 0;
    return charpoly_from_shape(fam, q, phi.degree(), char_shape(fam, q, phi, budgets));
}

// The same quantity straight from the cycle index: every factor of phi
// keeps only the partitions of its multiplicity, every other slot only
// the empty partition.
inline Rational charpoly_count_from_index(SeriesFamily fam, std::uint64_t q, const Poly& phi,
                                          const Budgets& budgets = default_budgets())
{
    check_series_q(fam, q);
    if (!phi.is_monic() || phi.degree() < 1)
        throw DomainError("characteristic polynomial must be monic of positive degree");
    CharShape s = char_shape(fam, q, phi, budgets);
    if (!s.compatible)
        return 0;
    Integer Q = static_cast<unsigned long>(q);
    int n = phi.degree();
    auto gl_sum = [](const Integer& B, int j) {
        Rational t = 0;
        for (auto& lam : enumerate_partitions(j))
            t += frac(Integer(1), Integer(abs(c_gl(lam, B))));
        return t;
    };
    auto signed_sum = [&](SignKind kind, int j) {
        Rational t = 0;
        for (auto& sp : enumerate_signed(kind, j))
            t += frac(Integer(1), kind == SignKind::Symplectic ? c_sp(sp, Q) : c_o(sp, Q));
        return t;
    };
    Rational r;
    switch (fam) {
    case SeriesFamily::GL:
    case SeriesFamily::Mat:
        r = orders::gl(n, Q);
        for (auto& p : s.parts)
            r *= gl_sum(ipow(Q, p.m), p.j);
        return r;
    case SeriesFamily::U:
        r = orders::u(n, Q);
        for (auto& p : s.parts)
            r *= p.self ? gl_sum(-ipow(Q, p.m), p.j) : gl_sum(ipow(Q, 2 * p.m), p.j);
        return r;
    case SeriesFamily::Sp:
        if (n % 2)
            return 0;
        r = orders::sp(n, Q) * signed_sum(SignKind::Symplectic, s.a) * signed_sum(SignKind::Symplectic, s.b);
        break;
    case SeriesFamily::OSum:
        r = signed_sum(SignKind::Orthogonal, s.a) * signed_sum(SignKind::Orthogonal, s.b) / 2;
        break;
    }
    for (auto& p : s.parts) {
        if (p.self && p.m % 2)
            return 0;
        r *= p.self ? gl_sum(-ipow(Q, p.m / 2), p.j) : gl_sum(ipow(Q, p.m), p.j);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Jordan blocks: X = sum over phi of |lambda_phi| (pairs count twice).

struct JordanRow {
    int n = 0; // dimension index; half-dimension for Sp
    Rational mean;
    Rational residual; // mean - c H_n
};

inline Rational harmonic(int n)
{
    Rational h = 0;
    for (int i = 1; i <= n; ++i)
        h += Rational(1, i);
    return h;
}

inline Rational jordan_constant(SeriesFamily fam)
{
    return fam == SeriesFamily::GL || fam == SeriesFamily::Mat ? Rational(1) : Rational(3, 2);
}

// E[X] for n = 1..n_max; Sp rows are indexed by half-dimension, O rows by
// dimension with the O+/O- average.
inline std::vector<JordanRow> jordan_block_means(SeriesFamily fam, std::uint64_t q, int n_max,
                                                 const Budgets& budgets = default_budgets())
{
    if (n_max < 1)
        throw DomainError("n_max must be at least 1");
    int step = fam == SeriesFamily::Sp ? 2 : 1;
    RSeries e = derivative_part(marked_cycle_index(fam, q, WeightSpec::marking(), step * n_max, budgets));
    std::vector<JordanRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        Rational m = e[step * n];
        if (fam == SeriesFamily::OSum)
            m /= 2;
        rows.push_back({n, m, m - jordan_constant(fam) * harmonic(n)});
    }
    return rows;
}

inline Rational jordan_block_mean(SeriesFamily fam, int n, std::uint64_t q,
                                  const Budgets& budgets = default_budgets())
{
    return jordan_block_means(fam, q, n, budgets).back().mean;
}

// ---------------------------------------------------------------------------
// Factorization types of GL(n,q) against cycle types of S_n.
// A type is a partition of n with a_m parts equal to m.

using TypeDistribution = std::map<Partition, Rational>;

inline TypeDistribution symmetric_type_distribution(int n)
{
    TypeDistribution d;
    for (auto& lam : enumerate_partitions(n)) {
        Rational p = 1;
        for (auto& [m, a] : lam.multiplicities()) {
            Integer f = 1;
            for (int i = 2; i <= a; ++i)
                f *= i;
            p /= Rational(f * ipow(Integer(m), a));
        }
        d[lam] = p;
    }
    return d;
}

inline TypeDistribution gl_type_distribution(int n, std::uint64_t q)
{
    field_spec(q);
    if (n < 1)
        throw DomainError("n must be at least 1");
    Integer Q = static_cast<unsigned long>(q);
    // t[m][a]: mass of the degree-m slots holding a factors in total
    std::vector<RSeries> t(n + 1, RSeries(n));
    for (int m = 1; m <= n; ++m) {
        RSeries s(n / m);
        for (int k = 0; k <= n / m; ++k)
            for (auto& lam : enumerate_partitions(k))
                s[k] += frac(Integer(1), c_gl(lam, ipow(Q, m)));
        RSeries p = s.pow(irreducible_count(q, m, true));
        t[m] = RSeries(n);
        for (int k = 0; k <= n / m; ++k)
            t[m][k] = p[k];
    }
    TypeDistribution d;
    for (auto& lam : enumerate_partitions(n)) {
        auto mult = lam.multiplicities();
        Rational p = 1;
        for (int m = 1; m <= n; ++m) {
            auto it = mult.find(m);
            p *= t[m][it == mult.end() ? 0 : it->second];
        }
        d[lam] = p;
    }
    return d;
}

inline Rational total_variation(const TypeDistribution& a, const TypeDistribution& b)
{
    Rational s = 0;
    for (auto& [k, v] : a) {
        auto it = b.find(k);
        s += abs(v - (it == b.end() ? Rational(0) : it->second));
    }
    for (auto& [k, v] : b)
        if (!a.count(k))
            s += abs(v);
    return s / 2;
}

inline Rational weyl_limit_distance(int n, std::uint64_t q)
{
    return total_variation(gl_type_distribution(n, q), symmetric_type_distribution(n));
}

// ---------------------------------------------------------------------------
// Average element order: elements whose characteristic polynomial has
// roots of maximal multiplicative order contribute (count) * (proportion)
// * (order) to the mean, which is a lower bound for it.

inline Rational avg_order_lower_bound(SeriesFamily fam, int n, std::uint64_t q,
                                      const Budgets& budgets = default_budgets())
{
    check_series_q(fam, q);
    if (n < 1)
        throw DomainError("n must be at least 1");
    Integer Q = static_cast<unsigned long>(q);
    switch (fam) {
    case SeriesFamily::U: {
        if (n % 2) {
            // self-tilde irreducibles of degree n with roots of order q^n + 1
            Integer N = ipow(Q, n) + 1;
            Integer count = polys_with_root_order(q * q, n, N, budgets);
            Rational share = detail::u_share(ipow(Q, n), 1);
            return Rational(count) * share * Rational(N);
        }
        // pairs of degree n/2 over F_{q^2} with roots of order q^n - 1
        Integer N = ipow(Q, n) - 1;
        Integer pairs = polys_with_root_order(q * q, n / 2, N, budgets) / 2;
        return Rational(pairs) * detail::gl_share(ipow(Q, n), 1) * Rational(N);
    }
    case SeriesFamily::Sp: {
        if (n % 2)
            throw DomainError("Sp needs even dimension");
        int h = n / 2;
        Integer N = ipow(Q, h) + 1;
        Integer count = polys_with_root_order(q, n, N, budgets);
        return Rational(count) * detail::u_share(ipow(Q, h), 1) * Rational(N);
    }
    case SeriesFamily::OSum: {
        if (n == 1)
            return 1;
        int l = n / 2;
        Integer N = ipow(Q, l) + 1;
        Integer count = polys_with_root_order(q, 2 * l, N, budgets);
        // averaged over O+ and O-; an odd dimension adds z - 1 or z + 1
        Rational share = detail::u_share(ipow(Q, l), 1) / 2;
        if (n % 2)
            share *= 2 * detail::o_share(Q, 1);
        return Rational(count) * share * Rational(N);
    }
    default: throw DomainError("average-order bounds cover U, Sp and O");
    }
}

} // namespace cycind

#endif
