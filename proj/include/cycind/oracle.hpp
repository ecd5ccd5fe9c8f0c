#ifndef CYCIND_ORACLE_HPP
#define CYCIND_ORACLE_HPP

// Brute force over small matrix groups: enumeration, rational canonical
// data, conjugacy classes, centralizers. Independent of the class formulas
// except where it is compared against them in certify().

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "classdata.hpp"
#include "cycle_index.hpp"
#include "ffpoly.hpp"

namespace cycind
{

struct Matrix {
    int n = 0;
    std::vector<Elem> a; // row major

    Elem at(int i, int j) const { return a[i * n + j]; }
    Elem& at(int i, int j) { return a[i * n + j]; }
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

namespace mat
{

inline Matrix zero(int n)
{
    return {n, std::vector<Elem>(n * n, 0)};
}

inline Matrix identity(int n)
{
    Matrix m = zero(n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

inline Matrix mul(const Field& F, const Matrix& A, const Matrix& B)
{
    int n = A.n;
    Matrix C = zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Elem x = A.at(i, k);
            if (!x)
                continue;
            for (int j = 0; j < n; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(x, B.at(k, j)));
        }
    return C;
}

inline Matrix add(const Field& F, const Matrix& A, const Matrix& B)
{
    Matrix C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i)
        C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

inline int rank(const Field& F, Matrix A)
{
    int n = A.n, r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (A.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        for (int j = 0; j < n; ++j)
            std::swap(A.at(r, j), A.at(piv, j));
        Elem inv = F.inv(A.at(r, c));
        for (int j = 0; j < n; ++j)
            A.at(r, j) = F.mul(A.at(r, j), inv);
        for (int i = 0; i < n; ++i) {
            if (i == r || !A.at(i, c))
                continue;
            Elem f = A.at(i, c);
            for (int j = 0; j < n; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        ++r;
    }
    return r;
}

inline Matrix inverse(const Field& F, const Matrix& M)
{
    int n = M.n;
    Matrix A = M, I = identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (A.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw DomainError("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(A.at(c, j), A.at(piv, j));
            std::swap(I.at(c, j), I.at(piv, j));
        }
        Elem inv = F.inv(A.at(c, c));
        for (int j = 0; j < n; ++j) {
            A.at(c, j) = F.mul(A.at(c, j), inv);
            I.at(c, j) = F.mul(I.at(c, j), inv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || !A.at(i, c))
                continue;
            Elem f = A.at(i, c);
            for (int j = 0; j < n; ++j) {
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(c, j)));
                I.at(i, j) = F.sub(I.at(i, j), F.mul(f, I.at(c, j)));
            }
        }
    }
    return I;
}

// phi(M) by Horner
inline Matrix eval(const Field& F, const Poly& phi, const Matrix& M)
{
    Matrix R = zero(M.n);
    for (std::size_t k = phi.c.size(); k-- > 0;) {
        R = mul(F, R, M);
        for (int i = 0; i < M.n; ++i)
            R.at(i, i) = F.add(R.at(i, i), phi.c[k]);
    }
    return R;
}

inline std::uint64_t key(const Matrix& M, std::uint32_t q)
{
    std::uint64_t k = 0;
    for (std::size_t i = M.a.size(); i-- > 0;)
        k = k * q + M.a[i];
    return k;
}

} // namespace mat

// ---------------------------------------------------------------------------
// Forms and enumeration

namespace detail
{

// Gram matrix of the form preserved by g (empty for GL and Mat).
inline Matrix form_matrix(const GroupId& g, const Field& F)
{
    int n = g.n;
    Matrix J = mat::zero(n);
    switch (g.family) {
    case Family::Sp:
        for (int i = 0; i + 1 < n; i += 2) {
            J.at(i, i + 1) = 1;
            J.at(i + 1, i) = F.neg(1);
        }
        return J;
    case Family::U: return mat::identity(n);
    case Family::Oplus:
    case Family::Ominus: {
        const bool minus = g.family == Family::Ominus;
        const Elem delta = F.nonsquare();
        if (n % 2) {
            int l = n / 2;
            J.at(0, 0) = 1;
            for (int i = 0; i < l; ++i) {
                J.at(1 + i, 1 + l + i) = 1;
                J.at(1 + l + i, 1 + i) = 1;
            }
            if (minus)
                for (auto& x : J.a)
                    x = F.mul(x, delta);
        } else if (!minus) {
            int l = n / 2;
            for (int i = 0; i < l; ++i) {
                J.at(i, l + i) = 1;
                J.at(l + i, i) = 1;
            }
        } else {
            int l = n / 2 - 1;
            for (int i = 0; i < l; ++i) {
                J.at(i, l + i) = 1;
                J.at(l + i, i) = 1;
            }
            J.at(n - 2, n - 2) = 1;
            J.at(n - 1, n - 1) = F.neg(delta);
        }
        return J;
    }
    default: return J;
    }
}

} // namespace detail

inline void check_oracle_size(const GroupId& g, const Budgets& budgets)
{
    g.check();
    Field F = g.field();
    long double keyspace = 1;
    for (int i = 0; i < g.n * g.n; ++i)
        keyspace *= F.q();
    if (keyspace > 1.8e19L)
        throw BudgetExceeded("matrices of " + g.name() + " do not fit a 64-bit key");
    Integer order = g.family == Family::Mat ? orders::mat(g.n, Integer(g.q)) : group_order(g);
    if (order > Integer(static_cast<unsigned long>(budgets.group_order)))
        throw BudgetExceeded("|" + g.name() + "| = " + order.get_str() + " exceeds the group budget " +
                             std::to_string(budgets.group_order));
}

// Every element exactly once, built column by column; each new column must
// keep the form identity on the columns chosen so far (or stay independent
// for GL).
inline std::vector<Matrix> enumerate_group(const GroupId& g, const Budgets& budgets = default_budgets())
{
    check_oracle_size(g, budgets);
    Field F = g.field();
    const int n = g.n;
    const std::uint32_t Fq = F.q();
    std::vector<std::vector<Elem>> vecs;
    {
        std::vector<Elem> v(n, 0);
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i)
            total *= Fq;
        for (std::uint64_t c = 0; c < total; ++c) {
            std::uint64_t x = c;
            for (int i = 0; i < n; ++i) {
                v[i] = static_cast<Elem>(x % Fq);
                x /= Fq;
            }
            vecs.push_back(v);
        }
    }
    const bool has_form = g.family != Family::GL && g.family != Family::Mat;
    const bool hermitian = g.family == Family::U;
    const Matrix J = detail::form_matrix(g, F);
    auto conj = [&](Elem x) { return hermitian ? F.pow(x, g.q) : x; };
    // B(v, w) = v^T J conj(w)
    auto form = [&](const std::vector<Elem>& v, const std::vector<Elem>& w) {
        Elem s = 0;
        for (int i = 0; i < n; ++i) {
            if (!v[i])
                continue;
            for (int j = 0; j < n; ++j)
                if (J.at(i, j) && w[j])
                    s = F.add(s, F.mul(F.mul(v[i], J.at(i, j)), conj(w[j])));
        }
        return s;
    };

    std::vector<Matrix> out;
    std::vector<const std::vector<Elem>*> cols(n);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            Matrix M = mat::zero(n);
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < n; ++r)
                    M.at(r, c) = (*cols[c])[r];
            out.push_back(std::move(M));
            return;
        }
        for (auto& v : vecs) {
            cols[j] = &v;
            bool ok = true;
            if (has_form) {
                for (int i = 0; i <= j && ok; ++i)
                    ok = form(*cols[i], v) == J.at(i, j) && form(v, *cols[i]) == J.at(j, i);
            } else if (g.family == Family::GL) {
                Matrix M = mat::zero(n);
                for (int c = 0; c <= j; ++c)
                    for (int r = 0; r < n; ++r)
                        M.at(r, c) = (*cols[c])[r];
                ok = mat::rank(F, M) == j + 1;
            }
            if (ok)
                rec(j + 1);
        }
    };
    rec(0);
    Integer expect = g.family == Family::Mat ? orders::mat(n, Integer(g.q)) : group_order(g);
    if (Integer(static_cast<unsigned long>(out.size())) != expect)
        throw DomainError("enumerated " + std::to_string(out.size()) + " elements of " + g.name() + ", expected " +
                          expect.get_str());
    return out;
}

// ---------------------------------------------------------------------------
// Rational canonical data

using UnsignedDatum = std::map<Poly, Partition>;

class RcfContext
{
public:
    RcfContext(const Field& F, int n, const Budgets& budgets = default_budgets()) : F_(F), n_(n)
    {
        for (int m = 1; m <= n; ++m)
            for (auto& phi : enumerate_monic_irreducibles(F, m, budgets))
                irr_.push_back(phi);
    }

    // lambda_phi from the kernel dimensions of phi(M)^k: the k-th part of
    // the dual partition is the jump at step k divided by deg phi.
    UnsignedDatum operator()(const Matrix& M) const
    {
        UnsignedDatum out;
        int seen = 0;
        for (auto& phi : irr_) {
            if (seen == n_)
                break;
            int m = phi.degree();
            Matrix P = mat::eval(F_, phi, M);
            int prev = 0;
            int ker = n_ - mat::rank(F_, P);
            if (ker == 0)
                continue;
            std::vector<int> dual;
            Matrix Pk = P;
            while (ker > prev) {
                if ((ker - prev) % m)
                    throw DomainError("kernel jump not divisible by the degree");
                dual.push_back((ker - prev) / m);
                prev = ker;
                Pk = mat::mul(F_, Pk, P);
                ker = n_ - mat::rank(F_, Pk);
            }
            Partition lam = Partition(dual).dual();
            seen += m * lam.size();
            out[phi] = lam;
        }
        if (seen != n_)
            throw DomainError("rational canonical data do not account for the dimension");
        return out;
    }

private:
    Field F_;
    int n_;
    std::vector<Poly> irr_;
};

inline UnsignedDatum rcf_data(const Field& F, const Matrix& M)
{
    return RcfContext(F, M.n)(M);
}

inline Poly characteristic_polynomial(const Field& F, const UnsignedDatum& d)
{
    Poly f = Poly::monomial(0);
    for (auto& [phi, lam] : d)
        f = poly::mul(F, f, poly::pow(F, phi, lam.size()));
    return f;
}

inline std::uint64_t element_order(const Field& F, const Matrix& M)
{
    Matrix I = mat::identity(M.n), P = M;
    for (std::uint64_t k = 1;; ++k) {
        if (P == I)
            return k;
        P = mat::mul(F, P, M);
        if (k > 1'000'000)
            throw DomainError("element order search did not terminate");
    }
}

// ---------------------------------------------------------------------------
// Empirical class table

struct EmpiricalClass {
    Matrix rep;
    std::uint64_t size = 0;
    std::uint64_t centralizer = 0; // counted directly
    UnsignedDatum datum;
};

struct EmpiricalTable {
    GroupId group;
    std::uint64_t order = 0; // |G|, or |Mat(n,q)| for Mat
    std::vector<EmpiricalClass> classes;
    std::uint64_t unipotent = 0;
    Rational mean_order; // over G; unset for Mat
};

namespace detail
{

// A generating set chosen greedily in enumeration order.
inline std::vector<std::size_t> greedy_generators(const Field& F, const std::vector<Matrix>& G,
                                                  const std::unordered_map<std::uint64_t, std::size_t>& index)
{
    std::vector<std::size_t> gens;
    std::vector<char> in(G.size(), 0);
    std::size_t reached = 0;
    for (std::size_t x = 0; x < G.size() && reached < G.size(); ++x) {
        if (in[x])
            continue;
        gens.push_back(x);
        std::fill(in.begin(), in.end(), 0);
        std::deque<std::size_t> queue;
        auto id = index.at(mat::key(mat::identity(G[0].n), F.q()));
        in[id] = 1;
        queue.push_back(id);
        reached = 1;
        while (!queue.empty()) {
            std::size_t y = queue.front();
            queue.pop_front();
            for (auto s : gens) {
                auto z = index.at(mat::key(mat::mul(F, G[y], G[s]), F.q()));
                if (!in[z]) {
                    in[z] = 1;
                    ++reached;
                    queue.push_back(z);
                }
            }
        }
    }
    return gens;
}

} // namespace detail

inline EmpiricalTable empirical_class_table(const GroupId& g, const Budgets& budgets = default_budgets())
{
    Field F = g.field();
    EmpiricalTable t;
    t.group = g;
    RcfContext rcf(F, g.n, budgets);
    const bool is_mat = g.family == Family::Mat;
    GroupId acting = is_mat ? GroupId{Family::GL, g.n, g.q} : g;
    std::vector<Matrix> G = enumerate_group(acting, budgets);
    std::vector<Matrix> X = is_mat ? enumerate_group(g, budgets) : G;
    t.order = X.size();

    auto centralizer_count = [&](const Matrix& x) {
        std::uint64_t c = 0;
        for (auto& h : G)
            if (mat::mul(F, h, x) == mat::mul(F, x, h))
                ++c;
        return c;
    };

    if (g.family == Family::GL || is_mat) {
        // rational canonical data are a complete invariant here
        std::map<UnsignedDatum, EmpiricalClass> by;
        for (auto& x : X) {
            auto d = rcf(x);
            auto [it, fresh] = by.try_emplace(d);
            if (fresh) {
                it->second.rep = x;
                it->second.datum = d;
            }
            ++it->second.size;
        }
        for (auto& [d, c] : by)
            t.classes.push_back(c);
    } else {
        if (G.size() > budgets.orbit_order)
            throw BudgetExceeded("|" + g.name() + "| exceeds the orbit budget " + std::to_string(budgets.orbit_order));
        std::unordered_map<std::uint64_t, std::size_t> index;
        for (std::size_t i = 0; i < G.size(); ++i)
            index[mat::key(G[i], F.q())] = i;
        auto gens = detail::greedy_generators(F, G, index);
        std::vector<Matrix> inv;
        for (auto s : gens)
            inv.push_back(mat::inverse(F, G[s]));
        std::vector<char> seen(G.size(), 0);
        for (std::size_t x = 0; x < G.size(); ++x) {
            if (seen[x])
                continue;
            EmpiricalClass c;
            c.rep = G[x];
            c.datum = rcf(G[x]);
            std::deque<std::size_t> queue{x};
            seen[x] = 1;
            while (!queue.empty()) {
                std::size_t y = queue.front();
                queue.pop_front();
                ++c.size;
                if (rcf(G[y]) != c.datum)
                    throw DomainError("rational canonical data differ inside a conjugacy class of " + g.name());
                for (std::size_t s = 0; s < gens.size(); ++s) {
                    Matrix z = mat::mul(F, mat::mul(F, G[gens[s]], G[y]), inv[s]);
                    auto zi = index.at(mat::key(z, F.q()));
                    if (!seen[zi]) {
                        seen[zi] = 1;
                        queue.push_back(zi);
                    }
                }
            }
            t.classes.push_back(std::move(c));
        }
    }
    Poly zm1 = z_minus_one(F);
    for (auto& c : t.classes) {
        c.centralizer = centralizer_count(c.rep);
        if (c.datum.size() == 1 && c.datum.begin()->first == zm1)
            t.unipotent += c.size;
    }
    if (!is_mat) {
        Integer total = 0;
        for (auto& c : t.classes)
            total += Integer(static_cast<unsigned long>(c.size)) *
                     Integer(static_cast<unsigned long>(element_order(F, c.rep)));
        t.mean_order = frac(total, Integer(static_cast<unsigned long>(t.order)));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Certification against the formula modules

struct CertifyCheck {
    std::string name;
    bool pass = true;
    std::string expected;
    std::string observed;
    std::string datum;
};

struct CertifyReport {
    GroupId group;
    std::size_t classes = 0;
    std::uint64_t elements = 0;
    std::vector<CertifyCheck> checks;

    bool pass() const
    {
        for (auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    std::vector<CertifyCheck> failures() const
    {
        std::vector<CertifyCheck> f;
        for (auto& c : checks)
            if (!c.pass)
                f.push_back(c);
        return f;
    }
};

inline std::string datum_string(const Field& F, const UnsignedDatum& d)
{
    std::string s = "{";
    for (auto& [phi, lam] : d) {
        if (s.size() > 1)
            s += "; ";
        s += to_string(F, phi) + ": " + to_string(lam);
    }
    return s + "}";
}

namespace detail
{

inline SeriesFamily series_family_of(Family f)
{
    switch (f) {
    case Family::GL: return SeriesFamily::GL;
    case Family::Mat: return SeriesFamily::Mat;
    case Family::U: return SeriesFamily::U;
    case Family::Sp: return SeriesFamily::Sp;
    default: return SeriesFamily::OSum;
    }
}

template <class T>
std::string multiset_string(const std::multiset<T>& s)
{
    std::string out = "[";
    for (auto& x : s) {
        if (out.size() > 1)
            out += ",";
        if constexpr (std::is_same_v<T, Integer>)
            out += x.get_str();
        else
            out += std::to_string(x);
    }
    return out + "]";
}

} // namespace detail

inline CertifyReport certify(const GroupId& g, const Budgets& budgets = default_budgets())
{
    g.check();
    Field F = g.field();
    CertifyReport rep;
    rep.group = g;
    EmpiricalTable emp = empirical_class_table(g, budgets);
    rep.classes = emp.classes.size();
    rep.elements = emp.order;
    auto add = [&](std::string name, bool pass, std::string exp, std::string obs, std::string datum = "") {
        rep.checks.push_back({std::move(name), pass, std::move(exp), std::move(obs), std::move(datum)});
    };

    // (a) class sizes and (b) centralizers, matched by unsigned datum
    std::map<UnsignedDatum, std::multiset<Integer>> want_size, got_size, want_cent, got_cent;
    auto formula = enumerate_classes(g, budgets);
    for (auto& c : formula) {
        auto d = unsigned_view(c.datum);
        want_size[d].insert(c.size);
        want_cent[d].insert(c.centralizer);
    }
    const Integer acting_order = g.family == Family::Mat ? orders::gl(g.n, Integer(g.q)) : group_order(g);
    for (auto& c : emp.classes) {
        Integer size = static_cast<unsigned long>(c.size), cent = static_cast<unsigned long>(c.centralizer);
        got_size[c.datum].insert(size);
        got_cent[c.datum].insert(cent);
        if (size * cent != acting_order)
            add("orbit-stabilizer", false, acting_order.get_str(), Integer(size * cent).get_str(), datum_string(F, c.datum));
    }
    std::set<UnsignedDatum> keys;
    for (auto& [d, s] : want_size)
        keys.insert(d);
    for (auto& [d, s] : got_size)
        keys.insert(d);
    bool sizes_ok = true, cents_ok = true;
    for (auto& d : keys) {
        if (want_size[d] != got_size[d]) {
            sizes_ok = false;
            add("class sizes", false, detail::multiset_string(want_size[d]), detail::multiset_string(got_size[d]),
                datum_string(F, d));
        }
        if (want_cent[d] != got_cent[d]) {
            cents_ok = false;
            add("centralizers", false, detail::multiset_string(want_cent[d]), detail::multiset_string(got_cent[d]),
                datum_string(F, d));
        }
    }
    if (sizes_ok)
        add("class sizes", true, std::to_string(formula.size()) + " classes", std::to_string(emp.classes.size()) + " classes");
    if (cents_ok)
        add("centralizers", true, "", "");

    // (c) weighted cycle-index coefficients against empirical averages; the
    // orthogonal series carries both signs, so the partner group is needed.
    std::vector<EmpiricalTable> tables{emp};
    if (is_orthogonal(g.family)) {
        GroupId partner{g.family == Family::Oplus ? Family::Ominus : Family::Oplus, g.n, g.q};
        tables.push_back(empirical_class_table(partner, budgets));
    }
    auto average = [&](auto weight) {
        Rational s = 0;
        for (auto& t : tables) {
            Rational part = 0;
            for (auto& c : t.classes)
                part += Rational(weight(c.datum)) * Integer(static_cast<unsigned long>(c.size));
            s += part / Integer(static_cast<unsigned long>(t.order));
        }
        return s;
    };
    SeriesFamily sf = detail::series_family_of(g.family);
    Budgets b = budgets;
    b.series_degree = std::max(b.series_degree, g.n);
    {
        Rational want = cycle_index_series(sf, g.q, WeightSpec::unit(), g.n, b)[g.n];
        Rational got = average([](const UnsignedDatum&) { return Rational(1); });
        add("mass", want == got, to_string(want), to_string(got));
    }
    for (auto p : {Property::Semisimple, Property::Regular, Property::RegularSemisimple}) {
        Rational want = cycle_index_series(sf, g.q, WeightSpec::of(p), g.n, b)[g.n];
        Rational got = average([p](const UnsignedDatum& d) {
            for (auto& [phi, lam] : d)
                if (!holds(p, lam))
                    return Rational(0);
            return Rational(1);
        });
        add("weight " + property_name(p), want == got, to_string(want), to_string(got));
    }
    {
        Rational want = marked_cycle_index(sf, g.q, WeightSpec::marking(), g.n, b)[g.n].d;
        Rational got = average([](const UnsignedDatum& d) {
            long x = 0;
            for (auto& [phi, lam] : d)
                x += lam.size();
            return Rational(x);
        });
        add("weight marking", want == got, to_string(want), to_string(got));
    }
    {
        // pinned: every characteristic polynomial that occurs
        std::map<Poly, Rational> share;
        for (auto& t : tables)
            for (auto& c : t.classes)
                share[characteristic_polynomial(F, c.datum)] +=
                    frac(Integer(static_cast<unsigned long>(c.size)), Integer(static_cast<unsigned long>(t.order)));
        bool ok = true;
        for (auto& [phi, s] : share) {
            Rational got = s;
            if (sf == SeriesFamily::OSum)
                got /= 2;
            else
                got *= Integer(static_cast<unsigned long>(emp.order));
            Rational closed = charpoly_count(sf, g.q, phi, budgets);
            Rational pinned = charpoly_count_from_index(sf, g.q, phi, budgets);
            if (closed != got || pinned != got) {
                ok = false;
                add("charpoly", false, to_string(closed) + " / " + to_string(pinned), to_string(got), to_string(F, phi));
            }
        }
        if (ok)
            add("charpoly", true, std::to_string(share.size()) + " polynomials", "");
    }
    if (g.family != Family::Mat) {
        Integer s = sylow_order(g);
        add("unipotent", s * s == Integer(static_cast<unsigned long>(emp.unipotent)), Integer(s * s).get_str(),
            std::to_string(emp.unipotent));
    }
    return rep;
}

} // namespace cycind

#endif
