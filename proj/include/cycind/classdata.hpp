#ifndef CYCIND_CLASSDATA_HPP
#define CYCIND_CLASSDATA_HPP

// Conjugacy-class data for GL, Mat, U, Sp and O^{+-}: validation, class
// sizes, Witt types and full enumeration.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "centralizer.hpp"
#include "core.hpp"
#include "ffpoly.hpp"
#include "partition.hpp"

namespace cycind
{

enum class Family { GL, Mat, U, Sp, Oplus, Ominus };

inline std::string family_name(Family f)
{
    switch (f) {
    case Family::GL: return "GL";
    case Family::Mat: return "Mat";
    case Family::U: return "U";
    case Family::Sp: return "Sp";
    case Family::Oplus: return "O+";
    case Family::Ominus: return "O-";
    }
    return "?";
}

inline Family parse_family(const std::string& s)
{
    if (s == "GL")
        return Family::GL;
    if (s == "Mat")
        return Family::Mat;
    if (s == "U")
        return Family::U;
    if (s == "Sp")
        return Family::Sp;
    if (s == "O+" || s == "Oplus")
        return Family::Oplus;
    if (s == "O-" || s == "Ominus")
        return Family::Ominus;
    throw DomainError("unknown group family '" + s + "'");
}

inline bool is_orthogonal(Family f)
{
    return f == Family::Oplus || f == Family::Ominus;
}

// n is the matrix dimension in every family (Sp(2,3) has n = 2). For U the
// matrices live over F_{q^2}.
struct GroupId {
    Family family = Family::GL;
    int n = 1;
    std::uint32_t q = 2;

    int o_sign() const { return family == Family::Ominus ? -1 : 1; }

    void check() const
    {
        if (n < 0)
            throw DomainError("dimension must be non-negative");
        field_spec(q);
        if (family == Family::U && std::uint64_t(q) * q > max_field_size)
            throw DomainError("U(n,q) needs q^2 <= 65536");
        if ((family == Family::Sp || is_orthogonal(family)) && q % 2 == 0)
            throw DomainError("characteristic 2 symplectic/orthogonal groups are not supported");
        if (family == Family::Sp && n % 2)
            throw DomainError("Sp needs even dimension");
        if (family == Family::Ominus && n == 0)
            throw DomainError("O-(0,q) does not exist");
    }

    std::string name() const { return family_name(family) + "(" + std::to_string(n) + "," + std::to_string(q) + ")"; }

    // Field the matrix entries and polynomial coefficients live in.
    Field field() const { return Field(family == Family::U ? std::uint64_t(q) * q : q); }

    friend bool operator==(const GroupId&, const GroupId&) = default;
};

inline Integer group_order(const GroupId& g)
{
    g.check();
    Integer q = g.q;
    switch (g.family) {
    case Family::GL: return orders::gl(g.n, q);
    case Family::Mat: return orders::mat(g.n, q);
    case Family::U: return orders::u(g.n, q);
    case Family::Sp: return orders::sp(g.n, q);
    case Family::Oplus:
    case Family::Ominus: return orders::o(g.n, g.o_sign(), q);
    }
    return 0;
}

// Order of a Sylow p-subgroup (for Mat, that of GL).
inline Integer sylow_order(const GroupId& g)
{
    g.check();
    Integer q = g.q;
    unsigned long n = g.n;
    switch (g.family) {
    case Family::GL:
    case Family::Mat:
    case Family::U: return ipow(q, n * (n - (n ? 1 : 0)) / 2);
    case Family::Sp: return ipow(q, (n / 2) * (n / 2));
    default: {
        unsigned long l = n / 2;
        return n % 2 ? ipow(q, l * l) : ipow(q, l * l - l);
    }
    }
}

// ---------------------------------------------------------------------------
// Witt types

// A Witt class over F_q (q odd): dimension parity and whether the signed
// discriminant (-1)^{floor(d/2)} det is a square.
struct WittType {
    int parity = 0;
    bool square = true;

    static WittType zero() { return {0, true}; }
    static WittType one() { return {1, true}; }
    static WittType delta() { return {1, false}; }
    static WittType omega() { return {0, false}; }

    // Witt class of the form defining O^sign(dim, q).
    static WittType of_orthogonal(int dim, int sign) { return {dim % 2, sign > 0}; }

    std::string name() const
    {
        if (parity)
            return square ? "1" : "delta";
        return square ? "0" : "omega";
    }

    // The orthogonal group (sign) this type defines in its parity.
    int group_sign() const { return square ? 1 : -1; }

    friend bool operator==(const WittType&, const WittType&) = default;
};

// Orthogonal sum. Joining two odd spaces multiplies the discriminant by -1,
// which is a square exactly when q = 1 mod 4.
inline WittType witt_add(const WittType& a, const WittType& b, std::uint64_t q)
{
    if (q % 2 == 0)
        throw DomainError("Witt types need odd q");
    bool sq = a.square == b.square;
    if (a.parity && b.parity && q % 4 == 3)
        sq = !sq;
    return {(a.parity + b.parity) % 2, sq};
}

// ---------------------------------------------------------------------------
// Class data

struct ClassDatum {
    std::map<Poly, Partition> data;              // phi -> lambda_phi
    std::map<Poly, SignedPartition> signed_data; // z-1, z+1 for Sp/O

    void normalize()
    {
        std::erase_if(data, [](const auto& kv) { return kv.second.empty(); });
        std::erase_if(signed_data, [](const auto& kv) { return kv.second.shape.empty(); });
    }

    friend bool operator==(const ClassDatum&, const ClassDatum&) = default;
};

inline bool operator<(const ClassDatum& a, const ClassDatum& b)
{
    if (a.data != b.data)
        return a.data < b.data;
    return a.signed_data < b.signed_data;
}

inline Poly z_minus_one(const Field& F)
{
    return Poly::linear(F, 1);
}
inline Poly z_plus_one(const Field& F)
{
    return Poly::linear(F, F.neg(1));
}

// The signs forgotten: every entry as a plain partition.
inline std::map<Poly, Partition> unsigned_view(const ClassDatum& d)
{
    std::map<Poly, Partition> out = d.data;
    for (auto& [phi, sp] : d.signed_data)
        if (!sp.shape.empty())
            out[phi] = sp.shape;
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

inline int weighted_degree(const ClassDatum& d)
{
    int s = 0;
    for (auto& [phi, lam] : unsigned_view(d))
        s += phi.degree() * lam.size();
    return s;
}

struct Validation {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

namespace detail
{

inline Validation fail(std::string why)
{
    return {false, std::move(why)};
}

inline Poly involution(const GroupId& g, const Field& F, const Poly& phi)
{
    return g.family == Family::U ? tilde(F, g.q, phi) : bar(F, phi);
}

} // namespace detail

// Witt class of the form carried by an orthogonal datum.
inline WittType witt_type_of_datum(const ClassDatum& d, std::uint64_t q)
{
    Field F(q);
    WittType w = WittType::zero();
    for (auto& [phi, sp] : d.signed_data) {
        if (sp.kind != SignKind::Orthogonal)
            throw DomainError("witt_type_of_datum needs orthogonal signed partitions");
        for (auto& [i, mi] : sp.shape.multiplicities())
            if (i % 2)
                w = witt_add(w, WittType::of_orthogonal(mi, sp.sign(i)), q);
    }
    for (auto& [phi, lam] : d.data) {
        if (lam.size() % 2 == 0)
            continue;
        if (phi.constant() == 0)
            throw DomainError("lambda_z must be empty");
        if (bar(F, phi) == phi)
            w = witt_add(w, WittType::omega(), q);
        // a pair phi != bar(phi) contributes 2|lambda| omega = 0
    }
    return w;
}

inline Validation validate(const ClassDatum& datum, const GroupId& g)
{
    try {
        g.check();
    } catch (const DomainError& e) {
        return detail::fail(e.what());
    }
    Field F = g.field();
    const bool signed_family = g.family == Family::Sp || is_orthogonal(g.family);
    const Poly zm1 = z_minus_one(F), zp1 = z_plus_one(F);

    for (auto& [phi, lam] : datum.data) {
        if (!phi.is_monic() || !is_irreducible(F, phi))
            return detail::fail("key " + to_string(F, phi) + " is not monic irreducible over F_" + std::to_string(F.q()));
        if (lam.empty())
            continue;
        if (phi.constant() == 0 && g.family != Family::Mat)
            return detail::fail("λ_z nonempty");
        if (signed_family && (phi == zm1 || phi == zp1))
            return detail::fail("z±1 must carry a signed partition");
    }
    for (auto& [phi, sp] : datum.signed_data) {
        if (!signed_family)
            return detail::fail("signed partitions only occur for Sp and O");
        if (!(phi == zm1 || phi == zp1))
            return detail::fail("signed partition attached to " + to_string(F, phi) + ", not z±1");
        SignKind want = g.family == Family::Sp ? SignKind::Symplectic : SignKind::Orthogonal;
        if (sp.kind != want)
            return detail::fail("wrong kind of signed partition at " + to_string(F, phi));
        auto why = sp.invalid_reason();
        if (!why.empty())
            return detail::fail(why + " at " + to_string(F, phi));
    }
    if (g.family == Family::U || signed_family) {
        for (auto& [phi, lam] : datum.data) {
            if (lam.empty())
                continue;
            Poly partner = detail::involution(g, F, phi);
            auto it = datum.data.find(partner);
            Partition other = it == datum.data.end() ? Partition{} : it->second;
            if (!(other == lam))
                return detail::fail("λ differs between " + to_string(F, phi) + " and its involution image " +
                                    to_string(F, partner));
        }
    }
    int deg = weighted_degree(datum);
    if (deg != g.n)
        return detail::fail("weighted degree " + std::to_string(deg) + " differs from n = " + std::to_string(g.n));
    if (is_orthogonal(g.family)) {
        WittType w = witt_type_of_datum(datum, g.q);
        if (w.group_sign() != g.o_sign())
            return detail::fail("Witt type " + w.name() + " belongs to the other orthogonal group");
    }
    return {};
}

// prod_phi B(phi); the datum must be valid for g.
inline Integer centralizer_order(const ClassDatum& datum, const GroupId& g)
{
    if (auto v = validate(datum, g); !v)
        throw DomainError("invalid class datum for " + g.name() + ": " + v.reason);
    Field F = g.field();
    Integer q = g.q;
    Integer c = 1;
    for (auto& [phi, sp] : datum.signed_data)
        c *= g.family == Family::Sp ? c_sp(sp, q) : c_o(sp, q);
    for (auto& [phi, lam] : datum.data) {
        if (lam.empty())
            continue;
        unsigned long m = phi.degree();
        switch (g.family) {
        case Family::GL:
        case Family::Mat: c *= c_gl(lam, ipow(q, m)); break;
        case Family::U: {
            Poly t = tilde(F, g.q, phi);
            if (t == phi)
                c *= abs(c_gl(lam, -ipow(q, m)));
            else if (phi < t)
                c *= c_gl(lam, ipow(q, 2 * m));
            break;
        }
        default: {
            Poly b = bar(F, phi);
            if (b == phi)
                c *= abs(c_gl(lam, -ipow(q, m / 2)));
            else if (phi < b)
                c *= c_gl(lam, ipow(q, m));
        }
        }
    }
    return c;
}

inline Integer class_size(const ClassDatum& datum, const GroupId& g)
{
    Integer order = g.family == Family::Mat ? orders::gl(g.n, Integer(g.q)) : group_order(g);
    Integer c = centralizer_order(datum, g);
    if (order % c != 0)
        throw DomainError("centralizer order " + c.get_str() + " does not divide " + order.get_str());
    return order / c;
}

struct ClassEntry {
    ClassDatum datum;
    Integer centralizer;
    Integer size;
};

namespace detail
{

enum class SlotKind { Plain, SelfDual, Pair, SignedSp, SignedO };

struct Slot {
    SlotKind kind;
    Poly key;
    Poly partner; // Pair only
    int unit;     // degree consumed per unit of |lambda|
    Integer Q;    // centralizer base (negated for SelfDual)
};

inline std::vector<Slot> class_slots(const GroupId& g, const Budgets& budgets)
{
    Field F = g.field();
    Integer q = g.q;
    std::vector<Slot> slots;
    if (g.family == Family::Sp || is_orthogonal(g.family)) {
        SlotKind k = g.family == Family::Sp ? SlotKind::SignedSp : SlotKind::SignedO;
        slots.push_back({k, z_minus_one(F), {}, 1, q});
        slots.push_back({k, z_plus_one(F), {}, 1, q});
    }
    for (int m = 1; m <= g.n; ++m) {
        for (auto& phi : enumerate_monic_irreducibles(F, m, budgets)) {
            if (phi.constant() == 0) {
                if (g.family == Family::Mat)
                    slots.push_back({SlotKind::Plain, phi, {}, 1, q});
                continue;
            }
            switch (g.family) {
            case Family::GL:
            case Family::Mat: slots.push_back({SlotKind::Plain, phi, {}, m, ipow(q, m)}); break;
            case Family::U: {
                Poly t = tilde(F, g.q, phi);
                if (t == phi)
                    slots.push_back({SlotKind::SelfDual, phi, {}, m, -ipow(q, m)});
                else if (phi < t && 2 * m <= g.n)
                    slots.push_back({SlotKind::Pair, phi, t, 2 * m, ipow(q, 2 * m)});
                break;
            }
            default: {
                if (phi == z_minus_one(F) || phi == z_plus_one(F))
                    break;
                Poly b = bar(F, phi);
                if (b == phi)
                    slots.push_back({SlotKind::SelfDual, phi, {}, m, -ipow(q, m / 2)});
                else if (phi < b && 2 * m <= g.n)
                    slots.push_back({SlotKind::Pair, phi, b, 2 * m, ipow(q, m)});
            }
            }
        }
    }
    return slots;
}

} // namespace detail

// Every class datum of total weighted degree n with its class size. For O
// only the data whose Witt type selects the requested sign are kept.
inline std::vector<ClassEntry> enumerate_classes(const GroupId& g, const Budgets& budgets = default_budgets())
{
    g.check();
    auto slots = detail::class_slots(g, budgets);
    const Integer order = g.family == Family::Mat ? orders::gl(g.n, Integer(g.q)) : group_order(g);
    const Integer q = g.q;

    std::vector<ClassEntry> out;
    ClassDatum cur;
    std::function<void(std::size_t, int, const Integer&)> rec = [&](std::size_t idx, int rest, const Integer& cent) {
        if (rest == 0) {
            ClassDatum d = cur;
            d.normalize();
            if (is_orthogonal(g.family) && witt_type_of_datum(d, g.q).group_sign() != g.o_sign())
                return;
            if (order % cent != 0)
                throw DomainError("centralizer does not divide group order for " + g.name());
            out.push_back({std::move(d), cent, order / cent});
            return;
        }
        if (idx == slots.size())
            return;
        const auto& s = slots[idx];
        rec(idx + 1, rest, cent);
        for (int k = 1; k * s.unit <= rest; ++k) {
            if (s.kind == detail::SlotKind::SignedSp || s.kind == detail::SlotKind::SignedO) {
                auto list = s.kind == detail::SlotKind::SignedSp ? enumerate_sp_signed(k) : enumerate_o_signed(k);
                for (auto& sp : list) {
                    Integer c = s.kind == detail::SlotKind::SignedSp ? c_sp(sp, q) : c_o(sp, q);
                    cur.signed_data[s.key] = sp;
                    rec(idx + 1, rest - k, cent * c);
                }
                cur.signed_data.erase(s.key);
                continue;
            }
            for (auto& lam : enumerate_partitions(k)) {
                Integer c = c_gl(lam, s.Q);
                if (s.kind == detail::SlotKind::SelfDual)
                    c = abs(c);
                cur.data[s.key] = lam;
                if (s.kind == detail::SlotKind::Pair)
                    cur.data[s.partner] = lam;
                rec(idx + 1, rest - k * s.unit, cent * c);
            }
            cur.data.erase(s.key);
            if (s.kind == detail::SlotKind::Pair)
                cur.data.erase(s.partner);
        }
    };
    rec(0, g.n, Integer(1));
    std::sort(out.begin(), out.end(), [](const ClassEntry& a, const ClassEntry& b) { return a.datum < b.datum; });
    return out;
}

// Sum of class sizes over data supported on z - 1 alone.
inline Integer unipotent_mass(const std::vector<ClassEntry>& classes, const Field& F)
{
    Poly zm1 = z_minus_one(F);
    Integer s = 0;
    for (auto& c : classes) {
        auto view = unsigned_view(c.datum);
        if (view.size() == 1 && view.begin()->first == zm1)
            s += c.size;
        if (view.empty())
            s += c.size; // n = 0
    }
    return s;
}

} // namespace cycind

#endif
