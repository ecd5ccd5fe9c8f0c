#ifndef CYCIND_SERIALIZE_HPP
#define CYCIND_SERIALIZE_HPP

// JSON and CSV forms of class data, series and certification reports.
// Needs nlohmann/json (vendor/json.hpp).

#include <json.hpp>
#include <ostream>
#include <string>

#include "classdata.hpp"
#include "cycle_index.hpp"
#include "oracle.hpp"

namespace cycind
{

using Json = nlohmann::json;

// {"group": "Sp", "n": 2, "q": 3, "data": [{"poly": "...", "partition": "[+2]"}]}
inline Json datum_to_json(const GroupId& g, const ClassDatum& d)
{
    Field F = g.field();
    Json data = Json::array();
    for (auto& [phi, sp] : d.signed_data)
        data.push_back({{"poly", to_string(F, phi)}, {"partition", to_string(sp)}});
    for (auto& [phi, lam] : d.data)
        data.push_back({{"poly", to_string(F, phi)}, {"partition", to_string(lam)}});
    return {{"group", family_name(g.family)}, {"n", g.n}, {"q", g.q}, {"data", data}};
}

inline std::pair<GroupId, ClassDatum> datum_from_json(const Json& j)
{
    GroupId g;
    try {
        g = GroupId{parse_family(j.at("group").get<std::string>()), j.at("n").get<int>(), j.at("q").get<std::uint32_t>()};
    } catch (const Json::exception& e) {
        throw DomainError(std::string("bad class datum JSON: ") + e.what());
    }
    g.check();
    Field F = g.field();
    ClassDatum d;
    const bool signed_family = g.family == Family::Sp || is_orthogonal(g.family);
    const SignKind kind = g.family == Family::Sp ? SignKind::Symplectic : SignKind::Orthogonal;
    for (auto& e : j.at("data")) {
        Poly phi = parse_poly(F, e.at("poly").get<std::string>());
        std::string part = e.at("partition").get<std::string>();
        if (signed_family && (phi == z_minus_one(F) || phi == z_plus_one(F)))
            d.signed_data[phi] = parse_signed_partition(kind, part);
        else
            d.data[phi] = parse_partition(part);
    }
    d.normalize();
    return {g, d};
}

template <class T>
Json series_to_json(const TruncSeries<T>& s)
{
    Json a = Json::array();
    for (int i = 0; i <= s.degree(); ++i)
        a.push_back(to_string(scalar_of(s[i])));
    return a;
}

inline RSeries series_from_json(const Json& a)
{
    if (!a.is_array() || a.empty())
        throw DomainError("series JSON must be a non-empty array");
    RSeries s(static_cast<int>(a.size()) - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational r;
        if (r.set_str(a[i].get<std::string>(), 10) != 0)
            throw DomainError("bad rational '" + a[i].get<std::string>() + "'");
        r.canonicalize();
        s[static_cast<int>(i)] = r;
    }
    return s;
}

inline const char* csv_header()
{
    return "family,n,q,property,exact,decimal";
}

inline std::string csv_row(const std::string& family, int n, std::uint64_t q, const std::string& property,
                           const Rational& value, int digits = 12)
{
    return family + "," + std::to_string(n) + "," + std::to_string(q) + "," + property + "," + to_string(value) +
           "," + to_decimal(value, digits);
}

inline Json report_to_json(const CertifyReport& r)
{
    Json checks = Json::array();
    for (auto& c : r.checks) {
        Json e = {{"name", c.name}, {"pass", c.pass}};
        if (!c.expected.empty())
            e["expected"] = c.expected;
        if (!c.observed.empty())
            e["observed"] = c.observed;
        if (!c.datum.empty())
            e["datum"] = c.datum;
        checks.push_back(e);
    }
    return {{"group", r.group.name()},
            {"pass", r.pass()},
            {"classes", r.classes},
            {"elements", r.elements},
            {"checks", checks}};
}

} // namespace cycind

#endif
