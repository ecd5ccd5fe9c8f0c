#ifndef CYCIND_CORE_HPP
#define CYCIND_CORE_HPP

// Exact number types, error types and run budgets shared by every module.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cycind
{

using Integer = mpz_class;
using Rational = mpq_class;

// Violated precondition or a request outside the supported mathematics
// (even characteristic for Sp/O, vanishing constant term, ...).
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// The request is well-formed but exceeds a configured enumeration budget.
class BudgetExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Budgets {
    // Upper bound on the number of monic polynomials scanned by one enumeration.
    std::uint64_t poly_enumeration = 20'000'000;
    // Upper bound on |G| for brute-force group enumeration.
    std::uint64_t group_order = 1'000'000;
    // Upper bound on |G| for explicit conjugation-orbit computation.
    std::uint64_t orbit_order = 100'000;
    // Largest series truncation degree.
    int series_degree = 60;
    // Largest trial divisor used when factoring for Euler's totient.
    std::uint64_t trial_division = 100'000'000;
};

// Budgets read once from CYCIND_GROUP_BUDGET / CYCIND_ORBIT_BUDGET /
// CYCIND_POLY_BUDGET when set; defaults otherwise.
inline Budgets default_budgets()
{
    Budgets b;
    auto read = [](const char* name, std::uint64_t& slot) {
        if (const char* v = std::getenv(name)) {
            try {
                slot = std::stoull(v);
            } catch (const std::exception&) {
                throw DomainError(std::string("invalid value for ") + name);
            }
        }
    };
    read("CYCIND_GROUP_BUDGET", b.group_order);
    read("CYCIND_ORBIT_BUDGET", b.orbit_order);
    read("CYCIND_POLY_BUDGET", b.poly_enumeration);
    return b;
}

inline Integer ipow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer ipow(long base, unsigned long e)
{
    return ipow(Integer(base), e);
}

// base^e for a possibly negative exponent, as an exact rational.
// n/d in lowest terms with a positive denominator
inline Rational frac(const Integer& n, const Integer& d)
{
    if (d == 0)
        throw DomainError("division by zero");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational rpow(const Integer& base, long e)
{
    if (e >= 0)
        return Rational(ipow(base, static_cast<unsigned long>(e)));
    if (base == 0)
        throw DomainError("zero to a negative power");
    Rational r(Integer(1), ipow(base, static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

// Fixed-point decimal rendering with `digits` digits after the point,
// rounded toward zero.
inline std::string to_decimal(const Rational& r, int digits = 10)
{
    Integer scale = ipow(10, static_cast<unsigned long>(digits));
    Integer num = r.get_num() * scale;
    Integer q = num / r.get_den();
    bool negative = sgn(r) < 0;
    if (negative)
        q = -q;
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits)
        s = std::string(digits + 1 - s.size(), '0') + s;
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0)
        out += "." + s.substr(s.size() - digits);
    return negative ? "-" + out : out;
}

inline double to_double(const Rational& r)
{
    return r.get_d();
}

} // namespace cycind

#endif
