#ifndef CYCIND_PARTITION_HPP
#define CYCIND_PARTITION_HPP

// Partitions, signed partitions and their statistics.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"

namespace cycind
{

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p))
    {
        for (int x : parts)
            if (x <= 0)
                throw DomainError("partition parts must be positive");
        std::sort(parts.begin(), parts.end(), std::greater<>());
    }

    // (i^m) as a shorthand for building examples
    static Partition rectangle(int part, int count) { return Partition(std::vector<int>(count, part)); }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int largest() const { return parts.empty() ? 0 : parts.front(); }

    // m_i: number of parts equal to i
    int mult(int i) const { return static_cast<int>(std::count(parts.begin(), parts.end(), i)); }

    // i -> m_i for the part sizes that occur
    std::map<int, int> multiplicities() const
    {
        std::map<int, int> m;
        for (int x : parts)
            ++m[x];
        return m;
    }

    // lambda'_i = m_i + m_{i+1} + ...
    Partition dual() const
    {
        std::vector<int> d(largest(), 0);
        for (int x : parts)
            for (int i = 0; i < x; ++i)
                ++d[i];
        return Partition(std::move(d));
    }

    // d_i = m_1 + 2 m_2 + ... + (i-1) m_{i-1} + i (m_i + m_{i+1} + ...)
    long d(int i) const
    {
        long s = 0;
        for (int x : parts)
            s += std::min(x, i);
        return s;
    }

    // n(lambda) = sum (i-1) lambda_i
    long n_stat() const
    {
        long s = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += static_cast<long>(i) * parts[i];
        return s;
    }

    long dual_square_sum() const
    {
        long s = 0;
        for (int x : dual().parts)
            s += static_cast<long>(x) * x;
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Decreasing-parts order, largest first part first.
inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw DomainError("partition size must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int x = std::min(rest, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Partitions with every part at most `max_part`; used for truncated sums.
inline std::vector<Partition> enumerate_partitions_bounded(int n, int max_part)
{
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(n))
        if (p.largest() <= max_part)
            out.push_back(p);
    return out;
}

enum class SignKind { Symplectic, Orthogonal };

// A partition with a sign on each occurring part size of the signed parity
// (even sizes for Sp, odd sizes for O).
struct SignedPartition {
    SignKind kind = SignKind::Symplectic;
    Partition shape;
    std::map<int, int> signs; // part size -> +1 / -1

    static bool signed_size(SignKind kind, int i) { return kind == SignKind::Symplectic ? i % 2 == 0 : i % 2 == 1; }

    int sign(int i) const
    {
        auto it = signs.find(i);
        return it == signs.end() ? 0 : it->second;
    }

    // Empty string when valid.
    std::string invalid_reason() const
    {
        auto mult = shape.multiplicities();
        for (auto& [i, m] : mult) {
            if (signed_size(kind, i)) {
                int s = sign(i);
                if (s != 1 && s != -1)
                    return "part size " + std::to_string(i) + " needs a sign";
            } else if (m % 2 != 0) {
                return std::string(kind == SignKind::Symplectic ? "odd" : "even") + " part " + std::to_string(i) +
                       " has odd multiplicity";
            }
        }
        for (auto& [i, s] : signs)
            if (!mult.count(i) || !signed_size(kind, i))
                return "sign attached to part size " + std::to_string(i) + " that carries none";
        return {};
    }
    bool valid() const { return invalid_reason().empty(); }

    friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
    friend auto operator<=>(const SignedPartition&, const SignedPartition&) = default;
};

// All signed partitions of n with every sign choice.
inline std::vector<SignedPartition> enumerate_signed(SignKind kind, int n)
{
    std::vector<SignedPartition> out;
    for (auto& p : enumerate_partitions(n)) {
        auto mult = p.multiplicities();
        std::vector<int> signed_sizes;
        bool ok = true;
        for (auto& [i, m] : mult) {
            if (SignedPartition::signed_size(kind, i))
                signed_sizes.push_back(i);
            else if (m % 2)
                ok = false;
        }
        if (!ok)
            continue;
        for (unsigned mask = 0; mask < (1u << signed_sizes.size()); ++mask) {
            SignedPartition sp{kind, p, {}};
            for (std::size_t b = 0; b < signed_sizes.size(); ++b)
                sp.signs[signed_sizes[b]] = (mask >> b) & 1 ? -1 : 1;
            out.push_back(std::move(sp));
        }
    }
    return out;
}

inline std::vector<SignedPartition> enumerate_sp_signed(int n)
{
    return enumerate_signed(SignKind::Symplectic, n);
}
inline std::vector<SignedPartition> enumerate_o_signed(int n)
{
    return enumerate_signed(SignKind::Orthogonal, n);
}

// ---------------------------------------------------------------------------
// Serialization: "[3,1,1]", signed "[-3,-3,+1]" (sign on every part of a
// signed size). Parsing also accepts the sign on the first occurrence only.

inline std::string to_string(const Partition& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.parts[i]);
    }
    return s + "]";
}

inline std::string to_string(const SignedPartition& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.shape.parts.size(); ++i) {
        if (i)
            s += ',';
        int x = p.shape.parts[i];
        int sg = p.sign(x);
        if (sg)
            s += sg > 0 ? '+' : '-';
        s += std::to_string(x);
    }
    return s + "]";
}

namespace detail
{

inline std::vector<std::pair<int, int>> parse_signed_list(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw DomainError("partition must be written as [a,b,...]: " + text);
    t = t.substr(1, t.size() - 2);
    std::vector<std::pair<int, int>> out;
    if (t.empty())
        return out;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int sign = 0;
        if (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) {
            sign = tok[0] == '+' ? 1 : -1;
            tok = tok.substr(1);
        }
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("bad partition entry in " + text);
        int v = std::stoi(tok);
        if (v <= 0)
            throw DomainError("partition parts must be positive: " + text);
        out.emplace_back(v, sign);
    }
    return out;
}

} // namespace detail

inline Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    for (auto& [v, s] : detail::parse_signed_list(text)) {
        if (s)
            throw DomainError("unexpected sign in unsigned partition " + text);
        parts.push_back(v);
    }
    return Partition(parts);
}

inline SignedPartition parse_signed_partition(SignKind kind, const std::string& text)
{
    SignedPartition sp;
    sp.kind = kind;
    std::vector<int> parts;
    for (auto& [v, s] : detail::parse_signed_list(text)) {
        parts.push_back(v);
        if (s) {
            auto it = sp.signs.find(v);
            if (it != sp.signs.end() && it->second != s)
                throw DomainError("conflicting signs for part " + std::to_string(v) + " in " + text);
            sp.signs[v] = s;
        }
    }
    sp.shape = Partition(parts);
    std::string why = sp.invalid_reason();
    if (!why.empty())
        throw DomainError("invalid signed partition " + text + ": " + why);
    return sp;
}

} // namespace cycind

#endif
