#pragma once

// Brute-force reference for the tests.  Works on flat part lists and
// re-derives every class predicate from scratch, so it shares no code with
// the library's generators or classify().

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Flat = std::vector<std::int64_t>;

inline void all_partitions(std::int64_t n, std::int64_t max_part, Flat & prefix, std::vector<Flat> & out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::int64_t p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        all_partitions(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

/// All partitions of n, descending parts, descending lexicographic order.
inline std::vector<Flat> partitions(std::int64_t n)
{
    std::vector<Flat> out;
    Flat prefix;
    all_partitions(n, n, prefix, out);
    return out;
}

inline std::map<std::int64_t, std::int64_t> tally(Flat const & f)
{
    std::map<std::int64_t, std::int64_t> m;
    for (auto v : f)
        ++m[v];
    return m;
}

inline bool distinct(Flat const & f) { return std::adjacent_find(f.begin(), f.end()) == f.end(); }
inline bool odd(Flat const & f)
{
    return std::all_of(f.begin(), f.end(), [](auto v) { return v % 2 != 0; });
}

inline std::vector<std::int64_t> even_values(Flat const & f)
{
    std::vector<std::int64_t> out;
    for (auto [v, m] : tally(f))
        if (v % 2 == 0)
            out.push_back(v);
    return out;
}

inline std::vector<std::int64_t> repeated_values(Flat const & f)
{
    std::vector<std::int64_t> out;
    for (auto [v, m] : tally(f))
        if (m >= 2)
            out.push_back(v);
    return out;
}

inline bool bo(Flat const & f) { return even_values(f).size() == 1 && f.size() % 2 == 1; }
inline bool be(Flat const & f) { return even_values(f).size() == 1 && f.size() % 2 == 0; }
inline bool bo_prime(Flat const & f)
{
    auto e = even_values(f);
    return e.size() == 1 && tally(f)[e[0]] % 2 == 1;
}
inline bool be_prime(Flat const & f)
{
    auto e = even_values(f);
    return e.size() == 1 && tally(f)[e[0]] % 2 == 0;
}
inline bool co(Flat const & f)
{
    auto r = repeated_values(f);
    return r.size() == 1 && r[0] % 2 == 1;
}
inline bool ce(Flat const & f)
{
    auto r = repeated_values(f);
    return r.size() == 1 && r[0] % 2 == 0;
}

inline std::int64_t count(std::int64_t n, std::function<bool(Flat const &)> const & pred)
{
    if (n < 0)
        return 0;
    std::int64_t c = 0;
    for (auto const & f : partitions(n))
        c += pred(f);
    return c;
}

inline std::int64_t distinct_avoiding(std::int64_t n, std::int64_t m)
{
    return count(n, [m](Flat const & f) { return distinct(f) && std::find(f.begin(), f.end(), m) == f.end(); });
}

inline std::int64_t even_parts_in_distinct(std::int64_t n)
{
    std::int64_t a = 0;
    for (auto const & f : partitions(n))
        if (distinct(f))
            a += static_cast<std::int64_t>(even_values(f).size());
    return a;
}

} // namespace oracle
