#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions/partition.hpp"

namespace partitions {

/// Raised when a checked 128-bit count would wrap.  `n()` is the argument
/// being counted when the overflow happened, or -1 if unknown.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(std::string const & what, std::int64_t n = -1)
        : std::overflow_error(what)
        , n_(n)
    {}
    std::int64_t n() const noexcept { return n_; }

private:
    std::int64_t n_;
};

/// An enumeration-based count was requested beyond the configured budget.
class BudgetError : public std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Exact non-negative count with overflow-checked arithmetic.
class Count {
public:
    using value_type = unsigned __int128;

    constexpr Count() = default;
    constexpr Count(std::uint64_t v) : value_(v) {}
    static constexpr Count from_raw(value_type v)
    {
        Count c;
        c.value_ = v;
        return c;
    }

    constexpr value_type raw() const noexcept { return value_; }

    Count & operator+=(Count o);
    /// Throws OverflowError when o > *this.
    Count & operator-=(Count o);
    Count & operator*=(Count o);

    friend Count operator+(Count a, Count b) { return a += b; }
    friend Count operator-(Count a, Count b) { return a -= b; }
    friend Count operator*(Count a, Count b) { return a *= b; }
    friend constexpr bool operator==(Count, Count) = default;
    friend constexpr auto operator<=>(Count, Count) = default;

    std::string to_string() const;

private:
    value_type value_ = 0;
};

/// Exact signed count (b(n), c(n), b'(n)) with overflow-checked arithmetic.
class SignedCount {
public:
    using value_type = __int128;

    constexpr SignedCount() = default;
    constexpr SignedCount(std::int64_t v) : value_(v) {}
    explicit SignedCount(Count c);
    static constexpr SignedCount from_raw(value_type v)
    {
        SignedCount c;
        c.value_ = v;
        return c;
    }

    constexpr value_type raw() const noexcept { return value_; }

    SignedCount & operator+=(SignedCount o);
    SignedCount & operator-=(SignedCount o);
    SignedCount operator-() const;

    friend SignedCount operator+(SignedCount a, SignedCount b) { return a += b; }
    friend SignedCount operator-(SignedCount a, SignedCount b) { return a -= b; }
    friend constexpr bool operator==(SignedCount, SignedCount) = default;
    friend constexpr auto operator<=>(SignedCount, SignedCount) = default;

    /// Throws OverflowError when negative.
    Count to_count() const;
    std::string to_string() const;

private:
    value_type value_ = 0;
};

enum class AvoidMethod { recurrence, alternating_sum };

enum class FormulaCounter { bo_prime, be_prime, co, ce, b_prime };

/// All counters for one n.
struct CountRow {
    std::uint32_t n = 0;
    Count distinct;  // N(n)
    Count a;         // even parts summed over distinct partitions
    Count bo, be, co, ce, bo_prime, be_prime;
    SignedCount b, c;

    friend bool operator==(CountRow const &, CountRow const &) = default;
};

inline constexpr char count_csv_header[] = "n,N,a,bo,be,b,co,ce,c,bo_prime,be_prime";
std::string to_csv(CountRow const & row);

/*
 * Enumeration-free counting.  N(0..n_max) is tabulated by a 0/1-knapsack
 * DP at construction; afterwards the engine is immutable and may be
 * shared across threads.  Queries with arguments above n_max throw
 * std::out_of_range.
 */
class CountEngine {
public:
    explicit CountEngine(std::uint32_t n_max);

    std::uint32_t n_max() const noexcept { return n_max_; }

    /// N(n); zero for n < 0.
    Count distinct(std::int64_t n) const;

    /// Distinct partitions of n with no part equal to m.
    Count distinct_avoiding(std::int64_t n, std::uint32_t m, AvoidMethod method = AvoidMethod::recurrence) const;

    /// Summation formulas over N and the avoiding counts.  bo_prime, be_prime,
    /// co and ce are non-negative; b_prime is the alternating double sum
    /// sum_{t,k} (-1)^(t-1) N(n - 2kt).
    SignedCount formula(std::int64_t n, FormulaCounter which) const;

    /// a(n) as sum_{k>=1} N_{avoid 2k}(n - 2k).
    Count even_parts(std::int64_t n) const;

    /// Row for n using only the formula pipeline; bo/be are read off
    /// bo_prime/be_prime by the parity of n.
    CountRow row(std::uint32_t n) const;

private:
    void check_range(std::int64_t n) const;

    std::uint32_t n_max_;
    std::vector<Count> distinct_;
};

inline constexpr std::uint32_t default_enumeration_budget = 60;

/// N(n) without a prebuilt engine.
Count count_distinct(std::int64_t n);
Count count_distinct_avoiding(std::int64_t n, std::uint32_t m, AvoidMethod method = AvoidMethod::recurrence);
SignedCount count_class_by_formula(std::int64_t n, FormulaCounter which);

/// Brute-force size of a class.  Throws BudgetError above `budget`.
Count count_class_by_enumeration(std::uint32_t n, PartitionClass c,
                                 std::uint32_t budget = default_enumeration_budget);

enum class EvenPartsMethod { enumeration, formula };
Count count_even_parts(std::uint32_t n, EvenPartsMethod method,
                       std::uint32_t budget = default_enumeration_budget);

/// Row for n built purely from enumeration: one pass over all partitions
/// of n plus the witness-pair stream.
CountRow enumerated_row(std::uint32_t n, std::uint32_t budget = default_enumeration_budget);

/// Formula rows for n_from..n_to inclusive.
std::vector<CountRow> count_table(std::uint32_t n_from, std::uint32_t n_to);

} // namespace partitions
