#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partitions {

using part_t = std::uint32_t;

/// One run of equal parts: `value` repeated `multiplicity` times.
struct Run {
    part_t value = 0;
    part_t multiplicity = 0;

    friend auto operator<=>(Run const &, Run const &) = default;
};

/// Malformed partition or witness text / JSON.  `token()` names the
/// offending piece of input.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::string const & message, std::string token)
        : std::invalid_argument(message + ": '" + token + "'")
        , token_(std::move(token))
    {}
    std::string const & token() const noexcept { return token_; }

private:
    std::string token_;
};

/// An input that is a valid partition but lies outside the domain an
/// operation requires (e.g. theta1 on something not in B_o').
class DomainError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// remove_one() on a part that is not there.
class MissingPartError : public std::logic_error {
    using std::logic_error::logic_error;
};

/*
 * Normalized multiset of positive integers, stored as runs with strictly
 * descending values.  The empty partition is the unique partition of 0.
 * Values are immutable once built.
 */
class Partition {
public:
    Partition() = default;

    /// Builds from runs in any order; equal values are merged and runs
    /// with zero multiplicity are rejected.
    static Partition from_runs(std::vector<Run> runs);

    std::span<Run const> runs() const noexcept { return runs_; }
    std::uint64_t sum() const noexcept { return sum_; }
    bool empty() const noexcept { return runs_.empty(); }

    /// Number of parts counted with multiplicity.
    std::uint64_t length() const noexcept;

    /// Multiplicity of `value`, zero when absent.
    part_t multiplicity(part_t value) const noexcept;
    bool contains(part_t value) const noexcept { return multiplicity(value) != 0; }

    /// Parts as a flat descending list.
    std::vector<part_t> flatten() const;

    bool is_distinct() const noexcept;
    bool is_odd() const noexcept;

    friend bool operator==(Partition const & a, Partition const & b) { return a.runs_ == b.runs_; }
    friend auto operator<=>(Partition const & a, Partition const & b) { return a.runs_ <=> b.runs_; }

private:
    std::vector<Run> runs_;
    std::uint64_t sum_ = 0;
};

/// Normalizes a list of parts given in any order.  Throws
/// std::invalid_argument on a part <= 0.
Partition make_partition(std::span<std::int64_t const> parts);
Partition make_partition(std::initializer_list<std::int64_t> parts);

/// Multiset union.
Partition add(Partition const & a, Partition const & b);

/// Removes one copy of `value`.  Throws MissingPartError if absent.
Partition remove_one(Partition const & p, part_t value);

/// `value` repeated `multiplicity` times.
Partition block(part_t value, part_t multiplicity);

/// An element of A(n): a distinct partition with one of its even parts
/// singled out.
class WitnessPair {
public:
    /// Throws DomainError unless `partition` is distinct and contains the
    /// even value `even_part`.
    WitnessPair(Partition partition, part_t even_part);

    Partition const & partition() const noexcept { return partition_; }
    part_t even_part() const noexcept { return even_part_; }
    std::uint64_t sum() const noexcept { return partition_.sum(); }

    friend bool operator==(WitnessPair const &, WitnessPair const &) = default;
    friend auto operator<=>(WitnessPair const &, WitnessPair const &) = default;

private:
    Partition partition_;
    part_t even_part_;
};

enum class PartitionClass : unsigned {
    distinct,
    odd,
    bo,        // one even value, odd number of parts
    be,        // one even value, even number of parts
    co,        // one repeated value, odd
    ce,        // one repeated value, even
    bo_prime,  // one even value, odd multiplicity
    be_prime,  // one even value, even multiplicity
};

inline constexpr PartitionClass all_classes[] = {
    PartitionClass::distinct, PartitionClass::odd,
    PartitionClass::bo,       PartitionClass::be,
    PartitionClass::co,       PartitionClass::ce,
    PartitionClass::bo_prime, PartitionClass::be_prime,
};

/// Small bit set over PartitionClass.
class ClassSet {
public:
    constexpr ClassSet() = default;
    constexpr explicit ClassSet(unsigned bits) : bits_(bits) {}

    constexpr bool contains(PartitionClass c) const noexcept { return bits_ & bit(c); }
    constexpr void insert(PartitionClass c) noexcept { bits_ |= bit(c); }
    constexpr unsigned bits() const noexcept { return bits_; }

    friend constexpr bool operator==(ClassSet, ClassSet) = default;

private:
    static constexpr unsigned bit(PartitionClass c) { return 1u << static_cast<unsigned>(c); }
    unsigned bits_ = 0;
};

ClassSet classify(Partition const & p);

inline bool in_class(Partition const & p, PartitionClass c) { return classify(p).contains(c); }

/// True when `p` has no part equal to `m`.
inline bool avoids(Partition const & p, part_t m) { return !p.contains(m); }

/// Lower-case identifier used on the command line ("bo-prime", ...).
std::string_view class_name(PartitionClass c);
/// Inverse of class_name; throws ParseError on unknown names.
PartitionClass parse_class_name(std::string_view name);

// Canonical text: `5+3^2+2`, empty partition is `0`.
std::string to_text(Partition const & p);
std::string to_text(WitnessPair const & w);

/// Parses canonical text.  Parts must be strictly descending.
Partition parse_partition(std::string_view text);
/// Parses `(<partition>, <even_part>)`.
WitnessPair parse_witness(std::string_view text);

// Canonical JSON: {"n": 15, "parts": [[5,2],[2,2],[1,1]]}.
std::string to_json(Partition const & p);
Partition parse_partition_json(std::string_view json);

} // namespace partitions
