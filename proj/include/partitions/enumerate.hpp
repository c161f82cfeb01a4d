#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "partitions/partition.hpp"

namespace partitions {

struct EnumerationQuery {
    std::uint32_t n = 0;
    std::optional<PartitionClass> class_filter;
    std::optional<part_t> max_part;
};

/*
 * Single-pass stream of partitions of n in descending lexicographic order
 * of their flattened part lists.  Unrestricted generation steps through
 * flat part lists; a filter is applied as a predicate, except that the
 * Distinct filter switches to a strictly-decreasing generator.
 */
class PartitionStream {
public:
    explicit PartitionStream(EnumerationQuery query);

    /// Next partition, or nullopt once exhausted.
    std::optional<Partition> next();

    /// Calls f on every remaining partition; returns how many were visited.
    template <typename F>
    std::uint64_t for_each(F && f)
    {
        std::uint64_t count = 0;
        while (auto p = next()) {
            f(*p);
            ++count;
        }
        return count;
    }

private:
    bool advance();
    bool advance_any();
    bool advance_distinct();
    bool accept() const;

    EnumerationQuery query_;
    std::vector<part_t> parts_;
    bool distinct_mode_ = false;
    bool started_ = false;
    bool done_ = false;
};

/// Partitions of n into distinct parts, optionally avoiding one part value.
class DistinctStream {
public:
    explicit DistinctStream(std::uint32_t n, std::optional<part_t> avoid = std::nullopt);
    std::optional<Partition> next();

private:
    PartitionStream inner_;
    std::optional<part_t> avoid_;
};

/// Every (distinct partition, even part in it) for n, ordered by partition
/// stream order and then by descending even part.
class WitnessStream {
public:
    explicit WitnessStream(std::uint32_t n);
    std::optional<WitnessPair> next();

private:
    DistinctStream inner_;
    std::optional<Partition> current_;
    std::size_t run_index_ = 0;
};

std::vector<Partition> enumerate_partitions(EnumerationQuery const & query);
std::vector<Partition> enumerate_distinct(std::uint32_t n, std::optional<part_t> avoid = std::nullopt);
std::vector<WitnessPair> enumerate_witness_pairs(std::uint32_t n);

} // namespace partitions
