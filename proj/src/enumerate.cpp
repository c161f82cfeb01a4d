#include "partitions/enumerate.hpp"

#include <algorithm>

namespace partitions {

namespace {

// Largest distinct-part sum using only parts <= v.
constexpr std::uint64_t triangular(std::uint64_t v) { return v * (v + 1) / 2; }

// Appends the lexicographically largest distinct partition of `rem` whose
// parts are all < `bound`.  Caller guarantees feasibility.
void fill_distinct(std::vector<part_t> & parts, std::uint64_t rem, std::uint64_t bound)
{
    while (rem > 0) {
        auto p = std::min(bound - 1, rem);
        parts.push_back(static_cast<part_t>(p));
        rem -= p;
        bound = p;
    }
}

Partition from_flat(std::vector<part_t> const & parts)
{
    std::vector<Run> runs;
    for (auto v : parts) {
        if (!runs.empty() && runs.back().value == v)
            ++runs.back().multiplicity;
        else
            runs.push_back({v, 1});
    }
    return Partition::from_runs(std::move(runs));
}

} // namespace

PartitionStream::PartitionStream(EnumerationQuery query)
    : query_(std::move(query))
    , distinct_mode_(query_.class_filter == PartitionClass::distinct)
{
    if (query_.max_part && *query_.max_part == 0)
        throw std::invalid_argument("max_part must be at least 1");

    std::uint64_t n = query_.n;
    std::uint64_t top = query_.max_part ? std::min<std::uint64_t>(*query_.max_part, n) : n;
    if (n == 0)
        return;

    if (distinct_mode_) {
        // parts <= top cannot reach n
        if (triangular(top) < n) {
            done_ = true;
            return;
        }
        parts_.push_back(static_cast<part_t>(top));
        fill_distinct(parts_, n - top, top);
    } else {
        parts_.assign(n / top, static_cast<part_t>(top));
        if (n % top)
            parts_.push_back(static_cast<part_t>(n % top));
    }
}

bool PartitionStream::advance_any()
{
    std::size_t ones = 0;
    while (ones < parts_.size() && parts_[parts_.size() - 1 - ones] == 1)
        ++ones;
    if (ones == parts_.size())
        return false;
    std::size_t h = parts_.size() - 1 - ones;
    part_t r = parts_[h] - 1;
    std::uint64_t rem = ones + 1;
    parts_.resize(h + 1);
    parts_[h] = r;
    while (rem > 0) {
        auto p = static_cast<part_t>(std::min<std::uint64_t>(r, rem));
        parts_.push_back(p);
        rem -= p;
    }
    return true;
}

bool PartitionStream::advance_distinct()
{
    std::uint64_t tail = 0;
    for (std::size_t i = parts_.size(); i-- > 0;) {
        tail += parts_[i];
        std::uint64_t v = parts_[i] - 1;
        if (v >= 1 && tail <= triangular(v)) {
            parts_.resize(i + 1);
            parts_[i] = static_cast<part_t>(v);
            fill_distinct(parts_, tail - v, v);
            return true;
        }
    }
    return false;
}

bool PartitionStream::advance()
{
    return distinct_mode_ ? advance_distinct() : advance_any();
}

bool PartitionStream::accept() const
{
    if (!query_.class_filter || distinct_mode_)
        return true;
    return in_class(from_flat(parts_), *query_.class_filter);
}

std::optional<Partition> PartitionStream::next()
{
    while (!done_) {
        if (started_ && !advance()) {
            done_ = true;
            break;
        }
        started_ = true;
        if (query_.n == 0) {
            // single candidate: the empty partition
            done_ = true;
            if (!query_.class_filter || in_class(Partition{}, *query_.class_filter))
                return Partition{};
            break;
        }
        if (accept())
            return from_flat(parts_);
    }
    return std::nullopt;
}

DistinctStream::DistinctStream(std::uint32_t n, std::optional<part_t> avoid)
    : inner_(EnumerationQuery{n, PartitionClass::distinct, std::nullopt})
    , avoid_(avoid)
{
    if (avoid_ && *avoid_ == 0)
        throw std::invalid_argument("avoided part must be at least 1");
}

std::optional<Partition> DistinctStream::next()
{
    while (auto p = inner_.next()) {
        if (!avoid_ || avoids(*p, *avoid_))
            return p;
    }
    return std::nullopt;
}

WitnessStream::WitnessStream(std::uint32_t n)
    : inner_(n)
{}

std::optional<WitnessPair> WitnessStream::next()
{
    for (;;) {
        if (current_) {
            auto runs = current_->runs();
            while (run_index_ < runs.size()) {
                auto v = runs[run_index_++].value;
                if (v % 2 == 0)
                    return WitnessPair(*current_, v);
            }
        }
        current_ = inner_.next();
        run_index_ = 0;
        if (!current_)
            return std::nullopt;
    }
}

std::vector<Partition> enumerate_partitions(EnumerationQuery const & query)
{
    std::vector<Partition> out;
    PartitionStream s(query);
    s.for_each([&](Partition const & p) { out.push_back(p); });
    return out;
}

std::vector<Partition> enumerate_distinct(std::uint32_t n, std::optional<part_t> avoid)
{
    std::vector<Partition> out;
    DistinctStream s(n, avoid);
    while (auto p = s.next())
        out.push_back(std::move(*p));
    return out;
}

std::vector<WitnessPair> enumerate_witness_pairs(std::uint32_t n)
{
    std::vector<WitnessPair> out;
    WitnessStream s(n);
    while (auto w = s.next())
        out.push_back(std::move(*w));
    return out;
}

} // namespace partitions
