#include "partitions/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include <json.hpp>

namespace partitions {

namespace {

part_t checked_part(std::int64_t v)
{
    if (v <= 0)
        throw std::invalid_argument("partition parts must be positive, got " + std::to_string(v));
    if (v > std::numeric_limits<part_t>::max())
        throw std::invalid_argument("partition part too large: " + std::to_string(v));
    return static_cast<part_t>(v);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

part_t parse_positive(std::string_view digits, std::string_view token)
{
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("expected a positive integer", std::string(token));
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || v > std::numeric_limits<part_t>::max())
        throw ParseError("integer out of range", std::string(token));
    if (v == 0)
        throw ParseError("zero is not a valid part or multiplicity", std::string(token));
    return static_cast<part_t>(v);
}

} // namespace

Partition Partition::from_runs(std::vector<Run> runs)
{
    for (auto const & r : runs)
        if (r.value == 0 || r.multiplicity == 0)
            throw std::invalid_argument("runs must have positive value and multiplicity");

    std::sort(runs.begin(), runs.end(), [](Run const & a, Run const & b) { return a.value > b.value; });
    Partition p;
    for (auto const & r : runs) {
        if (!p.runs_.empty() && p.runs_.back().value == r.value)
            p.runs_.back().multiplicity += r.multiplicity;
        else
            p.runs_.push_back(r);
        p.sum_ += std::uint64_t(r.value) * r.multiplicity;
    }
    return p;
}

std::uint64_t Partition::length() const noexcept
{
    std::uint64_t k = 0;
    for (auto const & r : runs_)
        k += r.multiplicity;
    return k;
}

part_t Partition::multiplicity(part_t value) const noexcept
{
    // runs are descending
    auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                               [](Run const & r, part_t v) { return r.value > v; });
    return (it != runs_.end() && it->value == value) ? it->multiplicity : 0;
}

std::vector<part_t> Partition::flatten() const
{
    std::vector<part_t> out;
    out.reserve(length());
    for (auto const & r : runs_)
        out.insert(out.end(), r.multiplicity, r.value);
    return out;
}

bool Partition::is_distinct() const noexcept
{
    return std::all_of(runs_.begin(), runs_.end(), [](Run const & r) { return r.multiplicity == 1; });
}

bool Partition::is_odd() const noexcept
{
    return std::all_of(runs_.begin(), runs_.end(), [](Run const & r) { return r.value % 2 == 1; });
}

Partition make_partition(std::span<std::int64_t const> parts)
{
    std::vector<Run> runs;
    runs.reserve(parts.size());
    for (auto v : parts)
        runs.push_back({checked_part(v), 1});
    return Partition::from_runs(std::move(runs));
}

Partition make_partition(std::initializer_list<std::int64_t> parts)
{
    return make_partition(std::span<std::int64_t const>(parts.begin(), parts.size()));
}

Partition add(Partition const & a, Partition const & b)
{
    if (b.empty())
        return a;
    if (a.empty())
        return b;
    std::vector<Run> runs(a.runs().begin(), a.runs().end());
    runs.insert(runs.end(), b.runs().begin(), b.runs().end());
    return Partition::from_runs(std::move(runs));
}

Partition remove_one(Partition const & p, part_t value)
{
    if (!p.contains(value))
        throw MissingPartError("cannot remove part " + std::to_string(value) + " from " + to_text(p));
    std::vector<Run> runs;
    runs.reserve(p.runs().size());
    for (auto r : p.runs()) {
        if (r.value == value && --r.multiplicity == 0)
            continue;
        runs.push_back(r);
    }
    return Partition::from_runs(std::move(runs));
}

Partition block(part_t value, part_t multiplicity)
{
    if (multiplicity == 0)
        return {};
    return Partition::from_runs({{value, multiplicity}});
}

WitnessPair::WitnessPair(Partition partition, part_t even_part)
    : partition_(std::move(partition))
    , even_part_(even_part)
{
    if (!partition_.is_distinct())
        throw DomainError("witness partition must be distinct: " + to_text(partition_));
    if (even_part_ == 0 || even_part_ % 2 != 0)
        throw DomainError("witness part must be a positive even integer, got " + std::to_string(even_part_));
    if (!partition_.contains(even_part_))
        throw DomainError("witness part " + std::to_string(even_part_) + " does not occur in " + to_text(partition_));
}

ClassSet classify(Partition const & p)
{
    ClassSet out;
    std::size_t even_values = 0;
    part_t even_mult = 0;
    std::size_t repeated_values = 0;
    part_t repeated_value = 0;
    for (auto const & r : p.runs()) {
        if (r.value % 2 == 0) {
            ++even_values;
            even_mult = r.multiplicity;
        }
        if (r.multiplicity >= 2) {
            ++repeated_values;
            repeated_value = r.value;
        }
    }

    if (repeated_values == 0)
        out.insert(PartitionClass::distinct);
    if (even_values == 0)
        out.insert(PartitionClass::odd);
    if (even_values == 1) {
        out.insert(p.length() % 2 == 1 ? PartitionClass::bo : PartitionClass::be);
        out.insert(even_mult % 2 == 1 ? PartitionClass::bo_prime : PartitionClass::be_prime);
    }
    if (repeated_values == 1)
        out.insert(repeated_value % 2 == 1 ? PartitionClass::co : PartitionClass::ce);
    return out;
}

std::string_view class_name(PartitionClass c)
{
    switch (c) {
    case PartitionClass::distinct: return "distinct";
    case PartitionClass::odd: return "odd";
    case PartitionClass::bo: return "bo";
    case PartitionClass::be: return "be";
    case PartitionClass::co: return "co";
    case PartitionClass::ce: return "ce";
    case PartitionClass::bo_prime: return "bo-prime";
    case PartitionClass::be_prime: return "be-prime";
    }
    return "?";
}

PartitionClass parse_class_name(std::string_view name)
{
    for (auto c : all_classes)
        if (class_name(c) == name)
            return c;
    throw ParseError("unknown partition class", std::string(name));
}

std::string to_text(Partition const & p)
{
    if (p.empty())
        return "0";
    std::string out;
    for (auto const & r : p.runs()) {
        if (!out.empty())
            out += '+';
        out += std::to_string(r.value);
        if (r.multiplicity != 1) {
            out += '^';
            out += std::to_string(r.multiplicity);
        }
    }
    return out;
}

std::string to_text(WitnessPair const & w)
{
    return "(" + to_text(w.partition()) + ", " + std::to_string(w.even_part()) + ")";
}

Partition parse_partition(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw ParseError("empty partition text", "");
    if (text == "0")
        return {};

    std::vector<Run> runs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto plus = text.find('+', pos);
        auto token = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
        auto caret = token.find('^');
        Run r;
        if (caret == std::string_view::npos) {
            r = {parse_positive(token, token), 1};
        } else {
            r = {parse_positive(token.substr(0, caret), token), parse_positive(token.substr(caret + 1), token)};
        }
        if (!runs.empty() && runs.back().value <= r.value)
            throw ParseError("parts must be strictly descending", std::string(token));
        runs.push_back(r);
        if (plus == std::string_view::npos)
            break;
        pos = plus + 1;
    }
    return Partition::from_runs(std::move(runs));
}

WitnessPair parse_witness(std::string_view text)
{
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("witness pair must be written as (<partition>, <even_part>)", std::string(text));
    auto inner = text.substr(1, text.size() - 2);
    auto comma = inner.rfind(',');
    if (comma == std::string_view::npos)
        throw ParseError("witness pair is missing ','", std::string(text));
    auto partition = parse_partition(inner.substr(0, comma));
    auto part_text = trim(inner.substr(comma + 1));
    auto even = parse_positive(part_text, part_text);
    try {
        return WitnessPair(std::move(partition), even);
    } catch (DomainError const & e) {
        throw ParseError(e.what(), std::string(text));
    }
}

std::string to_json(Partition const & p)
{
    nlohmann::json parts = nlohmann::json::array();
    for (auto const & r : p.runs())
        parts.push_back({r.value, r.multiplicity});
    return nlohmann::json{{"n", p.sum()}, {"parts", std::move(parts)}}.dump();
}

Partition parse_partition_json(std::string_view json)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (nlohmann::json::parse_error const & e) {
        throw ParseError("invalid JSON", e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("parts") || !j["parts"].is_array()
        || !j["n"].is_number_unsigned())
        throw ParseError("expected {\"n\": <int>, \"parts\": [[part, mult], ...]}", j.dump());

    std::vector<Run> runs;
    for (auto const & e : j["parts"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw ParseError("each entry must be [part, mult]", e.dump());
        auto v = e[0].get<std::uint64_t>();
        auto m = e[1].get<std::uint64_t>();
        if (v == 0 || m == 0 || v > std::numeric_limits<part_t>::max() || m > std::numeric_limits<part_t>::max())
            throw ParseError("part and multiplicity must be positive", e.dump());
        if (!runs.empty() && runs.back().value <= v)
            throw ParseError("parts must be strictly descending", e.dump());
        runs.push_back({static_cast<part_t>(v), static_cast<part_t>(m)});
    }
    auto p = Partition::from_runs(std::move(runs));
    if (p.sum() != j["n"].get<std::uint64_t>())
        throw ParseError("n does not match the sum of parts", j["n"].dump());
    return p;
}

} // namespace partitions
