#include "partitions/bijections.hpp"

#include <bit>

namespace partitions {

namespace {

struct EvenBlock {
    part_t value;
    part_t multiplicity;
    Partition odd_parts;
};

// Caller has checked there is exactly one even value.
EvenBlock split_even_block(Partition const & p)
{
    EvenBlock out{0, 0, {}};
    std::vector<Run> odd;
    for (auto const & r : p.runs()) {
        if (r.value % 2 == 0) {
            out.value = r.value;
            out.multiplicity = r.multiplicity;
        } else {
            odd.push_back(r);
        }
    }
    out.odd_parts = Partition::from_runs(std::move(odd));
    return out;
}

struct RepeatedBlock {
    part_t value;
    part_t multiplicity;
    Partition rest;
};

// Caller has checked there is exactly one repeated value.
RepeatedBlock split_repeated_block(Partition const & p)
{
    RepeatedBlock out{0, 0, {}};
    std::vector<Run> rest;
    for (auto const & r : p.runs()) {
        if (r.multiplicity >= 2) {
            out.value = r.value;
            out.multiplicity = r.multiplicity;
        } else {
            rest.push_back(r);
        }
    }
    out.rest = Partition::from_runs(std::move(rest));
    return out;
}

Partition single(part_t v) { return block(v, 1); }

Partition to_distinct(OddDistinctBijection const & phi, Partition const & odd)
{
    auto d = phi.to_distinct(odd);
    if (!d.is_distinct() || d.sum() != odd.sum())
        throw DomainError("odd-to-distinct map returned " + to_text(d) + " for " + to_text(odd));
    return d;
}

Partition to_odd(OddDistinctBijection const & phi, Partition const & distinct)
{
    auto o = phi.to_odd(distinct);
    if (!o.is_odd() || o.sum() != distinct.sum())
        throw DomainError("distinct-to-odd map returned " + to_text(o) + " for " + to_text(distinct));
    return o;
}

void require(Partition const & p, PartitionClass c, char const * op)
{
    if (!in_class(p, c))
        throw DomainError(std::string(op) + ": " + to_text(p) + " is not in " + std::string(class_name(c)));
}

// Shared body of theta1 / theta1_even: even block e^q becomes q^e, merged with D.
Partition swap_into_repeated(Partition const & lambda, OddDistinctBijection const & phi)
{
    auto [even, mult, odd] = split_even_block(lambda);
    auto d = to_distinct(phi, odd);
    if (d.contains(mult))
        return add(block(mult, even + 1), remove_one(d, mult));
    return add(block(mult, even), d);
}

Partition swap_into_even(Partition const & mu, OddDistinctBijection const & phi)
{
    auto [value, times, rest] = split_repeated_block(mu);
    if (times % 2 == 0)
        return add(block(times, value), to_odd(phi, rest));
    return add(block(times - 1, value), to_odd(phi, add(rest, single(value))));
}

} // namespace

Partition glaisher_to_odd(Partition const & distinct)
{
    if (!distinct.is_distinct())
        throw DomainError("glaisher_to_odd needs a distinct partition, got " + to_text(distinct));
    std::vector<Run> runs;
    runs.reserve(distinct.runs().size());
    for (auto const & r : distinct.runs()) {
        auto twos = std::countr_zero(r.value);
        runs.push_back({r.value >> twos, part_t(1) << twos});
    }
    return Partition::from_runs(std::move(runs));
}

Partition glaisher_to_distinct(Partition const & odd)
{
    if (!odd.is_odd())
        throw DomainError("glaisher_to_distinct needs an odd partition, got " + to_text(odd));
    std::vector<Run> runs;
    for (auto const & r : odd.runs()) {
        for (part_t bits = r.multiplicity; bits != 0; bits &= bits - 1)
            runs.push_back({r.value << std::countr_zero(bits), 1});
    }
    return Partition::from_runs(std::move(runs));
}

OddDistinctBijection const & glaisher()
{
    static OddDistinctBijection const pair{glaisher_to_distinct, glaisher_to_odd};
    return pair;
}

std::string to_text(ThetaTwoImage const & image)
{
    return std::visit([](auto const & v) { return to_text(v); }, image);
}

ThetaTwoImage parse_image(std::string_view text)
{
    auto first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text[first] == '(')
        return parse_witness(text);
    return parse_partition(text);
}

std::uint64_t image_sum(ThetaTwoImage const & image)
{
    return std::visit([](auto const & v) { return v.sum(); }, image);
}

Partition theta1(Partition const & lambda, OddDistinctBijection const & phi)
{
    require(lambda, PartitionClass::bo_prime, "theta1");
    return swap_into_repeated(lambda, phi);
}

Partition theta1_inv(Partition const & mu, OddDistinctBijection const & phi)
{
    require(mu, PartitionClass::co, "theta1_inv");
    return swap_into_even(mu, phi);
}

Partition theta1_even(Partition const & lambda, OddDistinctBijection const & phi)
{
    require(lambda, PartitionClass::be_prime, "theta1_even");
    return swap_into_repeated(lambda, phi);
}

Partition theta1_even_inv(Partition const & mu, OddDistinctBijection const & phi)
{
    require(mu, PartitionClass::ce, "theta1_even_inv");
    return swap_into_even(mu, phi);
}

ThetaTwoImage theta2(Partition const & lambda, OddDistinctBijection const & phi)
{
    require(lambda, PartitionClass::bo_prime, "theta2");
    auto [even, mult, odd] = split_even_block(lambda);
    auto d = to_distinct(phi, odd);
    if (d.contains(even))
        return add(block(even, mult + 1), to_odd(phi, remove_one(d, even)));
    if (mult > 1)
        return add(block(even, mult - 1), to_odd(phi, add(d, single(even))));
    return WitnessPair(add(d, single(even)), even);
}

Partition theta2_inv(ThetaTwoImage const & image, OddDistinctBijection const & phi)
{
    if (auto const * w = std::get_if<WitnessPair>(&image))
        return add(single(w->even_part()), to_odd(phi, remove_one(w->partition(), w->even_part())));

    auto const & mu = std::get<Partition>(image);
    require(mu, PartitionClass::be_prime, "theta2_inv");
    auto [even, mult, odd] = split_even_block(mu);
    auto f = to_distinct(phi, odd);
    if (f.contains(even))
        return add(block(even, mult + 1), to_odd(phi, remove_one(f, even)));
    return add(block(even, mult - 1), to_odd(phi, add(f, single(even))));
}

std::string_view map_name(MapId id)
{
    switch (id) {
    case MapId::glaisher_to_odd: return "glaisher-to-odd";
    case MapId::glaisher_to_distinct: return "glaisher-to-distinct";
    case MapId::theta1: return "theta1";
    case MapId::theta1_inv: return "theta1-inv";
    case MapId::theta1_even: return "theta1-even";
    case MapId::theta1_even_inv: return "theta1-even-inv";
    case MapId::theta2: return "theta2";
    case MapId::theta2_inv: return "theta2-inv";
    }
    return "?";
}

MapId parse_map_name(std::string_view name)
{
    for (auto id : all_maps)
        if (map_name(id) == name)
            return id;
    throw ParseError("unknown map", std::string(name));
}

ThetaTwoImage apply_map(MapId id, ThetaTwoImage const & input)
{
    if (id == MapId::theta2_inv)
        return theta2_inv(input);
    auto const * p = std::get_if<Partition>(&input);
    if (!p)
        throw DomainError(std::string(map_name(id)) + " takes a partition, not a witness pair");
    switch (id) {
    case MapId::glaisher_to_odd: return glaisher_to_odd(*p);
    case MapId::glaisher_to_distinct: return glaisher_to_distinct(*p);
    case MapId::theta1: return theta1(*p);
    case MapId::theta1_inv: return theta1_inv(*p);
    case MapId::theta1_even: return theta1_even(*p);
    case MapId::theta1_even_inv: return theta1_even_inv(*p);
    case MapId::theta2: return theta2(*p);
    case MapId::theta2_inv: break;
    }
    throw std::logic_error("unhandled map id");
}

} // namespace partitions
