#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include "partitions/partition.hpp"

namespace partitions {

// Glaisher's doubling/halving correspondence.
// to_odd: each distinct part 2^k * o becomes 2^k copies of o.
// to_distinct: an odd part o of multiplicity m = sum 2^k_i becomes the parts 2^k_i * o.
Partition glaisher_to_odd(Partition const & distinct);
Partition glaisher_to_distinct(Partition const & odd);

/*
 * A size-preserving bijection between odd and distinct partitions.  The
 * theta maps below are written against this pair, so any valid pair can be
 * plugged in; Glaisher's map is the default.  The maps check that what the
 * pair returns is distinct/odd with the right sum and throw DomainError
 * otherwise.
 */
struct OddDistinctBijection {
    std::function<Partition(Partition const &)> to_distinct;
    std::function<Partition(Partition const &)> to_odd;
};

OddDistinctBijection const & glaisher();

/// Result of theta2: a partition in B_e'(n) or a witness pair in A(n).
using ThetaTwoImage = std::variant<Partition, WitnessPair>;

std::string to_text(ThetaTwoImage const & image);
/// Accepts either canonical partition text or `(<partition>, <even_part>)`.
ThetaTwoImage parse_image(std::string_view text);
std::uint64_t image_sum(ThetaTwoImage const & image);

// B_o'(n) -> C_o(n).  The even block (2k)^(2s-1) is turned into the odd
// block (2s-1)^(2k) and merged with D = to_distinct(odd parts); if D already
// holds 2s-1 that copy is absorbed into the block.
Partition theta1(Partition const & lambda, OddDistinctBijection const & phi = glaisher());
Partition theta1_inv(Partition const & mu, OddDistinctBijection const & phi = glaisher());

// The same construction one parity over: B_e'(n) -> C_e(n), with the
// even block (2k)^(2s) becoming (2s)^(2k).
Partition theta1_even(Partition const & lambda, OddDistinctBijection const & phi = glaisher());
Partition theta1_even_inv(Partition const & mu, OddDistinctBijection const & phi = glaisher());

// B_o'(n) -> B_e'(n) disjoint-union A(n).  With even block (2k)^(2s-1) and
// D = to_distinct(odd parts):
//   2k in D         -> (2k)^(2s)   + to_odd(D \ {2k})
//   2k not in D, s>1 -> (2k)^(2s-2) + to_odd(D + {2k})
//   otherwise       -> witness (D + {2k}, 2k)
ThetaTwoImage theta2(Partition const & lambda, OddDistinctBijection const & phi = glaisher());
Partition theta2_inv(ThetaTwoImage const & image, OddDistinctBijection const & phi = glaisher());

enum class MapId {
    glaisher_to_odd,
    glaisher_to_distinct,
    theta1,
    theta1_inv,
    theta1_even,
    theta1_even_inv,
    theta2,
    theta2_inv,
};

inline constexpr MapId all_maps[] = {
    MapId::glaisher_to_odd, MapId::glaisher_to_distinct, MapId::theta1,     MapId::theta1_inv,
    MapId::theta1_even,     MapId::theta1_even_inv,      MapId::theta2,     MapId::theta2_inv,
};

/// Command-line name, e.g. "theta1-inv".
std::string_view map_name(MapId id);
MapId parse_map_name(std::string_view name);

/// Applies a map by id.  Only theta2_inv consumes a witness pair; every
/// other map rejects one with DomainError.
ThetaTwoImage apply_map(MapId id, ThetaTwoImage const & input);

} // namespace partitions
