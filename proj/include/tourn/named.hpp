// The named tournaments K6, C5, L1, L2, their reversals, and the two
// distinguished orderings (forest, cyclic) of L1 and L2.

#ifndef TOURN_NAMED_HPP
#define TOURN_NAMED_HPP

#include "tourn/tournament.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tourn {

enum class Pattern { K6, C5, L1, L2, K6c, C5c, L1c, L2c };

inline constexpr std::array<Pattern, 8> kAllPatterns = {
    Pattern::K6, Pattern::C5, Pattern::L1, Pattern::L2,
    Pattern::K6c, Pattern::C5c, Pattern::L1c, Pattern::L2c};

std::string_view pattern_name(Pattern p);
/// Case-insensitive; throws std::invalid_argument on an unknown name.
Pattern parse_pattern(std::string_view name);

Tournament named(Pattern p);
Tournament named(std::string_view name);

enum class OrderingKind { Forest, Cyclic };
std::string_view ordering_kind_name(OrderingKind k);

/// The forest or cyclic ordering of L1/L2 (other patterns throw).
Ordering named_ordering(Pattern p, OrderingKind kind);

/// Backward edges of the named ordering, as (from position, to position),
/// 0-based, sorted.
std::vector<std::pair<int, int>> named_backward_positions(Pattern p, OrderingKind kind);

/// The canonical ordering of K6: identity, with backward edges
/// {(v4,v1),(v6,v3),(v6,v1),(v5,v2)}.
Ordering k6_canonical_ordering();

}  // namespace tourn

#endif
