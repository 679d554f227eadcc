#pragma once

#include <cstddef>
#include <string_view>

namespace subint
{

// Size guards for the exponential parts of the toolkit.
struct caps
{
    std::size_t atoms = 24;       // propositional alphabet of one satisfiability check
    std::size_t frame_valid = 20; // atoms x worlds when enumerating valuations
    std::size_t sub_x = 16;       // |Sub_X(A)| for the tableau countermodel
    std::size_t sub_y = 16;       // |Sub_Y(A)| for the maximal-set countermodel
    std::size_t search_depth = 3; // rule rounds in bounded proof search
    std::size_t search_lines = 200000;
};

/// Parses "key=value,key=value" over the field names above. Throws
/// std::invalid_argument on unknown keys or bad numbers.
caps parse_caps( std::string_view spec, caps base = {} );

/// Defaults overridden by the SUBINTKIT_CAPS environment variable, if set.
caps caps_from_env();

} // namespace subint
