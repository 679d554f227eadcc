#include "subint/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace subint
{

caps parse_caps( std::string_view spec, caps base )
{
    std::size_t start = 0;
    while ( start < spec.size() )
    {
        auto end = spec.find( ',', start );
        if ( end == std::string_view::npos )
            end = spec.size();
        const auto item = spec.substr( start, end - start );
        start = end + 1;
        if ( item.empty() )
            continue;

        const auto eq = item.find( '=' );
        if ( eq == std::string_view::npos )
            throw std::invalid_argument{ "cap entry without '=': " + std::string{ item } };
        const auto key = item.substr( 0, eq );
        const auto text = item.substr( eq + 1 );

        std::size_t value = 0;
        const auto [ ptr, ec ] = std::from_chars( text.data(), text.data() + text.size(), value );
        if ( ec != std::errc{} || ptr != text.data() + text.size() )
            throw std::invalid_argument{ "bad cap value: " + std::string{ item } };

        if ( key == "atoms" ) base.atoms = value;
        else if ( key == "frame_valid" ) base.frame_valid = value;
        else if ( key == "sub_x" ) base.sub_x = value;
        else if ( key == "sub_y" ) base.sub_y = value;
        else if ( key == "search_depth" ) base.search_depth = value;
        else if ( key == "search_lines" ) base.search_lines = value;
        else throw std::invalid_argument{ "unknown cap: " + std::string{ key } };
    }
    return base;
}

caps caps_from_env()
{
    const char* env = std::getenv( "SUBINTKIT_CAPS" ); // NOLINT(concurrency-mt-unsafe)
    return env ? parse_caps( env ) : caps{};
}

} // namespace subint
