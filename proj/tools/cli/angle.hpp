#ifndef BGROVER_CLI_ANGLE_HPP
#define BGROVER_CLI_ANGLE_HPP

#include <string_view>

namespace bgrover::cli {

/// Parses an angle given either as a rational multiple of pi
/// ("15/32pi", "pi/2", "2pi/3", "-pi", "0.5pi") or as raw radians
/// ("1.5707963267948966"). Throws ParseError on anything else.
double parse_angle(std::string_view text);

}  // namespace bgrover::cli

#endif  // BGROVER_CLI_ANGLE_HPP
