#include "angle.hpp"

#include <cmath>
#include <numbers>
#include <regex>
#include <string>

#include "bgrover/errors.hpp"

namespace bgrover::cli {

namespace {

double full_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(v)) {
    throw ParseError("malformed angle '" + s + "'");
  }
  return v;
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string s(text);
  // [sign][P][/Q]pi[/Q]
  static const std::regex pi_form(R"(^([+-]?)(\d+(?:\.\d+)?)?(?:/(\d+))?\*?pi(?:/(\d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    if (m[3].matched && m[4].matched) throw ParseError("malformed angle '" + s + "'");
    const double numerator = m[2].matched ? full_double(m[2].str()) : 1.0;
    double denominator = 1.0;
    if (m[3].matched) denominator = full_double(m[3].str());
    if (m[4].matched) denominator = full_double(m[4].str());
    if (denominator == 0.0) throw ParseError("zero denominator in angle '" + s + "'");
    const double sign = m[1].str() == "-" ? -1.0 : 1.0;
    return sign * numerator * std::numbers::pi / denominator;
  }
  return full_double(s);
}

}  // namespace bgrover::cli
