#pragma once

#include "zgon/arc.hpp"
#include "zgon/gon.hpp"
#include "zgon/hom.hpp"
#include "zgon/interval.hpp"

#include <string>

namespace zgon {

// Text formats:
//   point     p:n                 e.g. 2:-3
//   interval  (p1:n1, p2:n2; h)   e.g. (1:0, 1:2; 0)
//   arc       (p1:n1 | p2:n2)     e.g. (1:1 | 1:0)
// Parsers accept arbitrary whitespace and throw std::invalid_argument with a
// position hint on malformed input. format/parse round-trip exactly.

std::string format_point(const Point& z);
std::string format_interval(const Interval& u);
std::string format_arc(const Arc& a);

Point parse_point(const std::string& text);
Interval parse_interval(const std::string& text);
Arc parse_arc(const std::string& text);

std::string hom_report_to_json(const HomReport& r, const std::string& source,
                               const std::string& target);
std::string hom_report_to_text(const HomReport& r, const std::string& source,
                               const std::string& target);

}  // namespace zgon
