#pragma once

#include <string>

#include "cvx/bodies.hpp"

namespace cvx {

/// Parses a body description. Zoo shorthands:
///   {"zoo":"cube"|"cross"|"simplex"|"ball"|"lpball"|"tsp"|"cut", ...}
/// Explicit forms:
///   {"type":"vrep","points":[[...],...]}
///   {"type":"hrep","rows":[[...],...],"rhs":[...],
///    "eq_rows":[[...],...],"eq_rhs":[...]}          (eq_* optional)
///   {"type":"ball","d":n,"radius":r}
///   {"type":"ellipsoid","center":[...],"form":[[...],...]}
///   {"type":"projected","dim":n,"rows":...,"rhs":...,
///    "eq_rows":...,"eq_rhs":...,"map":[[...],...]}
///   {"type":"sectioned","points":[[...],...],"basis":[[...],...]}
/// Schema violations throw with the offending field named.
Body parse_body(const std::string& json_text);

std::string body_to_json(const Body& b);

}  // namespace cvx
