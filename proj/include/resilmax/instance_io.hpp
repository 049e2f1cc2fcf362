#pragma once

#include <string>

#include "resilmax/instance.hpp"

namespace resilmax {

/// Parses the JSON instance format:
///   { "n": int,
///     "objective": {"type": "weighted_coverage", "item_weights": [..],
///                   "covers": [[..], ..]}
///                | {"type": "facility_location", "values": [[..], ..]}
///                | {"type": "modular", "weights": [..]}
///                | {"type": "explicit", "values": [..2^n values..]},
///     "matroid": {"type": "uniform", "rank": int}
///              | {"type": "partition", "blocks": [[..], ..],
///                 "capacities": [..]},
///     "alpha": int,
///     "labels": [..] }          // optional, one string per element
/// Explicit tables are in binary-counter subset order (bit i set means
/// element i present) and must pass the normalization, monotonicity and
/// submodularity checkers. Structural problems throw ParseError; domain
/// validation errors from the module constructors propagate unchanged.
Instance parse_instance(const std::string& text);

/// Serializes an instance to the same format (2-space indented, trailing
/// newline). load(save(x)) reproduces an instance whose every operation
/// output is identical.
std::string instance_to_json(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace resilmax
