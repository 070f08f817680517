#pragma once

#include <string>

#include "drgtight/classify.hpp"

namespace drgtight {

/// A named intersection array as read from an input document:
///   {"name": optional, "D": int, "b": [scalar strings], "c": [scalar strings]}
/// Scalar strings are "p/q", integers, or decimals; any decimal puts the
/// whole array in approximate mode.
struct ArrayDocument {
  std::string name;
  IntersectionArray array;
};

/// ValidationError on malformed JSON or a failing invariant.
ArrayDocument parse_array_document(const std::string& json_text, const Tolerance& tol = {});

/// Serialize back to the input schema; emits "c_D_unconstrained": true
/// for arrays reconstructed from a tight sequence.
std::string array_to_json(const IntersectionArray& arr, const std::string& name = "");

/// {"case": ..., "universal": [...], "pairs": [...], "warnings": [...]}
std::string report_to_json(const ClassificationReport& report);

}  // namespace drgtight
