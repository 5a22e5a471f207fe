#pragma once

#include <span>
#include <string>

#include "ncposet/labeling.hpp"
#include "ncposet/nbb.hpp"
#include "ncposet/poset.hpp"

namespace ncposet {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"elements": [keys...], "covers": [[i, j], ...]}
std::string poset_to_json(const FinitePoset& p);
/// Inverse of poset_to_json. Throws FormatError on malformed input and
/// PosetError if the covers do not describe a transitively reduced order.
FinitePoset poset_from_json(const std::string& text);

/// Hasse diagram with the bottom drawn lowest; elements of equal rank share a
/// row when the poset is graded. Labels are drawn on edges when given.
std::string poset_to_dot(const FinitePoset& p, const EdgeLabeling* labels = nullptr,
                         const std::string& name = "hasse");

/// One cluster per base, outlined in red (S2), blue (S1), green (R) or
/// black (kept).
std::string nbb_trees_to_dot(std::span<const AtomSet> bases, int n, bool classify);

}  // namespace ncposet
