// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <vector>

namespace atlk {

// Set of interned global-state indices. All fixpoints operate on these;
// the length is fixed to |S| of the owning model.
using StateSet = boost::dynamic_bitset<unsigned long>;

template <typename Fn>
inline void forEachBit(const StateSet& s, Fn&& fn) {
  for (auto i = s.find_first(); i != StateSet::npos; i = s.find_next(i)) fn(i);
}

inline std::vector<std::size_t> toIndices(const StateSet& s) {
  std::vector<std::size_t> out;
  forEachBit(s, [&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace atlk
