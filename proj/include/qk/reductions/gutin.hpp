#pragma once

#include <string>

#include "qk/instances.hpp"

namespace qk {

namespace detail {

/// k_i -> k_{i+1}, k_{i+2}, k_{i+4} (indices mod 7), the circulant tournament on Z_7.
inline constexpr int kCirculantOffsets[3] = {1, 2, 4};

/// Adds one copy of the 14-vertex gadget: k1..k7 forming the circulant
/// tournament and pendant s_i -> k_i. Labels are `prefix + "k1"` etc.
inline void add_gutin_gadget(LabeledBuilder& b, const std::string& prefix) {
  for (int i = 1; i <= 7; ++i) b.add(prefix + "k" + std::to_string(i));
  for (int i = 1; i <= 7; ++i) b.add(prefix + "s" + std::to_string(i));
  for (int i = 0; i < 7; ++i)
    for (int off : kCirculantOffsets) b.arc(prefix + "k" + std::to_string(i + 1), prefix + "k" + std::to_string((i + off) % 7 + 1));
  for (int i = 1; i <= 7; ++i) b.arc(prefix + "s" + std::to_string(i), prefix + "k" + std::to_string(i));
}

}  // namespace detail

/// Sink-free 14-vertex digraph without two disjoint quasi-kernels, labelled
/// k1..k7 (vertices 0..6) and s1..s7 (vertices 7..13).
inline ReductionOutput gutin_gadget_labeled() {
  detail::LabeledBuilder b;
  detail::add_gutin_gadget(b, "");
  return b.finish({});
}

inline Digraph gutin_gadget() { return gutin_gadget_labeled().digraph; }

}  // namespace qk
