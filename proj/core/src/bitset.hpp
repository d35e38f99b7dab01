#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cubulate/graph.hpp"

namespace cubulate::detail {

using Word = std::uint64_t;
using Bits = std::vector<Word>;

inline int word_count(int n) { return (n + 63) / 64; }

inline Bits make_bits(int n) { return Bits(static_cast<std::size_t>(word_count(n)), 0); }

inline void set_bit(Bits& b, int v) { b[v / 64] |= Word{1} << (v % 64); }
inline bool test_bit(const Bits& b, int v) { return (b[v / 64] >> (v % 64)) & 1U; }

inline Bits to_bits(int n, const VertexSet& s) {
  Bits b = make_bits(n);
  for (Vertex v : s) set_bit(b, v);
  return b;
}

inline Bits full_bits(int n) {
  Bits b = make_bits(n);
  for (int v = 0; v < n; ++v) set_bit(b, v);
  return b;
}

inline VertexSet to_set(const Bits& b) {
  VertexSet out;
  for (std::size_t k = 0; k < b.size(); ++k) {
    Word w = b[k];
    while (w) {
      out.push_back(static_cast<Vertex>(k * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

inline bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] & b[k]) return true;
  }
  return false;
}

inline bool intersects3(const Bits& a, const Bits& b, const Bits& c) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] & b[k] & c[k]) return true;
  }
  return false;
}

inline void and_with(Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] &= b[k];
}

inline int popcount(const Bits& a) {
  int c = 0;
  for (Word w : a) c += std::popcount(w);
  return c;
}

}  // namespace cubulate::detail
