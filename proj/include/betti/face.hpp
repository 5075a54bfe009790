#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace betti {

// A subset of at most 63 vertices, stored as a bit mask.
using Face = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 63;

inline int face_size(Face f) { return std::popcount(f); }
inline bool is_subset(Face a, Face b) { return (a & ~b) == 0; }
inline Face bit(std::size_t v) { return Face{1} << v; }
inline Face full_face(std::size_t n) { return n == 0 ? 0 : (~Face{0} >> (64 - n)); }

// Indices of set bits, ascending.
std::vector<std::size_t> face_vertices(Face f);

// Canonical face order: size first, then mask value.
inline bool face_less(Face a, Face b) {
  int sa = face_size(a), sb = face_size(b);
  return sa != sb ? sa < sb : a < b;
}

// Keeps the inclusion-maximal masks, sorted canonically. Duplicates collapse.
std::vector<Face> maximal_faces(std::vector<Face> faces);

// Keeps the inclusion-minimal masks, sorted canonically. Duplicates collapse.
std::vector<Face> minimal_faces(std::vector<Face> faces);

// Inclusion-minimal sets meeting every member of `sets`. An empty family has
// the single transversal {}; a family containing {} has none.
std::vector<Face> minimal_transversals(const std::vector<Face>& sets);

// Every subset of every mask in `generators`, sorted canonically.
std::vector<Face> downward_closure(const std::vector<Face>& generators);

}  // namespace betti
