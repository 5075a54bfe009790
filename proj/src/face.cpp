#include "betti/face.hpp"

#include <unordered_set>

namespace betti {

std::vector<std::size_t> face_vertices(Face f) {
  std::vector<std::size_t> out;
  out.reserve(face_size(f));
  while (f) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(f)));
    f &= f - 1;
  }
  return out;
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) { return face_less(b, a); });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (Face f : faces) {
    bool covered = std::any_of(kept.begin(), kept.end(), [f](Face k) { return is_subset(f, k); });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), face_less);
  return kept;
}

std::vector<Face> minimal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (Face f : faces) {
    bool covered = std::any_of(kept.begin(), kept.end(), [f](Face k) { return is_subset(k, f); });
    if (!covered) kept.push_back(f);
  }
  return kept;
}

std::vector<Face> minimal_transversals(const std::vector<Face>& sets) {
  std::vector<Face> current{0};
  for (Face s : sets) {
    if (s == 0) return {};
    std::vector<Face> next;
    next.reserve(current.size() * 2);
    for (Face t : current) {
      if (t & s) {
        next.push_back(t);
        continue;
      }
      for (Face rest = s; rest; rest &= rest - 1) next.push_back(t | (rest & -rest));
    }
    current = minimal_faces(std::move(next));
  }
  return current;
}

std::vector<Face> downward_closure(const std::vector<Face>& generators) {
  std::unordered_set<Face> seen;
  for (Face g : generators) {
    for (Face sub = g;; sub = (sub - 1) & g) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

}  // namespace betti
