#include "betti/morse.hpp"

#include <unordered_map>

#include "betti/constructions.hpp"

namespace betti {

MatchingVerdict verify_matching(const SimplicialComplex& complex, const MorseMatching& matching) {
  MatchingVerdict verdict;
  const auto faces = complex.faces();
  std::unordered_map<Face, std::size_t> index;
  for (std::size_t k = 0; k < faces.size(); ++k) index.emplace(faces[k], k);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> partner(faces.size(), kNone);
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (verdict.problem.empty()) verdict.problem = why;
  };
  for (const auto& [lo, hi] : matching.pairs) {
    const std::string tag = "{" + complex.facet_string(lo) + "} / {" + complex.facet_string(hi) + "}";
    if (!is_subset(lo, hi) || face_size(hi) != face_size(lo) + 1) {
      fail(verdict.valid, "pair " + tag + " is not a codimension-one incidence");
      continue;
    }
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      fail(verdict.valid, "pair " + tag + " leaves the complex");
      continue;
    }
    if (partner[a->second] != kNone || partner[b->second] != kNone) {
      fail(verdict.valid, "pair " + tag + " reuses a face");
      continue;
    }
    partner[a->second] = b->second;
    partner[b->second] = a->second;
  }
  for (std::size_t k = 0; k < faces.size(); ++k)
    if (partner[k] == kNone) verdict.unmatched.push_back(faces[k]);
  if (!verdict.unmatched.empty())
    fail(verdict.complete, std::to_string(verdict.unmatched.size()) + " faces unmatched, first {" +
                               complex.facet_string(verdict.unmatched.front()) + "}");

  // Successors of face k: its facets (codim one) except a matched lower
  // partner, plus a matched upper partner.
  auto successors = [&](std::size_t k, std::vector<std::size_t>& out) {
    out.clear();
    const Face f = faces[k];
    for (std::size_t v : face_vertices(f)) {
      const std::size_t s = index.at(f & ~bit(v));
      if (partner[k] != s) out.push_back(s);
    }
    if (partner[k] != kNone && face_size(faces[partner[k]]) > face_size(f)) out.push_back(partner[k]);
  };
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(faces.size(), kWhite);
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
  for (std::size_t root = 0; root < faces.size() && verdict.acyclic; ++root) {
    if (colour[root] != kWhite) continue;
    stack.emplace_back(root, std::vector<std::size_t>{});
    successors(root, stack.back().second);
    colour[root] = kGrey;
    while (!stack.empty() && verdict.acyclic) {
      auto& [node, next] = stack.back();
      if (next.empty()) {
        colour[node] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t s = next.back();
      next.pop_back();
      if (colour[s] == kGrey) {
        fail(verdict.acyclic, "directed cycle through {" + complex.facet_string(faces[s]) + "}");
      } else if (colour[s] == kWhite) {
        colour[s] = kGrey;
        stack.emplace_back(s, std::vector<std::size_t>{});
        successors(s, stack.back().second);
      }
    }
    stack.clear();
  }
  return verdict;
}

ConingMatching coning_matching(const SimplicialComplex& gamma, const std::vector<SimplicialComplex>& covers) {
  ConingMatching out{cone_tilde(gamma, covers), {}, {}};
  const std::size_t n = static_cast<std::size_t>(face_size(gamma.vertex_set()));
  const std::size_t m = covers.size();
  const Face base = full_face(n);
  for (Face f : out.cone.faces()) {
    const Face sigma = f & base;
    for (std::size_t j = 0; j < m; ++j) {
      const Face y = bit(n + j);
      if (!out.cone.contains(sigma | y)) continue;
      // Least y_j in Y_σ: pair from the side that lacks it.
      if (!(f & y)) out.matching.pairs.emplace_back(f, f | y);
      break;
    }
  }
  out.verdict = verify_matching(out.cone, out.matching);
  return out;
}

}  // namespace betti
