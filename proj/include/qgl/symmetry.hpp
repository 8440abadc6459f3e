#pragma once

#include <qgl/canonical.hpp>
#include <qgl/error.hpp>
#include <qgl/graph.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

namespace qgl {

struct AutomorphismSummary {
  std::uint64_t group_size = 1;
  /// Greedy lexicographic generating set; empty for the trivial group.
  std::vector<Permutation> generators;
  /// Orbits sorted internally and ordered by smallest member.
  std::vector<std::vector<int>> orbits;
  int orbit_count = 0;

  friend bool operator==(const AutomorphismSummary&, const AutomorphismSummary&) = default;
};

namespace symmetry_detail {

inline std::uint64_t pack(const Permutation& p) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < p.size(); ++i) key |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  return key;
}

inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g), n_(g.order()), color_(refined_vertex_classes(g)), image_(static_cast<std::size_t>(g.order())) {}

  std::vector<Permutation> run() {
    assign(0, 0);
    return std::move(found_);
  }

 private:
  void assign(int v, VertexMask taken) {
    if (v == n_) {
      found_.push_back(image_);
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if (((taken >> w) & 1) || color_[static_cast<std::size_t>(w)] != color_[static_cast<std::size_t>(v)]) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        consistent = g_.has_edge(u, v) == g_.has_edge(image_[static_cast<std::size_t>(u)], w);
      }
      if (!consistent) continue;
      image_[static_cast<std::size_t>(v)] = w;
      assign(v + 1, static_cast<VertexMask>(taken | (1u << w)));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  Permutation image_;
  std::vector<Permutation> found_;
};

}  // namespace symmetry_detail

/// Every automorphism as an image list, in lexicographic order. Candidate
/// images are restricted to the vertex's refinement class.
inline std::vector<Permutation> automorphisms(const Graph& g) {
  if (g.order() > 8) throw Error(Errc::unsupported_size, "automorphism search supports n <= 8");
  return symmetry_detail::AutomorphismSearch(g).run();
}

/// Elements of the group generated by `generators` (identity included).
inline std::vector<Permutation> group_closure(int n, const std::vector<Permutation>& generators) {
  Permutation identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Permutation> elements{identity};
  std::unordered_set<std::uint64_t> seen{symmetry_detail::pack(identity)};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation& s : generators) {
      Permutation next = symmetry_detail::compose(s, elements[i]);
      if (seen.insert(symmetry_detail::pack(next)).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

inline AutomorphismSummary automorphism_group(const Graph& g) {
  const int n = g.order();
  const std::vector<Permutation> autos = automorphisms(g);
  AutomorphismSummary out;
  out.group_size = autos.size();

  std::unordered_set<std::uint64_t> closure;
  {
    Permutation identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    closure.insert(symmetry_detail::pack(identity));
  }
  for (const Permutation& sigma : autos) {
    if (closure.size() == autos.size()) break;
    if (closure.contains(symmetry_detail::pack(sigma))) continue;
    out.generators.push_back(sigma);
    closure.clear();
    for (const Permutation& p : group_closure(n, out.generators)) closure.insert(symmetry_detail::pack(p));
  }

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (const Permutation& sigma : autos) {
    for (int v = 0; v < n; ++v) {
      const int a = find(v);
      const int b = find(sigma[static_cast<std::size_t>(v)]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbits[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v);
  }
  out.orbit_count = static_cast<int>(out.orbits.size());
  return out;
}

inline int orbit_count(const Graph& g) { return automorphism_group(g).orbit_count; }

}  // namespace qgl
