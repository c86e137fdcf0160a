#include "bgposet/oracles.hpp"
#include "bgposet/bruhat_order.hpp"
#include "bgposet/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bgposet::oracle {

bool is_bigrassmannian_by_pattern(const Permutation& p) {
  const int n = p.order();
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        if (from_abc(AbcForm{a, b, c, n}) == p) return true;
  return false;
}

Count downset_size(const Permutation& s) {
  Count count = 0;
  if (s.order() < 2) return count;
  for (const auto& v : enumerate_bg(s.order()))
    if (leq_ehresmann(from_length_vector(v), s)) ++count;
  return count;
}

Count upset_size(const Permutation& s) {
  Count count = 0;
  if (s.order() < 2) return count;
  for (const auto& v : enumerate_bg(s.order()))
    if (leq_ehresmann(s, from_length_vector(v))) ++count;
  return count;
}

Count upset_size_by_vectors(const LengthVector& v) {
  Count count = 0;
  for (const auto& u : enumerate_bg(v.order()))
    if (bg_leq(v, u)) ++count;
  return count;
}

std::vector<std::vector<std::size_t>> transitive_reduction(
    const std::vector<LengthVector>& vertices, const Relation& leq) {
  const std::size_t size = vertices.size();
  std::vector<std::vector<bool>> less(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      less[i][j] = i != j && leq(vertices[i], vertices[j]);

  std::vector<std::vector<std::size_t>> covers(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (!less[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < size && direct; ++k)
        if (less[i][k] && less[k][j]) direct = false;
      if (direct) covers[i].push_back(j);
    }
  }
  return covers;
}

std::vector<std::vector<bool>> reachability(const HassePoset& poset) {
  const std::size_t size = poset.size();
  std::vector<std::vector<bool>> reach(size, std::vector<bool>(size, false));
  for (std::size_t s = 0; s < size; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : poset.up(v)) {
        if (!reach[s][w]) {
          reach[s][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

std::vector<Count> path_counts_from(const HassePoset& poset, std::size_t from) {
  // Sweep by rank so each count is final before it propagates.
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return poset.rank(x) < poset.rank(y); });
  std::vector<Count> paths(poset.size(), 0);
  paths[from] = 1;
  for (std::size_t v : order) {
    if (paths[v] == 0) continue;
    for (std::size_t w : poset.up(v)) paths[w] += paths[v];
  }
  return paths;
}

Count maximal_chain_count(const HassePoset& poset) {
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return poset.rank(x) < poset.rank(y); });
  std::vector<Count> paths(poset.size(), 0);
  for (std::size_t v = 0; v < poset.size(); ++v)
    if (poset.down(v).empty()) paths[v] = 1;
  Count total = 0;
  for (std::size_t v : order) {
    for (std::size_t w : poset.up(v)) paths[w] += paths[v];
    if (poset.up(v).empty()) total += paths[v];
  }
  return total;
}

std::vector<int> bfs_distances(const HassePoset& poset, std::size_t from) {
  std::vector<int> dist(poset.size(), -1);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    auto visit = [&](std::size_t w) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    };
    for (std::size_t w : poset.up(v)) visit(w);
    for (std::size_t w : poset.down(v)) visit(w);
  }
  return dist;
}

std::size_t dilworth_max_antichain(const std::vector<LengthVector>& vertices,
                                   const Relation& leq) {
  // Minimum chain cover = |V| - maximum matching in the split graph with an
  // edge (i, j) for every strict comparison i < j.
  const std::size_t size = vertices.size();
  std::vector<std::vector<std::size_t>> adj(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (i != j && leq(vertices[i], vertices[j])) adj[i].push_back(j);

  std::vector<std::ptrdiff_t> match_right(size, -1);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<std::ptrdiff_t>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (std::size_t u = 0; u < size; ++u) {
    seen.assign(size, false);
    if (augment(u)) ++matching;
  }
  return size - matching;
}

std::vector<Butterfly> butterflies_by_search(const HassePoset& poset) {
  auto covers = [&](std::size_t lo, std::size_t hi) {
    const auto& up = poset.up(lo);
    return std::binary_search(up.begin(), up.end(), hi);
  };
  std::vector<Butterfly> out;
  for (int k = 0; k + 1 <= poset.max_rank(); ++k) {
    const auto lower = poset.level(k);
    const auto upper = poset.level(k + 1);
    for (std::size_t a = 0; a < lower.size(); ++a)
      for (std::size_t b = a + 1; b < lower.size(); ++b)
        for (std::size_t c = 0; c < upper.size(); ++c)
          for (std::size_t d = c + 1; d < upper.size(); ++d)
            if (covers(lower[a], upper[c]) && covers(lower[a], upper[d]) &&
                covers(lower[b], upper[c]) && covers(lower[b], upper[d])) {
              out.push_back(Butterfly{{poset.vertex(lower[a]), poset.vertex(lower[b])},
                                      {poset.vertex(upper[c]), poset.vertex(upper[d])}});
            }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<LengthVector> extremal_common_bounds(std::span<const LengthVector> targets,
                                                 bool below) {
  if (targets.empty()) throw Error(ErrorCode::EmptyTargetSet, "no targets given");
  auto leq = [&](const LengthVector& x, const LengthVector& y) {
    return below ? bg_leq(x, y) : bg_leq(y, x);
  };
  std::vector<LengthVector> common;
  for (const auto& v : enumerate_bg(targets.front().order())) {
    if (std::all_of(targets.begin(), targets.end(),
                    [&](const LengthVector& t) { return leq(v, t); }))
      common.push_back(v);
  }
  std::vector<LengthVector> extremal;
  for (const auto& v : common) {
    const bool dominated = std::any_of(common.begin(), common.end(), [&](const LengthVector& w) {
      return w != v && leq(v, w);
    });
    if (!dominated) extremal.push_back(v);
  }
  return extremal;
}

}  // namespace

std::vector<LengthVector> maximal_below(std::span<const LengthVector> targets) {
  return extremal_common_bounds(targets, true);
}

std::vector<LengthVector> minimal_above(std::span<const LengthVector> targets) {
  return extremal_common_bounds(targets, false);
}

}  // namespace bgposet::oracle
