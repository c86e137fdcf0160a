#include "bgposet/verify.hpp"

#include "bgposet/bigrassmannian.hpp"
#include "bgposet/bruhat_order.hpp"
#include "bgposet/oracles.hpp"
#include "bgposet/permutation.hpp"
#include "bgposet/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace bgposet {

namespace {

class Recorder {
 public:
  Recorder(std::string_view suite, std::string_view name, int n_min, int n_max) {
    result_.suite = suite;
    result_.name = name;
    result_.n_min = n_min;
    result_.n_max = n_max;
  }

  template <typename Describe>
  bool expect(bool ok, Describe&& describe) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
    return ok;
  }

  void note(std::string text) { result_.notes.push_back(std::move(text)); }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string perm_text(const Permutation& p) { return format_permutation(p); }

std::string pair_text(const Permutation& p, const Permutation& q) {
  return perm_text(p) + " vs " + perm_text(q);
}

std::string list_text(std::span<const LengthVector> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + vs[i].to_string();
  return out + "}";
}

// ---------------------------------------------------------------- order

void check_permutation_core(const VerifyLimits& lim, std::vector<CheckResult>& out) {
  const int top = std::min(lim.max_n, lim.permutation_max_n);
  Recorder involution("order", "inverse and conjugate are involutions", 1, top);
  Recorder delta("order", "reduction lowers inversions by 2N+1", 1, top);
  Recorder inv_sym("order", "inversions of p and its inverse agree", 1, top);
  Recorder triangle("order", "monotone triangles are well formed", 1, top);
  for (int n = 1; n <= top; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      involution.expect(inverse(inverse(p)) == p && conjugate(conjugate(p)) == p,
                        [&] { return perm_text(p); });
      for (const auto& [r, step] : reductions(p)) {
        delta.expect(inversions(p) == inversions(r) + 2 * step.crossing_count + 1, [&] {
          return perm_text(p) + " swap (" + std::to_string(step.i) + "," +
                 std::to_string(step.j) + ")";
        });
      }
      inv_sym.expect(inversions(p) == inversions(inverse(p)), [&] { return perm_text(p); });
      triangle.expect(monotone_triangle(p).is_valid(), [&] { return perm_text(p); });
    });
  }
  out.push_back(involution.take());
  out.push_back(delta.take());
  out.push_back(inv_sym.take());
  out.push_back(triangle.take());
}

void check_bruhat_order(const VerifyLimits& lim, std::vector<CheckResult>& out) {
  const int exhaustive_top = std::min({lim.max_n, lim.permutation_max_n, 5});
  Recorder axioms("order", "tableau criterion is a partial order", 1, exhaustive_top);
  Recorder exact("order", "reduction oracle equals tableau criterion", 1,
                  std::min({lim.max_n, lim.permutation_max_n, lim.reduction_oracle_max_n, 6}));
  Recorder conj("order", "conjugation preserves the order", 1, exhaustive_top);

  for (int n = 1; n <= exhaustive_top; ++n) {
    const auto perms = all_permutations(n);
    const std::size_t m = perms.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) leq[i][j] = leq_ehresmann(perms[i], perms[j]);
    for (std::size_t i = 0; i < m; ++i) {
      axioms.expect(leq[i][i], [&] { return "reflexivity at " + perm_text(perms[i]); });
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) {
          axioms.expect(!(leq[i][j] && leq[j][i]),
                        [&] { return "antisymmetry at " + pair_text(perms[i], perms[j]); });
        }
        if (!leq[i][j]) continue;
        for (std::size_t k = 0; k < m; ++k)
          if (leq[j][k])
            axioms.expect(leq[i][k], [&] {
              return "transitivity at " + perm_text(perms[i]) + " <= " + perm_text(perms[j]) +
                     " <= " + perm_text(perms[k]);
            });
      }
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        exact.expect(leq_reduction_oracle(perms[i], perms[j], lim.reduction_oracle_max_n) ==
                          static_cast<bool>(leq[i][j]),
                      [&] { return pair_text(perms[i], perms[j]); });
        conj.expect(leq_ehresmann(conjugate(perms[i]), conjugate(perms[j])) ==
                        static_cast<bool>(leq[i][j]),
                    [&] { return pair_text(perms[i], perms[j]); });
      }
  }

  // One size past the exhaustive range, on seeded random pairs.
  const int sampled_n = exhaustive_top + 1;
  if (sampled_n <= std::min({lim.max_n, lim.permutation_max_n, lim.reduction_oracle_max_n, 6})) {
    std::mt19937_64 rng(0x5eed);
    std::vector<int> a(static_cast<std::size_t>(sampled_n));
    std::vector<int> b(a.size());
    for (int t = 0; t < 2000; ++t) {
      std::iota(a.begin(), a.end(), 1);
      std::iota(b.begin(), b.end(), 1);
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      const Permutation p(a);
      const Permutation q(b);
      exact.expect(leq_reduction_oracle(p, q, lim.reduction_oracle_max_n) == leq_ehresmann(p, q),
                    [&] { return pair_text(p, q); });
    }
    exact.note("n=" + std::to_string(sampled_n) + ": 2000 seeded random pairs");
  }
  out.push_back(axioms.take());
  out.push_back(conj.take());

  const int top = std::min(lim.max_n, lim.permutation_max_n);
  Recorder rank("order", "order raises inversion count", 1, top);
  Recorder bb("order", "single-row criterion equals tableau criterion", 2, top);
  Recorder pattern("order", "descent test matches block-interchange pattern", 1, top);
  for (int n = 1; n <= top; ++n) {
    const auto perms = all_permutations(n);
    std::vector<long long> inv;
    for (const auto& p : perms) inv.push_back(inversion_number(p));
    std::size_t bg_found = 0;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const bool is_bg = is_bigrassmannian(perms[i]);
      if (is_bg) ++bg_found;
      pattern.expect(is_bg == oracle::is_bigrassmannian_by_pattern(perms[i]),
                     [&] { return perm_text(perms[i]); });
      for (std::size_t j = 0; j < perms.size(); ++j) {
        const bool leq = leq_ehresmann(perms[i], perms[j]);
        rank.expect(!leq || inv[i] <= inv[j], [&] { return pair_text(perms[i], perms[j]); });
        if (is_bg)
          bb.expect(leq_bb_bigrassmannian(perms[i], perms[j]) == leq,
                    [&] { return pair_text(perms[i], perms[j]); });
      }
    }
    pattern.expect(bg_count(n) == bg_found, [&] {
      return "n=" + std::to_string(n) + ": " + std::to_string(bg_found) + " found";
    });
  }
  out.push_back(rank.take());
  out.push_back(bb.take());
  out.push_back(pattern.take());
}

void check_vectors(const VerifyLimits& lim, std::vector<CheckResult>& out) {
  const int top = lim.max_n;
  Recorder bijection("order", "length vector bijection", 2, top);
  Recorder criterion("order", "vector criterion equals tableau and single-row criteria", 2, top);
  const int oracle_top = std::min(top, lim.reduction_oracle_max_n);
  Recorder reduction("order", "vector criterion equals reduction oracle", 2, oracle_top);
  Recorder duality("order", "f2143 reverses the order", 2, top);
  Recorder coords("order", "f2143 involution, f1324 inverse, f4321 conjugate", 2, top);

  const auto p2143 = make_permutation({2, 1, 4, 3});
  const auto p1324 = make_permutation({1, 3, 2, 4});
  const auto p4321 = make_permutation({4, 3, 2, 1});
  for (int n = 2; n <= top; ++n) {
    const auto vs = enumerate_bg(n);
    std::vector<Permutation> ps;
    for (const auto& v : vs) {
      ps.push_back(from_length_vector(v));
      bijection.expect(length_vector(ps.back()) == v, [&] { return v.to_string(); });
      const auto& p = ps.back();
      coords.expect(f2143(f2143(v)) == v && f_phi(p2143, v) == f2143(v) &&
                        f_phi(p1324, v) == length_vector(inverse(p)) &&
                        f_phi(p4321, v) == length_vector(conjugate(p)),
                    [&] { return v.to_string(); });
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = 0; j < vs.size(); ++j) {
        const bool vec = bg_leq(vs[i], vs[j]);
        criterion.expect(vec == leq_ehresmann(ps[i], ps[j]) &&
                             vec == leq_bb_bigrassmannian(ps[i], ps[j]),
                         [&] { return vs[i].to_string() + " vs " + vs[j].to_string(); });
        duality.expect(vec == bg_leq(f2143(vs[j]), f2143(vs[i])),
                       [&] { return vs[i].to_string() + " vs " + vs[j].to_string(); });
        if (n <= oracle_top)
          reduction.expect(vec == leq_reduction_oracle(ps[i], ps[j], lim.reduction_oracle_max_n),
                           [&] { return vs[i].to_string() + " vs " + vs[j].to_string(); });
      }
    }
  }
  out.push_back(bijection.take());
  out.push_back(criterion.take());
  out.push_back(reduction.take());
  out.push_back(duality.take());
  out.push_back(coords.take());
}

// ---------------------------------------------------------------- counts

void check_counts(const VerifyLimits& lim, std::vector<CheckResult>& out) {
  constexpr int kFormulaTop = 30;
  Recorder total("counts", "bigrassmannian count C(n+1,3)", 1, kFormulaTop);
  Recorder levels_sum("counts", "level sizes sum to C(n+1,3)", 2, kFormulaTop);
  for (int n = 1; n <= kFormulaTop; ++n) {
    total.expect(enumerate_bg(n).size() == bg_count(n), [&] { return "n=" + std::to_string(n); });
    if (n < 2) continue;
    Count sum = 0;
    for (int k = 0; k <= n - 2; ++k) sum += level_size(n, k);
    levels_sum.expect(sum == bg_count(n), [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(total.take());
  out.push_back(levels_sum.take());

  const int top = lim.max_n;
  Recorder edges("counts", "edge count 4*C(n,3)", 2, top);
  Recorder extremes("counts", "n-1 minimal and n-1 maximal elements", 2, top);
  Recorder levels("counts", "level k has (k+1)(n-k-1) elements", 2, top);
  Recorder degrees("counts", "degree formula, values in {2,4,6,8}", 3, top);
  Recorder covers("counts", "cover graph is the transitive reduction of the order", 2, top);
  Recorder tableau_covers("counts", "cover graph matches tableau-criterion reduction", 2, top);
  Recorder grading("counts", "cover edges raise l2+l3-2 by one", 2, top);
  Recorder saturated("counts", "saturated chain formula equals path count", 2, top);
  Recorder maximal("counts", "maximal chains 4^(n-2)", 2, top);
  Recorder domination("counts", "every minimal element lies below every maximal one", 2, top);
  Recorder distance("counts", "distance formula equals BFS; diagram connected", 2, top);
  Recorder beta("counts", "beta formulas equal down-set size", 2, top);
  Recorder alpha("counts", "alpha formulas equal up-set size", 2, top);
  Recorder transport("counts", "f2143 maps down-sets onto up-sets", 2, top);

  for (int n = 2; n <= top; ++n) {
    const auto poset = HassePoset::build(n);
    const auto& vs = poset.vertices();
    const std::string at = "n=" + std::to_string(n);

    edges.expect(poset.edge_count() == edge_count(n),
                 [&] { return at + ": " + std::to_string(poset.edge_count()) + " edges"; });
    edges.note(at + ": " + std::to_string(poset.edge_count()) + " edges verified");

    std::vector<LengthVector> minima;
    std::vector<LengthVector> maxima;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (poset.down(i).empty()) minima.push_back(vs[i]);
      if (poset.up(i).empty()) maxima.push_back(vs[i]);
    }
    auto sorted = [](std::vector<LengthVector> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    extremes.expect(minima == sorted(minimal_elements(n)) &&
                        maxima == sorted(maximal_elements(n)) &&
                        minima.size() == static_cast<std::size_t>(n - 1) &&
                        maxima.size() == static_cast<std::size_t>(n - 1),
                    [&] { return at; });

    for (int k = 0; k <= n - 2; ++k)
      levels.expect(poset.level(k).size() == level_size(n, k),
                    [&] { return at + " level " + std::to_string(k); });

    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (n > 2) {
        const std::size_t graph_degree = poset.up(i).size() + poset.down(i).size();
        const Count d = degree(vs[i]);
        degrees.expect(d == graph_degree && (d == 2 || d == 4 || d == 6 || d == 8),
                       [&] { return vs[i].to_string(); });
      }
      for (std::size_t j : poset.up(i))
        grading.expect(poset.rank(j) == poset.rank(i) + 1,
                       [&] { return vs[i].to_string() + " -> " + vs[j].to_string(); });
    }

    const auto reduction = oracle::transitive_reduction(vs, bg_leq);
    const auto reach = oracle::reachability(poset);
    std::vector<Permutation> ps;
    for (const auto& v : vs) ps.push_back(from_length_vector(v));
    const auto tableau_reduction = oracle::transitive_reduction(
        vs, [&](const LengthVector& x, const LengthVector& y) {
          return leq_ehresmann(ps[poset.index_of(x)], ps[poset.index_of(y)]);
        });
    for (std::size_t i = 0; i < vs.size(); ++i) {
      covers.expect(reduction[i] == poset.up(i), [&] { return "covers of " + vs[i].to_string(); });
      tableau_covers.expect(tableau_reduction[i] == poset.up(i),
                            [&] { return "covers of " + vs[i].to_string(); });
      for (std::size_t j = 0; j < vs.size(); ++j)
        covers.expect(reach[i][j] == bg_leq(vs[i], vs[j]),
                      [&] { return "closure at " + vs[i].to_string() + " vs " + vs[j].to_string(); });
    }

    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto paths = oracle::path_counts_from(poset, i);
      const auto dist = oracle::bfs_distances(poset, i);
      for (std::size_t j = 0; j < vs.size(); ++j) {
        const auto pair = [&] { return vs[i].to_string() + " to " + vs[j].to_string(); };
        if (bg_leq(vs[i], vs[j])) {
          saturated.expect(count_saturated_chains(vs[i], vs[j]) == paths[j], pair);
        } else {
          saturated.expect(paths[j] == 0, pair);
        }
        distance.expect(dist[j] >= 0 && hasse_distance(vs[i], vs[j]) == dist[j], pair);
      }
    }

    maximal.expect(oracle::maximal_chain_count(poset) == count_maximal_chains(n),
                   [&] { return at; });
    for (const auto& lo : minimal_elements(n))
      for (const auto& hi : maximal_elements(n))
        domination.expect(bg_leq(lo, hi), [&] { return lo.to_string() + " vs " + hi.to_string(); });

    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& v = vs[i];
      const auto& p = ps[i];
      const auto abc = to_abc(v);
      const Count down = oracle::downset_size(p);
      beta.expect(beta_bg(v) == down && beta_general(p) == down && beta_abc(abc) == down &&
                      beta_bg(v) == alpha_bg(f2143(v)),
                  [&] { return v.to_string(); });
      const Count up = oracle::upset_size(p);
      alpha.expect(alpha_bg(v) == up && alpha_abc(abc) == up &&
                       oracle::upset_size_by_vectors(v) == up,
                   [&] { return v.to_string(); });

      std::set<LengthVector> image_of_down;
      std::set<LengthVector> up_of_image;
      for (const auto& u : vs) {
        if (bg_leq(u, v)) image_of_down.insert(f2143(u));
        if (bg_leq(f2143(v), u)) up_of_image.insert(u);
      }
      transport.expect(image_of_down == up_of_image, [&] { return v.to_string(); });
    }
  }
  for (auto* r : {&edges, &extremes, &levels, &degrees, &covers, &tableau_covers, &grading,
                  &saturated, &maximal, &domination, &distance, &beta, &alpha, &transport})
    out.push_back(r->take());

  // Closed forms on their own, over a wider range.
  Recorder dual("counts", "beta(v) = alpha(f2143(v))", 2, std::max(top, 10));
  for (int n = 2; n <= std::max(top, 10); ++n)
    for (const auto& v : enumerate_bg(n))
      dual.expect(beta_bg(v) == alpha_bg(f2143(v)), [&] { return v.to_string(); });
  out.push_back(dual.take());

  // Arbitrary permutations: exhaustive at small n, seeded sample above.
  const int exhaustive_top = std::min({top, lim.permutation_max_n, 5});
  const int sample_n = std::min(top, 7);
  Recorder general("counts", "beta of any permutation equals BG down-set size", 2,
                   std::max(exhaustive_top, sample_n));
  for (int n = 2; n <= exhaustive_top; ++n) {
    for_each_permutation(n, [&](const Permutation& s) {
      general.expect(beta_general(s) == oracle::downset_size(s), [&] { return perm_text(s); });
    });
  }
  if (sample_n > exhaustive_top) {
    std::mt19937_64 rng(0xbe7a);
    std::vector<int> w(static_cast<std::size_t>(sample_n));
    for (int t = 0; t < 1000; ++t) {
      std::iota(w.begin(), w.end(), 1);
      std::shuffle(w.begin(), w.end(), rng);
      const Permutation s(w);
      general.expect(beta_general(s) == oracle::downset_size(s), [&] { return perm_text(s); });
    }
    general.note("n=" + std::to_string(sample_n) + ": 1000 seeded random permutations");
  }
  out.push_back(general.take());
}

// ---------------------------------------------------------------- sperner

// Level-1 images in BG_6, as tabulated for the chain partition.
const std::vector<std::pair<std::string, std::string>> kLevelOneTableN6 = {
    {"4211", "3311"}, {"3212", "2312"}, {"2213", "1313"}, {"1214", "1223"},
    {"4121", "3221"}, {"3122", "2222"}, {"2123", "2132"}, {"1124", "1133"},
};

void check_sperner(const VerifyLimits& lim, std::vector<CheckResult>& out) {
  const int top = lim.max_n;
  Recorder paths_check("sperner", "chain partition: disjoint saturated paths through the middle",
                       2, top);
  Recorder antichain("sperner", "largest antichain floor(n/2)*ceil(n/2) (Dilworth)", 2, top);
  for (int n = 2; n <= top; ++n) {
    const auto poset = HassePoset::build(n);
    const auto paths = sperner_decomposition(n);
    const int middle = middle_level(n);
    std::vector<int> seen(poset.size(), 0);
    for (const auto& path : paths) {
      bool meets_middle = false;
      bool meets_lower_middle = n % 2 == 0;
      for (std::size_t t = 0; t < path.size(); ++t) {
        ++seen[poset.index_of(path[t])];
        if (path[t].rank() == middle) meets_middle = true;
        if (path[t].rank() == middle - 1) meets_lower_middle = true;
        if (t + 1 < path.size()) {
          const auto& up = poset.up(poset.index_of(path[t]));
          paths_check.expect(
              std::binary_search(up.begin(), up.end(), poset.index_of(path[t + 1])),
              [&] { return path[t].to_string() + " -> " + path[t + 1].to_string(); });
        }
      }
      if (n == 2) meets_lower_middle = true;
      paths_check.expect(meets_middle && meets_lower_middle,
                         [&] { return "path from " + path.front().to_string(); });
    }
    for (std::size_t i = 0; i < poset.size(); ++i)
      paths_check.expect(seen[i] == 1, [&] { return poset.vertex(i).to_string() + " covered " +
                                                    std::to_string(seen[i]) + " times"; });
    paths_check.expect(paths.size() == max_antichain_size(n),
                       [&] { return "n=" + std::to_string(n) + " path count"; });

    const std::size_t dilworth = oracle::dilworth_max_antichain(poset.vertices(), bg_leq);
    antichain.expect(max_antichain_size(n) == dilworth &&
                         level_size(n, middle) == max_antichain_size(n),
                     [&] { return "n=" + std::to_string(n) + ": oracle " + std::to_string(dilworth); });
  }
  out.push_back(paths_check.take());
  out.push_back(antichain.take());

  if (top >= 6) {
    Recorder table("sperner", "level-1 map in BG_6 matches the reference table", 6, 6);
    // Reverse lexicographic order on (l2, l1).
    auto level = HassePoset::build(6).level(1);
    std::vector<LengthVector> rows;
    for (const auto& v : enumerate_bg(6))
      if (v.rank() == 1) rows.push_back(v);
    std::sort(rows.begin(), rows.end(), [](const LengthVector& x, const LengthVector& y) {
      return std::pair(x.l2(), x.l1()) > std::pair(y.l2(), y.l1());
    });
    table.expect(rows.size() == kLevelOneTableN6.size() && level.size() == rows.size(),
                 [&] { return "level 1 has " + std::to_string(rows.size()) + " elements"; });
    for (std::size_t i = 0; i < rows.size() && i < kLevelOneTableN6.size(); ++i) {
      const auto image = sperner_step(rows[i]);
      const std::string got = image ? image->digits() : "-";
      table.expect(rows[i].digits() == kLevelOneTableN6[i].first &&
                       got == kLevelOneTableN6[i].second,
                   [&] { return rows[i].digits() + " -> " + got; });
      table.note(rows[i].digits() + " -> " + got);
    }
    out.push_back(table.take());
  }
}

// ---------------------------------------------------------------- butterfly

void check_butterflies(const VerifyLimits& lim, std::vector<CheckResult>& out) {
  const int top = lim.max_n;
  Recorder count("butterfly", "butterfly count C(n,3)+C(n-2,3)", 3, top);
  Recorder shape("butterfly", "butterflies are two levels joined by four covers", 3, top);
  Recorder per_edge("butterfly", "each edge in one or two butterflies; one iff a shared 1", 3, top);
  for (int n = 3; n <= top; ++n) {
    const auto poset = HassePoset::build(n);
    const auto found = butterflies(n);
    const auto searched = oracle::butterflies_by_search(poset);
    count.expect(found == searched && found.size() == butterfly_count(n), [&] {
      return "n=" + std::to_string(n) + ": enumerated " + std::to_string(found.size()) +
             ", searched " + std::to_string(searched.size());
    });

    std::map<std::pair<LengthVector, LengthVector>, int> edge_hits;
    for (const auto& b : found) {
      bool ok = b.lower[0] != b.lower[1] && b.upper[0] != b.upper[1] &&
                b.lower[0].rank() == b.lower[1].rank() &&
                b.upper[0].rank() == b.lower[0].rank() + 1 &&
                b.upper[1].rank() == b.lower[0].rank() + 1;
      for (const auto& lo : b.lower)
        for (const auto& hi : b.upper) {
          const auto up = up_covers(lo);
          ok = ok && std::binary_search(up.begin(), up.end(), hi);
          ++edge_hits[{lo, hi}];
        }
      shape.expect(ok, [&] { return list_text(b.lower) + " / " + list_text(b.upper); });
    }
    for (std::size_t i = 0; i < poset.size(); ++i) {
      for (std::size_t j : poset.up(i)) {
        const auto& lo = poset.vertex(i);
        const auto& hi = poset.vertex(j);
        const int hits = edge_hits[{lo, hi}];
        bool shared_one = false;
        for (int c = 1; c <= 4; ++c) shared_one = shared_one || (lo[c] == 1 && hi[c] == 1);
        per_edge.expect((hits == 1 || hits == 2) && ((hits == 1) == shared_one) &&
                            butterflies_on_edge(lo, hi) == hits,
                        [&] { return lo.to_string() + " -> " + hi.to_string(); });
      }
    }
  }
  out.push_back(count.take());
  out.push_back(shape.take());
  out.push_back(per_edge.take());
}

// ---------------------------------------------------------------- below

void check_bounds(const VerifyLimits& lim, std::vector<CheckResult>& out) {
  const int top = lim.max_n;
  Recorder below("below", "maximal elements below a target set", 2, top);
  Recorder above("below", "minimal elements above a target set", 2, top);
  Recorder bounded("below", "min-coordinate characterization when S <= n+2", 2, top);
  std::uint64_t empty_cases = 0;
  std::map<int, std::uint64_t> disagreements;
  for (int n = 2; n <= top; ++n) {
    const auto vs = enumerate_bg(n);
    const std::size_t m = vs.size();
    auto run = [&](std::vector<LengthVector> targets) {
      int max1 = 0, min2 = n, min3 = n, max4 = 0;
      for (const auto& t : targets) {
        max1 = std::max(max1, t.l1());
        min2 = std::min(min2, t.l2());
        min3 = std::min(min3, t.l3());
        max4 = std::max(max4, t.l4());
      }
      const int sum = max1 + min2 + min3 + max4;
      const auto formula = maximal_below(targets);
      const auto brute = oracle::maximal_below(targets);
      const auto brute_above = oracle::minimal_above(targets);
      if (brute.empty()) ++empty_cases;
      const bool one_level = std::all_of(formula.begin(), formula.end(), [&](const auto& v) {
        return v.rank() == formula.front().rank();
      });
      below.expect(formula == brute && one_level, [&] { return list_text(targets); });
      above.expect(minimal_above(targets) == brute_above, [&] { return list_text(targets); });

      // Upper bounds use the f2143 image of the targets, whose sum swaps the roles.
      int min1 = n, max2 = 0, max3 = 0, min4 = n;
      for (const auto& t : targets) {
        min1 = std::min(min1, t.l1());
        max2 = std::max(max2, t.l2());
        max3 = std::max(max3, t.l3());
        min4 = std::min(min4, t.l4());
      }
      const int dual_sum = max2 + min1 + min4 + max3;
      auto predicted = [&](int s) {
        return s <= n + 2 ? static_cast<std::size_t>(n + 3 - s) : std::size_t{0};
      };
      const auto char_below = characterized_maximal_below(targets);
      const auto char_above = characterized_minimal_above(targets);
      const bool below_ok = char_below == brute && brute.size() == predicted(sum);
      const bool above_ok = char_above == brute_above && brute_above.size() == predicted(dual_sum);
      if (!below_ok || !above_ok) ++disagreements[n];
      if (sum <= n + 2) bounded.expect(below_ok, [&] { return "below " + list_text(targets); });
      if (dual_sum <= n + 2) bounded.expect(above_ok, [&] { return "above " + list_text(targets); });
    };
    for (std::size_t a = 0; a < m; ++a) {
      run({vs[a]});
      for (std::size_t b = a + 1; b < m; ++b) {
        run({vs[a], vs[b]});
        for (std::size_t c = b + 1; c < m; ++c) run({vs[a], vs[b], vs[c]});
      }
    }
  }
  below.note("target sets of size 1-3; " + std::to_string(empty_cases) + " with no lower bound");
  for (const auto& [n, count] : disagreements)
    bounded.note("n=" + std::to_string(n) + ": " + std::to_string(count) +
                 " target sets with S > n+2 still have bounds, none matching the characterization");
  out.push_back(below.take());
  out.push_back(above.take());
  out.push_back(bounded.take());
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::All, Suite::Order, Suite::Counts, Suite::Sperner, Suite::Butterfly,
                  Suite::Below})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Order: return "order";
    case Suite::Counts: return "counts";
    case Suite::Sperner: return "sperner";
    case Suite::Butterfly: return "butterfly";
    case Suite::Below: return "below";
  }
  return "all";
}

std::vector<CheckResult> run_verification(Suite suite, const VerifyLimits& limits) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Order) {
    check_permutation_core(limits, out);
    check_bruhat_order(limits, out);
    check_vectors(limits, out);
  }
  if (all || suite == Suite::Counts) check_counts(limits, out);
  if (all || suite == Suite::Sperner) check_sperner(limits, out);
  if (all || suite == Suite::Butterfly) check_butterflies(limits, out);
  if (all || suite == Suite::Below) check_bounds(limits, out);
  return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    out << (r.passed ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name << "  n="
        << r.n_min << ".." << r.n_max << "  instances=" << r.instances << '\n';
    if (!r.passed) out << "      counterexample: " << r.counterexample << '\n';
    for (const auto& note : r.notes) out << "      " << note << '\n';
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace bgposet
