#pragma once

// Exact decision: does every r-colouring of a set contain a monochromatic
// product triple? Backtracking over the elements that occur in at least one
// triple, with unit propagation on triples that have two entries assigned and
// the first branching element pinned to colour A. Elements in no triple are
// unconstrained and coloured A in any witness.
//
// "Unknown" (node budget exhausted) is a first-class outcome; a timeout is
// never reported as a decision.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "schurlab/colouring.hpp"
#include "schurlab/triples.hpp"

namespace schurlab {

enum class DecisionOutcome { product_schur, not_product_schur, unknown };

inline std::string to_string(DecisionOutcome o) {
  switch (o) {
    case DecisionOutcome::product_schur: return "product-Schur";
    case DecisionOutcome::not_product_schur: return "not product-Schur";
    case DecisionOutcome::unknown: return "unknown";
  }
  return "?";
}

struct ProductSchurResult {
  DecisionOutcome outcome = DecisionOutcome::unknown;
  std::optional<RColouring> witness;  // triple-free colouring when decided "no"
  uint64_t nodes = 0;                 // branching decisions spent
  size_t triple_count = 0;
};

// First monochromatic product triple under `col`, if any.
inline std::optional<ProductTriple> find_monochromatic_product(
    const IntegerSet& s, const RColouring& col, bool allow_degenerate = true) {
  for (const auto& t : enumerate_product_triples(s, allow_degenerate)) {
    const int ca = col.colour_of(t.a);
    if (ca != 0 && ca == col.colour_of(t.b) && ca == col.colour_of(t.c))
      return t;
  }
  return std::nullopt;
}

constexpr uint64_t kDefaultProductSchurBudget = 20'000'000;

namespace detail {

struct ProductSchurSearch {
  int r;
  uint64_t budget;
  // constraints over variable indices
  struct Tri { int a, b, c; };
  std::vector<Tri> tris;
  std::vector<std::pair<int, int>> diffs;  // colour(u) != colour(v)
  std::vector<std::vector<int>> var_tris;
  std::vector<std::vector<int>> var_diffs;
  std::vector<int> order;  // variable indices, most-constrained first

  std::vector<uint8_t> colour;  // 0 = unassigned
  std::vector<uint8_t> cand;    // bitmask of colours still allowed
  std::vector<int> assign_trail;
  std::vector<std::pair<int, uint8_t>> cand_trail;
  std::vector<int> queue;
  uint64_t nodes = 0;
  bool aborted = false;

  bool shrink_cand(int v, uint8_t mask) {
    // returns false on wipeout
    const uint8_t next = cand[v] & mask;
    if (next == cand[v]) return true;
    cand_trail.emplace_back(v, cand[v]);
    cand[v] = next;
    if (next == 0) return false;
    if (colour[v] == 0 && (next & (next - 1)) == 0) {
      int c = 1;
      while (!(next & (1u << (c - 1)))) ++c;
      assign(v, c);
    }
    return true;
  }

  void assign(int v, int c) {
    colour[v] = static_cast<uint8_t>(c);
    assign_trail.push_back(v);
    queue.push_back(v);
  }

  bool propagate() {
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      const int cv = colour[v];
      for (int d : var_diffs[v]) {
        const auto [x, y] = diffs[d];
        const int u = x == v ? y : x;
        if (colour[u] == cv) return false;
        if (colour[u] == 0 && !shrink_cand(u, static_cast<uint8_t>(~(1u << (cv - 1)))))
          return false;
      }
      for (int ti : var_tris[v]) {
        const Tri& t = tris[ti];
        const int ca = colour[t.a], cb = colour[t.b], cc = colour[t.c];
        int same = 0, open = -1;
        if (ca && ca == cb) { same = ca; open = t.c; }
        else if (ca && ca == cc) { same = ca; open = t.b; }
        else if (cb && cb == cc) { same = cb; open = t.a; }
        if (same == 0) continue;
        if (colour[open] == same) return false;
        if (colour[open] == 0 &&
            !shrink_cand(open, static_cast<uint8_t>(~(1u << (same - 1)))))
          return false;
      }
    }
    return true;
  }

  void undo(size_t assign_mark, size_t cand_mark) {
    while (assign_trail.size() > assign_mark) {
      colour[assign_trail.back()] = 0;
      assign_trail.pop_back();
    }
    while (cand_trail.size() > cand_mark) {
      cand[cand_trail.back().first] = cand_trail.back().second;
      cand_trail.pop_back();
    }
    queue.clear();
  }

  // 1 = satisfying assignment found, 0 = exhausted, -1 = budget hit
  int dfs(size_t order_pos) {
    while (order_pos < order.size() && colour[order[order_pos]] != 0)
      ++order_pos;
    if (order_pos == order.size()) return 1;
    const int v = order[order_pos];
    for (int c = 1; c <= r; ++c) {
      if (!(cand[v] & (1u << (c - 1)))) continue;
      if (++nodes > budget) { aborted = true; return -1; }
      const size_t am = assign_trail.size(), cm = cand_trail.size();
      assign(v, c);
      if (propagate()) {
        const int sub = dfs(order_pos + 1);
        if (sub != 0) return sub;
      }
      undo(am, cm);
    }
    return 0;
  }
};

}  // namespace detail

inline ProductSchurResult is_product_schur(
    const IntegerSet& s, int r, bool allow_degenerate = true,
    uint64_t node_budget = kDefaultProductSchurBudget) {
  if (r < 1 || r > 8)
    throw std::invalid_argument("is_product_schur supports 1 <= r <= 8");
  const auto triples = enumerate_product_triples(s, allow_degenerate);

  ProductSchurResult res;
  res.triple_count = triples.size();

  auto trivial_witness = [&]() {
    RColouring col;
    col.r = r;
    col.domain = s.elements();
    col.colours.assign(s.size(), 1);
    return col;
  };
  if (triples.empty()) {
    res.outcome = DecisionOutcome::not_product_schur;
    res.witness = trivial_witness();
    return res;
  }
  if (r == 1) {
    res.outcome = DecisionOutcome::product_schur;  // any triple is monochromatic
    return res;
  }

  // Variables: elements occurring in some triple.
  std::vector<uint64_t> vars;
  for (const auto& t : triples) {
    vars.push_back(t.a);
    vars.push_back(t.b);
    vars.push_back(t.c);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::unordered_map<uint64_t, int> idx;
  idx.reserve(vars.size() * 2);
  for (size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = static_cast<int>(i);

  detail::ProductSchurSearch search;
  search.r = r;
  search.budget = node_budget;
  const int nv = static_cast<int>(vars.size());
  search.var_tris.resize(nv);
  search.var_diffs.resize(nv);
  std::vector<int> degree(nv, 0);
  for (const auto& t : triples) {
    if (t.degenerate()) {
      const int u = idx[t.a], w = idx[t.c];
      const int id = static_cast<int>(search.diffs.size());
      search.diffs.emplace_back(u, w);
      search.var_diffs[u].push_back(id);
      search.var_diffs[w].push_back(id);
      ++degree[u];
      ++degree[w];
    } else {
      const int ia = idx[t.a], ib = idx[t.b], ic = idx[t.c];
      const int id = static_cast<int>(search.tris.size());
      search.tris.push_back({ia, ib, ic});
      search.var_tris[ia].push_back(id);
      search.var_tris[ib].push_back(id);
      search.var_tris[ic].push_back(id);
      ++degree[ia];
      ++degree[ib];
      ++degree[ic];
    }
  }
  search.order.resize(nv);
  for (int i = 0; i < nv; ++i) search.order[i] = i;
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    return degree[a] != degree[b] ? degree[a] > degree[b] : vars[a] < vars[b];
  });
  search.colour.assign(nv, 0);
  search.cand.assign(nv, static_cast<uint8_t>((1u << r) - 1));

  // Colour symmetry: pin the first branching element to colour A.
  search.assign(search.order[0], 1);
  int verdict;
  if (!search.propagate()) {
    verdict = 0;
  } else {
    verdict = search.dfs(0);
  }
  res.nodes = search.nodes;
  if (verdict == -1) {
    res.outcome = DecisionOutcome::unknown;
    return res;
  }
  if (verdict == 0) {
    res.outcome = DecisionOutcome::product_schur;
    return res;
  }
  RColouring col;
  col.r = r;
  col.domain = s.elements();
  col.colours.assign(s.size(), 1);
  for (size_t i = 0; i < col.domain.size(); ++i) {
    auto it = idx.find(col.domain[i]);
    if (it != idx.end()) col.colours[i] = search.colour[it->second];
  }
  res.outcome = DecisionOutcome::not_product_schur;
  res.witness = std::move(col);
  return res;
}

}  // namespace schurlab
