#include <algorithm>
#include <sstream>

#include "pcube/census.hpp"
#include "pcube/errors.hpp"

namespace pcube {

namespace {

constexpr long kNodeBudget = 2'000'000;

// One round of 1-WL refinement until stable; colors normalized to
// 0..k-1 in signature order so ids do not depend on the input ids.
std::vector<int> refine(const Graph& g, std::vector<int> col) {
  const int n = g.n;
  int classes = 0;
  for (int c : col) classes = std::max(classes, c + 1);
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(col[v]);
      std::vector<int> nb;
      nb.reserve(g.adj[v].size());
      for (int w : g.adj[v]) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> next(n, 0);
    int k = 0;
    for (int idx = 0; idx < n; ++idx) {
      if (idx > 0 && sig[order[idx]] != sig[order[idx - 1]]) ++k;
      next[order[idx]] = k;
    }
    // Refinement is monotone, so an unchanged class count means the
    // partition is stable.
    if (k + 1 == classes) return next;
    classes = k + 1;
    col = std::move(next);
  }
}

struct CanonSearch {
  const Graph& g;
  std::string best;
  long nodes = 0;

  std::string encode(const std::vector<int>& col) {
    const int n = g.n;
    std::vector<int> perm(n);  // new index -> old vertex
    for (int v = 0; v < n; ++v) perm[col[v]] = v;
    std::string bits;
    bits.reserve(size_t(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        bits.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
    return bits;
  }

  void rec(std::vector<int> col) {
    if (++nodes > kNodeBudget)
      throw Error("canonical_key: refinement search budget exceeded");
    col = refine(g, std::move(col));
    const int n = g.n;
    std::vector<int> count(n, 0);
    for (int c : col) ++count[c];
    int cell = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] >= 2) {
        cell = c;
        break;
      }
    if (cell < 0) {
      std::string enc = encode(col);
      if (best.empty() || enc < best) best = std::move(enc);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (col[v] != cell) continue;
      std::vector<int> col2 = col;
      // Individualize v: give it a fresh color just below its cell so the
      // refinement renumbering keeps the partition order stable.
      for (int w = 0; w < n; ++w)
        if (col2[w] >= cell && w != v) col2[w] += 1;
      rec(std::move(col2));
    }
  }
};

}  // namespace

std::string canonical_key(const Graph& g) {
  if (g.n > 16) throw SizeLimit("canonical_key: supports at most 16 vertices");
  if (g.n == 0) return "0:";
  std::vector<int> init(g.n);
  // Seed with degrees, normalized.
  std::vector<int> degs;
  for (int v = 0; v < g.n; ++v) degs.push_back(g.degree(v));
  std::vector<int> sorted = degs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v = 0; v < g.n; ++v)
    init[v] = int(std::lower_bound(sorted.begin(), sorted.end(), degs[v]) -
                  sorted.begin());

  CanonSearch s{g};
  s.rec(std::move(init));

  // Pack the bit string into hex for compactness.
  std::ostringstream os;
  os << g.n << ":";
  int cur = 0, have = 0;
  for (char c : s.best) {
    cur = (cur << 1) | (c == '1');
    if (++have == 4) {
      os << "0123456789abcdef"[cur];
      cur = have = 0;
    }
  }
  if (have) os << "0123456789abcdef"[cur << (4 - have)];
  return os.str();
}

}  // namespace pcube
