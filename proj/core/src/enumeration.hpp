#pragma once

#include <functional>
#include <vector>

namespace tvw::detail {

// All k-subsets of {0..n-1} in lexicographic order. The callback returns
// false to stop; the enumerator returns false when stopped early.
inline bool for_each_subset(
    int n, int k,
    const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> pick(k);
  std::function<bool(int, int)> rec = [&](int start, int depth) {
    if (depth == k) return fn(pick);
    for (int v = start; v <= n - (k - depth); ++v) {
      pick[depth] = v;
      if (!rec(v + 1, depth + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

// All partitions of elems into exactly r nonempty blocks of size at most
// max_block, in restricted-growth order, so blocks are ordered by least
// element. Callback semantics as above.
inline bool for_each_set_partition(
    const std::vector<int>& elems, int r, int max_block,
    const std::function<bool(const std::vector<std::vector<int>>&)>& fn) {
  const int n = static_cast<int>(elems.size());
  if (r < 1 || n < r) return true;
  std::vector<std::vector<int>> blocks;
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) {
      if (static_cast<int>(blocks.size()) == r) return fn(blocks);
      return true;
    }
    // Not enough elements left to open the remaining blocks.
    if (r - static_cast<int>(blocks.size()) > n - i) return true;
    // Index-based: the recursion grows `blocks`, which may reallocate.
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      if (static_cast<int>(blocks[bi].size()) >= max_block) continue;
      blocks[bi].push_back(elems[i]);
      if (!rec(i + 1)) return false;
      blocks[bi].pop_back();
    }
    if (static_cast<int>(blocks.size()) < r) {
      blocks.push_back({elems[i]});
      if (!rec(i + 1)) return false;
      blocks.pop_back();
    }
    return true;
  };
  return rec(0);
}

}  // namespace tvw::detail
