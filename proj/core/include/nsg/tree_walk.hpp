#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

struct WalkOptions {
  int threads = 0;      // 0 = hardware concurrency
  int split_depth = 8;  // genus at which subtrees are handed to workers
};

namespace detail {

// Every quantity touched by the tree (Frobenius numbers, minimal
// generators) stays below 3 * genus for semigroups of that genus, so a
// fixed bit width covers the whole supported range.
inline constexpr int kGenusCap = 60;
inline constexpr int kLimitCap = 3 * kGenusCap + 4;
inline constexpr int kWords = (kLimitCap + 63) / 64;

struct SmallBits {
  std::array<std::uint64_t, kWords> w{};

  bool test(int i) const noexcept {
    return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
  }
  void set(int i) noexcept { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) noexcept {
    w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
  }
  void fill_below(int n) noexcept {
    for (int word = 0; word < kWords; ++word) {
      const int lo = word * 64;
      if (n >= lo + 64)
        w[static_cast<std::size_t>(word)] = ~std::uint64_t{0};
      else if (n > lo)
        w[static_cast<std::size_t>(word)] = (~std::uint64_t{0}) >> (64 - (n - lo));
      else
        w[static_cast<std::size_t>(word)] = 0;
    }
  }
  // First set bit in [from, limit), or limit when none.
  int next_set(int from, int limit) const noexcept {
    if (from >= limit) return limit;
    int word = from >> 6;
    std::uint64_t cur = w[static_cast<std::size_t>(word)] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur != 0) {
        const int bit = word * 64 + std::countr_zero(cur);
        return bit < limit ? bit : limit;
      }
      if (++word >= kWords) return limit;
      cur = w[static_cast<std::size_t>(word)];
    }
  }
};

// One node of the semigroup tree. `pair_count[y]` is the number of
// unordered decompositions of y as a sum of two nonzero members; a member
// is a minimal generator exactly when its pair count is zero, which is what
// makes child generation O(limit).
struct TreeState {
  SmallBits members;
  SmallBits gens;
  std::array<std::uint8_t, kLimitCap> pair_count{};
  std::int64_t frobenius = -1;
  int genus = 0;
  int multiplicity = 1;
};

inline void make_root(TreeState& s, int limit) {
  s.members.fill_below(limit);
  s.gens = SmallBits{};
  s.gens.set(1);
  for (int y = 0; y < limit; ++y) s.pair_count[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(y / 2);
  s.frobenius = -1;
  s.genus = 0;
  s.multiplicity = 1;
}

// Child = parent minus one minimal generator `removed` greater than the
// parent's Frobenius number.
inline void make_child(const TreeState& parent, int removed, TreeState& child, int limit) {
  child.members = parent.members;
  child.members.reset(removed);
  child.frobenius = removed;
  child.genus = parent.genus + 1;
  child.multiplicity = (removed == parent.multiplicity)
                           ? child.members.next_set(removed + 1, limit)
                           : parent.multiplicity;

  // Pairs (removed, y - removed) no longer decompose y.
  for (int y = 0; y <= removed; ++y)
    child.pair_count[static_cast<std::size_t>(y)] = parent.pair_count[static_cast<std::size_t>(y)];
  for (int y = removed + 1; y < limit; ++y)
    child.pair_count[static_cast<std::size_t>(y)] =
        static_cast<std::uint8_t>(parent.pair_count[static_cast<std::size_t>(y)] -
                                  (parent.members.test(y - removed) ? 1 : 0));

  child.gens = parent.gens;
  child.gens.reset(removed);
  for (int y = removed + 1; y < limit; ++y)
    if (child.pair_count[static_cast<std::size_t>(y)] == 0 && child.members.test(y))
      child.gens.set(y);
}

}  // namespace detail

/// Read-only view of a tree node handed to enumeration visitors. Cheap
/// invariants are precomputed; type and almost-symmetry are evaluated on
/// first use. Valid only for the duration of the visit.
class TreeView {
 public:
  TreeView(const detail::TreeState& st, int limit, std::span<const std::int64_t> gens)
      : st_(&st), limit_(limit), gens_(gens) {}

  std::int64_t frobenius() const noexcept { return st_->frobenius; }
  int genus() const noexcept { return st_->genus; }
  std::int64_t multiplicity() const noexcept { return st_->multiplicity; }
  int embedding_dim() const noexcept { return static_cast<int>(gens_.size()); }
  std::span<const std::int64_t> generators() const noexcept { return gens_; }

  bool contains(std::int64_t x) const noexcept {
    if (x < 0) return false;
    if (x > st_->frobenius) return true;
    return st_->members.test(static_cast<int>(x));
  }

  bool is_pseudo_frobenius(std::int64_t x) const noexcept {
    if (contains(x)) return false;
    for (std::int64_t g : gens_)
      if (!contains(x + g)) return false;
    return true;
  }

  std::int64_t type() const noexcept {
    if (type_ < 0) {
      if (st_->frobenius < 0) {
        type_ = 1;  // PF(N) = {-1}
      } else {
        std::int64_t t = 0;
        for (std::int64_t x = 1; x <= st_->frobenius; ++x)
          if (!contains(x) && is_pseudo_frobenius(x)) ++t;
        type_ = t;
      }
    }
    return type_;
  }

  bool almost_symmetric() const noexcept {
    if (almost_symmetric_ < 0) {
      bool ok = true;
      const std::int64_t f = st_->frobenius;
      for (std::int64_t x = 1; x <= f; ++x) {
        if (contains(x) || contains(f - x)) continue;
        if (!is_pseudo_frobenius(x) || !is_pseudo_frobenius(f - x)) {
          ok = false;
          break;
        }
      }
      almost_symmetric_ = ok ? 1 : 0;
    }
    return almost_symmetric_ == 1;
  }

  void pseudo_frobenius(std::vector<std::int64_t>& out) const {
    out.clear();
    if (st_->frobenius < 0) {
      out.push_back(-1);
      return;
    }
    for (std::int64_t x = 1; x <= st_->frobenius; ++x)
      if (!contains(x) && is_pseudo_frobenius(x)) out.push_back(x);
  }

  /// Builds a full NumericalSemigroup (with cached invariants) for this node.
  NumericalSemigroup materialize() const {
    std::vector<std::int64_t> gens(gens_.begin(), gens_.end());
    std::vector<bool> members;
    const std::int64_t f = st_->frobenius;
    members.reserve(static_cast<std::size_t>(f + 1 > 0 ? f + 1 : 1));
    for (std::int64_t x = 0; x <= f; ++x) members.push_back(st_->members.test(static_cast<int>(x)));
    return NumericalSemigroup::from_membership(std::move(gens), members, f);
  }

 private:
  const detail::TreeState* st_;
  int limit_;
  std::span<const std::int64_t> gens_;
  mutable std::int64_t type_ = -1;
  mutable int almost_symmetric_ = -1;
};

namespace detail {

template <class Visit>
void walk_subtree(const TreeState& node, int limit, int max_genus,
                  std::vector<std::int64_t>& gen_buf, Visit&& visit) {
  gen_buf.clear();
  for (int g = node.gens.next_set(1, limit); g < limit; g = node.gens.next_set(g + 1, limit))
    gen_buf.push_back(g);
  {
    TreeView view(node, limit, {gen_buf.data(), gen_buf.size()});
    visit(view);
  }
  if (node.genus >= max_genus) return;
  const int start = node.frobenius < 0 ? 1 : static_cast<int>(node.frobenius) + 1;
  TreeState child;
  for (int x = node.gens.next_set(start, limit); x < limit; x = node.gens.next_set(x + 1, limit)) {
    make_child(node, x, child, limit);
    walk_subtree(child, limit, max_genus, gen_buf, visit);
  }
}

template <class Visit>
void expand_prefix(const TreeState& node, int limit, int split_genus, std::vector<std::int64_t>& gen_buf,
                   Visit&& visit, std::vector<TreeState>& frontier) {
  if (node.genus == split_genus) {
    frontier.push_back(node);
    return;
  }
  gen_buf.clear();
  for (int g = node.gens.next_set(1, limit); g < limit; g = node.gens.next_set(g + 1, limit))
    gen_buf.push_back(g);
  {
    TreeView view(node, limit, {gen_buf.data(), gen_buf.size()});
    visit(view);
  }
  const int start = node.frobenius < 0 ? 1 : static_cast<int>(node.frobenius) + 1;
  TreeState child;
  for (int x = node.gens.next_set(start, limit); x < limit; x = node.gens.next_set(x + 1, limit)) {
    make_child(node, x, child, limit);
    expand_prefix(child, limit, split_genus, gen_buf, visit, frontier);
  }
}

// Depth-first fold over the semigroup tree up to max_genus. The tree is
// expanded sequentially to `split_depth`; the frontier subtrees are then
// claimed by a worker pool, and partial accumulators are merged in frontier
// order, so the result is identical for any thread count.
template <class Acc, class Make, class Visit, class Merge>
Acc parallel_tree_fold(int max_genus, const WalkOptions& opt, Make make, Visit visit, Merge merge) {
  if (max_genus < 0) throw std::invalid_argument("max_genus must be >= 0");
  if (max_genus > kGenusCap)
    throw std::invalid_argument("max_genus exceeds the supported cap of " +
                                std::to_string(kGenusCap));
  const int limit = 3 * max_genus + 4;
  TreeState root;
  make_root(root, limit);

  Acc acc = make();
  std::vector<std::int64_t> gen_buf;

  int threads = opt.threads > 0 ? opt.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  if (threads == 1 || opt.split_depth < 1 || opt.split_depth > max_genus) {
    walk_subtree(root, limit, max_genus, gen_buf, [&](const TreeView& v) { visit(acc, v); });
    return acc;
  }

  std::vector<TreeState> frontier;
  expand_prefix(root, limit, opt.split_depth, gen_buf,
                [&](const TreeView& v) { visit(acc, v); }, frontier);

  std::vector<std::optional<Acc>> slots(frontier.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    std::vector<std::int64_t> buf;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= frontier.size()) break;
      Acc part = make();
      walk_subtree(frontier[i], limit, max_genus, buf,
                   [&](const TreeView& v) { visit(part, v); });
      slots[i].emplace(std::move(part));
    }
  };
  {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& slot : slots) merge(acc, std::move(*slot));
  return acc;
}

}  // namespace detail
}  // namespace nsg
