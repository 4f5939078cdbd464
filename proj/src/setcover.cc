// Copyright 2026 The mincontrol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mincontrol/setcover.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mincontrol/errors.h"

namespace mincontrol {

SetCoverInstance::SetCoverInstance(std::size_t universe_size,
                                   std::vector<std::vector<std::size_t>> sets)
    : universe_size_(universe_size), sets_(std::move(sets)) {
  std::vector<char> covered(universe_size_, 0);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t e : s) {
      if (e >= universe_size_) {
        throw Error(ErrorCode::kInvalidInstance,
                    "set " + std::to_string(i) + " contains element " +
                        std::to_string(e) + " outside the universe");
      }
      covered[e] = 1;
    }
  }
  for (std::size_t e = 0; e < universe_size_; ++e) {
    if (!covered[e]) {
      throw Error(ErrorCode::kInvalidInstance,
                  "element " + std::to_string(e) + " is in no set");
    }
  }
}

bool IsCover(const SetCoverInstance& instance,
             std::span<const std::size_t> indices) {
  std::vector<char> covered(instance.universe_size(), 0);
  for (std::size_t i : indices) {
    if (i >= instance.num_sets()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "set index " + std::to_string(i) + " out of range (" +
                      std::to_string(instance.num_sets()) + " sets)");
    }
    for (std::size_t e : instance.set(i)) covered[e] = 1;
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c != 0; });
}

CoverSolution SolveGreedy(const SetCoverInstance& instance) {
  std::vector<char> covered(instance.universe_size(), 0);
  std::size_t remaining = instance.universe_size();
  CoverSolution out;
  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < instance.num_sets(); ++i) {
      std::size_t gain = 0;
      for (std::size_t e : instance.set(i)) gain += covered[e] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    // The instance invariant guarantees progress.
    for (std::size_t e : instance.set(best)) {
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
    }
    out.indices.push_back(best);
  }
  std::sort(out.indices.begin(), out.indices.end());
  out.exact = false;
  return out;
}

namespace {

using Mask = std::uint64_t;

std::size_t CeilDiv(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Minimum cover size by branch and bound over a dominance-reduced family.
class OptimumSearch {
 public:
  OptimumSearch(std::vector<Mask> masks, std::size_t upper_bound)
      : masks_(std::move(masks)), best_(upper_bound) {}

  std::size_t Run(Mask universe) {
    Recurse(universe, 0);
    return best_;
  }

 private:
  void Recurse(Mask uncovered, std::size_t depth) {
    if (uncovered == 0) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + 1 >= best_) return;
    auto [it, inserted] = visited_.try_emplace(uncovered, depth);
    if (!inserted) {
      if (it->second <= depth) return;
      it->second = depth;
    }

    std::size_t max_gain = 0;
    for (Mask m : masks_) {
      max_gain = std::max<std::size_t>(max_gain, std::popcount(m & uncovered));
    }
    const std::size_t bound =
        CeilDiv(static_cast<std::size_t>(std::popcount(uncovered)), max_gain);
    if (depth + bound >= best_) return;

    // Branch on the uncovered element with the fewest covering sets.
    int pivot = -1;
    std::size_t pivot_count = std::numeric_limits<std::size_t>::max();
    for (Mask rest = uncovered; rest != 0; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      std::size_t count = 0;
      for (Mask m : masks_) count += (m >> e) & 1U;
      if (count < pivot_count) {
        pivot_count = count;
        pivot = e;
      }
    }
    std::vector<Mask> branches;
    for (Mask m : masks_) {
      if ((m >> pivot) & 1U) branches.push_back(m);
    }
    std::stable_sort(branches.begin(), branches.end(), [&](Mask a, Mask b) {
      return std::popcount(a & uncovered) > std::popcount(b & uncovered);
    });
    for (Mask m : branches) Recurse(uncovered & ~m, depth + 1);
  }

  std::vector<Mask> masks_;
  std::size_t best_;
  std::unordered_map<Mask, std::size_t> visited_;
};

// Lexicographically smallest cover using exactly `budget` sets, where budget
// is known to be the optimum.
class LexicographicSearch {
 public:
  explicit LexicographicSearch(std::vector<Mask> masks)
      : masks_(std::move(masks)), suffix_(masks_.size() + 1, 0) {
    for (std::size_t i = masks_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] | masks_[i];
    }
  }

  bool Run(Mask universe, std::size_t budget, std::vector<std::size_t>& out) {
    return Recurse(0, universe, budget, out);
  }

 private:
  struct Key {
    Mask uncovered;
    std::size_t start;
    std::size_t budget;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<Mask>{}(k.uncovered);
      h ^= (k.start * 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
      h ^= (k.budget * 0xc2b2ae3d27d4eb4fULL) + (h << 6) + (h >> 2);
      return h;
    }
  };

  bool Recurse(std::size_t start, Mask uncovered, std::size_t budget,
               std::vector<std::size_t>& chosen) {
    if (uncovered == 0) return true;
    if (budget == 0) return false;
    if ((suffix_[start] & uncovered) != uncovered) return false;
    const Key key{uncovered, start, budget};
    if (failed_.contains(key)) return false;

    std::size_t max_gain = 0;
    for (std::size_t i = start; i < masks_.size(); ++i) {
      max_gain =
          std::max<std::size_t>(max_gain, std::popcount(masks_[i] & uncovered));
    }
    if (CeilDiv(static_cast<std::size_t>(std::popcount(uncovered)), max_gain) >
        budget) {
      failed_.insert(key);
      return false;
    }

    for (std::size_t i = start; i < masks_.size(); ++i) {
      if ((suffix_[i] & uncovered) != uncovered) break;
      // A set adding nothing cannot belong to a minimum cover.
      if ((masks_[i] & uncovered) == 0) continue;
      chosen.push_back(i);
      if (Recurse(i + 1, uncovered & ~masks_[i], budget - 1, chosen)) {
        return true;
      }
      chosen.pop_back();
    }
    failed_.insert(key);
    return false;
  }

  std::vector<Mask> masks_;
  std::vector<Mask> suffix_;
  std::unordered_set<Key, KeyHash> failed_;
};

}  // namespace

CoverSolution SolveExact(const SetCoverInstance& instance,
                         const ExactSolverOptions& options) {
  const std::size_t m = instance.universe_size();
  const std::size_t limit = std::min<std::size_t>(options.max_universe, 64);
  if (m > limit) {
    throw Error(ErrorCode::kTooLarge,
                "universe of " + std::to_string(m) +
                    " elements exceeds the exact-solver limit of " +
                    std::to_string(limit) + "; use greedy mode");
  }
  CoverSolution out;
  out.exact = true;
  if (m == 0) return out;

  const Mask universe = m == 64 ? ~Mask{0} : ((Mask{1} << m) - 1);
  std::vector<Mask> masks(instance.num_sets(), 0);
  for (std::size_t i = 0; i < instance.num_sets(); ++i) {
    for (std::size_t e : instance.set(i)) masks[i] |= Mask{1} << e;
  }

  // Drop sets contained in another set; among equal sets keep the lowest
  // index. This only serves the optimum computation: the lexicographic pass
  // below runs on the full family.
  std::vector<Mask> reduced;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (masks[i] == 0) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < masks.size() && !dominated; ++j) {
      if (i == j || (masks[i] & ~masks[j]) != 0) continue;
      dominated = masks[i] != masks[j] || j < i;
    }
    if (!dominated) reduced.push_back(masks[i]);
  }

  const std::size_t upper = SolveGreedy(instance).indices.size();
  const std::size_t optimum = OptimumSearch(reduced, upper).Run(universe);

  LexicographicSearch lex(masks);
  lex.Run(universe, optimum, out.indices);
  return out;
}

}  // namespace mincontrol
