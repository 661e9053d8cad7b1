// Copyright 2026 The zdsolve Authors
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

// Merge sort whose merge step gallops: when the current maxima of the two
// runs are compared, an exponential-then-binary search in the run holding the
// larger one moves the whole block above the smaller maximum at once. Each
// element then takes part in O(log n) comparisons per merge level.

#ifndef ZDSOLVE_GALLOP_SORT_HPP_
#define ZDSOLVE_GALLOP_SORT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zds {

struct MergeStats {
  std::uint64_t total = 0;
  /// Index 0 is the top merge.
  std::vector<std::uint64_t> level_total;
  /// Largest number of comparisons any single element took part in, per level.
  std::vector<std::uint64_t> level_max_per_element;
  /// Comparisons at the top merge involving the maximal element of the lower
  /// run (the element a boundary search is run on behalf of).
  std::uint64_t top_boundary = 0;
};

namespace detail {

template <class T, class Less>
class GallopSorter {
 public:
  GallopSorter(const std::vector<T>& v, Less less, MergeStats* stats)
      : v_(v), less_(less), stats_(stats) {
    if (stats_) counts_.assign(v.size(), 0);
  }

  void sort(std::vector<std::size_t>& idx, std::size_t lo, std::size_t hi,
            std::size_t level) {
    if (hi - lo < 2) return;
    std::size_t mid = lo + (hi - lo) / 2;
    sort(idx, lo, mid, level + 1);
    sort(idx, mid, hi, level + 1);
    merge(idx, lo, mid, hi, level);
  }

 private:
  bool cmp(std::size_t a, std::size_t b) {
    if (stats_) {
      ++stats_->total;
      ++level_total_;
      ++counts_[a];
      ++counts_[b];
    }
    return less_(v_[a], v_[b]);
  }

  // Number of entries of run[0, end) strictly above `pivot` (when strict) or
  // not below it, given that run[end-1] already qualifies.
  std::size_t gallop(const std::vector<std::size_t>& run, std::size_t end,
                     std::size_t pivot, bool strict) {
    auto above = [&](std::size_t pos) {
      return strict ? cmp(pivot, run[pos]) : !cmp(run[pos], pivot);
    };
    std::size_t good = 1;  // run[end-good, end) all qualify
    std::size_t step = 2;
    std::size_t bad = end + 1;
    while (true) {
      if (step > end) {
        if (good < end && !above(0)) {
          bad = end;
        } else {
          return end;
        }
        break;
      }
      if (above(end - step)) {
        good = step;
        step *= 2;
      } else {
        bad = step;
        break;
      }
    }
    // run[end-good..] qualifies, run[end-bad] does not
    while (bad - good > 1) {
      std::size_t m = good + (bad - good) / 2;
      if (above(end - m)) {
        good = m;
      } else {
        bad = m;
      }
    }
    return good;
  }

  void merge(std::vector<std::size_t>& idx, std::size_t lo, std::size_t mid,
             std::size_t hi, std::size_t level) {
    std::vector<std::size_t> a(idx.begin() + lo, idx.begin() + mid);
    std::vector<std::size_t> b(idx.begin() + mid, idx.begin() + hi);
    std::vector<std::size_t> out;
    out.reserve(hi - lo);
    if (stats_) {
      level_total_ = 0;
      for (std::size_t k = lo; k < hi; ++k) counts_[idx[k]] = 0;
    }
    const std::size_t boundary = a.back();
    std::size_t i = a.size();
    std::size_t j = b.size();
    while (i > 0 && j > 0) {
      std::size_t x = a[i - 1];
      std::size_t y = b[j - 1];
      if (cmp(y, x)) {
        std::size_t t = gallop(a, i, y, true);
        for (std::size_t k = 0; k < t; ++k) out.push_back(a[i - 1 - k]);
        i -= t;
        out.push_back(y);
        --j;
      } else {
        // ties keep run order: b entries equal to x go above it
        std::size_t t = gallop(b, j, x, false);
        for (std::size_t k = 0; k < t; ++k) out.push_back(b[j - 1 - k]);
        j -= t;
        out.push_back(x);
        --i;
      }
    }
    while (i > 0) out.push_back(a[--i]);
    while (j > 0) out.push_back(b[--j]);
    std::reverse(out.begin(), out.end());
    std::copy(out.begin(), out.end(), idx.begin() + lo);
    if (stats_) {
      if (stats_->level_total.size() <= level) {
        stats_->level_total.resize(level + 1, 0);
        stats_->level_max_per_element.resize(level + 1, 0);
      }
      stats_->level_total[level] += level_total_;
      std::uint64_t mx = 0;
      for (std::size_t k = lo; k < hi; ++k) mx = std::max(mx, counts_[idx[k]]);
      stats_->level_max_per_element[level] =
          std::max(stats_->level_max_per_element[level], mx);
      if (level == 0) stats_->top_boundary = counts_[boundary];
    }
  }

  const std::vector<T>& v_;
  Less less_;
  MergeStats* stats_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t level_total_ = 0;
};

}  // namespace detail

/// Sorts `v` nondecreasingly under `less`. The sort is stable.
template <class T, class Less>
void gallop_merge_sort(std::vector<T>& v, Less less,
                       MergeStats* stats = nullptr) {
  std::vector<std::size_t> idx(v.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  detail::GallopSorter<T, Less> sorter(v, less, stats);
  sorter.sort(idx, 0, idx.size(), 0);
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t k : idx) out.push_back(std::move(v[k]));
  v = std::move(out);
}

}  // namespace zds

#endif  // ZDSOLVE_GALLOP_SORT_HPP_
