#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "overpart/qseries.hpp"

namespace overpart {

/// A block of equal parts. Only the first occurrence of a size can carry the
/// overline, so the flag lives on the run.
struct Run {
  int part = 0;
  int mult = 0;
  bool first_overlined = false;

  auto operator<=>(const Run&) const = default;
};

/// A nonempty overpartition in canonical run-length form: runs strictly
/// decreasing in part, multiplicities positive.
class Overpartition {
public:
  /// Validates the canonical form; throws std::invalid_argument otherwise.
  static Overpartition from_runs(std::vector<Run> runs);

  /// Builds from a weakly decreasing list of (part, overlined). At most one
  /// occurrence of each size may be overlined; the mark is moved to the first
  /// occurrence.
  static Overpartition from_parts(const std::vector<std::pair<int, bool>>& parts);

  const std::vector<Run>& runs() const { return runs_; }

  /// Flattened parts in weakly decreasing order with their overline flags.
  std::vector<std::pair<int, bool>> parts() const;

  int length() const;           // number of parts
  long weight() const;          // sum of parts
  int overlined_count() const;  // number of overlined parts
  int largest() const { return runs_.front().part; }
  int smallest() const { return runs_.back().part; }
  int multiplicity(int part) const;
  bool is_overlined(int part) const;

  auto operator<=>(const Overpartition&) const = default;

private:
  friend class OverpartitionRange;
  Overpartition() = default;

  std::vector<Run> runs_;
};

/// A pair [t^t_count | second] of a run of non-overlined t's (possibly empty)
/// and a nonempty overpartition with parts at most t.
struct Bipartition {
  int t = 1;
  int t_count = 0;
  Overpartition second;

  /// Validates t >= 1, t_count >= 0 and second.largest() <= t.
  static Bipartition make(int t, int t_count, Overpartition second);

  long weight() const { return static_cast<long>(t) * t_count + second.weight(); }
  int overlined_count() const { return second.overlined_count(); }

  auto operator<=>(const Bipartition&) const = default;
};

struct PartitionStats {
  int ell = 0;  // number of parts
  int o = 0;    // overlined parts
  int m_t = 0;  // parts equal to t
  int s = 0;    // floor(smallest / t)
  int k = 0;    // parts >= (s + 1) t

  bool operator==(const PartitionStats&) const = default;
};

PartitionStats stats(const Overpartition& pi, int t);

/// Largest minus smallest is at most t, and the largest part is not
/// overlined when the difference is exactly t.
bool in_Gt(const Overpartition& pi, int t);
/// All parts at most t and no overlined t.
bool in_Pt(const Overpartition& mu, int t);

// Text syntax: "3,3,3,1~,1" and "[3^1 | 3,3,1~,1]".
Overpartition parse_overpartition(std::string_view text);
Bipartition parse_bipartition(std::string_view text);
std::string format(const Overpartition& pi);
std::string format(const Bipartition& beta);

/// Lazily enumerates every overpartition of n with parts at most max_part.
///
/// Order: depth-first over runs, choosing the part largest first, then the
/// multiplicity largest first, then the non-overlined run before the
/// overlined one. For n = 3 this yields 3, 3~, 2,1, 2,1~, 2~,1, 2~,1~, 1,1,1,
/// 1~,1,1. The iterator owns the current value and rewrites it in place.
class OverpartitionRange : public std::ranges::view_interface<OverpartitionRange> {
public:
  class iterator {
  public:
    using value_type = Overpartition;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;
    const Overpartition& operator*() const { return current_; }
    const Overpartition* operator->() const { return &current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

  private:
    friend class OverpartitionRange;
    iterator(int n, int max_part);
    void fill(int rem, int bound);
    void advance();

    int max_part_ = 0;
    bool done_ = true;
    Overpartition current_;
  };

  OverpartitionRange() = default;
  /// max_part <= 0 means unbounded.
  explicit OverpartitionRange(int n, int max_part = 0) : n_(n), max_part_(max_part <= 0 ? n : max_part) {}

  iterator begin() const { return iterator(n_, max_part_); }
  std::default_sentinel_t end() const { return {}; }

private:
  int n_ = 0;
  int max_part_ = 0;
};

/// Lazily enumerates the weight-n members of B_t, t_count ascending and the
/// second component in OverpartitionRange order.
class BipartitionRange : public std::ranges::view_interface<BipartitionRange> {
public:
  class iterator {
  public:
    using value_type = Bipartition;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;
    Bipartition operator*() const { return Bipartition{t_, t_count_, *inner_}; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

  private:
    friend class BipartitionRange;
    iterator(int t, int n);
    void settle();
    void advance();

    int t_ = 1;
    int n_ = 0;
    int t_count_ = 0;
    bool done_ = true;
    OverpartitionRange::iterator inner_;
  };

  BipartitionRange() = default;
  BipartitionRange(int t, int n) : t_(t), n_(n) {}

  iterator begin() const { return iterator(t_, n_); }
  std::default_sentinel_t end() const { return {}; }

private:
  int t_ = 1;
  int n_ = 0;
};

inline OverpartitionRange enumerate_overpartitions(int n) { return OverpartitionRange(n); }

inline auto enumerate_Gt(int t, int n) {
  return OverpartitionRange(n) | std::views::filter([t](const Overpartition& pi) { return in_Gt(pi, t); });
}

inline auto enumerate_Pt(int t, int n) {
  return OverpartitionRange(n, t) | std::views::filter([t](const Overpartition& mu) { return !mu.is_overlined(t); });
}

inline BipartitionRange enumerate_Bt(int t, int n) { return BipartitionRange(t, n); }

enum class Family { Gt, Pt, Bt };

/// Sum over members of weight 1..max_n of z^o q^weight, known below
/// q^(max_n + 1). Weights are enumerated independently, in parallel when
/// `exec` allows.
QSeries gf_from_enumeration(Family family, int t, int max_n, Exec exec = Exec::automatic);

}  // namespace overpart
