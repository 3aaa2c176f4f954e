#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace logitlab {

using StateIndex = std::size_t;

/// A joint strategy assignment, one strategy index per player.
using Profile = std::vector<int>;

inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 20;
inline constexpr std::size_t kDenseMatrixBudget = std::size_t{1} << 13;

/// Cap on |S| for exact paths. LOGITLAB_BUDGET overrides the default.
std::size_t state_budget();

/// Cap on |S| for dense |S|x|S| matrix work; never above state_budget().
std::size_t dense_budget();

/// Throws BudgetError when size > limit.
void require_budget(std::size_t size, std::size_t limit, const char* what);

/// Mixed-radix little-endian encoding: player 0 is the least significant
/// digit. Throws RangeError on an out-of-range entry.
StateIndex profile_index(std::span<const int> profile,
                         std::span<const int> radices);

/// Inverse of profile_index. Throws RangeError when index >= prod(radices).
Profile index_profile(StateIndex index, std::span<const int> radices);

/// The profile space S = S_1 x ... x S_n together with its strides.
///
/// Construction validates the radices (at least one player, every radix at
/// least 1) and enforces state_budget().
class ProfileSpace {
 public:
  explicit ProfileSpace(std::vector<int> radices);

  int players() const { return static_cast<int>(radices_.size()); }
  std::size_t size() const { return size_; }
  std::span<const int> radices() const { return radices_; }
  int radix(int player) const { return radices_[player]; }
  int max_radix() const;
  std::size_t stride(int player) const { return strides_[player]; }

  StateIndex index(std::span<const int> profile) const {
    return profile_index(profile, radices_);
  }
  Profile profile(StateIndex x) const { return index_profile(x, radices_); }

  int strategy(StateIndex x, int player) const {
    return static_cast<int>((x / strides_[player]) %
                            static_cast<std::size_t>(radices_[player]));
  }

  /// (s, x_{-i}) as a state index.
  StateIndex with_strategy(StateIndex x, int player, int s) const {
    const std::size_t current = static_cast<std::size_t>(strategy(x, player));
    return x - current * strides_[player] +
           static_cast<std::size_t>(s) * strides_[player];
  }

  int hamming(StateIndex x, StateIndex y) const;

  /// Player at which x and y differ, or -1 unless hamming(x, y) == 1.
  int differing_player(StateIndex x, StateIndex y) const;

  /// Number of Hamming neighbours of every state: sum_i (m_i - 1).
  std::size_t degree() const;

  /// Calls f(y, player, strategy) for every y at Hamming distance 1 from x.
  template <typename F>
  void for_each_neighbor(StateIndex x, F&& f) const {
    for (int i = 0; i < players(); ++i) {
      const int current = strategy(x, i);
      for (int s = 0; s < radices_[i]; ++s) {
        if (s != current) f(with_strategy(x, i, s), i, s);
      }
    }
  }

  bool operator==(const ProfileSpace& other) const {
    return radices_ == other.radices_;
  }

 private:
  std::vector<int> radices_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

}  // namespace logitlab
