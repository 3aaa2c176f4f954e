#include "logitlab/profile.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "logitlab/error.hpp"

namespace logitlab {

std::size_t state_budget() {
  if (const char* env = std::getenv("LOGITLAB_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return kDefaultStateBudget;
}

std::size_t dense_budget() {
  return std::min(kDenseMatrixBudget, state_budget());
}

void require_budget(std::size_t size, std::size_t limit, const char* what) {
  if (size > limit) {
    throw BudgetError(std::string(what) + ": |S| = " + std::to_string(size) +
                      " exceeds budget " + std::to_string(limit));
  }
}

StateIndex profile_index(std::span<const int> profile,
                         std::span<const int> radices) {
  if (profile.size() != radices.size()) {
    throw RangeError("profile length " + std::to_string(profile.size()) +
                     " does not match player count " +
                     std::to_string(radices.size()));
  }
  StateIndex index = 0;
  StateIndex stride = 1;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    if (profile[i] < 0 || profile[i] >= radices[i]) {
      throw RangeError("strategy " + std::to_string(profile[i]) +
                       " out of range for player " + std::to_string(i) +
                       " with " + std::to_string(radices[i]) + " strategies");
    }
    index += static_cast<StateIndex>(profile[i]) * stride;
    stride *= static_cast<StateIndex>(radices[i]);
  }
  return index;
}

Profile index_profile(StateIndex index, std::span<const int> radices) {
  StateIndex total = 1;
  for (int m : radices) {
    if (m < 1) throw RangeError("radix must be positive");
    total *= static_cast<StateIndex>(m);
  }
  if (index >= total) {
    throw RangeError("state index " + std::to_string(index) +
                     " out of range [0, " + std::to_string(total) + ")");
  }
  Profile profile(radices.size());
  for (std::size_t i = 0; i < radices.size(); ++i) {
    const auto m = static_cast<StateIndex>(radices[i]);
    profile[i] = static_cast<int>(index % m);
    index /= m;
  }
  return profile;
}

ProfileSpace::ProfileSpace(std::vector<int> radices)
    : radices_(std::move(radices)) {
  if (radices_.empty()) throw RangeError("a game needs at least one player");
  strides_.resize(radices_.size());
  const std::size_t limit = state_budget();
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    if (radices_[i] < 1) {
      throw RangeError("player " + std::to_string(i) +
                       " must have at least one strategy");
    }
    strides_[i] = size_;
    const auto m = static_cast<std::size_t>(radices_[i]);
    if (size_ > std::numeric_limits<std::size_t>::max() / m ||
        size_ * m > limit) {
      throw BudgetError("profile space exceeds budget " +
                        std::to_string(limit));
    }
    size_ *= m;
  }
}

int ProfileSpace::max_radix() const {
  return *std::max_element(radices_.begin(), radices_.end());
}

int ProfileSpace::hamming(StateIndex x, StateIndex y) const {
  int d = 0;
  for (int i = 0; i < players(); ++i) {
    if (strategy(x, i) != strategy(y, i)) ++d;
  }
  return d;
}

int ProfileSpace::differing_player(StateIndex x, StateIndex y) const {
  int found = -1;
  for (int i = 0; i < players(); ++i) {
    if (strategy(x, i) != strategy(y, i)) {
      if (found >= 0) return -1;
      found = i;
    }
  }
  return found;
}

std::size_t ProfileSpace::degree() const {
  std::size_t d = 0;
  for (int m : radices_) d += static_cast<std::size_t>(m - 1);
  return d;
}

}  // namespace logitlab
