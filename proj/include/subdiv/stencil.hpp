#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace subdiv {

/// Finitely supported sequence over a contiguous integer offset range
/// [first(), last()]. Offsets outside the range read as T{}.
template <class T>
class Stencil {
 public:
  Stencil() = default;
  Stencil(int first, std::vector<T> values) : first_(first), values_(std::move(values)) {}

  bool empty() const { return values_.empty(); }
  int first() const { return first_; }
  int last() const { return first_ + static_cast<int>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }

  T at(int offset) const {
    if (offset < first_ || offset > last()) return T{};
    return values_[static_cast<std::size_t>(offset - first_)];
  }

  /// Grows the range as needed.
  T& operator[](int offset) {
    if (values_.empty()) {
      first_ = offset;
      values_.emplace_back();
    } else if (offset < first_) {
      values_.insert(values_.begin(), static_cast<std::size_t>(first_ - offset), T{});
      first_ = offset;
    } else if (offset > last()) {
      values_.resize(static_cast<std::size_t>(offset - first_ + 1));
    }
    return values_[static_cast<std::size_t>(offset - first_)];
  }

  /// Moves entry at offset d to offset d + by.
  Stencil shifted(int by) const { return Stencil(first_ + by, values_); }

  Stencil& operator+=(const Stencil& rhs) {
    for (int d = rhs.first(); d <= rhs.last(); ++d) (*this)[d] += rhs.at(d);
    return *this;
  }

  template <class S>
  Stencil& scale(const S& factor) {
    for (auto& v : values_) v *= factor;
    return *this;
  }

  /// Drops leading and trailing entries equal to T{}.
  Stencil trimmed() const {
    const T zero{};
    auto lo = std::find_if(values_.begin(), values_.end(), [&](const T& v) { return !(v == zero); });
    if (lo == values_.end()) return {};
    auto hi = std::find_if(values_.rbegin(), values_.rend(), [&](const T& v) { return !(v == zero); }).base();
    return Stencil(first_ + static_cast<int>(lo - values_.begin()), std::vector<T>(lo, hi));
  }

  T sum() const {
    T s{};
    for (const auto& v : values_) s += v;
    return s;
  }

  friend bool operator==(const Stencil& a, const Stencil& b) {
    const int lo = std::min(a.first(), b.first());
    const int hi = std::max(a.last(), b.last());
    if (a.empty() && b.empty()) return true;
    for (int d = lo; d <= hi; ++d) {
      if (!(a.at(d) == b.at(d))) return false;
    }
    return true;
  }

 private:
  int first_ = 0;
  std::vector<T> values_;
};

}  // namespace subdiv
