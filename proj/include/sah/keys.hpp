#pragma once

#include <cstdint>

namespace sah {

/// Totally ordered key extended with a bottom element that compares below
/// every ordinary key.  Bottom is reserved for delete (decrease to -inf);
/// it never survives a completed heap operation.
class ExtKey {
 public:
  constexpr ExtKey() : bottom_(true), value_(0) {}

  static constexpr ExtKey bottom() { return ExtKey(); }
  static constexpr ExtKey of(std::int64_t v) { return ExtKey(v); }

  constexpr bool is_bottom() const { return bottom_; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(ExtKey a, ExtKey b) {
    if (a.bottom_ || b.bottom_) return a.bottom_ == b.bottom_;
    return a.value_ == b.value_;
  }

  // Raw ordering, decided by tag inspection when bottom is involved.
  friend constexpr bool operator<=(ExtKey a, ExtKey b) {
    if (a.bottom_) return true;
    if (b.bottom_) return false;
    return a.value_ <= b.value_;
  }
  friend constexpr bool operator<(ExtKey a, ExtKey b) { return !(b <= a); }

 private:
  explicit constexpr ExtKey(std::int64_t v) : bottom_(false), value_(v) {}

  bool bottom_;
  std::int64_t value_;
};

}  // namespace sah
