#pragma once

#include <cstddef>
#include <optional>

#include "morpheq/word.hpp"

namespace morpheq {

enum class Lead { kBalanced, kGAhead, kHAhead };

/// The signed word h(v)⁻¹g(u) of a partial match. Stored as a side plus a
/// nonempty excess, so a balanced state never carries letters.
class Overflow {
 public:
  static Overflow balanced(const Alphabet& alphabet) { return Overflow(Lead::kBalanced, Word::empty(alphabet)); }
  /// g(u) = h(v)·excess. An empty excess yields the balanced state.
  static Overflow g_ahead(Word excess) { return make(Lead::kGAhead, std::move(excess)); }
  /// h(v) = g(u)·excess.
  static Overflow h_ahead(Word excess) { return make(Lead::kHAhead, std::move(excess)); }

  Lead side() const noexcept { return side_; }
  const Word& excess() const noexcept { return excess_; }
  bool is_balanced() const noexcept { return side_ == Lead::kBalanced; }

  friend bool operator==(const Overflow&, const Overflow&) = default;

 private:
  Overflow(Lead side, Word excess) : side_(side), excess_(std::move(excess)) {}
  static Overflow make(Lead side, Word excess) {
    if (excess.empty()) return Overflow(Lead::kBalanced, std::move(excess));
    return Overflow(side, std::move(excess));
  }

  Lead side_;
  Word excess_;
};

struct OverflowHash {
  std::size_t operator()(const Overflow& o) const noexcept {
    return WordHash{}(o.excess()) * 3 + static_cast<std::size_t>(o.side());
  }
};

std::ostream& operator<<(std::ostream& os, const Overflow& o);

/// Appends `g_img` to the g-side image and `h_img` to the h-side image.
/// Returns nullopt when the extended images are no longer prefix-comparable.
std::optional<Overflow> overflow_advance(const Overflow& o, const Word& g_img, const Word& h_img);

}  // namespace morpheq
