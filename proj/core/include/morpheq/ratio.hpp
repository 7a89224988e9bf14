#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morpheq/word.hpp"

namespace morpheq {

/// Exact nonnegative rational |u|_a / |u|_b, or infinity. Always reduced.
class Ratio {
 public:
  /// Reduces num/den; den == 0 (with num > 0) is infinity.
  Ratio(std::uint64_t num, std::uint64_t den);
  static Ratio infinity() { return Ratio(1, 0); }

  bool is_infinite() const noexcept { return den_ == 0; }
  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  /// "p/q" or "infinity".
  std::string to_string() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

/// r(u) for a nonempty word over a two-letter alphabet (first letter counts
/// as `a`, second as `b`).
Ratio ratio(const Word& u);

/// No proper prefix of u has ratio r(u).
bool is_ratio_primitive(const Word& u);

/// The unique factorization u = u₁…u_k into ratio-primitive words of ratio r(u).
std::vector<Word> ratio_primitive_factorization(const Word& u);

}  // namespace morpheq
