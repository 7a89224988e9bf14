#include "morpheq/overflow.hpp"

namespace morpheq {

std::ostream& operator<<(std::ostream& os, const Overflow& o) {
  switch (o.side()) {
    case Lead::kBalanced: return os << "balanced";
    case Lead::kGAhead: return os << "g-ahead " << o.excess();
    case Lead::kHAhead: return os << "h-ahead " << o.excess();
  }
  return os;
}

std::optional<Overflow> overflow_advance(const Overflow& o, const Word& g_img, const Word& h_img) {
  require_same_alphabet(o.excess(), g_img);
  require_same_alphabet(g_img, h_img);

  // Pending g-side and h-side text after the last common point.
  const std::string& ex = o.excess().str();
  const bool g_ahead = o.side() == Lead::kGAhead;
  const bool h_ahead = o.side() == Lead::kHAhead;
  const std::string g_tail = g_ahead ? ex + g_img.str() : g_img.str();
  const std::string h_tail = h_ahead ? ex + h_img.str() : h_img.str();

  const Alphabet& alpha = g_img.alphabet();
  if (g_tail.size() >= h_tail.size()) {
    if (!g_tail.starts_with(h_tail)) return std::nullopt;
    return Overflow::g_ahead(Word(std::string_view(g_tail).substr(h_tail.size()), alpha));
  }
  if (!h_tail.starts_with(g_tail)) return std::nullopt;
  return Overflow::h_ahead(Word(std::string_view(h_tail).substr(g_tail.size()), alpha));
}

}  // namespace morpheq
