#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace skewhook {

/// Dense element id of a poset (0..N-1).
using Element = int;

/// Posets handled by the library have at most this many elements; every
/// element set is a single machine word.
inline constexpr int kMaxElements = 64;

/// A subset of the elements of a poset, stored as a 64-bit mask. Ordering and
/// hashing follow the mask, so sets can key sorted and hashed containers.
class ElementSet {
public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> ids) {
    for (Element e : ids)
      insert(e);
  }
  template <typename Range>
  static ElementSet of(const Range &ids) {
    ElementSet s;
    for (Element e : ids)
      s.insert(e);
    return s;
  }
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr ElementSet with(Element e) const {
    return ElementSet(bits_ | (std::uint64_t{1} << e));
  }
  constexpr ElementSet without(Element e) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << e));
  }

  constexpr bool is_subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  /// Smallest member; undefined on the empty set.
  constexpr Element first() const { return std::countr_zero(bits_); }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F &&f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1)
      f(static_cast<Element>(std::countr_zero(b)));
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  ElementSet &operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet &operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet &operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

private:
  std::uint64_t bits_ = 0;
};

} // namespace skewhook

template <>
struct std::hash<skewhook::ElementSet> {
  std::size_t operator()(skewhook::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
