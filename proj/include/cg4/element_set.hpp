#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cg4/error.hpp"

namespace cg4 {

// Dense index of an element inside its GroundSet.
using Element = std::uint32_t;

inline constexpr std::size_t kMaxElements = 64;

// Subset of a ground set of at most kMaxElements elements, stored as a bitmask.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }

  // {0, ..., n-1}
  static ElementSet first(std::size_t n) {
    if (n > kMaxElements) throw GroundSetTooLarge(n, kMaxElements);
    return ElementSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  template <typename Range>
  static ElementSet from(const Range& elements) {
    ElementSet s;
    for (Element e : elements) s.insert(e);
    return s;
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] bool contains(Element e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }
  [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  [[nodiscard]] bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  void insert(Element e) {
    if (e >= kMaxElements) throw GroundSetTooLarge(e + 1, kMaxElements);
    bits_ |= std::uint64_t{1} << e;
  }
  void erase(Element e) {
    if (e < kMaxElements) bits_ &= ~(std::uint64_t{1} << e);
  }

  [[nodiscard]] ElementSet with(Element e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }
  [[nodiscard]] ElementSet without(Element e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  [[nodiscard]] iterator begin() const { return iterator(bits_); }
  [[nodiscard]] iterator end() const { return iterator(0); }

  [[nodiscard]] std::vector<Element> to_vector() const { return {begin(), end()}; }

  friend bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order on sets: by cardinality, then lexicographically on the
// ascending element lists.
inline bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

// Labels of the elements 0..n-1. Labels are unique and non-empty.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw ParseError("empty element label");
      if (!index_.emplace(labels_[i], static_cast<Element>(i)).second) {
        throw ParseError("duplicate element label: " + labels_[i]);
      }
    }
  }

  // Ground set labelled "0", "1", ..., "n-1".
  static GroundSet numbered(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return GroundSet(std::move(labels));
  }

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::string& label(Element e) const { return labels_.at(e); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  [[nodiscard]] std::optional<Element> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] Element at(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw UnknownElement(std::string(label));
  }

  [[nodiscard]] ElementSet all() const { return ElementSet::first(size()); }

  [[nodiscard]] std::vector<std::string> labels_of(ElementSet s) const {
    std::vector<std::string> out;
    for (Element e : s) out.push_back(label(e));
    return out;
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
};

}  // namespace cg4
