#ifndef ENDRANK_ELEMENT_SET_HPP
#define ENDRANK_ELEMENT_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace endrank {

// Index of an element of a SemigroupTable; only meaningful together with
// the table it came from.
using element_id = std::uint32_t;

// A subset of [0, N) with bit-set semantics. Members are always reported in
// ascending order, which is the canonical order used for certificates.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  // Throws input_error if an id is >= universe.
  static ElementSet of(std::size_t universe, std::span<element_id const> ids);
  static ElementSet of(std::size_t universe,
                       std::initializer_list<element_id> ids);
  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }

  bool contains(element_id x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }
  // insert returns true if x was not already present
  bool insert(element_id x) noexcept {
    auto&         w   = words_[x >> 6];
    std::uint64_t bit = std::uint64_t{1} << (x & 63);
    bool          was = w & bit;
    w |= bit;
    return !was;
  }
  void erase(element_id x) noexcept {
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  bool is_subset_of(ElementSet const& other) const noexcept;
  bool intersects(ElementSet const& other) const noexcept;

  std::vector<element_id> members() const;
  // Appends members to out in ascending order.
  void append_members(std::vector<element_id>& out) const;

  ElementSet& operator|=(ElementSet const& other) noexcept;

  friend bool operator==(ElementSet const&, ElementSet const&) = default;
  // Lexicographic order on the ascending member sequences.
  friend bool lex_less(ElementSet const& a, ElementSet const& b);

 private:
  std::size_t                universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace endrank

#endif  // ENDRANK_ELEMENT_SET_HPP
