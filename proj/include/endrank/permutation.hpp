#ifndef ENDRANK_PERMUTATION_HPP
#define ENDRANK_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace endrank {

// A bijection on [n], acting on the right: point i is sent to i*sigma.
// Points are 1-based in the public interface.
class Permutation {
 public:
  // image[i-1] = i*sigma. Throws input_error unless image is a bijection
  // of [1, n].
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);
  // The transposition (i j).
  static Permutation transposition(std::size_t n, std::size_t i,
                                   std::size_t j);
  // The n-cycle (1 2 ... n).
  static Permutation long_cycle(std::size_t n);
  // All of S_n, in lexicographic order of the image arrays.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t degree() const noexcept { return image_.size(); }
  std::size_t apply(std::size_t i) const { return image_.at(i - 1); }
  std::vector<std::size_t> const& image() const noexcept { return image_; }
  bool is_identity() const noexcept;

  // Right action: i * (this then next) = (i * this) * next.
  Permutation then(Permutation const& next) const;

  // Cycle notation without spaces, "id" for the identity: "(1,2)(3,4)".
  std::string cycle_string() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<std::size_t> image_;
};

}  // namespace endrank

#endif  // ENDRANK_PERMUTATION_HPP
