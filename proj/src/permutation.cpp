#include "endrank/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "endrank/errors.hpp"

namespace endrank {

Permutation::Permutation(std::vector<std::size_t> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (auto v : image_) {
    if (v < 1 || v > image_.size() || seen[v]) {
      throw input_error("image array is not a bijection of [1, "
                        + std::to_string(image_.size()) + "]");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{1});
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i,
                                       std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw input_error("bad transposition points");
  }
  auto img     = identity(n).image_;
  img[i - 1]   = j;
  img[j - 1]   = i;
  return Permutation(std::move(img));
}

Permutation Permutation::long_cycle(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = (i + 1) % n + 1;
  }
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<Permutation> out;
  auto                     img = identity(n).image_;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i + 1) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::then(Permutation const& next) const {
  if (next.degree() != degree()) {
    throw input_error("permutation degrees differ");
  }
  std::vector<std::size_t> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    img[i] = next.image_[image_[i] - 1];
  }
  return Permutation(std::move(img));
}

std::string Permutation::cycle_string() const {
  if (is_identity()) {
    return "id";
  }
  std::string       out;
  std::vector<bool> done(image_.size() + 1, false);
  for (std::size_t start = 1; start <= image_.size(); ++start) {
    if (done[start] || image_[start - 1] == start) {
      continue;
    }
    out += '(';
    for (auto i = start; !done[i]; i = image_[i - 1]) {
      if (i != start) {
        out += ',';
      }
      out += std::to_string(i);
      done[i] = true;
    }
    out += ')';
  }
  return out;
}

}  // namespace endrank
