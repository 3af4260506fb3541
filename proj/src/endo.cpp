#include "endrank/endo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "endrank/errors.hpp"

namespace endrank {

namespace {

// Tag for an image already known to be a homomorphism.
EndoKind kind_from_image(std::size_t n, std::vector<element_id> const& image) {
  BrandtIndexing const idx(n);
  auto const           first = image.front();
  if (std::all_of(image.begin(), image.end(),
                  [first](auto v) { return v == first; })) {
    auto const e = idx.element_of(first);
    if (e.is_zero()) {
      return ZeroConstant{};
    }
    if (e.row() == e.col()) {
      return NonzeroConstant{e.row()};
    }
    throw std::logic_error("constant homomorphism onto non-idempotent "
                           + e.label());
  }
  // A non-constant endomorphism must be phi_sigma where (i,i) -> (i sigma,
  // i sigma).
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 1; i <= n; ++i) {
    auto const e = idx.element_of(image[idx.id_of(BrandtElement::pair(i, i))]);
    if (e.is_zero() || e.row() != e.col()) {
      throw std::logic_error("homomorphism outside Aut(B_n) + constants");
    }
    sigma[i - 1] = e.row();
  }
  Permutation p(std::move(sigma));  // throws input_error if not bijective
  if (phi_of_perm(p, n).image() != image) {
    throw std::logic_error("homomorphism outside Aut(B_n) + constants");
  }
  return Automorphism{std::move(p)};
}

int category(EndoKind const& k) {
  return static_cast<int>(k.index() == 0 ? 0 : (k.index() == 2 ? 1 : 2));
}

}  // namespace

std::string Endomorphism::label() const {
  if (auto const* a = std::get_if<Automorphism>(&kind_)) {
    return a->sigma.is_identity() ? "phi_id" : "phi_" + a->sigma.cycle_string();
  }
  if (auto const* c = std::get_if<NonzeroConstant>(&kind_)) {
    return "xi_" + BrandtElement::pair(c->i, c->i).label();
  }
  return "xi_theta";
}

bool canonical_less(Endomorphism const& f, Endomorphism const& g) {
  auto const cf = category(f.kind_);
  auto const cg = category(g.kind_);
  if (cf != cg) {
    return cf < cg;
  }
  if (cf == 0) {
    return std::get<Automorphism>(f.kind_).sigma.image()
           < std::get<Automorphism>(g.kind_).sigma.image();
  }
  if (cf == 1) {
    return std::get<NonzeroConstant>(f.kind_).i
           < std::get<NonzeroConstant>(g.kind_).i;
  }
  return false;
}

Endomorphism phi_of_perm(Permutation const& sigma, std::size_t n) {
  if (sigma.degree() != n) {
    throw input_error("permutation of degree " + std::to_string(sigma.degree())
                      + " used for B_" + std::to_string(n));
  }
  BrandtIndexing const    idx(n);
  std::vector<element_id> image(idx.size());
  image[0] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      image[idx.id_of(BrandtElement::pair(i, j))]
          = idx.id_of(BrandtElement::pair(sigma.apply(i), sigma.apply(j)));
    }
  }
  return Endomorphism(n, std::move(image), Automorphism{sigma});
}

Endomorphism constant_map(BrandtElement target, std::size_t n) {
  BrandtIndexing const idx(n);
  auto const           id = idx.id_of(target);
  if (!target.is_zero() && target.row() != target.col()) {
    throw input_error("constant map onto " + target.label()
                      + " is not an endomorphism: the value is not idempotent");
  }
  EndoKind kind = target.is_zero() ? EndoKind{ZeroConstant{}}
                                   : EndoKind{NonzeroConstant{target.row()}};
  return Endomorphism(n, std::vector<element_id>(idx.size(), id),
                      std::move(kind));
}

Endomorphism compose(Endomorphism const& f, Endomorphism const& g) {
  if (f.n_ != g.n_) {
    throw input_error("cannot compose endomorphisms of B_"
                      + std::to_string(f.n_) + " and B_"
                      + std::to_string(g.n_));
  }
  std::vector<element_id> image(f.image_.size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    image[x] = g.image_[f.image_[x]];
  }
  auto kind = kind_from_image(f.n_, image);
  return Endomorphism(f.n_, std::move(image), std::move(kind));
}

Endomorphism classify(std::size_t n, std::vector<element_id> image) {
  auto const table = build_brandt(n);
  auto const size  = table.size();
  if (image.size() != size) {
    throw input_error("image vector has length " + std::to_string(image.size())
                      + ", expected " + std::to_string(size));
  }
  for (auto v : image) {
    if (v >= size) {
      throw input_error("image entry " + std::to_string(v)
                        + " is not an element of B_" + std::to_string(n));
    }
  }
  for (element_id x = 0; x < size; ++x) {
    for (element_id y = 0; y < size; ++y) {
      if (image[table(x, y)] != table(image[x], image[y])) {
        throw input_error("not a homomorphism: fails on "
                          + table.label(x) + " + " + table.label(y));
      }
    }
  }
  auto kind = kind_from_image(n, image);
  return Endomorphism(n, std::move(image), std::move(kind));
}

ElementSet EndoMonoid::automorphisms() const {
  ElementSet s(size());
  for (element_id a = 0; a < aut_count_; ++a) {
    s.insert(a);
  }
  return s;
}

element_id EndoMonoid::id_of(Endomorphism const& f) const {
  auto it = std::find(elements_.begin(), elements_.end(), f);
  if (it == elements_.end()) {
    throw input_error("map is not an element of End(B_" + std::to_string(n_)
                      + ")");
  }
  return static_cast<element_id>(it - elements_.begin());
}

element_id EndoMonoid::id_of_phi(Permutation const& sigma) const {
  return id_of(phi_of_perm(sigma, n_));
}

element_id EndoMonoid::id_of_xi(std::size_t i) const {
  if (i < 1 || i > n_) {
    throw input_error("xi_(i,i) needs 1 <= i <= n");
  }
  return static_cast<element_id>(aut_count_ + i - 1);
}

EndoMonoid enumerate_endomorphisms_structural(std::size_t n, std::size_t max_n) {
  if (n < 1) {
    throw input_error("End(B_n) needs n >= 1");
  }
  if (n > max_n) {
    throw resource_error("End(B_" + std::to_string(n)
                         + ") exceeds the factorial budget n <= "
                         + std::to_string(max_n));
  }
  std::vector<Endomorphism> elements;
  for (auto const& sigma : Permutation::all(n)) {
    elements.push_back(phi_of_perm(sigma, n));
  }
  auto const aut_count = elements.size();
  for (std::size_t i = 1; i <= n; ++i) {
    elements.push_back(constant_map(BrandtElement::pair(i, i), n));
  }
  elements.push_back(constant_map(BrandtElement::zero(), n));

  std::map<std::vector<element_id>, element_id> index;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    index.emplace(elements[k].image(), static_cast<element_id>(k));
  }
  auto const               size = elements.size();
  std::vector<element_id>  products;
  std::vector<element_id>  image(elements.front().image().size());
  std::vector<std::string> labels;
  products.reserve(size * size);
  for (auto const& f : elements) {
    for (auto const& g : elements) {
      for (std::size_t x = 0; x < image.size(); ++x) {
        image[x] = g.image()[f.image()[x]];
      }
      auto it = index.find(image);
      if (it == index.end()) {
        throw std::logic_error("End(B_n) is not closed under composition");
      }
      products.push_back(it->second);
    }
    labels.push_back(f.label());
  }
  SemigroupTable table(size, std::move(products), std::move(labels));
  if (auto r = validate(table); !r.ok()) {
    throw std::logic_error("composition table of End(B_n) is not associative");
  }
  return EndoMonoid(n, std::move(elements), std::move(table), aut_count);
}

namespace {

// Backtracking search for homomorphisms B_n -> B_n. Assigning an image
// forces f(x + y) = f(x) + f(y) for every assigned pair, which is propagated
// eagerly; a clash undoes the assignment.
class HomomorphismSearch {
 public:
  explicit HomomorphismSearch(SemigroupTable const& t)
      : t_(t), f_(t.size(), unassigned) {}

  std::vector<std::vector<element_id>> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  static constexpr element_id unassigned = ~element_id{0};

  bool assign(element_id x, element_id v) {
    std::vector<element_id> queue{x};
    f_[x] = v;
    trail_.push_back(x);
    while (!queue.empty()) {
      auto const a = queue.back();
      queue.pop_back();
      for (element_id b = 0; b < t_.size(); ++b) {
        if (f_[b] == unassigned) {
          continue;
        }
        for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
          auto const pq   = t_(p, q);
          auto const want = t_(f_[p], f_[q]);
          if (f_[pq] == unassigned) {
            f_[pq] = want;
            trail_.push_back(pq);
            queue.push_back(pq);
          } else if (f_[pq] != want) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      f_[trail_.back()] = unassigned;
      trail_.pop_back();
    }
  }

  void descend(element_id from) {
    while (from < t_.size() && f_[from] != unassigned) {
      ++from;
    }
    if (from == t_.size()) {
      found_.push_back(f_);
      return;
    }
    for (element_id v = 0; v < t_.size(); ++v) {
      auto const mark = trail_.size();
      if (assign(from, v)) {
        descend(from + 1);
      }
      undo(mark);
    }
  }

  SemigroupTable const&                t_;
  std::vector<element_id>              f_;
  std::vector<element_id>              trail_;
  std::vector<std::vector<element_id>> found_;
};

}  // namespace

std::vector<Endomorphism> enumerate_endomorphisms_oracle(std::size_t n) {
  if (n > oracle_max_n) {
    throw resource_error("oracle enumeration is limited to n <= "
                         + std::to_string(oracle_max_n));
  }
  auto const                table = build_brandt(n);
  std::vector<Endomorphism> out;
  for (auto& image : HomomorphismSearch(table).run()) {
    out.push_back(classify(n, std::move(image)));
  }
  std::sort(out.begin(), out.end(), [](auto const& f, auto const& g) {
    return canonical_less(f, g);
  });
  return out;
}

namespace {

void require_n_at_least_2(EndoMonoid const& m) {
  if (m.n() < 2) {
    throw input_error("this subset of End(B_n) is defined for n >= 2");
  }
}

}  // namespace

ElementSet transposition_cycle_generators(EndoMonoid const& m) {
  require_n_at_least_2(m);
  auto const n = m.n();
  return ElementSet::of(
      m.size(),
      {m.id_of_phi(Permutation::transposition(n, 1, 2)),
       m.id_of_phi(Permutation::long_cycle(n)), m.id_of_xi(1),
       m.id_of_xi_theta()});
}

ElementSet adjacent_transposition_generators(EndoMonoid const& m) {
  require_n_at_least_2(m);
  ElementSet s(m.size());
  for (std::size_t i = 1; i < m.n(); ++i) {
    s.insert(m.id_of_phi(Permutation::transposition(m.n(), i, i + 1)));
  }
  s.insert(m.id_of_xi(1));
  s.insert(m.id_of_xi_theta());
  return s;
}

ElementSet identity_with_constants(EndoMonoid const& m) {
  require_n_at_least_2(m);
  ElementSet s(m.size());
  s.insert(m.id_of_phi(Permutation::identity(m.n())));
  for (std::size_t i = 1; i <= m.n(); ++i) {
    s.insert(m.id_of_xi(i));
  }
  s.insert(m.id_of_xi_theta());
  return s;
}

}  // namespace endrank
