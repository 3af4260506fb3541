#include "endrank/semigroup.hpp"

#include <string>

#include "endrank/errors.hpp"

namespace endrank {

SemigroupTable::SemigroupTable(std::size_t size, std::vector<element_id> products,
                               std::vector<std::string> labels)
    : size_(size), products_(std::move(products)), labels_(std::move(labels)) {
  if (size_ == 0) {
    throw input_error("a semigroup table needs at least one element");
  }
  if (products_.size() != size_ * size_) {
    throw input_error("product array has " + std::to_string(products_.size())
                      + " entries, expected " + std::to_string(size_ * size_));
  }
  for (std::size_t k = 0; k < products_.size(); ++k) {
    if (products_[k] >= size_) {
      throw input_error("entry " + std::to_string(products_[k]) + " at ("
                        + std::to_string(k / size_) + ","
                        + std::to_string(k % size_) + ") is not an element");
    }
  }
  if (!labels_.empty() && labels_.size() != size_) {
    throw input_error("expected " + std::to_string(size_) + " labels, got "
                      + std::to_string(labels_.size()));
  }
}

std::string SemigroupTable::label(element_id a) const {
  return labels_.empty() ? std::to_string(a) : labels_.at(a);
}

std::vector<std::string> SemigroupTable::labels_of(ElementSet const& s) const {
  std::vector<std::string> out;
  for (auto x : s.members()) {
    out.push_back(label(x));
  }
  return out;
}

ValidationReport validate(SemigroupTable const& t) {
  auto const n = static_cast<element_id>(t.size());
  for (element_id a = 0; a < n; ++a) {
    for (element_id b = 0; b < n; ++b) {
      auto const ab = t(a, b);
      auto const row_ab = t.row(ab);
      auto const row_b  = t.row(b);
      for (element_id c = 0; c < n; ++c) {
        if (row_ab[c] != t(a, row_b[c])) {
          return {std::array<element_id, 3>{a, b, c}};
        }
      }
    }
  }
  return {};
}

namespace {

void check_universe(ElementSet const& s, SemigroupTable const& t) {
  if (s.universe() != t.size()) {
    throw input_error("subset over " + std::to_string(s.universe())
                      + " elements used with a table of size "
                      + std::to_string(t.size()));
  }
}

}  // namespace

void extend_closure(SemigroupTable const& t, ElementSet& closed,
                    std::span<element_id const> extra,
                    std::vector<element_id>& members) {
  members.clear();
  closed.append_members(members);
  std::size_t next = members.size();
  for (auto x : extra) {
    if (closed.insert(x)) {
      members.push_back(x);
    }
  }
  // members[0, next) are processed; members[next, end) is the worklist.
  auto const full = t.size();
  while (next < members.size()) {
    if (members.size() == full) {
      return;
    }
    auto const e = members[next++];
    for (std::size_t k = 0; k < next; ++k) {
      auto const m  = members[k];
      auto const em = t(e, m);
      if (closed.insert(em)) {
        members.push_back(em);
      }
      auto const me = t(m, e);
      if (closed.insert(me)) {
        members.push_back(me);
      }
    }
  }
}

ElementSet closure(ElementSet const& gens, SemigroupTable const& t) {
  check_universe(gens, t);
  ElementSet              result(t.size());
  std::vector<element_id> scratch;
  auto const              g = gens.members();
  extend_closure(t, result, g, scratch);
  return result;
}

bool is_generating(ElementSet const& u, SemigroupTable const& t) {
  return closure(u, t).is_full();
}

bool is_independent(ElementSet const& u, SemigroupTable const& t) {
  check_universe(u, t);
  auto const              members = u.members();
  std::vector<element_id> others;
  std::vector<element_id> scratch;
  for (auto a : members) {
    others.clear();
    for (auto b : members) {
      if (b != a) {
        others.push_back(b);
      }
    }
    ElementSet span(t.size());
    extend_closure(t, span, others, scratch);
    if (span.contains(a)) {
      return false;
    }
  }
  return true;
}

bool is_band(SemigroupTable const& t) {
  for (element_id a = 0; a < t.size(); ++a) {
    if (t(a, a) != a) {
      return false;
    }
  }
  return true;
}

ElementSet idempotents(SemigroupTable const& t) {
  ElementSet result(t.size());
  for (element_id a = 0; a < t.size(); ++a) {
    if (t(a, a) == a) {
      result.insert(a);
    }
  }
  return result;
}

bool is_prime_subset(ElementSet const& u, SemigroupTable const& t) {
  check_universe(u, t);
  if (u.empty()) {
    throw input_error("prime subsets are nonempty");
  }
  auto const n = static_cast<element_id>(t.size());
  for (element_id a = 0; a < n; ++a) {
    if (u.contains(a)) {
      continue;
    }
    auto const row = t.row(a);
    for (element_id b = 0; b < n; ++b) {
      if (u.contains(row[b]) && !u.contains(b)) {
        return false;
      }
    }
  }
  return true;
}

SemigroupTable subtable(SemigroupTable const& t, ElementSet const& elements) {
  check_universe(elements, t);
  if (elements.empty()) {
    throw input_error("cannot restrict a table to the empty set");
  }
  auto const               ids = elements.members();
  std::vector<element_id>  position(t.size(), 0);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    position[ids[k]] = static_cast<element_id>(k);
  }
  std::vector<element_id>  products;
  std::vector<std::string> labels;
  products.reserve(ids.size() * ids.size());
  for (auto a : ids) {
    for (auto b : ids) {
      auto const ab = t(a, b);
      if (!elements.contains(ab)) {
        throw input_error("subset is not closed: " + t.label(a) + " * "
                          + t.label(b) + " = " + t.label(ab));
      }
      products.push_back(position[ab]);
    }
    if (t.has_labels()) {
      labels.push_back(t.label(a));
    }
  }
  return SemigroupTable(ids.size(), std::move(products), std::move(labels));
}

}  // namespace endrank
