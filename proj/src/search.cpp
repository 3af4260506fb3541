#include "search.hpp"

#include <numeric>
#include <span>
#include <vector>

namespace endrank::detail {

SearchClock::SearchClock(Budget const& budget) : max_nodes_(budget.max_nodes) {
  auto const now = clock::now();
  auto const room = std::chrono::duration_cast<std::chrono::duration<double>>(
      clock::time_point::max() - now);
  if (budget.wall < room) {
    deadline_ = now + std::chrono::duration_cast<clock::duration>(budget.wall);
  }
}

bool SearchClock::tick() {
  if (exhausted_) {
    return false;
  }
  ++nodes_;
  if (max_nodes_ && nodes_ > *max_nodes_) {
    exhausted_ = true;
  } else if (deadline_ && (nodes_ & 255) == 0 && clock::now() > *deadline_) {
    exhausted_ = true;
  }
  return !exhausted_;
}

namespace {

struct Node {
  std::vector<element_id> members;
  ElementSet              span;     // <U>
  std::vector<ElementSet> without;  // without[k] = <U \ {members[k]}>
};

struct Extension {
  element_id              x;
  std::vector<ElementSet> without;
};

// Walks the independent subsets in lexicographic (preorder) order.
//
// Visitor interface:
//   bool visit(Node const&, std::span<element_id const> candidates)
//       false skips the subtree below the node
//   bool stopped() const             the whole search is finished
//   void rejected(std::size_t size)  a dependent set of this size was seen
//   bool worth(std::size_t reachable) whether a subtree whose sets have at
//                                     most `reachable` elements is useful
template <class Visitor>
class IndependentEnumerator {
 public:
  IndependentEnumerator(SemigroupTable const& t, SearchClock& clock,
                        Visitor& visitor)
      : t_(t), clock_(clock), visitor_(visitor) {}

  void run() {
    Node root{{}, ElementSet(t_.size()), {}};
    std::vector<element_id> all(t_.size());
    std::iota(all.begin(), all.end(), element_id{0});
    descend(root, all);
  }

 private:
  // false aborts the whole walk
  bool descend(Node const& node, std::vector<element_id> const& candidates) {
    if (!clock_.tick()) {
      return false;
    }
    if (!visitor_.visit(node, candidates)) {
      return !visitor_.stopped();
    }
    auto const size = node.members.size();

    std::vector<Extension> passing;
    for (auto x : candidates) {
      if (node.span.contains(x)) {
        visitor_.rejected(size + 1);
        continue;
      }
      Extension ext{x, {}};
      ext.without.reserve(size + 1);
      bool independent = true;
      for (std::size_t k = 0; k < size; ++k) {
        ElementSet s = node.without[k];
        extend_closure(t_, s, std::span(&x, 1), scratch_);
        if (s.contains(node.members[k])) {
          independent = false;
          break;
        }
        ext.without.push_back(std::move(s));
      }
      if (!independent) {
        visitor_.rejected(size + 1);
        continue;
      }
      ext.without.push_back(node.span);
      passing.push_back(std::move(ext));
    }

    std::vector<element_id> next;
    for (std::size_t i = 0; i < passing.size(); ++i) {
      if (!visitor_.worth(size + passing.size() - i)) {
        break;
      }
      auto& ext = passing[i];
      Node  child{node.members, node.span, std::move(ext.without)};
      child.members.push_back(ext.x);
      extend_closure(t_, child.span, std::span(&ext.x, 1), scratch_);
      next.clear();
      for (std::size_t j = i + 1; j < passing.size(); ++j) {
        next.push_back(passing[j].x);
      }
      if (!descend(child, next)) {
        return false;
      }
    }
    return true;
  }

  SemigroupTable const&   t_;
  SearchClock&            clock_;
  Visitor&                visitor_;
  std::vector<element_id> scratch_;
};

class MaxVisitor {
 public:
  MaxVisitor(SemigroupTable const& t, IndependentSearchOptions const& o)
      : t_(t), options_(o), best_size_(o.beat) {}

  bool visit(Node const& node, std::span<element_id const> candidates) {
    auto const size = node.members.size();
    bool const qualifies
        = !options_.require_generating || node.span.is_full();
    if (qualifies && size > best_size_) {
      best_size_ = size;
      best_      = ElementSet::of(t_.size(), node.members);
      if (options_.stop_at && size >= *options_.stop_at) {
        stopped_ = true;
        return false;
      }
    }
    if (size + candidates.size() <= best_size_) {
      return false;
    }
    if (options_.require_generating && !node.span.is_full()) {
      ElementSet reach = node.span;
      extend_closure(t_, reach, candidates, scratch_);
      if (!reach.is_full()) {
        return false;
      }
    }
    return true;
  }
  bool stopped() const { return stopped_; }
  void rejected(std::size_t) {}
  bool worth(std::size_t reachable) const { return reachable > best_size_; }

  std::optional<ElementSet> const& best() const { return best_; }

 private:
  SemigroupTable const&           t_;
  IndependentSearchOptions const& options_;
  std::size_t                     best_size_;
  std::optional<ElementSet>       best_;
  bool                            stopped_ = false;
  std::vector<element_id>         scratch_;
};

class MinDependentVisitor {
 public:
  bool visit(Node const& node, std::span<element_id const>) {
    return !min_ || node.members.size() + 1 < *min_;
  }
  // singletons are independent, so 2 is the least possible answer
  bool stopped() const { return min_ && *min_ <= 2; }
  void rejected(std::size_t size) {
    if (!min_ || size < *min_) {
      min_ = size;
    }
  }
  bool worth(std::size_t) const { return !stopped(); }

  std::optional<std::size_t> const& min() const { return min_; }

 private:
  std::optional<std::size_t> min_;
};

}  // namespace

SearchResult max_independent_search(SemigroupTable const&           t,
                                    SearchClock&                    clock,
                                    IndependentSearchOptions const& options) {
  MaxVisitor visitor(t, options);
  IndependentEnumerator<MaxVisitor>(t, clock, visitor).run();
  return {visitor.best(), !clock.exhausted(), clock.nodes()};
}

DependentSizeResult min_dependent_size(SemigroupTable const& t,
                                       SearchClock&          clock) {
  MinDependentVisitor visitor;
  IndependentEnumerator<MinDependentVisitor>(t, clock, visitor).run();
  return {visitor.min(), !clock.exhausted()};
}

namespace {

class GeneratingCombinations {
 public:
  GeneratingCombinations(SemigroupTable const& t, SearchClock& clock)
      : t_(t), clock_(clock) {}

  // Looks for a generating set of exactly k elements. Elements already in
  // the span of the prefix are skipped: a set containing one would have a
  // generating proper subset, found at a smaller k.
  std::optional<ElementSet> find(std::size_t k) {
    chosen_.clear();
    aborted_ = false;
    if (descend(ElementSet(t_.size()), 0, k)) {
      return ElementSet::of(t_.size(), chosen_);
    }
    return std::nullopt;
  }
  bool aborted() const { return aborted_; }

 private:
  bool descend(ElementSet const& span, element_id start, std::size_t left) {
    if (left == 0) {
      return span.is_full();
    }
    if (span.is_full()) {
      return false;
    }
    auto const n = t_.size();
    for (element_id x = start; x + left <= n; ++x) {
      if (span.contains(x)) {
        continue;
      }
      if (!clock_.tick()) {
        aborted_ = true;
        return false;
      }
      ElementSet next = span;
      extend_closure(t_, next, std::span(&x, 1), scratch_);
      chosen_.push_back(x);
      if (descend(next, x + 1, left - 1)) {
        return true;
      }
      chosen_.pop_back();
      if (aborted_) {
        return false;
      }
    }
    return false;
  }

  SemigroupTable const&   t_;
  SearchClock&            clock_;
  std::vector<element_id> chosen_;
  std::vector<element_id> scratch_;
  bool                    aborted_ = false;
};

}  // namespace

GeneratingSearchResult min_generating_search(SemigroupTable const& t,
                                             SearchClock&          clock) {
  GeneratingCombinations search(t, clock);
  for (std::size_t k = 1; k <= t.size(); ++k) {
    auto found = search.find(k);
    if (found) {
      return {std::move(found), true, k};
    }
    if (search.aborted()) {
      return {std::nullopt, false, k};
    }
  }
  // unreachable: the whole table generates itself
  return {ElementSet::full(t.size()), true, t.size()};
}

}  // namespace endrank::detail
