// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MMC_MATROID_HPP_
#define MMC_MATROID_HPP_

#include <concepts>
#include <cstddef>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mmc/errors.hpp"
#include "mmc/small_set.hpp"

namespace mmc {

struct ElementTag;
/// Subset of a matroid ground set. Elements are market edge ids.
using ElementSet = SmallSet<ElementTag>;
using Element = std::size_t;

/// Default size bound for algorithms that enumerate every subset of a
/// ground set.
inline constexpr std::size_t kDefaultExhaustiveBound = 12;

/// A matroid exposed through its independence predicate. `independent(s)`
/// must return false for any `s` that is not a subset of `ground()`.
template <class T>
concept IndependenceOracle = requires(const T& m, ElementSet s) {
  { m.ground() } -> std::convertible_to<ElementSet>;
  { m.independent(s) } -> std::convertible_to<bool>;
};

/// Type-erased, immutable, cheaply copyable matroid handle. Any type that
/// models IndependenceOracle converts to it.
class Matroid {
 public:
  template <class T>
    requires(IndependenceOracle<T> &&
             !std::same_as<std::remove_cvref_t<T>, Matroid>)
  Matroid(T impl)  // NOLINT(google-explicit-constructor)
      : self_(std::make_shared<const Model<T>>(std::move(impl))) {}

  ElementSet ground() const { return self_->ground(); }
  bool independent(ElementSet s) const { return self_->independent(s); }

  /// The wrapped realization, or nullptr if it is not a T.
  template <class T>
  const T* target() const {
    const auto* model = dynamic_cast<const Model<T>*>(self_.get());
    return model == nullptr ? nullptr : &model->impl;
  }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual ElementSet ground() const = 0;
    virtual bool independent(ElementSet s) const = 0;
  };

  template <class T>
  struct Model final : Concept {
    explicit Model(T t) : impl(std::move(t)) {}
    ElementSet ground() const override { return impl.ground(); }
    bool independent(ElementSet s) const override {
      return impl.independent(s);
    }
    T impl;
  };

  std::shared_ptr<const Concept> self_;
};

/// Inclusion-wise minimal dependent set.
using Circuit = ElementSet;

enum class Axiom { none, empty_family, downward_closure, augmentation };

/// Result of an exhaustive axiom check. On failure `smaller`/`larger` carry
/// the offending pair: for downward closure, the dependent subset and its
/// independent superset; for augmentation, the sets I and J with |I| < |J|
/// that admit no augmenting element.
struct AxiomReport {
  Axiom violated = Axiom::none;
  ElementSet smaller;
  ElementSet larger;

  bool ok() const { return violated == Axiom::none; }
};

/// Orderings (e_1..e_k) of b \ b2 and (f_1..f_k) of b2 \ b such that
/// e_i lies in the fundamental circuit of f_i with respect to b, and
/// swapping f_1..f_i out of b2 for e_1..e_i keeps a base at every i.
struct ExchangeOrdering {
  std::vector<Element> first_only;   // e_i, from b
  std::vector<Element> second_only;  // f_i, from b2

  friend bool operator==(const ExchangeOrdering&,
                         const ExchangeOrdering&) = default;
};

namespace detail {

inline std::string set_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

inline void require_bound(ElementSet ground, std::size_t bound,
                          const char* what) {
  if (ground.size() > bound) {
    throw BoundExceeded(what, ground.size(), bound);
  }
}

inline void require_subset(ElementSet s, ElementSet ground) {
  if (!s.is_subset_of(ground)) {
    throw PreconditionError(Violation::not_subset_of_ground,
                            "set " + set_string(s) +
                                " is not a subset of the ground set " +
                                set_string(ground));
  }
}

/// Independence of every subset of a small ground set, indexed by the
/// subset's local bitmask (bit j = j-th ground element in ground order).
template <IndependenceOracle M>
class IndependenceTable {
 public:
  explicit IndependenceTable(const M& m) : elements_(m.ground().to_vector()) {
    const std::size_t count = std::size_t{1} << elements_.size();
    independent_.resize(count);
    for (std::size_t local = 0; local < count; ++local) {
      independent_[local] = m.independent(expand(local));
    }
  }

  std::size_t size() const { return independent_.size(); }
  bool independent(std::size_t local) const { return independent_[local]; }

  ElementSet expand(std::size_t local) const {
    ElementSet s;
    for (std::size_t j = 0; j < elements_.size(); ++j) {
      if ((local >> j) & 1U) s.insert(elements_[j]);
    }
    return s;
  }

 private:
  std::vector<Element> elements_;
  std::vector<bool> independent_;
};

}  // namespace detail

/// Exhaustively checks that the independence family is non-empty, downward
/// closed (I1) and satisfies augmentation (I2). Refuses ground sets larger
/// than `bound`.
template <IndependenceOracle M>
AxiomReport check_axioms(const M& m,
                         std::size_t bound = kDefaultExhaustiveBound) {
  detail::require_bound(m.ground(), bound, "check_axioms");
  const detail::IndependenceTable table(m);
  const std::size_t count = table.size();

  bool any = false;
  for (std::size_t s = 0; s < count && !any; ++s) any = table.independent(s);
  if (!any) return {Axiom::empty_family, {}, {}};

  for (std::size_t j = 0; j < count; ++j) {
    if (!table.independent(j)) continue;
    // Proper subsets of j in ascending order.
    for (std::size_t i = 0; i != j; i = (i - j) & j) {
      if (!table.independent(i)) {
        return {Axiom::downward_closure, table.expand(i), table.expand(j)};
      }
    }
  }

  // With (I1) in place it suffices to augment from sets one larger.
  std::vector<std::vector<std::size_t>> by_size(64);
  for (std::size_t s = 0; s < count; ++s) {
    if (table.independent(s)) {
      by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    }
  }
  for (std::size_t k = 0; k + 1 < by_size.size(); ++k) {
    for (std::size_t i : by_size[k]) {
      for (std::size_t j : by_size[k + 1]) {
        bool augmented = false;
        for (std::size_t rest = j & ~i; rest != 0 && !augmented;
             rest &= rest - 1) {
          augmented = table.independent(i | (rest & (~rest + 1)));
        }
        if (!augmented) {
          return {Axiom::augmentation, table.expand(i), table.expand(j)};
        }
      }
    }
  }
  return {};
}

/// True iff `i` is independent and no single-element extension is.
template <IndependenceOracle M>
bool is_base(const M& m, ElementSet i) {
  const ElementSet ground = m.ground();
  detail::require_subset(i, ground);
  if (!m.independent(i)) return false;
  for (Element u : ground - i) {
    if (m.independent(i.with(u))) return false;
  }
  return true;
}

/// All circuits, in ascending bitmask order.
template <IndependenceOracle M>
std::vector<Circuit> circuits(const M& m,
                              std::size_t bound = kDefaultExhaustiveBound) {
  detail::require_bound(m.ground(), bound, "circuits");
  const detail::IndependenceTable table(m);
  std::vector<Circuit> out;
  for (std::size_t s = 1; s < table.size(); ++s) {
    if (table.independent(s)) continue;
    bool minimal = true;
    for (std::size_t rest = s; rest != 0 && minimal; rest &= rest - 1) {
      minimal = table.independent(s & ~(rest & (~rest + 1)));
    }
    if (minimal) out.push_back(table.expand(s));
  }
  return out;
}

/// All bases, in ascending bitmask order.
template <IndependenceOracle M>
std::vector<ElementSet> bases(const M& m,
                              std::size_t bound = kDefaultExhaustiveBound) {
  detail::require_bound(m.ground(), bound, "bases");
  const detail::IndependenceTable table(m);
  std::vector<ElementSet> out;
  std::size_t rank = 0;
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (!table.independent(s)) continue;
    const auto k = static_cast<std::size_t>(std::popcount(s));
    if (k > rank) {
      rank = k;
      out.clear();
    }
    if (k == rank) out.push_back(table.expand(s));
  }
  return out;
}

namespace detail {

template <IndependenceOracle M>
void require_circuit_args(const M& m, Element u, ElementSet i) {
  const ElementSet ground = m.ground();
  require_subset(i, ground);
  if (!ground.contains(u)) {
    throw PreconditionError(Violation::element_not_in_ground,
                            "element " + std::to_string(u) +
                                " is not in the ground set");
  }
  if (i.contains(u)) {
    throw PreconditionError(Violation::element_in_set,
                            "element " + std::to_string(u) +
                                " already belongs to " + set_string(i));
  }
  if (!m.independent(i)) {
    throw PreconditionError(Violation::set_dependent,
                            "set " + set_string(i) + " is dependent");
  }
  if (m.independent(i.with(u))) {
    throw PreconditionError(Violation::extension_independent,
                            set_string(i) + " + " + std::to_string(u) +
                                " is independent; no circuit exists");
  }
}

}  // namespace detail

/// The unique circuit inside i + u, computed as the elements v of i + u
/// whose removal restores independence. Needs |i| + 1 independence queries.
template <IndependenceOracle M>
Circuit fundamental_circuit(const M& m, Element u, ElementSet i) {
  detail::require_circuit_args(m, u, i);
  const ElementSet extended = i.with(u);
  Circuit out;
  for (Element v : extended) {
    if (m.independent(extended.without(v))) out.insert(v);
  }
  return out;
}

/// fundamental_circuit(m, u, i) - u: the elements that can make room for u.
template <IndependenceOracle M>
ElementSet d_set(const M& m, Element u, ElementSet i) {
  return fundamental_circuit(m, u, i).without(u);
}

/// M|X: ground set X, independent sets the independent subsets of X.
template <IndependenceOracle M>
class RestrictedMatroid {
 public:
  RestrictedMatroid(M base, ElementSet x) : base_(std::move(base)), x_(x) {
    detail::require_subset(x_, base_.ground());
  }

  ElementSet ground() const { return x_; }
  bool independent(ElementSet s) const {
    return s.is_subset_of(x_) && base_.independent(s);
  }

 private:
  M base_;
  ElementSet x_;
};

template <IndependenceOracle M>
Matroid restrict(const M& m, ElementSet x) {
  return RestrictedMatroid<M>(m, x);
}

/// Greedy completion of an independent set to a base, trying ground
/// elements in ground order.
template <IndependenceOracle M>
ElementSet extend_to_base(const M& m, ElementSet i) {
  const ElementSet ground = m.ground();
  detail::require_subset(i, ground);
  if (!m.independent(i)) {
    throw PreconditionError(Violation::set_dependent,
                            "set " + detail::set_string(i) + " is dependent");
  }
  ElementSet b = i;
  for (Element u : ground - i) {
    if (m.independent(b.with(u))) b.insert(u);
  }
  return b;
}

namespace detail {

template <IndependenceOracle M>
void require_distinct_bases(const M& m, ElementSet b, ElementSet b2) {
  for (ElementSet s : {b, b2}) {
    if (!is_base(m, s)) {
      throw PreconditionError(Violation::not_a_base,
                              "set " + set_string(s) + " is not a base");
    }
  }
  if (b == b2) {
    throw PreconditionError(Violation::bases_not_distinct,
                            "bases must be distinct, both are " +
                                set_string(b));
  }
}

}  // namespace detail

/// For distinct bases b, b2 and e in b \ b2, the ground-order-first f in
/// b2 \ b with e in C(f, b) and f in C(e, b2). Such an f always exists in a
/// matroid; InternalInconsistency is thrown when it does not.
template <IndependenceOracle M>
Element brualdi_exchange(const M& m, ElementSet b, ElementSet b2, Element e) {
  detail::require_distinct_bases(m, b, b2);
  if (!(b - b2).contains(e)) {
    throw PreconditionError(Violation::element_not_in_difference,
                            "element " + std::to_string(e) +
                                " is not in b \\ b2");
  }
  // v is in C(u, I) iff I + u - v is independent.
  for (Element f : b2 - b) {
    if (m.independent(b.with(f).without(e)) &&
        m.independent(b2.with(e).without(f))) {
      return f;
    }
  }
  throw InternalInconsistency("no symmetric exchange partner for element " +
                              std::to_string(e) +
                              "; independence predicate is not a matroid");
}

/// Builds the exchange ordering one pair at a time: with the current base
/// b° (b2 after the swaps so far), take the ground-order-first x in b \ b°,
/// pair it with y = brualdi_exchange(b, b°, x), and continue from
/// b° - y + x until b° reaches b.
template <IndependenceOracle M>
ExchangeOrdering exchange_ordering(const M& m, ElementSet b, ElementSet b2) {
  detail::require_distinct_bases(m, b, b2);
  ExchangeOrdering out;
  ElementSet current = b2;
  while (current != b) {
    const Element x = (b - current).front();
    const Element y = brualdi_exchange(m, b, current, x);
    out.first_only.push_back(x);
    out.second_only.push_back(y);
    current = current.without(y).with(x);
  }
  return out;
}

/// Same ground set and the same independent sets (exhaustive).
template <IndependenceOracle A, IndependenceOracle B>
bool equivalent(const A& a, const B& b,
                std::size_t bound = kDefaultExhaustiveBound) {
  if (a.ground() != b.ground()) return false;
  detail::require_bound(a.ground(), bound, "equivalent");
  bool same = true;
  for_each_subset(a.ground(), [&](ElementSet s) {
    same = a.independent(s) == b.independent(s);
    return same;
  });
  return same;
}

}  // namespace mmc

#endif  // MMC_MATROID_HPP_
