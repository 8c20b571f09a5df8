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

#ifndef MMC_MATROID_IMPLS_HPP_
#define MMC_MATROID_IMPLS_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mmc/errors.hpp"
#include "mmc/matroid.hpp"

namespace mmc {

/// Every subset of the ground set is independent.
class FreeMatroid {
 public:
  explicit FreeMatroid(ElementSet ground) : ground_(ground) {}

  ElementSet ground() const { return ground_; }
  bool independent(ElementSet s) const { return s.is_subset_of(ground_); }

 private:
  ElementSet ground_;
};

/// Independent iff at most `capacity` elements.
class UniformMatroid {
 public:
  UniformMatroid(ElementSet ground, std::size_t capacity)
      : ground_(ground), capacity_(capacity) {
    if (capacity_ < 1) {
      throw PreconditionError(Violation::invalid_argument,
                              "uniform matroid capacity must be at least 1");
    }
  }

  ElementSet ground() const { return ground_; }
  std::size_t capacity() const { return capacity_; }
  bool independent(ElementSet s) const {
    return s.is_subset_of(ground_) && s.size() <= capacity_;
  }

 private:
  ElementSet ground_;
  std::size_t capacity_;
};

struct CappedSet {
  ElementSet members;
  std::size_t cap = 0;

  friend bool operator==(const CappedSet&, const CappedSet&) = default;
};

/// Two members of a would-be laminar family that overlap without nesting.
class NotLaminar : public PreconditionError {
 public:
  NotLaminar(std::size_t first, std::size_t second, ElementSet a, ElementSet b)
      : PreconditionError(Violation::invalid_argument,
                          "family is not laminar: sets #" +
                              std::to_string(first) + " " +
                              detail::set_string(a) + " and #" +
                              std::to_string(second) + " " +
                              detail::set_string(b) +
                              " overlap without containment"),
        first_(first),
        second_(second) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Independent iff |F ∩ P| <= cap(P) for every P of a laminar family.
class LaminarMatroid {
 public:
  LaminarMatroid(ElementSet ground, std::vector<CappedSet> sets)
      : ground_(ground), sets_(std::move(sets)) {
    for (std::size_t a = 0; a < sets_.size(); ++a) {
      const CappedSet& p = sets_[a];
      detail::require_subset(p.members, ground_);
      if (p.cap == 0 && !p.members.empty()) {
        throw PreconditionError(
            Violation::invalid_argument,
            "laminar set #" + std::to_string(a) + " " +
                detail::set_string(p.members) +
                " has cap 0, so its elements are not independent singletons");
      }
      for (std::size_t b = a + 1; b < sets_.size(); ++b) {
        const ElementSet x = p.members;
        const ElementSet y = sets_[b].members;
        if (x.intersects(y) && !x.is_subset_of(y) && !y.is_subset_of(x)) {
          throw NotLaminar(a, b, x, y);
        }
      }
    }
  }

  ElementSet ground() const { return ground_; }
  const std::vector<CappedSet>& sets() const { return sets_; }
  bool independent(ElementSet s) const {
    if (!s.is_subset_of(ground_)) return false;
    return std::all_of(sets_.begin(), sets_.end(), [s](const CappedSet& p) {
      return (s & p.members).size() <= p.cap;
    });
  }

 private:
  ElementSet ground_;
  std::vector<CappedSet> sets_;
};

/// Raised when an explicitly listed family fails the matroid axioms.
class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(AxiomReport report)
      : Error(describe(report)), report_(report) {}

  const AxiomReport& report() const { return report_; }

  static std::string describe(const AxiomReport& r) {
    switch (r.violated) {
      case Axiom::none:
        return "matroid axioms hold";
      case Axiom::empty_family:
        return "independence family is empty";
      case Axiom::downward_closure:
        return "(I1) violated: " + detail::set_string(r.smaller) +
               " is dependent but its superset " +
               detail::set_string(r.larger) + " is independent";
      case Axiom::augmentation:
        return "(I2) violated: no element of " +
               detail::set_string(r.larger - r.smaller) + " augments " +
               detail::set_string(r.smaller);
    }
    return "unknown axiom";
  }

 private:
  AxiomReport report_;
};

/// Independence by lookup in a listed family. The axioms are checked when
/// the matroid is built; a failing family is rejected with AxiomViolation.
class ExplicitMatroid {
 public:
  ExplicitMatroid(ElementSet ground, std::vector<ElementSet> family,
                  std::size_t bound = kDefaultExhaustiveBound)
      : ground_(ground), family_(std::move(family)) {
    for (ElementSet s : family_) detail::require_subset(s, ground_);
    std::sort(family_.begin(), family_.end());
    family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
    if (AxiomReport report = check_axioms(*this, bound); !report.ok()) {
      throw AxiomViolation(report);
    }
  }

  ElementSet ground() const { return ground_; }
  /// The independent sets, sorted by bitmask.
  const std::vector<ElementSet>& family() const { return family_; }
  bool independent(ElementSet s) const {
    return std::binary_search(family_.begin(), family_.end(), s);
  }

 private:
  ElementSet ground_;
  std::vector<ElementSet> family_;
};

inline Matroid make_free(ElementSet ground) { return FreeMatroid(ground); }

inline Matroid make_uniform(ElementSet ground, std::size_t capacity) {
  return UniformMatroid(ground, capacity);
}

inline Matroid make_laminar(ElementSet ground, std::vector<CappedSet> sets) {
  return LaminarMatroid(ground, std::move(sets));
}

inline Matroid make_explicit(ElementSet ground, std::vector<ElementSet> family,
                             std::size_t bound = kDefaultExhaustiveBound) {
  return ExplicitMatroid(ground, std::move(family), bound);
}

}  // namespace mmc

#endif  // MMC_MATROID_IMPLS_HPP_
