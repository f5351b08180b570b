#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "symm/polynomial.hpp"
#include "symm/scalar.hpp"

namespace symm {

/// Sorted distinct real roots λ_(1) < … < λ_(s) with multiplicities r_j.
template <Scalar T>
class RootProfile {
 public:
  RootProfile() = default;

  RootProfile(std::vector<T> distinct, std::vector<int> multiplicities)
      : distinct_(std::move(distinct)), mult_(std::move(multiplicities)) {
    if (distinct_.size() != mult_.size())
      throw std::invalid_argument("RootProfile: roots and multiplicities differ in length");
    for (std::size_t j = 0; j < mult_.size(); ++j) {
      if (mult_[j] < 1) throw std::invalid_argument("RootProfile: multiplicity must be positive");
      if (j > 0 && !(distinct_[j - 1] < distinct_[j]))
        throw std::invalid_argument("RootProfile: distinct roots must be strictly increasing");
    }
  }

  /// Groups an arbitrary root list (exact equality) into a profile.
  static RootProfile from_flat(std::vector<T> roots) {
    std::sort(roots.begin(), roots.end());
    std::vector<T> d;
    std::vector<int> r;
    for (const T& x : roots) {
      if (!d.empty() && d.back() == x) {
        ++r.back();
      } else {
        d.push_back(x);
        r.push_back(1);
      }
    }
    return RootProfile(std::move(d), std::move(r));
  }

  const std::vector<T>& distinct() const noexcept { return distinct_; }
  const std::vector<int>& multiplicities() const noexcept { return mult_; }
  std::size_t distinct_count() const noexcept { return distinct_.size(); }

  /// m = Σ r_j.
  int degree() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

  /// λ_1 ≤ … ≤ λ_m with each root repeated by its multiplicity.
  std::vector<T> flattened() const {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (std::size_t j = 0; j < distinct_.size(); ++j)
      out.insert(out.end(), static_cast<std::size_t>(mult_[j]), distinct_[j]);
    return out;
  }

  bool is_simple() const {
    return std::all_of(mult_.begin(), mult_.end(), [](int r) { return r == 1; });
  }

  template <Scalar U>
  RootProfile<U> cast() const {
    std::vector<U> d;
    d.reserve(distinct_.size());
    for (const T& x : distinct_) {
      if constexpr (std::same_as<U, T>) {
        d.push_back(x);
      } else if constexpr (std::same_as<U, double>) {
        d.push_back(to_double(x));
      } else {
        d.push_back(to_rational(x));
      }
    }
    return RootProfile<U>(std::move(d), mult_);
  }

  friend bool operator==(const RootProfile&, const RootProfile&) = default;

 private:
  std::vector<T> distinct_;
  std::vector<int> mult_;
};

/// ρ = max r_j (0 for an empty profile).
template <Scalar T>
int max_multiplicity(const RootProfile<T>& roots) {
  const auto& r = roots.multiplicities();
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

template <Scalar T>
Polynomial<T> from_roots(const RootProfile<T>& roots) {
  if (roots.degree() == 0) throw std::invalid_argument("from_roots: empty root profile");
  const std::vector<T> flat = roots.flattened();
  return from_roots(std::span<const T>(flat));
}

}  // namespace symm
