#pragma once

#include <map>

#include "descalg/checked.hpp"

namespace descalg {

/// Sparse integer combination of keys; zero coefficients are never stored
/// and iteration follows Key's ordering.
template <typename Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Coeff>;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Key& k, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  void add(const LinearCombination& other, Coeff scale = 1) {
    for (const auto& [k, c] : other.terms_) add(k, checked_mul(c, scale));
  }

  void scale(Coeff s) {
    if (s == 0) {
      terms_.clear();
      return;
    }
    for (auto& [k, c] : terms_) c = checked_mul(c, s);
  }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Terms terms_;
};

}  // namespace descalg
