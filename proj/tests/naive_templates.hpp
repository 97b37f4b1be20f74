#pragma once

// Slow reference for template enumeration: distribute n units over every
// cell of the grid in all possible ways and keep the grids that satisfy the
// five conditions as literally stated.

#include <algorithm>
#include <functional>
#include <vector>

#include "descalg/composition.hpp"
#include "descalg/filled_template.hpp"

namespace naive {

struct Cell {
  bool is_y;
  int i;
  int j;
};

inline std::vector<Cell> cells(int u, int v) {
  std::vector<Cell> out;
  for (int i = 0; i <= u; ++i)
    for (int j = 0; j <= v; ++j) out.push_back({false, i, j});
  for (int i = 1; i <= u; ++i)
    for (int j = 1; j <= v; ++j) out.push_back({true, i, j});
  return out;
}

inline bool margins_hold(const descalg::FilledTemplate& t, const descalg::Composition& p,
                         const descalg::Composition& q, int n) {
  const int u = t.rows(), v = t.cols();
  for (int j = 1; j <= v; ++j) {
    int s = t.z(0, j);
    for (int i = 1; i <= u; ++i) s += t.y(i, j) + t.z(i, j);
    if (s != p[static_cast<std::size_t>(j - 1)]) return false;
  }
  int col0 = 0;
  for (int i = 0; i <= u; ++i) col0 += t.z(i, 0);
  if (col0 != n - p.weight()) return false;
  for (int i = 1; i <= u; ++i) {
    int s = t.z(i, 0);
    for (int j = 1; j <= v; ++j) s += t.y(i, j) + t.z(i, j);
    if (s != q[static_cast<std::size_t>(i - 1)]) return false;
  }
  int row0 = 0;
  for (int j = 0; j <= v; ++j) row0 += t.z(0, j);
  return row0 == n - q.weight();
}

inline bool parity_holds(const descalg::FilledTemplate& t, descalg::ClassTag p, descalg::ClassTag q) {
  using descalg::ClassTag;
  int border = t.z(0, 0);
  for (int i = 1; i <= t.rows(); ++i) border += t.z(i, 0);
  for (int j = 1; j <= t.cols(); ++j) border += t.z(0, j);
  if (border != 0) return true;
  int ys = 0;
  for (int i = 1; i <= t.rows(); ++i)
    for (int j = 1; j <= t.cols(); ++j) ys += t.y(i, j);
  const bool weight_n_plain = [](ClassTag c) { return c == ClassTag::C1 || c == ClassTag::Cn; }(p);
  const bool odd = (weight_n_plain && q == ClassTag::CnPrime) ||
                   (p == ClassTag::CnPrime && (q == ClassTag::C1 || q == ClassTag::Cn));
  return (ys % 2 == 1) == odd;
}

/// Every grid of non-negative entries summing to `total`, filtered by `keep`.
inline std::vector<descalg::FilledTemplate> search(
    int u, int v, int total, const std::function<bool(const descalg::FilledTemplate&)>& keep) {
  const auto cs = cells(u, v);
  std::vector<descalg::FilledTemplate> out;
  descalg::FilledTemplate t(u, v);
  std::function<void(std::size_t, int)> go = [&](std::size_t k, int left) {
    if (k + 1 == cs.size()) {
      const Cell& c = cs[k];
      c.is_y ? t.set_y(c.i, c.j, left) : t.set_z(c.i, c.j, left);
      if (keep(t)) out.push_back(t);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      const Cell& c = cs[k];
      c.is_y ? t.set_y(c.i, c.j, x) : t.set_z(c.i, c.j, x);
      go(k + 1, left - x);
    }
  };
  go(0, total);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<descalg::FilledTemplate> templates_d(const descalg::BasisIndex& p,
                                                        const descalg::BasisIndex& q) {
  const int n = p.rank();
  return search(static_cast<int>(q.composition().size()), static_cast<int>(p.composition().size()), n,
                [&](const descalg::FilledTemplate& t) {
                  return margins_hold(t, p.composition(), q.composition(), n) &&
                         parity_holds(t, p.class_tag(), q.class_tag());
                });
}

inline std::vector<descalg::FilledTemplate> templates_b(const descalg::Composition& p,
                                                        const descalg::Composition& q, int rank) {
  return search(static_cast<int>(q.size()), static_cast<int>(p.size()), rank,
                [&](const descalg::FilledTemplate& t) { return margins_hold(t, p, q, rank); });
}

}  // namespace naive
