#include "descalg/filled_template.hpp"

#include <algorithm>
#include <functional>

#include "descalg/error.hpp"

namespace descalg {

FilledTemplate::FilledTemplate(int rows, int cols)
    : u_(rows), v_(cols),
      z_(static_cast<std::size_t>((rows + 1) * (cols + 1)), 0),
      y_(static_cast<std::size_t>(rows * cols), 0) {
  if (rows < 0 || cols < 0) throw InvalidIndexError("template dimensions must be non-negative");
}

std::size_t FilledTemplate::index_z(int i, int j) const {
  if (i < 0 || i > u_ || j < 0 || j > v_) throw std::out_of_range("z index out of range");
  return static_cast<std::size_t>(i * (v_ + 1) + j);
}

std::size_t FilledTemplate::index_y(int i, int j) const {
  if (i < 1 || i > u_ || j < 1 || j > v_) throw std::out_of_range("y index out of range");
  return static_cast<std::size_t>((i - 1) * v_ + (j - 1));
}

void FilledTemplate::set_z(int i, int j, int value) {
  if (value < 0) throw InvalidIndexError("template entries must be non-negative");
  z_[index_z(i, j)] = value;
}

void FilledTemplate::set_y(int i, int j, int value) {
  if (value < 0) throw InvalidIndexError("template entries must be non-negative");
  y_[index_y(i, j)] = value;
}

std::vector<int> FilledTemplate::flattened() const {
  std::vector<int> out;
  out.reserve(z_.size() + y_.size());
  for (int j = 0; j <= v_; ++j) out.push_back(z(0, j));
  for (int i = 1; i <= u_; ++i) {
    for (int j = 1; j <= v_; ++j) out.push_back(y(i, j));
    for (int j = 0; j <= v_; ++j) out.push_back(z(i, j));
  }
  return out;
}

std::strong_ordering operator<=>(const FilledTemplate& a, const FilledTemplate& b) {
  if (auto c = a.u_ <=> b.u_; c != 0) return c;
  if (auto c = a.v_ <=> b.v_; c != 0) return c;
  auto fa = a.flattened();
  auto fb = b.flattened();
  return std::lexicographical_compare_three_way(fa.begin(), fa.end(), fb.begin(), fb.end());
}

int border_sum(const FilledTemplate& t) {
  int s = t.z(0, 0);
  for (int i = 1; i <= t.rows(); ++i) s += t.z(i, 0);
  for (int j = 1; j <= t.cols(); ++j) s += t.z(0, j);
  return s;
}

int y_sum(const FilledTemplate& t) {
  int s = 0;
  for (int i = 1; i <= t.rows(); ++i)
    for (int j = 1; j <= t.cols(); ++j) s += t.y(i, j);
  return s;
}

namespace {

std::vector<int> read_body(const FilledTemplate& t) {
  std::vector<int> word;
  auto keep = [&](int x) {
    if (x != 0) word.push_back(x);
  };
  for (int j = 1; j <= t.cols(); ++j) keep(t.z(0, j));
  for (int i = 1; i <= t.rows(); ++i) {
    for (int j = t.cols(); j >= 1; --j) keep(t.y(i, j));
    for (int j = 0; j <= t.cols(); ++j) keep(t.z(i, j));
  }
  return word;
}

}  // namespace

Composition reading_word(const FilledTemplate& t) {
  std::vector<int> word = read_body(t);
  if (t.z(0, 0) == 1) word.insert(word.begin(), 1);
  return Composition(std::move(word));
}

Composition reading_word_b(const FilledTemplate& t) { return Composition(read_body(t)); }

bool requires_odd_y_sum(ClassTag p, ClassTag q) {
  const bool p_plain = p == ClassTag::C1 || p == ClassTag::Cn;
  const bool q_plain = q == ClassTag::C1 || q == ClassTag::Cn;
  return (p_plain && q == ClassTag::CnPrime) || (p == ClassTag::CnPrime && q_plain);
}

namespace {

// Every template whose (u+1) x (v+1) margin table, with interior cells
// holding y_ij + z_ij, has the given row and column sums.
std::vector<FilledTemplate> enumerate_margins(const std::vector<int>& row_sums,
                                              const std::vector<int>& col_sums) {
  const int u = static_cast<int>(row_sums.size()) - 1;
  const int v = static_cast<int>(col_sums.size()) - 1;
  std::vector<FilledTemplate> out;
  for (int r : row_sums)
    if (r < 0) return out;
  for (int c : col_sums)
    if (c < 0) return out;

  std::vector<int> row_left = row_sums;
  std::vector<int> col_left = col_sums;
  std::vector<int> cell(static_cast<std::size_t>((u + 1) * (v + 1)), 0);
  const int ncells = (u + 1) * (v + 1);

  auto split_interior = [&]() {
    // Expand each interior cell w into (y, z) with y + z = w.
    std::vector<std::pair<int, int>> interior;
    for (int i = 1; i <= u; ++i)
      for (int j = 1; j <= v; ++j) interior.emplace_back(i, j);
    FilledTemplate t(u, v);
    for (int j = 0; j <= v; ++j) t.set_z(0, j, cell[static_cast<std::size_t>(j)]);
    for (int i = 1; i <= u; ++i) t.set_z(i, 0, cell[static_cast<std::size_t>(i * (v + 1))]);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == interior.size()) {
        out.push_back(t);
        return;
      }
      auto [i, j] = interior[k];
      const int w = cell[static_cast<std::size_t>(i * (v + 1) + j)];
      for (int yv = 0; yv <= w; ++yv) {
        t.set_y(i, j, yv);
        t.set_z(i, j, w - yv);
        rec(k + 1);
      }
    };
    rec(0);
  };

  std::function<void(int)> fill = [&](int k) {
    if (k == ncells) {
      split_interior();
      return;
    }
    const int i = k / (v + 1);
    const int j = k % (v + 1);
    const auto ri = static_cast<std::size_t>(i);
    const auto cj = static_cast<std::size_t>(j);
    auto place = [&](int x) {
      if (x < 0 || x > row_left[ri] || x > col_left[cj]) return;
      cell[static_cast<std::size_t>(k)] = x;
      row_left[ri] -= x;
      col_left[cj] -= x;
      fill(k + 1);
      row_left[ri] += x;
      col_left[cj] += x;
    };
    // The last cell of each row and of each column is forced by its margin.
    if (j == v && i == u) {
      if (row_left[ri] == col_left[cj]) place(row_left[ri]);
    } else if (j == v) {
      place(row_left[ri]);
    } else if (i == u) {
      place(col_left[cj]);
    } else {
      for (int x = std::min(row_left[ri], col_left[cj]); x >= 0; --x) place(x);
    }
  };
  fill(0);
  return out;
}

std::vector<int> margins(int border, const Composition& parts) {
  std::vector<int> m{border};
  for (int x : parts.parts()) m.push_back(x);
  return m;
}

}  // namespace

std::vector<FilledTemplate> enumerate_z_d(const BasisIndex& p, const BasisIndex& q) {
  if (p.rank() != q.rank()) throw RankMismatchError("template operands have different ranks");
  const int n = p.rank();
  auto all = enumerate_margins(margins(n - q.weight(), q.composition()),
                               margins(n - p.weight(), p.composition()));
  const bool odd = requires_odd_y_sum(p.class_tag(), q.class_tag());
  std::vector<FilledTemplate> out;
  for (auto& t : all) {
    if (border_sum(t) == 0 && (y_sum(t) % 2 == 1) != odd) continue;
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FilledTemplate> enumerate_z_b(const Composition& p, const Composition& q, int rank) {
  if (rank < 0 || p.weight() > rank || q.weight() > rank)
    throw InvalidIndexError("type B template operands exceed the rank");
  auto out = enumerate_margins(margins(rank - q.weight(), q), margins(rank - p.weight(), p));
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_template(const FilledTemplate& t) {
  int width = 1;
  for (int x : t.flattened()) width = std::max(width, static_cast<int>(std::to_string(x).size()));
  auto cell = [&](int x) {
    std::string s = std::to_string(x);
    return std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s;
  };
  auto z_row = [&](int i) {
    std::string line;
    for (int j = 0; j <= t.cols(); ++j) {
      if (j) line += ' ';
      line += cell(t.z(i, j));
    }
    return line + '\n';
  };
  std::string out = z_row(0);
  for (int i = 1; i <= t.rows(); ++i) {
    std::string line(static_cast<std::size_t>(width), ' ');
    for (int j = 1; j <= t.cols(); ++j) line += ' ' + cell(t.y(i, j));
    out += line + '\n';
    out += z_row(i);
  }
  return out;
}

}  // namespace descalg
