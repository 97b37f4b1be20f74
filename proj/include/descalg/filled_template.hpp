#pragma once

// Filled templates: a (u+1) x (v+1) grid of z entries interleaved with a
// u x v grid of y entries. Rows are indexed by the components of the right
// factor q, columns by the components of the left factor p; row 0 and
// column 0 form the border. The y grid has no column 0.

#include <compare>
#include <string>
#include <vector>

#include "descalg/composition.hpp"

namespace descalg {

class FilledTemplate {
 public:
  FilledTemplate(int rows, int cols);

  int rows() const { return u_; }
  int cols() const { return v_; }

  /// 0 <= i <= rows, 0 <= j <= cols.
  int z(int i, int j) const { return z_[index_z(i, j)]; }
  /// 1 <= i <= rows, 1 <= j <= cols.
  int y(int i, int j) const { return y_[index_y(i, j)]; }
  void set_z(int i, int j, int value);
  void set_y(int i, int j, int value);

  /// Entries in display order: row 0 of z, then for each i the y row i
  /// followed by the z row i. This order defines the template ordering.
  std::vector<int> flattened() const;

  friend bool operator==(const FilledTemplate&, const FilledTemplate&) = default;
  friend std::strong_ordering operator<=>(const FilledTemplate& a, const FilledTemplate& b);

 private:
  std::size_t index_z(int i, int j) const;
  std::size_t index_y(int i, int j) const;

  int u_;
  int v_;
  std::vector<int> z_;
  std::vector<int> y_;
};

int border_sum(const FilledTemplate& t);
int y_sum(const FilledTemplate& t);

/// Type D reading word: z row 0 (from column 1), then each y row reversed
/// followed by its z row; zeros dropped, and a leading 1 when z_00 = 1.
Composition reading_word(const FilledTemplate& t);
/// Type B reading word: as above but z_00 is never read.
Composition reading_word_b(const FilledTemplate& t);

/// Condition 5 parity: true when a border-sum-0 template needs an odd y-sum.
bool requires_odd_y_sum(ClassTag p, ClassTag q);

/// Z(p, q) for the type D rank shared by p and q, in ascending template order.
std::vector<FilledTemplate> enumerate_z_d(const BasisIndex& p, const BasisIndex& q);
/// Type B templates for p, q of weight <= rank: margins only, no parity.
std::vector<FilledTemplate> enumerate_z_b(const Composition& p, const Composition& q, int rank);

/// Matrix layout: z rows full width, y rows indented past column 0.
std::string render_template(const FilledTemplate& t);

}  // namespace descalg
