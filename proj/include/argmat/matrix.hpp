#ifndef ARGMAT_MATRIX_HPP
#define ARGMAT_MATRIX_HPP

#include <string>
#include <vector>

#include "argmat/af.hpp"
#include "argmat/argset.hpp"

namespace argmat {

// The Boolean attack matrix of a framework with n arguments: an n x n matrix
// whose entry (i, j) is 1 exactly when argument i attacks argument j. Rows are
// attackers, columns are targets; the matrix is the complete picture of the
// attack relation and everything downstream is phrased over it.
class AttackMatrix {
public:
  static AttackMatrix build(const ArgumentationFramework& af);

  int size() const { return n_; }  // order n
  bool at(int row, int col) const;

  // n lines of space-separated 0/1 digits, one per row.
  std::string render() const;

private:
  explicit AttackMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n) {}

  int n_ = 0;
  std::vector<bool> bits_;  // row-major
};

// A rectangular sub-matrix of an attack matrix, remembering which original
// rows and columns it was carved from. Row and column index lists are strictly
// increasing; either may be empty, so 0 x h, k x 0 and 0 x 0 blocks are all
// legal and count as zero blocks. Local coordinates (for at / row_is_nonzero /
// col_is_nonzero) are positions within the block, not original indices.
class Block {
public:
  Block(std::vector<int> rows, std::vector<int> cols, std::vector<bool> entries);

  int row_count() const { return static_cast<int>(rows_.size()); }
  int col_count() const { return static_cast<int>(cols_.size()); }

  const std::vector<int>& row_indices() const { return rows_; }
  const std::vector<int>& col_indices() const { return cols_; }

  bool at(int row, int col) const;

  // Zero predicates. A block with no entries is zero; a column of a block
  // with no rows is zero.
  bool is_zero() const;
  bool row_is_nonzero(int row) const;
  bool col_is_nonzero(int col) const;

  std::string render() const;  // same shape as AttackMatrix::render

  friend bool operator==(const Block& a, const Block& b) = default;

private:
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<bool> bits_;  // row-major, rows_.size() * cols_.size()
};

// Extracts the block sitting on the given original rows and columns. Both
// index lists must be strictly increasing and within [0, n); otherwise
// DimensionMismatch.
Block extract_block(const AttackMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols);

// The four blocks a subset S carves out of M, writing S' for the complement
// of S in the argument universe:
//
//   cf-block  S  x S    conflicts inside S
//   s-block   S  x S'   attacks S launches outward
//   a-block   S' x S    attacks arriving at S from outside
//   c-block   S' x S'   the principal block on the complement
//
// Each requires S nonempty with S.universe_size() == m.size(); EmptySelection
// and DimensionMismatch respectively when not. When S is the full universe the
// complement is empty and the s-/a-/c-blocks are degenerate zero blocks.
Block cf_block(const AttackMatrix& m, const ArgSet& s);
Block s_block(const AttackMatrix& m, const ArgSet& s);
Block a_block(const AttackMatrix& m, const ArgSet& s);
Block c_block(const AttackMatrix& m, const ArgSet& s);

// The complementary block of `b` in `m`: the block on the complementary row
// and column index sets. Extracting it twice returns a block equal to the
// original's complement's complement, i.e. `b` itself.
Block complementary_block(const AttackMatrix& m, const Block& b);

}  // namespace argmat

#endif
