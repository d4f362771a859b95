#include "argmat/matrix.hpp"

#include <string>

#include "argmat/errors.hpp"

namespace argmat {

AttackMatrix AttackMatrix::build(const ArgumentationFramework& af) {
  AttackMatrix m(af.argument_count());
  for (auto [src, dst] : af.attacks())
    m.bits_[static_cast<std::size_t>(src) * m.n_ + dst] = true;
  return m;
}

bool AttackMatrix::at(int row, int col) const {
  if (row < 0 || row >= n_ || col < 0 || col >= n_)
    throw DimensionMismatch("matrix entry (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") outside order " +
                            std::to_string(n_));
  return bits_[static_cast<std::size_t>(row) * n_ + col];
}

namespace {

std::string render_grid(int rows, int cols, const std::vector<bool>& bits) {
  std::string out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c > 0) out += ' ';
      out += bits[static_cast<std::size_t>(r) * cols + c] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string AttackMatrix::render() const { return render_grid(n_, n_, bits_); }

Block::Block(std::vector<int> rows, std::vector<int> cols, std::vector<bool> entries)
    : rows_(std::move(rows)), cols_(std::move(cols)), bits_(std::move(entries)) {
  if (bits_.size() != rows_.size() * cols_.size())
    throw DimensionMismatch("block entry count does not match its shape");
}

bool Block::at(int row, int col) const {
  if (row < 0 || row >= row_count() || col < 0 || col >= col_count())
    throw DimensionMismatch("block entry (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") outside shape " +
                            std::to_string(row_count()) + " x " +
                            std::to_string(col_count()));
  return bits_[static_cast<std::size_t>(row) * cols_.size() + col];
}

bool Block::is_zero() const {
  for (bool b : bits_)
    if (b) return false;
  return true;
}

bool Block::row_is_nonzero(int row) const {
  if (row < 0 || row >= row_count())
    throw DimensionMismatch("block row " + std::to_string(row) + " outside shape");
  for (int c = 0; c < col_count(); ++c)
    if (bits_[static_cast<std::size_t>(row) * cols_.size() + c]) return true;
  return false;
}

bool Block::col_is_nonzero(int col) const {
  if (col < 0 || col >= col_count())
    throw DimensionMismatch("block column " + std::to_string(col) + " outside shape");
  for (int r = 0; r < row_count(); ++r)
    if (bits_[static_cast<std::size_t>(r) * cols_.size() + col]) return true;
  return false;
}

std::string Block::render() const { return render_grid(row_count(), col_count(), bits_); }

namespace {

void check_strictly_increasing(const std::vector<int>& indices, int n, const char* what) {
  int prev = -1;
  for (int i : indices) {
    if (i < 0 || i >= n)
      throw DimensionMismatch(std::string(what) + " index " + std::to_string(i) +
                              " outside order " + std::to_string(n));
    if (i <= prev)
      throw DimensionMismatch(std::string(what) +
                              " indices must be strictly increasing");
    prev = i;
  }
}

void check_selection(const AttackMatrix& m, const ArgSet& s) {
  if (s.universe_size() != m.size())
    throw DimensionMismatch("set universe " + std::to_string(s.universe_size()) +
                            " does not match matrix order " + std::to_string(m.size()));
  if (s.empty()) throw EmptySelection("block selection requires a nonempty set");
}

}  // namespace

Block extract_block(const AttackMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  check_strictly_increasing(rows, m.size(), "row");
  check_strictly_increasing(cols, m.size(), "column");
  std::vector<bool> bits;
  bits.reserve(rows.size() * cols.size());
  for (int r : rows)
    for (int c : cols) bits.push_back(m.at(r, c));
  return Block(rows, cols, std::move(bits));
}

Block cf_block(const AttackMatrix& m, const ArgSet& s) {
  check_selection(m, s);
  std::vector<int> in = s.indices();
  return extract_block(m, in, in);
}

Block s_block(const AttackMatrix& m, const ArgSet& s) {
  check_selection(m, s);
  return extract_block(m, s.indices(), s.complement().indices());
}

Block a_block(const AttackMatrix& m, const ArgSet& s) {
  check_selection(m, s);
  return extract_block(m, s.complement().indices(), s.indices());
}

Block c_block(const AttackMatrix& m, const ArgSet& s) {
  check_selection(m, s);
  std::vector<int> out = s.complement().indices();
  return extract_block(m, out, out);
}

Block complementary_block(const AttackMatrix& m, const Block& b) {
  ArgSet rows(m.size());
  ArgSet cols(m.size());
  for (int r : b.row_indices()) rows.insert(r);
  for (int c : b.col_indices()) cols.insert(c);
  return extract_block(m, rows.complement().indices(), cols.complement().indices());
}

}  // namespace argmat
