#include "facenum/matrix.hpp"

#include <algorithm>
#include <string>

#include "facenum/errors.hpp"

namespace facenum {

namespace {

void normalize(MatrixOverField::Column& col, const FieldSpec& field) {
  std::sort(col.begin(), col.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  MatrixOverField::Column merged;
  merged.reserve(col.size());
  for (const auto& [row, value] : col) {
    if (!merged.empty() && merged.back().first == row) {
      merged.back().second = field.add(merged.back().second, value);
    } else {
      merged.emplace_back(row, value);
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  col = std::move(merged);
}

// Dense row-major working copy used by elimination.
struct Dense {
  std::size_t rows;
  std::size_t cols;
  std::vector<Elem> data;

  Elem* row(std::size_t r) { return data.data() + r * cols; }
};

Dense to_dense(const MatrixOverField& m) {
  Dense d{m.rows(), m.cols(), std::vector<Elem>(m.rows() * m.cols(), 0)};
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) d.data[r * d.cols + c] = v;
  }
  return d;
}

// Reduces `d` to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Dense& d, const FieldSpec& field, bool full) {
  std::vector<std::size_t> pivots;
  const bool prime = field.degree() == 1;
  const std::uint64_t p = field.characteristic();
  const bool small_prime = prime && p < (std::uint64_t{1} << 31);

  std::size_t r = 0;
  for (std::size_t c = 0; c < d.cols && r < d.rows; ++c) {
    std::size_t piv = r;
    while (piv < d.rows && d.row(piv)[c] == 0) ++piv;
    if (piv == d.rows) continue;
    if (piv != r) std::swap_ranges(d.row(piv), d.row(piv) + d.cols, d.row(r));
    Elem* pr = d.row(r);
    const Elem inv = field.inv(pr[c]);
    for (std::size_t j = c; j < d.cols; ++j) pr[j] = field.mul(pr[j], inv);

    const std::size_t start = full ? 0 : r + 1;
    for (std::size_t i = start; i < d.rows; ++i) {
      if (i == r) continue;
      Elem* ri = d.row(i);
      const Elem factor = ri[c];
      if (factor == 0) continue;
      if (small_prime) {
        const std::uint64_t f = p - factor;
        for (std::size_t j = c; j < d.cols; ++j) {
          if (pr[j]) ri[j] = (ri[j] + f * pr[j]) % p;
        }
      } else {
        const Elem f = field.neg(factor);
        for (std::size_t j = c; j < d.cols; ++j) {
          if (pr[j]) ri[j] = field.add(ri[j], field.mul(f, pr[j]));
        }
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void require_same(const MatrixOverField& a, const MatrixOverField& b, bool same_rows) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::FieldMismatch, "GF(" + a.field().to_string() + ") vs GF(" +
                                              b.field().to_string() + ")");
  }
  if (same_rows && a.rows() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, std::to_string(a.rows()) + " vs " +
                                              std::to_string(b.rows()) + " rows");
  }
}

}  // namespace

MatrixOverField::MatrixOverField(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), columns_(cols) {}

MatrixOverField MatrixOverField::identity(const FieldSpec& field, std::size_t n) {
  MatrixOverField m(field, n, n);
  for (std::size_t k = 0; k < n; ++k) m.columns_[k].emplace_back(k, FieldSpec::one());
  return m;
}

MatrixOverField MatrixOverField::from_entries(const FieldSpec& field, std::size_t rows,
                                              std::size_t cols,
                                              const std::vector<MatrixEntry>& entries) {
  MatrixOverField m(field, rows, cols);
  for (const auto& e : entries) {
    m.check(e.row, e.col);
    if (e.value >= field.size()) throw Error(ErrorCode::BadParams, "entry not reduced");
    m.columns_[e.col].emplace_back(e.row, e.value);
  }
  for (auto& col : m.columns_) normalize(col, field);
  return m;
}

void MatrixOverField::check(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= columns_.size()) {
    throw Error(ErrorCode::BadIndex, "entry (" + std::to_string(row) + ", " +
                                         std::to_string(col) + ") out of range");
  }
}

Elem MatrixOverField::get(std::size_t row, std::size_t col) const {
  check(row, col);
  const Column& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  return (it != c.end() && it->first == row) ? it->second : 0;
}

void MatrixOverField::set(std::size_t row, std::size_t col, Elem value) {
  check(row, col);
  Column& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    if (value == 0) {
      c.erase(it);
    } else {
      it->second = value;
    }
  } else if (value != 0) {
    c.insert(it, {row, value});
  }
}

void MatrixOverField::add_to(std::size_t row, std::size_t col, Elem value) {
  set(row, col, field_.add(get(row, col), value));
}

std::size_t MatrixOverField::append_column(Column column) {
  for (const auto& [row, value] : column) {
    if (row >= rows_) throw Error(ErrorCode::BadIndex, "row " + std::to_string(row));
    (void)value;
  }
  normalize(column, field_);
  columns_.push_back(std::move(column));
  return columns_.size() - 1;
}

std::vector<MatrixEntry> MatrixOverField::entries() const {
  std::vector<MatrixEntry> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, v] : columns_[c]) out.push_back({r, c, v});
  }
  return out;
}

std::size_t MatrixOverField::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

MatrixOverField MatrixOverField::transpose() const {
  MatrixOverField t(field_, columns_.size(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
  }
  return t;
}

MatrixOverField MatrixOverField::hconcat(const MatrixOverField& other) const {
  require_same(*this, other, true);
  MatrixOverField out = *this;
  out.columns_.insert(out.columns_.end(), other.columns_.begin(), other.columns_.end());
  return out;
}

MatrixOverField MatrixOverField::multiply(const MatrixOverField& other) const {
  require_same(*this, other, false);
  if (cols() != other.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ");
  }
  MatrixOverField out(field_, rows_, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c) {
    Column acc;
    for (const auto& [k, v] : other.columns_[c]) {
      for (const auto& [r, w] : columns_[k]) acc.emplace_back(r, field_.mul(v, w));
    }
    normalize(acc, field_);
    out.columns_[c] = std::move(acc);
  }
  return out;
}

MatrixOverField MatrixOverField::select_columns(const std::vector<std::size_t>& cols) const {
  MatrixOverField out(field_, rows_, 0);
  for (std::size_t c : cols) out.columns_.push_back(columns_.at(c));
  return out;
}

std::size_t rank(const MatrixOverField& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.nonzeros() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.cols() > m.rows()) {
    Dense d = to_dense(m.transpose());
    return row_reduce(d, m.field(), false).size();
  }
  Dense d = to_dense(m);
  return row_reduce(d, m.field(), false).size();
}

std::size_t kernel_dim(const MatrixOverField& m) { return m.cols() - rank(m); }

MatrixOverField kernel_basis(const MatrixOverField& m) {
  const FieldSpec& field = m.field();
  Dense d = to_dense(m);
  const auto pivots = row_reduce(d, field, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  MatrixOverField basis(field, m.cols(), 0);
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    MatrixOverField::Column col;
    col.emplace_back(free, FieldSpec::one());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Elem v = d.row(r)[free];
      if (v != 0) col.emplace_back(pivots[r], field.neg(v));
    }
    basis.append_column(std::move(col));
  }
  return basis;
}

std::size_t sum_dim(const MatrixOverField& u, const MatrixOverField& v) {
  return rank(u.hconcat(v));
}

std::size_t image_dim_mod(const MatrixOverField& a, const MatrixOverField& b) {
  return rank(a.hconcat(b)) - rank(b);
}

}  // namespace facenum
