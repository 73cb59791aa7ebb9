#include "cofreyd/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cofreyd {

namespace {

void require_dims(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

}  // namespace

// --- Matrix -----------------------------------------------------------------

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require_dims(rows[i].size() == c, "Matrix::from_ints: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.data_[i * c + j] = field.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_dims(rows[i].size() == cols, "Matrix::from_rows: row length");
    for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = field.reduce(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(Field field, const Vector& v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = field.reduce(v[i]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = field_.reduce(v); }

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = data_[i * cols_ + c];
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require_same_field(field_, other.field_, "Matrix::operator*");
  require_dims(cols_ == other.rows_, "Matrix::operator*: inner dimensions differ");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = data_[i * cols_ + k];
      if (Field::is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other.data_[k * other.cols_ + j];
        if (Field::is_zero(b)) continue;
        field_.add_mul(out.data_[i * other.cols_ + j], a, b);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require_same_field(field_, other.field_, "Matrix::operator+");
  require_dims(rows_ == other.rows_ && cols_ == other.cols_, "Matrix::operator+: shape");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require_same_field(field_, other.field_, "Matrix::operator-");
  require_dims(rows_ == other.rows_ && cols_ == other.cols_, "Matrix::operator-: shape");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  const Scalar c = field_.reduce(s);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], c);
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  require_dims(v.size() == cols_, "Matrix::apply: vector length");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = data_[i * cols_ + j];
      if (!Field::is_zero(a) && !Field::is_zero(v[j])) field_.add_mul(out[i], a, v[j]);
    }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require_dims(r0 + nr <= rows_ && c0 + nc <= cols_, "Matrix::block: out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(field_, b.field_, "Matrix::set_block");
  require_dims(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "Matrix::set_block: out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = b.data_[i * b.cols_ + j];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return Field::is_zero(x); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (data_[i * cols_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Scalar& x) { return !Field::is_zero(x); }));
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_dims(a.rows() == b.rows(), "hstack: row counts differ");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_dims(a.cols() == b.cols(), "vstack: column counts differ");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

// --- Dense Gauss-Jordan -----------------------------------------------------

namespace {

/// In-place reduced row echelon form over the first `ncols` columns; returns pivots.
std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t ncols) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && Field::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.mut(p, j), m.mut(r, j));
    const Scalar inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!Field::is_zero(m(r, j))) m.mut(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || Field::is_zero(m(i, c))) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!Field::is_zero(m(r, j))) f.sub_mul(m.mut(i, j), factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix kernel_from_rref(const Matrix& rref, const std::vector<std::size_t>& pivots, std::size_t ncols) {
  const Field& f = rref.field();
  std::vector<char> is_pivot(ncols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(f, free.size(), ncols);
  for (std::size_t a = 0; a < free.size(); ++a) {
    k.mut(a, free[a]) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Scalar& v = rref(i, free[a]);
      if (!Field::is_zero(v)) k.mut(a, pivots[i]) = f.neg(v);
    }
  }
  return k;
}

}  // namespace

SolveResult rref_solve(const Matrix& a, const std::optional<Vector>& b) {
  const Field& f = a.field();
  const std::size_t n = a.cols();
  Matrix aug(f, a.rows(), n + (b ? 1 : 0));
  aug.set_block(0, 0, a);
  if (b) {
    require_dims(b->size() == a.rows(), "rref_solve: right-hand side length");
    for (std::size_t i = 0; i < a.rows(); ++i) aug.set(i, n, (*b)[i]);
  }
  auto pivots = gauss_jordan(aug, n);
  const std::size_t rank = pivots.size();

  SolveResult out{aug.block(0, 0, rank, n), pivots, std::nullopt};
  if (b) {
    for (std::size_t i = rank; i < aug.rows(); ++i)
      if (!Field::is_zero(aug(i, n))) return out;
  }
  AffineSolution sol{Vector(n), kernel_from_rref(out.rref, pivots, n)};
  if (b)
    for (std::size_t i = 0; i < rank; ++i) sol.particular[pivots[i]] = aug(i, n);
  out.solution = std::move(sol);
  return out;
}

Matrix rref_rows(const Matrix& a, std::vector<std::size_t>* pivots) {
  Matrix m = a;
  auto p = gauss_jordan(m, m.cols());
  Matrix out = m.block(0, 0, p.size(), m.cols());
  if (pivots) *pivots = std::move(p);
  return out;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return gauss_jordan(m, m.cols()).size();
}

Matrix nullspace(const Matrix& a) {
  std::vector<std::size_t> p;
  Matrix r = rref_rows(a, &p);
  return kernel_from_rref(r, p, a.cols());
}

std::optional<Matrix> inverse(const Matrix& a) {
  require_dims(a.rows() == a.cols(), "inverse: matrix not square");
  const std::size_t n = a.rows();
  Matrix aug = hstack(a, Matrix::identity(a.field(), n));
  auto p = gauss_jordan(aug, n);
  if (p.size() != n) return std::nullopt;
  return aug.block(0, n, n, n);
}

Scalar determinant(const Matrix& a) {
  require_dims(a.rows() == a.cols(), "determinant: matrix not square");
  const Field& f = a.field();
  Matrix m = a;
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && Field::is_zero(m(p, c))) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.mut(p, j), m.mut(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Scalar inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (Field::is_zero(m(i, c))) continue;
      const Scalar factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) f.sub_mul(m.mut(i, j), factor, m(c, j));
    }
  }
  return det;
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  require_dims(a.rows() == b.rows(), "solve_right: row counts differ");
  const std::size_t n = a.cols();
  Matrix aug = hstack(a, b);
  auto p = gauss_jordan(aug, n);
  for (std::size_t i = p.size(); i < aug.rows(); ++i)
    for (std::size_t j = n; j < aug.cols(); ++j)
      if (!Field::is_zero(aug(i, j))) return std::nullopt;
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.mut(p[i], j) = aug(i, n + j);
  return x;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  auto xt = solve_right(a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

// --- Eliminator -------------------------------------------------------------

namespace {

/// r <- r - a * p (both sorted).
void sparse_axpy(const Field& f, SparseRow& r, const Scalar& a, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(std::move(r[i++]));
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, f.neg(f.mul(a, p[j].second)));
      ++j;
    } else {
      Scalar v = std::move(r[i].second);
      f.sub_mul(v, a, p[j].second);
      if (!Field::is_zero(v)) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

const Scalar* sparse_find(const SparseRow& r, std::uint32_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it == r.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace

SparseRow to_sparse(const Vector& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!Field::is_zero(v[i])) r.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return r;
}

Eliminator::Eliminator(Field field, std::size_t ncols, Storage storage)
    : field_(std::move(field)),
      ncols_(ncols),
      sparse_(storage == Storage::Sparse || (storage == Storage::Auto && ncols > kDenseThreshold)),
      pivot_row_of_col_(ncols, -1) {}

bool Eliminator::add_row(const Vector& dense) {
  require_dims(dense.size() == ncols_, "Eliminator::add_row: row length");
  return add_row(to_sparse(dense));
}

bool Eliminator::add_row(SparseRow row) {
  if (!sparse_) {
    // Dense path: same leading-term reduction on a dense buffer.
    Vector v(ncols_);
    for (auto& [c, x] : row) {
      require_dims(c < ncols_, "Eliminator::add_row: column out of range");
      v[c] = std::move(x);
    }
    std::size_t c = 0;
    while (true) {
      while (c < ncols_ && Field::is_zero(v[c])) ++c;
      if (c == ncols_) return false;
      const auto pr = pivot_row_of_col_[c];
      if (pr < 0) break;
      const Scalar factor = v[c];
      for (auto& [pc, px] : rows_[static_cast<std::size_t>(pr)]) field_.sub_mul(v[pc], factor, px);
    }
    const Scalar inv = field_.inv(v[c]);
    SparseRow stored;
    for (std::size_t j = c; j < ncols_; ++j)
      if (!Field::is_zero(v[j])) stored.emplace_back(static_cast<std::uint32_t>(j), field_.mul(v[j], inv));
    pivot_row_of_col_[c] = static_cast<std::int64_t>(rows_.size());
    pivot_cols_.push_back(c);
    rows_.push_back(std::move(stored));
    return true;
  }
  while (!row.empty()) {
    const std::uint32_t c = row.front().first;
    require_dims(c < ncols_, "Eliminator::add_row: column out of range");
    const auto pr = pivot_row_of_col_[c];
    if (pr < 0) {
      const Scalar inv = field_.inv(row.front().second);
      for (auto& e : row) e.second = field_.mul(e.second, inv);
      pivot_row_of_col_[c] = static_cast<std::int64_t>(rows_.size());
      pivot_cols_.push_back(c);
      rows_.push_back(std::move(row));
      return true;
    }
    const Scalar factor = row.front().second;
    sparse_axpy(field_, row, factor, rows_[static_cast<std::size_t>(pr)]);
  }
  return false;
}

void Eliminator::reduce_fully(std::vector<SparseRow>& rows, std::vector<std::size_t>& order) const {
  rows = rows_;
  order.resize(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows[a].front().first < rows[b].front().first; });
  // Back substitution from the last pivot upwards: every row used is already reduced.
  for (std::size_t oi = order.size(); oi-- > 0;) {
    const SparseRow& prow = rows[order[oi]];
    const std::uint32_t pc = prow.front().first;
    for (std::size_t oj = 0; oj < oi; ++oj) {
      SparseRow& r = rows[order[oj]];
      const Scalar* v = sparse_find(r, pc);
      if (v == nullptr) continue;
      const Scalar factor = *v;
      sparse_axpy(field_, r, factor, prow);
    }
  }
}

Matrix Eliminator::rref() const {
  std::vector<SparseRow> rows;
  std::vector<std::size_t> order;
  reduce_fully(rows, order);
  Matrix out(field_, rows.size(), ncols_);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto& [c, v] : rows[order[i]]) out.mut(i, c) = v;
  return out;
}

std::vector<std::size_t> Eliminator::pivots() const {
  auto p = pivot_cols_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<std::size_t> Eliminator::free_columns() const {
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (pivot_row_of_col_[c] < 0) free.push_back(c);
  return free;
}

Matrix Eliminator::kernel_basis() const {
  std::vector<SparseRow> rows;
  std::vector<std::size_t> order;
  reduce_fully(rows, order);
  const auto free = free_columns();
  std::vector<std::int64_t> free_index(ncols_, -1);
  for (std::size_t a = 0; a < free.size(); ++a) free_index[free[a]] = static_cast<std::int64_t>(a);
  Matrix k(field_, free.size(), ncols_);
  for (std::size_t a = 0; a < free.size(); ++a) k.mut(a, free[a]) = 1;
  for (const auto& r : rows) {
    const std::uint32_t pc = r.front().first;
    for (std::size_t e = 1; e < r.size(); ++e) {
      const auto fi = free_index[r[e].first];
      if (fi >= 0) k.mut(static_cast<std::size_t>(fi), pc) = field_.neg(r[e].second);
    }
  }
  return k;
}

// --- Subspace ---------------------------------------------------------------

Subspace::Subspace(Field field, std::size_t ambient_dim) : basis_(std::move(field), 0, ambient_dim) {}

Subspace::Subspace(Matrix rref_basis, std::vector<std::size_t> pivots)
    : basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const Matrix& generators) {
  std::vector<std::size_t> p;
  Matrix r = rref_rows(generators, &p);
  return Subspace(std::move(r), std::move(p));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return span(Matrix::from_rows(std::move(field), ambient_dim, generators));
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<std::size_t> p(ambient_dim);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return Subspace(Matrix::identity(std::move(field), ambient_dim), std::move(p));
}

std::vector<std::size_t> Subspace::complement_columns() const {
  std::vector<char> is_pivot(ambient_dim(), 0);
  for (auto p : pivots_) is_pivot[p] = 1;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_dim(); ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
  require_dims(v.size() == ambient_dim(), "Subspace::quotient_coordinates: length");
  const Field& f = field();
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (Field::is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      if (!Field::is_zero(basis_(i, j))) f.sub_mul(r[j], c, basis_(i, j));
  }
  const auto comp = complement_columns();
  Vector out(comp.size());
  for (std::size_t a = 0; a < comp.size(); ++a) out[a] = r[comp[a]];
  return out;
}

bool Subspace::contains(const Vector& v) const {
  const auto q = quotient_coordinates(v);
  return std::all_of(q.begin(), q.end(), [](const Scalar& x) { return Field::is_zero(x); });
}

bool Subspace::contains(const Subspace& other) const {
  require_dims(other.ambient_dim() == ambient_dim(), "Subspace::contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  require_dims(v.size() == ambient_dim(), "Subspace::coordinates: length");
  Vector out(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

Matrix Subspace::quotient_map() const {
  const auto comp = complement_columns();
  Matrix q(field(), comp.size(), ambient_dim());
  const Field& f = field();
  for (std::size_t a = 0; a < comp.size(); ++a) q.mut(a, comp[a]) = 1;
  // e_p maps to -(row p restricted to complement columns).
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    for (std::size_t a = 0; a < comp.size(); ++a) {
      const Scalar& v = basis_(i, comp[a]);
      if (!Field::is_zero(v)) q.mut(a, pivots_[i]) = f.neg(v);
    }
  return q;
}

Matrix Subspace::quotient_section() const {
  const auto comp = complement_columns();
  Matrix s(field(), ambient_dim(), comp.size());
  for (std::size_t a = 0; a < comp.size(); ++a) s.mut(comp[a], a) = 1;
  return s;
}

Matrix Subspace::inclusion() const { return basis_.transpose(); }

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_dims(u.ambient_dim() == v.ambient_dim(), "subspace_sum: ambient mismatch");
  require_same_field(u.field(), v.field(), "subspace_sum");
  return Subspace::span(vstack(u.basis(), v.basis()));
}

Subspace annihilator(const Subspace& u) {
  if (u.dim() == 0) return Subspace::full(u.field(), u.ambient_dim());
  return Subspace::span(nullspace(u.basis()));
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  require_dims(u.ambient_dim() == v.ambient_dim(), "subspace_intersection: ambient mismatch");
  require_same_field(u.field(), v.field(), "subspace_intersection");
  return annihilator(subspace_sum(annihilator(u), annihilator(v)));
}

Subspace kernel(const Matrix& a) { return Subspace::span(nullspace(a)); }

Subspace image(const Matrix& a) { return Subspace::span(a.transpose()); }

Subspace preimage(const Matrix& a, const Subspace& v) {
  require_dims(a.rows() == v.ambient_dim(), "preimage: codomain mismatch");
  return kernel(v.quotient_map() * a);
}

SubspaceOps subspace_ops(const Subspace& u, const Subspace& v) {
  require_dims(u.ambient_dim() == v.ambient_dim(), "subspace_ops: ambient mismatch");
  require_same_field(u.field(), v.field(), "subspace_ops");
  Subspace s = subspace_sum(u, v);
  Subspace i = subspace_intersection(u, v);
  const std::size_t qd = u.dim() - i.dim();
  const bool contains = s.dim() == u.dim();
  return SubspaceOps{std::move(s), std::move(i), qd, contains};
}

}  // namespace cofreyd

namespace cofreyd {

std::optional<Vector> sparse_solve(const Field& field, std::size_t ncols, const std::vector<SparseEquation>& eqs) {
  Eliminator elim(field, ncols + 1);
  for (const auto& e : eqs) {
    SparseRow row = e.row;
    for (auto& [c, v] : row) require_dims(c < ncols, "sparse_solve: column out of range");
    const Scalar rhs = field.reduce(e.rhs);
    if (!Field::is_zero(rhs)) row.emplace_back(static_cast<std::uint32_t>(ncols), rhs);
    elim.add_row(std::move(row));
  }
  const auto piv = elim.pivots();
  if (!piv.empty() && piv.back() == ncols) return std::nullopt;
  const Matrix r = elim.rref();
  Vector x(ncols);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, ncols);
  return x;
}

}  // namespace cofreyd
