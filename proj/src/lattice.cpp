#include "tfmmp/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "tfmmp/errors.hpp"

namespace tfmmp {

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  if (dim() != other.dim()) throw TfError(ErrorCode::Internal, "dimension mismatch in +");
  std::vector<Int> out(coords_);
  for (size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
  return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const {
  return *this + (-other);
}

LatticeVector LatticeVector::operator*(const Int& scalar) const {
  std::vector<Int> out(coords_);
  for (auto& c : out) c *= scalar;
  return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator-() const {
  std::vector<Int> out(coords_);
  for (auto& c : out) c = -c;
  return LatticeVector(std::move(out));
}

bool LatticeVector::operator<(const LatticeVector& other) const {
  return std::lexicographical_compare(coords_.begin(), coords_.end(),
                                      other.coords_.begin(), other.coords_.end());
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ",";
    os << coords_[static_cast<size_t>(i)].get_str();
  }
  os << ")";
  return os.str();
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

std::string RationalVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ",";
    os << rat_to_string(coords_[static_cast<size_t>(i)]);
  }
  os << ")";
  return os.str();
}

Rat dot(const RationalVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw TfError(ErrorCode::Internal, "dimension mismatch in dot");
  Rat acc = 0;
  for (int i = 0; i < a.dim(); ++i) acc += a[i] * Rat(b[i]);
  return acc;
}

Rat dot(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim()) throw TfError(ErrorCode::Internal, "dimension mismatch in dot");
  Rat acc = 0;
  for (int i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw TfError(ErrorCode::Internal, "dimension mismatch in dot");
  Int acc = 0;
  for (int i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
  if (rows < 0 || cols < 0) throw TfError(ErrorCode::Internal, "negative matrix shape");
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector>& rows) {
  int n = rows.empty() ? 0 : rows.front().dim();
  IntegerMatrix m(static_cast<int>(rows.size()), n);
  for (int r = 0; r < m.rows(); ++r) {
    if (rows[static_cast<size_t>(r)].dim() != n)
      throw TfError(ErrorCode::Internal, "ragged rows");
    for (int c = 0; c < n; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<LatticeVector>& cols) {
  int n = cols.empty() ? 0 : cols.front().dim();
  IntegerMatrix m(n, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (cols[static_cast<size_t>(c)].dim() != n)
      throw TfError(ErrorCode::Internal, "ragged columns");
    for (int r = 0; r < n; ++r) m.at(r, c) = cols[static_cast<size_t>(c)][r];
  }
  return m;
}

LatticeVector IntegerMatrix::row(int r) const {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return LatticeVector(std::move(out));
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

LatticeVector IntegerMatrix::apply(const LatticeVector& v) const {
  if (v.dim() != cols_) throw TfError(ErrorCode::Internal, "dimension mismatch in apply");
  std::vector<Int> out(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    Int acc = 0;
    for (int c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
    out[static_cast<size_t>(r)] = acc;
  }
  return LatticeVector(std::move(out));
}

namespace {

// Fraction-free rank via rational elimination (desk scale).
int rational_rank(std::vector<std::vector<Rat>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m.front().size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
    const Rat p = m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
    for (int r = rank + 1; r < rows; ++r) {
      Rat factor = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
      if (factor == 0) continue;
      for (int c = col; c < cols; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            factor * m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int IntegerMatrix::rank() const {
  std::vector<std::vector<Rat>> m(static_cast<size_t>(rows_),
                                  std::vector<Rat>(static_cast<size_t>(cols_)));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = Rat(at(r, c));
  return rational_rank(std::move(m));
}

std::pair<LatticeVector, Int> primitive_part(const LatticeVector& v) {
  if (v.is_zero()) throw TfError(ErrorCode::ZeroVector, "primitive_part of zero vector");
  Int g = 0;
  for (int i = 0; i < v.dim(); ++i) {
    Int a = v[i];
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) out.push_back(v[i] / g);
  return {LatticeVector(std::move(out)), g};
}

bool is_primitive(const LatticeVector& v) {
  if (v.is_zero()) return false;
  return primitive_part(v).second == 1;
}

std::vector<LatticeVector> integer_kernel(const IntegerMatrix& a) {
  const int n = a.cols();
  const int m = a.rows();
  // Column reduction of W = A, mirroring the operations into U (starts as I).
  // Columns of U below zero columns of W form the saturated kernel basis.
  IntegerMatrix w = a;
  IntegerMatrix u(n, n);
  for (int i = 0; i < n; ++i) u.at(i, i) = 1;

  auto swap_cols = [&](IntegerMatrix& mat, int c1, int c2) {
    for (int r = 0; r < mat.rows(); ++r) std::swap(mat.at(r, c1), mat.at(r, c2));
  };
  auto add_col = [&](IntegerMatrix& mat, int dst, int src, const Int& factor) {
    for (int r = 0; r < mat.rows(); ++r) mat.at(r, dst) += factor * mat.at(r, src);
  };

  int lead = 0;  // next pivot column
  for (int row = 0; row < m && lead < n; ++row) {
    // Euclidean reduction across columns lead..n-1 on this row.
    while (true) {
      int nonzero = -1;
      for (int c = lead; c < n; ++c) {
        if (w.at(row, c) != 0) { nonzero = c; break; }
      }
      if (nonzero < 0) break;
      // Find the column with minimal |entry| in this row.
      int best = nonzero;
      for (int c = nonzero + 1; c < n; ++c) {
        if (w.at(row, c) == 0) continue;
        Int ab, bb;
        mpz_abs(ab.get_mpz_t(), w.at(row, c).get_mpz_t());
        mpz_abs(bb.get_mpz_t(), w.at(row, best).get_mpz_t());
        if (ab < bb) best = c;
      }
      if (best != lead) { swap_cols(w, lead, best); swap_cols(u, lead, best); }
      bool reduced = true;
      for (int c = lead + 1; c < n; ++c) {
        if (w.at(row, c) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), w.at(row, c).get_mpz_t(), w.at(row, lead).get_mpz_t());
        if (q != 0) { add_col(w, c, lead, -q); add_col(u, c, lead, -q); }
        if (w.at(row, c) != 0) reduced = false;
      }
      if (reduced) { ++lead; break; }
    }
  }

  std::vector<LatticeVector> kernel;
  for (int c = lead; c < n; ++c) {
    bool zero_col = true;
    for (int r = 0; r < m; ++r) {
      if (w.at(r, c) != 0) { zero_col = false; break; }
    }
    if (!zero_col) continue;
    std::vector<Int> vec;
    vec.reserve(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) vec.push_back(u.at(r, c));
    LatticeVector kv(std::move(vec));
    if (!kv.is_zero()) kernel.push_back(std::move(kv));
  }
  return kernel;
}

RationalVector cone_coordinates(const std::vector<LatticeVector>& rays, const LatticeVector& v) {
  std::vector<Rat> rv;
  rv.reserve(static_cast<size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) rv.emplace_back(v[i]);
  return cone_coordinates(rays, RationalVector(std::move(rv)));
}

RationalVector cone_coordinates(const std::vector<LatticeVector>& rays, const RationalVector& v) {
  const int k = static_cast<int>(rays.size());
  if (k == 0) throw TfError(ErrorCode::NotSimplicial, "empty ray list");
  const int n = rays.front().dim();
  if (v.dim() != n) throw TfError(ErrorCode::Internal, "dimension mismatch in cone_coordinates");

  // Augmented [R | v] with ray columns; Gauss over Q.
  std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(k) + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < k; ++c) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = Rat(rays[static_cast<size_t>(c)][r]);
    m[static_cast<size_t>(r)][static_cast<size_t>(k)] = v[r];
  }

  std::vector<int> pivot_row(static_cast<size_t>(k), -1);
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r) {
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { p = r; break; }
    }
    if (p < 0) throw TfError(ErrorCode::NotSimplicial, "dependent rays");
    std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(row)]);
    const Rat pivot = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      Rat factor = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / pivot;
      if (factor == 0) continue;
      for (int c = col; c <= k; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -= factor * m[static_cast<size_t>(row)][static_cast<size_t>(c)];
    }
    pivot_row[static_cast<size_t>(col)] = row;
    ++row;
  }
  if (row < k) throw TfError(ErrorCode::NotSimplicial, "dependent rays");
  // Remaining rows must have zero rhs, otherwise v is outside the span.
  for (int r = row; r < n; ++r) {
    if (m[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0)
      throw TfError(ErrorCode::NotInSpan, "vector outside the span of the rays");
  }
  std::vector<Rat> coords(static_cast<size_t>(k));
  for (int c = 0; c < k; ++c) {
    int pr = pivot_row[static_cast<size_t>(c)];
    coords[static_cast<size_t>(c)] =
        m[static_cast<size_t>(pr)][static_cast<size_t>(k)] / m[static_cast<size_t>(pr)][static_cast<size_t>(c)];
  }
  return RationalVector(std::move(coords));
}

std::vector<Int> smith_invariants(const IntegerMatrix& a) {
  IntegerMatrix w = a;
  const int m = w.rows();
  const int n = w.cols();
  std::vector<Int> invariants;

  auto abs_of = [](const Int& x) {
    Int r;
    mpz_abs(r.get_mpz_t(), x.get_mpz_t());
    return r;
  };

  int top = 0;
  while (top < m && top < n) {
    // Find a nonzero pivot in the remaining block.
    int pr = -1, pc = -1;
    Int best;
    for (int r = top; r < m; ++r)
      for (int c = top; c < n; ++c)
        if (w.at(r, c) != 0) {
          Int v = abs_of(w.at(r, c));
          if (pr < 0 || v < best) { pr = r; pc = c; best = v; }
        }
    if (pr < 0) break;
    for (int c = 0; c < n; ++c) std::swap(w.at(top, c), w.at(pr, c));
    for (int r = 0; r < m; ++r) std::swap(w.at(r, top), w.at(r, pc));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = top + 1; r < m; ++r) {
        if (w.at(r, top) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.at(r, top).get_mpz_t(), w.at(top, top).get_mpz_t());
        for (int c = 0; c < n; ++c) w.at(r, c) -= q * w.at(top, c);
        if (w.at(r, top) != 0) {
          for (int c = 0; c < n; ++c) std::swap(w.at(top, c), w.at(r, c));
          clean = false;
        }
      }
      for (int c = top + 1; c < n; ++c) {
        if (w.at(top, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.at(top, c).get_mpz_t(), w.at(top, top).get_mpz_t());
        for (int r = 0; r < m; ++r) w.at(r, c) -= q * w.at(r, top);
        if (w.at(top, c) != 0) {
          for (int r = 0; r < m; ++r) std::swap(w.at(r, top), w.at(r, c));
          clean = false;
        }
      }
    }
    invariants.push_back(abs_of(w.at(top, top)));
    ++top;
  }
  // Enforce the divisibility chain d1 | d2 | ... .
  for (size_t i = 0; i + 1 < invariants.size(); ++i) {
    for (size_t j = i + 1; j < invariants.size(); ++j) {
      Int g, l;
      mpz_gcd(g.get_mpz_t(), invariants[i].get_mpz_t(), invariants[j].get_mpz_t());
      l = invariants[i] / g * invariants[j];
      invariants[i] = g;
      invariants[j] = l;
    }
  }
  return invariants;
}

Int cone_multiplicity(const std::vector<LatticeVector>& rays) {
  if (rays.empty()) throw TfError(ErrorCode::NotSimplicial, "empty ray list");
  IntegerMatrix m = IntegerMatrix::from_rows(rays);
  std::vector<Int> inv = smith_invariants(m);
  if (static_cast<int>(inv.size()) < static_cast<int>(rays.size()))
    throw TfError(ErrorCode::NotSimplicial, "dependent rays");
  Int prod = 1;
  for (const auto& d : inv) prod *= d;
  return prod;
}

int rank_of_vectors(const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return 0;
  return IntegerMatrix::from_rows(vectors).rank();
}

std::optional<RationalVector> solve_rational(const std::vector<RationalVector>& rows,
                                             const std::vector<Rat>& rhs) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) return RationalVector(0);
  const int n = rows.front().dim();
  std::vector<std::vector<Rat>> a(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(n) + 1));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = rows[static_cast<size_t>(r)][c];
    a[static_cast<size_t>(r)][static_cast<size_t>(n)] = rhs[static_cast<size_t>(r)];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = -1;
    for (int r = row; r < m; ++r)
      if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { p = r; break; }
    if (p < 0) continue;
    std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(row)]);
    const Rat pivot = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      Rat factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / pivot;
      if (factor == 0) continue;
      for (int c = col; c <= n; ++c)
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] -= factor * a[static_cast<size_t>(row)][static_cast<size_t>(c)];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < m; ++r)
    if (a[static_cast<size_t>(r)][static_cast<size_t>(n)] != 0) return std::nullopt;
  RationalVector x(n);
  for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) {
    int col = pivot_col[static_cast<size_t>(i)];
    x[col] = a[static_cast<size_t>(i)][static_cast<size_t>(n)] / a[static_cast<size_t>(i)][static_cast<size_t>(col)];
  }
  return x;
}

LatticeVector primitive_scale(const RationalVector& v) {
  if (v.is_zero()) throw TfError(ErrorCode::ZeroVector, "primitive_scale of zero vector");
  Int den = common_denominator(v.coords());
  std::vector<Int> scaled;
  scaled.reserve(static_cast<size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) {
    Rat s = v[i] * Rat(den);
    scaled.push_back(s.get_num());
  }
  return primitive_part(LatticeVector(std::move(scaled))).first;
}

}  // namespace tfmmp
