#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tfmmp/rational.hpp"

namespace tfmmp {

// Immutable integer vector of a fixed ambient dimension.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Int& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<Int>& coords() const { return coords_; }

  bool is_zero() const;

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector operator*(const Int& scalar) const;
  LatticeVector operator-() const;

  bool operator==(const LatticeVector& other) const { return coords_ == other.coords_; }
  bool operator!=(const LatticeVector& other) const { return coords_ != other.coords_; }
  // Lexicographic; used for canonical orderings and set keys.
  bool operator<(const LatticeVector& other) const;

  std::string to_string() const;

 private:
  std::vector<Int> coords_;
};

// Exact rational vector; doubles as a covector where convenient.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  explicit RationalVector(int dim) : coords_(static_cast<size_t>(dim)) {}

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rat& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  Rat& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_zero() const;
  std::string to_string() const;

  bool operator==(const RationalVector& other) const { return coords_ == other.coords_; }
  bool operator!=(const RationalVector& other) const { return coords_ != other.coords_; }

 private:
  std::vector<Rat> coords_;
};

Rat dot(const RationalVector& a, const LatticeVector& b);
Rat dot(const RationalVector& a, const RationalVector& b);
Int dot(const LatticeVector& a, const LatticeVector& b);

// Dense arbitrary-precision integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix(int rows, int cols);
  static IntegerMatrix from_rows(const std::vector<LatticeVector>& rows);
  static IntegerMatrix from_columns(const std::vector<LatticeVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Int& at(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }
  Int& at(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }

  LatticeVector row(int r) const;
  IntegerMatrix transposed() const;
  LatticeVector apply(const LatticeVector& v) const;  // matrix * v

  int rank() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

// gcd of coordinates and the primitive direction: v = g * p with gcd(p) = 1.
// Throws TfError(ZeroVector) for v = 0.
std::pair<LatticeVector, Int> primitive_part(const LatticeVector& v);

bool is_primitive(const LatticeVector& v);

// Basis of the saturated lattice { v : A v = 0 }. Vectors come out primitive
// and generate the full integer kernel (unimodular column reduction).
std::vector<LatticeVector> integer_kernel(const IntegerMatrix& a);

// Solves v = sum_i c_i rays_i exactly. Throws NotSimplicial when the rays are
// dependent, NotInSpan when v is outside their span. Entries may be negative;
// cone membership is the caller's check.
RationalVector cone_coordinates(const std::vector<LatticeVector>& rays, const LatticeVector& v);
RationalVector cone_coordinates(const std::vector<LatticeVector>& rays, const RationalVector& v);

// Index of Z<rays> inside the saturation of its span; 1 iff smooth.
Int cone_multiplicity(const std::vector<LatticeVector>& rays);

// Invariant factors of the Smith normal form (nonzero ones, in divisibility order).
std::vector<Int> smith_invariants(const IntegerMatrix& a);

int rank_of_vectors(const std::vector<LatticeVector>& vectors);

// Solves A x = rhs over Q. Returns nullopt when inconsistent; when the system
// is underdetermined an arbitrary solution is returned.
std::optional<RationalVector> solve_rational(const std::vector<RationalVector>& rows,
                                             const std::vector<Rat>& rhs);

// Clears denominators and divides by the content: the primitive integer vector
// pointing the same way. Zero input throws ZeroVector.
LatticeVector primitive_scale(const RationalVector& v);

}  // namespace tfmmp
