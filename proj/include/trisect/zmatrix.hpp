#pragma once

#include "trisect/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace trisect {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline auto abs_int(const Int &x) -> Int { return x < 0 ? Int(-x) : x; }

inline auto gcd_int(Int a, Int b) -> Int {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw Error(ErrorCode::Parse, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static auto identity(std::size_t n) -> IntMatrix {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static auto from_rows(const std::vector<std::vector<Int>> &rows,
                        std::size_t cols) -> IntMatrix {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(ErrorCode::VectorLength, "row " + std::to_string(i) +
                                                 " has length " +
                                                 std::to_string(rows[i].size()));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] auto rows() const noexcept -> std::size_t { return rows_; }
  [[nodiscard]] auto cols() const noexcept -> std::size_t { return cols_; }
  [[nodiscard]] auto empty() const noexcept -> bool { return data_.empty(); }
  [[nodiscard]] auto is_square() const noexcept -> bool { return rows_ == cols_; }

  auto operator()(std::size_t i, std::size_t j) -> Int & {
    return data_[i * cols_ + j];
  }
  auto operator()(std::size_t i, std::size_t j) const -> const Int & {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] auto transpose() const -> IntMatrix {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] auto is_symmetric() const -> bool {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  [[nodiscard]] auto is_diagonal() const -> bool {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int &k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int &k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend auto operator*(const IntMatrix &a, const IntMatrix &b) -> IntMatrix {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::VectorLength, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int &aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend auto operator==(const IntMatrix &a, const IntMatrix &b) -> bool {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Prints as a nested list, e.g. [[2,-1],[-1,0]].
  friend auto operator<<(std::ostream &os, const IntMatrix &m) -> std::ostream & {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (i) os << ',';
      os << '[';
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j) os << ',';
        os << m(i, j);
      }
      os << ']';
    }
    return os << ']';
  }

  [[nodiscard]] auto str() const -> std::string {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination; det of 0x0 is 1.
inline auto determinant(const IntMatrix &m) -> Int {
  if (!m.is_square())
    throw Error(ErrorCode::VectorLength, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithDecomposition {
  IntMatrix U; ///< rows x rows, unimodular
  IntMatrix S; ///< rows x cols, diagonal with d1 | d2 | ..., all >= 0
  IntMatrix V; ///< cols x cols, unimodular
};

/// Computes U, S, V with U * M * V = S.
inline auto smith_normal_form(const IntMatrix &m) -> SmithDecomposition {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);
  const std::size_t diag = std::min(r, c);

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (s(i, j) == 0) continue;
          Int a = abs_int(s(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) return {std::move(u), std::move(s), std::move(v)};

      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);
        s.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        s.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // enforce d_t | every later entry
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion; ///< invariant factors > 1, divisibility order

  friend auto operator==(const CokernelInvariants &,
                         const CokernelInvariants &) -> bool = default;
};

/// Structure of Z^rows / column-span(M).
inline auto cokernel_invariants(const IntMatrix &m) -> CokernelInvariants {
  const auto snf = smith_normal_form(m);
  CokernelInvariants out;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    const Int &d = snf.S(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = m.rows() - nonzero;
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric forms

enum class Parity { Even, Odd };

inline auto to_string(Parity p) -> std::string {
  return p == Parity::Even ? "Even" : "Odd";
}

struct FormInvariants {
  std::size_t rank = 0;
  long signature = 0;
  Parity parity = Parity::Even;
  Int determinant = 1;

  friend auto operator==(const FormInvariants &,
                         const FormInvariants &) -> bool = default;
};

/// Rank, signature, parity and determinant of a symmetric integer form.
/// The signature comes from congruence diagonalization over Q; a zero
/// diagonal is repaired with the move x_i -> x_i + x_j.
inline auto sym_form_invariants(const IntMatrix &q) -> FormInvariants {
  if (!q.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "form must be a symmetric square matrix");
  const std::size_t n = q.rows();
  FormInvariants out;
  out.determinant = determinant(q);
  out.parity = Parity::Even;
  for (std::size_t i = 0; i < n; ++i)
    if (q(i, i) % 2 != 0) out.parity = Parity::Odd;

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(q(i, j));

  auto sym_swap = [&](std::size_t x, std::size_t y) {
    std::swap(a[x], a[y]);
    for (auto &row : a) std::swap(row[x], row[y]);
  };
  // x_dst <- x_dst + x_src (applied on both sides)
  auto sym_add = [&](std::size_t dst, std::size_t src, const Rational &k) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += k * a[src][j];
    for (std::size_t i = 0; i < n; ++i) a[i][dst] += k * a[i][src];
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      bool repaired = false;
      for (std::size_t i = k; i < n && !repaired; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            sym_add(i, j, Rational(1)); // a_ii becomes 2 a_ij
            p = i;
            repaired = true;
            break;
          }
      if (!repaired) break; // trailing block is zero
    }
    sym_swap(k, p);
    const Rational pivot = a[k][k];
    ++out.rank;
    out.signature += pivot > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      sym_add(i, k, -a[i][k] / pivot);
    }
  }
  return out;
}

enum class FormName {
  ZeroForm,
  OddIndefinite,
  EvenIndefinite,
  PositiveDefiniteDiagonal,
  NegativeDefiniteDiagonal,
  Unclassified,
};

inline auto to_string(FormName n) -> std::string {
  switch (n) {
  case FormName::ZeroForm: return "ZeroForm";
  case FormName::OddIndefinite: return "OddIndefinite";
  case FormName::EvenIndefinite: return "EvenIndefinite";
  case FormName::PositiveDefiniteDiagonal: return "PositiveDefiniteDiagonal";
  case FormName::NegativeDefiniteDiagonal: return "NegativeDefiniteDiagonal";
  case FormName::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

/// Isomorphism class of a unimodular form, as far as rank/signature/parity
/// determine it. `p`, `q` hold the counts of <+1>, <-1> summands for odd
/// forms, `hyperbolic` the number of H summands for even indefinite forms.
struct FormClass {
  std::size_t rank = 0;
  long signature = 0;
  Parity parity = Parity::Even;
  FormName name = FormName::ZeroForm;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t hyperbolic = 0;

  friend auto operator==(const FormClass &, const FormClass &) -> bool = default;

  /// e.g. "OddIndefinite(1,2)", "EvenIndefinite(1)"
  [[nodiscard]] auto label() const -> std::string {
    switch (name) {
    case FormName::OddIndefinite:
      return "OddIndefinite(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case FormName::EvenIndefinite:
      return "EvenIndefinite(" + std::to_string(hyperbolic) + ")";
    case FormName::PositiveDefiniteDiagonal:
    case FormName::NegativeDefiniteDiagonal:
      return to_string(name) + "(" + std::to_string(rank) + ")";
    default:
      return to_string(name);
    }
  }
};

inline auto classify_unimodular(const IntMatrix &q) -> FormClass {
  FormClass out;
  if (q.rows() == 0 && q.cols() == 0) return out;
  const auto inv = sym_form_invariants(q);
  const Int det_abs = abs_int(inv.determinant);
  if (det_abs > 1)
    throw Error(ErrorCode::NotUnimodular,
                "form has determinant " + inv.determinant.str());
  out.rank = inv.rank;
  out.signature = inv.signature;
  out.parity = inv.parity;
  if (det_abs == 0) {
    out.name = FormName::Unclassified; // degenerate: invariants only
    return out;
  }
  const auto sig_abs = static_cast<std::size_t>(std::labs(inv.signature));
  if (sig_abs < inv.rank) {
    if (inv.parity == Parity::Odd) {
      out.name = FormName::OddIndefinite;
      out.p = static_cast<std::size_t>(static_cast<long>(inv.rank) + inv.signature) / 2;
      out.q = inv.rank - out.p;
    } else {
      out.name = FormName::EvenIndefinite;
      out.hyperbolic = (inv.rank - sig_abs) / 2;
    }
  } else if (inv.rank <= 3) {
    out.name = inv.signature > 0 ? FormName::PositiveDefiniteDiagonal
                                 : FormName::NegativeDefiniteDiagonal;
  } else {
    out.name = FormName::Unclassified;
  }
  return out;
}

// ---------------------------------------------------------------------------
// SL3(Z) words

/// Generator alphabet: the coordinate rotations sigma_12, sigma_23,
/// sigma_31, their inverses, and the shears E(k) = I + k e_1 e_2^T.
/// sigma_23 = [[1,0,0],[0,0,-1],[0,1,0]]; the others are cyclic relabelings.
enum class Sl3Gen {
  Sigma12,
  Sigma23,
  Sigma31,
  Sigma12Inv,
  Sigma23Inv,
  Sigma31Inv,
  Shear,
};

struct Sl3Factor {
  Sl3Gen gen = Sl3Gen::Shear;
  Int k = 0; ///< shear amount; ignored for rotations

  friend auto operator==(const Sl3Factor &, const Sl3Factor &) -> bool = default;

  [[nodiscard]] auto is_rotation() const -> bool { return gen != Sl3Gen::Shear; }

  /// 0-based (i, j) with M(i,j) = -1, M(j,i) = +1 for the rotation.
  [[nodiscard]] auto axes() const -> std::pair<std::size_t, std::size_t> {
    switch (gen) {
    case Sl3Gen::Sigma12: return {0, 1};
    case Sl3Gen::Sigma23: return {1, 2};
    case Sl3Gen::Sigma31: return {2, 0};
    case Sl3Gen::Sigma12Inv: return {1, 0};
    case Sl3Gen::Sigma23Inv: return {2, 1};
    case Sl3Gen::Sigma31Inv: return {0, 2};
    case Sl3Gen::Shear: break;
    }
    return {0, 1};
  }

  [[nodiscard]] auto matrix() const -> IntMatrix {
    IntMatrix m = IntMatrix::identity(3);
    if (gen == Sl3Gen::Shear) {
      m(0, 1) = k;
      return m;
    }
    auto [i, j] = axes();
    m(i, i) = 0;
    m(j, j) = 0;
    m(i, j) = -1;
    m(j, i) = 1;
    return m;
  }

  [[nodiscard]] auto inverse() const -> Sl3Factor {
    switch (gen) {
    case Sl3Gen::Sigma12: return {Sl3Gen::Sigma12Inv, 0};
    case Sl3Gen::Sigma23: return {Sl3Gen::Sigma23Inv, 0};
    case Sl3Gen::Sigma31: return {Sl3Gen::Sigma31Inv, 0};
    case Sl3Gen::Sigma12Inv: return {Sl3Gen::Sigma12, 0};
    case Sl3Gen::Sigma23Inv: return {Sl3Gen::Sigma23, 0};
    case Sl3Gen::Sigma31Inv: return {Sl3Gen::Sigma31, 0};
    case Sl3Gen::Shear: break;
    }
    return {Sl3Gen::Shear, -k};
  }

  [[nodiscard]] auto name() const -> std::string {
    switch (gen) {
    case Sl3Gen::Sigma12: return "s12";
    case Sl3Gen::Sigma23: return "s23";
    case Sl3Gen::Sigma31: return "s31";
    case Sl3Gen::Sigma12Inv: return "s12^-1";
    case Sl3Gen::Sigma23Inv: return "s23^-1";
    case Sl3Gen::Sigma31Inv: return "s31^-1";
    case Sl3Gen::Shear: break;
    }
    return "E(" + k.str() + ")";
  }
};

struct SL3Word {
  std::vector<Sl3Factor> factors;

  [[nodiscard]] auto product() const -> IntMatrix {
    IntMatrix m = IntMatrix::identity(3);
    for (const auto &f : factors) m = m * f.matrix();
    return m;
  }
  [[nodiscard]] auto str() const -> std::string {
    std::string out;
    for (const auto &f : factors) {
      if (!out.empty()) out += ' ';
      out += f.name();
    }
    return out;
  }
};

namespace detail {

/// Shortest rotation words realizing every signed permutation in the
/// rotation group of the cube (24 elements), keyed by matrix entries.
struct RotationTable {
  struct Entry {
    IntMatrix matrix;
    std::vector<Sl3Factor> word;
  };
  std::vector<Entry> elements;

  RotationTable() {
    const std::array<Sl3Factor, 3> gens{Sl3Factor{Sl3Gen::Sigma12, 0},
                                        Sl3Factor{Sl3Gen::Sigma23, 0},
                                        Sl3Factor{Sl3Gen::Sigma31, 0}};
    std::map<std::string, std::size_t> seen;
    elements.push_back({IntMatrix::identity(3), {}});
    seen[elements[0].matrix.str()] = 0;
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (const auto &g : gens) {
        Entry next{elements[head].matrix * g.matrix(), elements[head].word};
        next.word.push_back(g);
        auto key = next.matrix.str();
        if (seen.count(key)) continue;
        seen[key] = elements.size();
        elements.push_back(std::move(next));
      }
    }
  }

  /// A rotation P with P e_0 = s0 e_i and P e_1 = s1 e_j; returns (P, s0*s1).
  [[nodiscard]] auto carrying(std::size_t i, std::size_t j) const
      -> std::pair<const Entry *, int> {
    for (const auto &e : elements) {
      if (e.matrix(i, 0) != 0 && e.matrix(j, 1) != 0) {
        int s = (e.matrix(i, 0) * e.matrix(j, 1)) > 0 ? 1 : -1;
        return {&e, s};
      }
    }
    return {nullptr, 1};
  }
};

inline auto rotation_table() -> const RotationTable & {
  static const RotationTable table;
  return table;
}

/// Records left multiplications applied to a 3x3 matrix during reduction.
class LeftReducer {
public:
  explicit LeftReducer(IntMatrix m) : m_(std::move(m)) {}

  void apply(const Sl3Factor &g) {
    m_ = g.matrix() * m_;
    applied_.push_back(g);
  }

  /// row_i += k * row_j, realized as P E(k s) P^-1.
  void elementary(std::size_t i, std::size_t j, const Int &k) {
    if (k == 0) return;
    auto [entry, s] = rotation_table().carrying(i, j);
    // applied first: P^-1 (reversed inverses), then E, then P
    const auto &w = entry->word;
    for (auto it = w.begin(); it != w.end(); ++it) apply(it->inverse());
    apply({Sl3Gen::Shear, k * s});
    for (auto it = w.rbegin(); it != w.rend(); ++it) apply(*it);
  }

  [[nodiscard]] auto m() const -> const IntMatrix & { return m_; }
  [[nodiscard]] auto applied() const -> const std::vector<Sl3Factor> & {
    return applied_;
  }

  /// Euclidean reduction of column `col` over rows [first, 3) until a
  /// single entry +-1 remains, then moves it to row `first`.
  void reduce_column(std::size_t col, std::size_t first) {
    for (;;) {
      std::size_t pivot = 3;
      std::size_t nonzero = 0;
      for (std::size_t r = first; r < 3; ++r) {
        if (m_(r, col) == 0) continue;
        ++nonzero;
        if (pivot == 3 || abs_int(m_(r, col)) < abs_int(m_(pivot, col))) pivot = r;
      }
      if (nonzero <= 1) {
        if (pivot != first) {
          elementary(first, pivot, 1);
          elementary(pivot, first, -(m_(pivot, col) * m_(first, col)));
        }
        return;
      }
      for (std::size_t r = first; r < 3; ++r) {
        if (r == pivot || m_(r, col) == 0) continue;
        elementary(r, pivot, -(m_(r, col) / m_(pivot, col)));
      }
    }
  }

private:
  IntMatrix m_;
  std::vector<Sl3Factor> applied_;
};

inline auto simplify(const std::vector<Sl3Factor> &in) -> std::vector<Sl3Factor> {
  std::vector<Sl3Factor> out;
  for (const auto &f : in) {
    if (f.gen == Sl3Gen::Shear && f.k == 0) continue;
    if (!out.empty()) {
      auto &top = out.back();
      if (f.gen == Sl3Gen::Shear && top.gen == Sl3Gen::Shear) {
        top.k += f.k;
        if (top.k == 0) out.pop_back();
        continue;
      }
      if (f.is_rotation() && top == f.inverse()) {
        out.pop_back();
        continue;
      }
    }
    out.push_back(f);
  }
  return out;
}

} // namespace detail

/// Writes M in SL3(Z) as a word in the rotation/shear alphabet by integer
/// row reduction (Euclid on each column).
inline auto sl3_factor(const IntMatrix &m) -> SL3Word {
  if (m.rows() != 3 || m.cols() != 3)
    throw Error(ErrorCode::NotSL3, "matrix is not 3x3");
  if (determinant(m) != 1)
    throw Error(ErrorCode::NotSL3, "determinant is " + determinant(m).str());

  detail::LeftReducer red(m);
  const Sl3Factor s12{Sl3Gen::Sigma12, 0};
  const Sl3Factor s23{Sl3Gen::Sigma23, 0};

  red.reduce_column(0, 0);
  if (red.m()(0, 0) < 0) { // diag(-1,-1,1)
    red.apply(s12);
    red.apply(s12);
  }
  for (std::size_t r = 1; r < 3; ++r) red.elementary(r, 0, -red.m()(r, 0));

  red.reduce_column(1, 1);
  if (red.m()(1, 1) < 0) { // diag(1,-1,-1)
    red.apply(s23);
    red.apply(s23);
  }
  red.elementary(0, 1, -red.m()(0, 1));
  red.elementary(2, 1, -red.m()(2, 1));
  red.elementary(0, 2, -red.m()(0, 2));
  red.elementary(1, 2, -red.m()(1, 2));

  // L_k ... L_1 M = I  =>  M = L_1^-1 ... L_k^-1
  std::vector<Sl3Factor> word;
  word.reserve(red.applied().size());
  for (const auto &g : red.applied()) word.push_back(g.inverse());
  SL3Word out{detail::simplify(word)};
  if (out.product() != m)
    throw std::logic_error("sl3_factor: word does not reproduce the input");
  return out;
}

} // namespace trisect
