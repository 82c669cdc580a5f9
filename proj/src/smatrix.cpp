#include "superbialg/smatrix.hpp"

#include <sstream>

#include "superbialg/conventions.hpp"

namespace sbg {

SMatrix SMatrix::identity(int n) {
  SMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool SMatrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool SMatrix::operator==(const SMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

SMatrix SMatrix::operator+(const SMatrix& o) const {
  SMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

SMatrix SMatrix::operator-(const SMatrix& o) const {
  SMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

SMatrix SMatrix::operator-() const {
  SMatrix r = *this;
  for (auto& s : r.a_) s = -s;
  return r;
}

SMatrix SMatrix::operator*(const SMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  SMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Scalar acc;
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  if (!row_par_.empty() && !o.col_par_.empty()) r.set_gradings(row_par_, o.col_par_);
  return r;
}

SMatrix SMatrix::scaled(const Scalar& f) const {
  SMatrix r = *this;
  for (auto& s : r.a_) s = f * s;
  return r;
}

bool SMatrix::graded_consistent() const {
  if (!has_gradings()) return true;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& s = at(i, j);
      if (s.is_zero()) continue;
      auto p = s.parity();
      if (!p || *p != row_par_[static_cast<std::size_t>(i)] + col_par_[static_cast<std::size_t>(j)]) return false;
    }
  return true;
}

SMatrix SMatrix::supertranspose() const {
  if (!has_gradings()) throw std::logic_error("supertranspose requires gradings");
  SMatrix r(cols_, rows_);
  r.set_gradings(col_par_, row_par_);
  for (int u = 0; u < cols_; ++u)
    for (int v = 0; v < rows_; ++v) {
      Scalar s = at(v, u);
      if (parity_int(col_par_[static_cast<std::size_t>(u)]) && parity_int(row_par_[static_cast<std::size_t>(v)]) &&
          conventions().st_odd_odd < 0)
        s = -s;
      r.at(u, v) = s;
    }
  return r;
}

Scalar SMatrix::det_body() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  // Entries here are Grassmann-free, hence commuting: Laplace expansion.
  std::function<Scalar(const std::vector<int>&, const std::vector<int>&)> det =
      [&](const std::vector<int>& rs, const std::vector<int>& cs) -> Scalar {
    if (rs.size() == 1) return at(rs[0], cs[0]).body();
    Scalar acc;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      Scalar piv = at(rs[0], cs[k]).body();
      if (piv.is_zero()) continue;
      std::vector<int> rs2(rs.begin() + 1, rs.end());
      std::vector<int> cs2 = cs;
      cs2.erase(cs2.begin() + static_cast<std::ptrdiff_t>(k));
      Scalar minor = det(rs2, cs2);
      Scalar term = piv * minor;
      if (k % 2) term = -term;
      acc += term;
    }
    return acc;
  };
  std::vector<int> idx(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) idx[static_cast<std::size_t>(i)] = i;
  return det(idx, idx);
}

SMatrix SMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const int n = rows_;
  SMatrix body(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) body.at(i, j) = at(i, j).body();

  Scalar d = body.det_body();
  Scalar dinv = d.inverse(); // throws when not a unit
  SMatrix binv(n, n);
  if (n == 1) {
    binv.at(0, 0) = dinv;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<int> rs, cs;
        for (int r2 = 0; r2 < n; ++r2)
          if (r2 != j) rs.push_back(r2);
        for (int c2 = 0; c2 < n; ++c2)
          if (c2 != i) cs.push_back(c2);
        // cofactor C_ji for adj = C^T
        SMatrix sub(n - 1, n - 1);
        for (std::size_t r2 = 0; r2 < rs.size(); ++r2)
          for (std::size_t c2 = 0; c2 < cs.size(); ++c2) sub.at(static_cast<int>(r2), static_cast<int>(c2)) = body.at(rs[r2], cs[c2]);
        Scalar cof = sub.det_body();
        if ((i + j) % 2) cof = -cof;
        binv.at(i, j) = cof * dinv;
      }
  }
  if (row_par_.size() == static_cast<std::size_t>(n)) binv.set_gradings(col_par_, row_par_);

  SMatrix nil = *this - body;
  if (nil.is_zero()) return binv;
  SMatrix x = binv * nil;
  SMatrix series = SMatrix::identity(n);
  SMatrix power = SMatrix::identity(n);
  for (int k = 0; k < 64; ++k) {
    power = power * (-x);
    if (power.is_zero()) break;
    series = series + power;
    if (k == 63) throw DivisionError("matrix inverse series does not terminate");
  }
  SMatrix r = series * binv;
  if (row_par_.size() == static_cast<std::size_t>(n)) r.set_gradings(col_par_, row_par_);
  return r;
}

SMatrix SMatrix::map(const std::function<Scalar(const Scalar&)>& fn) const {
  SMatrix r = *this;
  for (auto& s : r.a_) s = fn(s);
  return r;
}

SMatrix SMatrix::substitute_params(const std::vector<std::pair<SymId, Rational>>& binding) const {
  return map([&](const Scalar& s) {
    Scalar t = s;
    for (const auto& [id, v] : binding) t = t.substitute_param(id, v);
    return t;
  });
}

SMatrix SMatrix::at_origin(const std::vector<SymId>& coords) const {
  return map([&](const Scalar& s) {
    Scalar t = s;
    for (SymId c : coords) t = t.substitute_coord_zero(c);
    return t;
  });
}

std::string SMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "\n" : "") << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]";
  }
  return os.str();
}

} // namespace sbg
