#include "superbialg/yangbaxter.hpp"

#include <algorithm>
#include <sstream>

#include "superbialg/conventions.hpp"

namespace sbg {

// ---- linear solver --------------------------------------------------------

LinearSolution solve_linear(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs) {
  LinearSolution sol;
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows[0].size() : 0;

  auto poly_size = [](const Scalar& s) {
    std::size_t sz = 0;
    for (const auto& t : s.terms()) sz += 1 + t.mono.size();
    return sz;
  };

  std::vector<int> pivot_col_of_row(m, -1);
  std::vector<int> pivot_row_of_col(n, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    // choose the simplest usable pivot (constants first)
    std::size_t best = m;
    std::size_t best_score = ~std::size_t(0);
    for (std::size_t r = rank; r < m; ++r) {
      const Scalar& c = rows[r][col];
      if (c.is_zero()) continue;
      std::size_t score = c.is_param_rational() && c.denominator().is_one() && c.terms().size() == 1 &&
                                  c.terms()[0].mono.empty()
                              ? 0
                              : 10 + poly_size(c);
      if (score < best_score) {
        best_score = score;
        best = r;
      }
    }
    if (best == m) continue;
    std::swap(rows[rank], rows[best]);
    std::swap(rhs[rank], rhs[best]);
    Scalar piv = rows[rank][col];
    if (best_score > 0) {
      // dividing by a parameter expression assumes it nonzero
      ParamPolyBuilder b;
      for (const auto& t : piv.terms()) {
        ParamMono mono;
        for (auto& [s, e] : t.mono) mono.push_back({s, e});
        b.add(t.coeff, mono);
      }
      ParamPoly cons = b.take().primitive_part();
      if (!cons.is_constant()) sol.pivot_constraints.push_back(cons);
    }
    Scalar pinv = piv.inverse();
    for (std::size_t c = 0; c < n; ++c) rows[rank][c] = pinv * rows[rank][c];
    rhs[rank] = pinv * rhs[rank];
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank) continue;
      Scalar f = rows[r][col];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
      rhs[r] = rhs[r] - f * rhs[rank];
    }
    pivot_col_of_row[rank] = static_cast<int>(col);
    pivot_row_of_col[col] = static_cast<int>(rank);
    ++rank;
  }

  for (std::size_t r = rank; r < m; ++r) {
    if (!rhs[r].is_zero()) {
      sol.consistent = false;
      sol.witness = rhs[r].str() + " = 0 required";
      return sol;
    }
  }

  sol.particular.assign(n, Scalar());
  for (std::size_t r = 0; r < rank; ++r) sol.particular[static_cast<std::size_t>(pivot_col_of_row[r])] = rhs[r];
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    std::vector<Scalar> v(n, Scalar());
    v[col] = Scalar(1);
    for (std::size_t r = 0; r < rank; ++r) {
      const Scalar& c = rows[r][col];
      if (!c.is_zero()) v[static_cast<std::size_t>(pivot_col_of_row[r])] = -c;
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

// ---- coboundary problem ---------------------------------------------------

namespace {
// flips a homogeneous basis vector so its first nonzero entry has a
// positive leading coefficient (presentation only)
void normalize_hom_sign(SMatrix& h) {
  for (int j = 0; j < h.rows(); ++j)
    for (int k = 0; k < h.cols(); ++k)
      if (!h.at(j, k).is_zero()) {
        if (h.at(j, k).terms().back().coeff.negative()) h = -h;
        return;
      }
}
} // namespace

SMatrix coboundary_apply(const SuperAlgebra& acting, const SMatrix& r, int i) {
  const int n = acting.dim;
  SMatrix adj = adjoint(acting, i);
  SMatrix first = adj.supertranspose() * r;
  SMatrix second(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Scalar acc;
      for (int l = 0; l < n; ++l) {
        Scalar t = r.at(a, l) * adj.at(l, b);
        if (parity_int(acting.grading[static_cast<std::size_t>(l)]) && conventions().eq21_row_sign < 0) t = -t;
        acc += t;
      }
      second.at(a, b) = acc;
    }
  SMatrix out = first + second;
  out.set_gradings(acting.grading, acting.grading);
  return out;
}

std::vector<SMatrix> coboundary_targets(const SuperBialgebra& b, Side side) {
  const SuperAlgebra& other = side == Side::primal ? b.dual : b.primal;
  const int n = b.dim();
  std::vector<SMatrix> targets;
  for (int i = 0; i < n; ++i) {
    SMatrix t(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t.at(j, k) = -other.fc(i, j, k);
    t.set_gradings(b.grading(), b.grading());
    targets.push_back(std::move(t));
  }
  return targets;
}

SolutionSet solve_coboundary(const SuperBialgebra& b, Side side) {
  const SuperAlgebra& acting = side == Side::primal ? b.primal : b.dual;
  const int n = b.dim();
  auto gr = [&](int i) { return parity_int(b.grading()[static_cast<std::size_t>(i)]); };
  std::vector<SMatrix> targets = coboundary_targets(b, side);

  // unknown u_{jk} at column j*n+k
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  std::vector<SMatrix> adj_st, adj;
  for (int i = 0; i < n; ++i) {
    adj.push_back(adjoint(acting, i));
    adj_st.push_back(adj.back().supertranspose());
  }
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int bb = 0; bb < n; ++bb) {
        std::vector<Scalar> row(static_cast<std::size_t>(n * n));
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            Scalar c;
            if (k == bb) c += adj_st[static_cast<std::size_t>(i)].at(a, j);
            if (j == a) {
              Scalar t = adj[static_cast<std::size_t>(i)].at(k, bb);
              if (gr(k)) t = -t;
              c += t;
            }
            row[static_cast<std::size_t>(j * n + k)] = c;
          }
        rows.push_back(std::move(row));
        rhs.push_back(targets[static_cast<std::size_t>(i)].at(a, bb));
      }

  LinearSolution lin = solve_linear(std::move(rows), std::move(rhs));
  SolutionSet set;
  set.side = side;
  set.dim = n;
  set.consistent = lin.consistent;
  set.witness = lin.witness;
  set.constraints = lin.pivot_constraints;
  for (const auto& c : acting.constraints) set.constraints.push_back(c);
  std::sort(set.constraints.begin(), set.constraints.end(),
            [](const ParamPoly& a, const ParamPoly& b) { return a < b; });
  set.constraints.erase(std::unique(set.constraints.begin(), set.constraints.end(),
                                    [](const ParamPoly& a, const ParamPoly& b) { return a == b; }),
                        set.constraints.end());
  if (!lin.consistent) return set;

  auto to_matrix = [&](const std::vector<Scalar>& v) {
    SMatrix m(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m.at(j, k) = v[static_cast<std::size_t>(j * n + k)];
    m.set_gradings(b.grading(), b.grading());
    return m;
  };
  set.particular = to_matrix(lin.particular);
  for (const auto& v : lin.nullspace) {
    SMatrix h = to_matrix(v);
    // parity of the free coefficient = parity of the (single-parity) support;
    // normalize the sign so the first nonzero entry has a positive lead
    Parity p = Parity::even;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!h.at(j, k).is_zero()) p = static_cast<Parity>((gr(j) + gr(k)) % 2);
    normalize_hom_sign(h);
    set.homogeneous.push_back(std::move(h));
    set.hom_parity.push_back(p);
  }
  return set;
}

bool solves_coboundary(const SuperBialgebra& b, Side side, const SMatrix& r) {
  const SuperAlgebra& acting = side == Side::primal ? b.primal : b.dual;
  std::vector<SMatrix> targets = coboundary_targets(b, side);
  for (int i = 0; i < b.dim(); ++i)
    if (!(coboundary_apply(acting, r, i) - targets[static_cast<std::size_t>(i)]).is_zero()) return false;
  return true;
}

bool in_solution_set(const SolutionSet& set, const SuperBialgebra& b, const SMatrix& r) {
  (void)b;
  if (!set.consistent) return false;
  const int n = set.dim;
  SMatrix delta = r - set.particular;
  const std::size_t h = set.homogeneous.size();
  if (h == 0) return delta.is_zero();
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::vector<Scalar> row(h);
      for (std::size_t m = 0; m < h; ++m) row[m] = set.homogeneous[m].at(j, k);
      rows.push_back(std::move(row));
      rhs.push_back(delta.at(j, k));
    }
  LinearSolution lin = solve_linear(std::move(rows), std::move(rhs));
  if (!lin.consistent) return false;
  // verify reconstruction and coefficient parity
  SMatrix rebuilt = set.particular;
  for (std::size_t m = 0; m < h; ++m) {
    const Scalar& c = lin.particular[m];
    if (!c.is_zero()) {
      auto p = c.parity();
      if (!p || *p != set.hom_parity[m]) return false;
    }
    rebuilt = rebuilt + set.homogeneous[m].scaled(c);
  }
  return rebuilt == r;
}

SolutionSet skew_reduce(const SolutionSet& set, const SuperBialgebra& b) {
  if (!set.consistent) return set;
  const SuperAlgebra& acting = set.side == Side::primal ? b.primal : b.dual;
  const int n = set.dim;
  const std::size_t h = set.homogeneous.size();
  SMatrix sym_part = supersym_part(set.particular, acting);
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::vector<Scalar> row(h);
      for (std::size_t m = 0; m < h; ++m) row[m] = supersym_part(set.homogeneous[m], acting).at(j, k);
      rows.push_back(std::move(row));
      rhs.push_back(-sym_part.at(j, k));
    }
  LinearSolution lin = solve_linear(std::move(rows), std::move(rhs));
  SolutionSet out;
  out.side = set.side;
  out.dim = n;
  out.consistent = lin.consistent;
  out.constraints = set.constraints;
  for (const auto& c : lin.pivot_constraints) out.constraints.push_back(c);
  if (!lin.consistent) {
    out.witness = "no graded skew-symmetric member: " + lin.witness;
    return out;
  }
  out.particular = set.particular;
  for (std::size_t m = 0; m < h; ++m) out.particular = out.particular + set.homogeneous[m].scaled(lin.particular[m]);
  for (const auto& v : lin.nullspace) {
    SMatrix hm(n, n);
    hm.set_gradings(b.grading(), b.grading());
    Parity par = Parity::even;
    for (std::size_t m = 0; m < h; ++m) {
      if (v[m].is_zero()) continue;
      hm = hm + set.homogeneous[m].scaled(v[m]);
      par = set.hom_parity[m];
    }
    if (!hm.is_zero()) {
      normalize_hom_sign(hm);
      out.homogeneous.push_back(std::move(hm));
      out.hom_parity.push_back(par);
    }
  }
  return out;
}

// ---- tensors ----------------------------------------------------------------

bool Tensor3::is_zero() const {
  for (const auto& s : a)
    if (!s.is_zero()) return false;
  return true;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
  Tensor3 r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

std::string Tensor3::str(const SuperAlgebra& alg) const {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (!at(i, j, k).is_zero()) {
          if (any) os << " + ";
          os << "(" << at(i, j, k).str() << ")*e" << i + 1 << "e" << j + 1 << "e" << k + 1;
          any = true;
        }
  (void)alg;
  return any ? os.str() : "0";
}

SMatrix wedge2(const SuperAlgebra& alg, int i, int j) {
  SMatrix m(alg.dim, alg.dim);
  m.set_gradings(alg.grading, alg.grading);
  auto gr = [&](int u) { return parity_int(alg.grading[static_cast<std::size_t>(u)]); };
  m.at(i, j) += Scalar(1);
  Scalar s(Rational(-1));
  if (gr(i) && gr(j)) s = Scalar(1);
  m.at(j, i) += s;
  return m;
}

Tensor3 wedge3(const SuperAlgebra& alg, int i, int j, int k) {
  Tensor3 t(alg.dim);
  auto gr = [&](int u) { return parity_int(alg.grading[static_cast<std::size_t>(u)]); };
  auto sgn = [&](int e) { return e % 2 ? Rational(-1) : Rational(1); };
  t.at(i, j, k) += Scalar(1);
  t.at(j, k, i) += Scalar(sgn(gr(i) * (gr(j) + gr(k))));
  t.at(k, i, j) += Scalar(sgn(gr(k) * (gr(i) + gr(j))));
  t.at(i, k, j) += Scalar(-sgn(gr(j) * gr(k)));
  t.at(j, i, k) += Scalar(-sgn(gr(i) * gr(j)));
  t.at(k, j, i) += Scalar(-sgn(gr(i) * gr(j) + gr(i) * gr(k) + gr(j) * gr(k)));
  return t;
}

Tensor3 schouten(const SMatrix& r, const SuperAlgebra& alg) {
  const int n = alg.dim;
  Tensor3 out(n);
  auto gr = [&](int u) { return parity_int(alg.grading[static_cast<std::size_t>(u)]); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (r.at(i, j).is_zero()) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (r.at(k, l).is_zero()) continue;
          Scalar rr = r.at(i, j) * r.at(k, l);
          if (rr.is_zero()) continue;
          // [r12,r13]: (-1)^{i(k+l)+jl} r^{ij} r^{kl} [X_i,X_k] (x) X_j (x) X_l
          {
            int sign = (gr(i) * (gr(k) + gr(l)) + gr(j) * gr(l)) % 2;
            for (int m = 0; m < n; ++m) {
              const Scalar& f = alg.fc(m, i, k);
              if (f.is_zero()) continue;
              Scalar v = rr * f;
              if (sign) v = -v;
              out.at(m, j, l) += v;
            }
          }
          // [r12,r23]: (-1)^{(i+j)(k+l)} r^{ij} r^{kl} X_i (x) [X_j,X_k] (x) X_l
          {
            int sign = ((gr(i) + gr(j)) * (gr(k) + gr(l))) % 2;
            for (int m = 0; m < n; ++m) {
              const Scalar& f = alg.fc(m, j, k);
              if (f.is_zero()) continue;
              Scalar v = rr * f;
              if (sign) v = -v;
              out.at(i, m, l) += v;
            }
          }
          // [r13,r23]: (-1)^{(i+j)(k+l)+jk} r^{ij} r^{kl} X_i (x) X_k (x) [X_j,X_l]
          {
            int sign = ((gr(i) + gr(j)) * (gr(k) + gr(l)) + gr(j) * gr(k)) % 2;
            for (int m = 0; m < n; ++m) {
              const Scalar& f = alg.fc(m, j, l);
              if (f.is_zero()) continue;
              Scalar v = rr * f;
              if (sign) v = -v;
              out.at(i, k, m) += v;
            }
          }
        }
    }
  return out;
}

SMatrix supersym_part(const SMatrix& r, const SuperAlgebra& alg) {
  const int n = alg.dim;
  SMatrix s(n, n);
  s.set_gradings(alg.grading, alg.grading);
  auto gr = [&](int u) { return parity_int(alg.grading[static_cast<std::size_t>(u)]); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar swapped = r.at(j, i);
      if (gr(i) && gr(j)) swapped = -swapped;
      s.at(i, j) = r.at(i, j) + swapped;
    }
  return s;
}

bool is_super_skew(const SMatrix& r, const SuperAlgebra& alg) { return supersym_part(r, alg).is_zero(); }

bool invariant2(const SuperAlgebra& alg, const SMatrix& T) {
  for (int i = 0; i < alg.dim; ++i)
    if (!coboundary_apply(alg, T, i).is_zero()) return false;
  return true;
}

bool invariant3(const SuperAlgebra& alg, const Tensor3& T) {
  const int n = alg.dim;
  auto gr = [&](int u) { return parity_int(alg.grading[static_cast<std::size_t>(u)]); };
  for (int act = 0; act < n; ++act) {
    Tensor3 res(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Scalar& w = T.at(j, k, l);
          if (w.is_zero()) continue;
          int s0 = (gr(act) * (gr(j) + gr(k) + gr(l))) % 2;
          for (int m = 0; m < n; ++m) {
            if (!alg.fc(m, act, j).is_zero()) {
              Scalar v = alg.fc(m, act, j) * w;
              if (s0) v = -v;
              res.at(m, k, l) += v;
            }
            if (!alg.fc(m, act, k).is_zero()) {
              Scalar v = alg.fc(m, act, k) * w;
              if ((s0 + gr(act) * gr(j)) % 2) v = -v;
              res.at(j, m, l) += v;
            }
            if (!alg.fc(m, act, l).is_zero()) {
              Scalar v = alg.fc(m, act, l) * w;
              if ((s0 + gr(act) * (gr(j) + gr(k))) % 2) v = -v;
              res.at(j, k, m) += v;
            }
          }
        }
    if (!res.is_zero()) return false;
  }
  return true;
}

// ---- classification ---------------------------------------------------------

std::string kind_str(RKind k) {
  switch (k) {
    case RKind::triangular: return "triangular";
    case RKind::quasi_triangular: return "quasi-triangular";
    case RKind::factorizable: return "factorizable";
    case RKind::coboundary_other: return "coboundary-other";
    case RKind::not_coboundary: return "not-coboundary";
  }
  return "?";
}

ClassificationResult classify(const SuperBialgebra& b, Side side, const SMatrix& r) {
  const SuperAlgebra& acting = side == Side::primal ? b.primal : b.dual;
  if (!solves_coboundary(b, side, r))
    throw std::invalid_argument("classify: r does not solve the coboundary equation for " + b.name);

  ClassificationResult res;
  res.r = r;
  res.schouten_bracket = schouten(r, acting);
  res.symmetric_part = supersym_part(r, acting);
  res.skew = res.symmetric_part.is_zero();
  res.cybe = res.schouten_bracket.is_zero();

  if (res.skew && res.cybe) {
    res.kind = RKind::triangular;
    return res;
  }
  bool sym_inv = invariant2(acting, res.symmetric_part);
  bool sch_inv = invariant3(acting, res.schouten_bracket);
  if (!(sym_inv && sch_inv)) {
    res.kind = RKind::coboundary_other;
    if (!sym_inv) res.notes.push_back("symmetric part not invariant");
    if (!sch_inv) res.notes.push_back("Schouten bracket not ad-invariant");
    return res;
  }
  res.kind = RKind::quasi_triangular;

  // Factorizable iff the super symmetric part is invertible; decided on the
  // Grassmann-free body, determinant conditions reported per parity block.
  const int n = acting.dim;
  std::vector<int> even_idx, odd_idx;
  for (int i = 0; i < n; ++i)
    (acting.grading[static_cast<std::size_t>(i)] == Parity::even ? even_idx : odd_idx).push_back(i);
  auto block_det = [&](const std::vector<int>& idx) -> Scalar {
    if (idx.empty()) return Scalar(1);
    std::function<Scalar(std::vector<int>, std::vector<int>)> det = [&](std::vector<int> rs,
                                                                        std::vector<int> cs) -> Scalar {
      Scalar e00 = res.symmetric_part.at(rs[0], cs[0]).body();
      if (rs.size() == 1) return e00;
      Scalar acc;
      for (std::size_t kk = 0; kk < cs.size(); ++kk) {
        Scalar piv = res.symmetric_part.at(rs[0], cs[kk]).body();
        if (piv.is_zero()) continue;
        std::vector<int> rs2(rs.begin() + 1, rs.end());
        std::vector<int> cs2 = cs;
        cs2.erase(cs2.begin() + static_cast<std::ptrdiff_t>(kk));
        Scalar term = piv * det(rs2, cs2);
        if (kk % 2) term = -term;
        acc += term;
      }
      return acc;
    };
    return det(idx, idx);
  };
  Scalar de = block_det(even_idx);
  Scalar dodd = block_det(odd_idx);
  bool possible = true;
  bool conditional = false;
  for (const Scalar* d : {&de, &dodd}) {
    if (d->is_zero()) {
      res.factorizable_constraints.push_back("unsatisfiable: symmetric-part block determinant vanishes identically");
      possible = false;
    } else if (!(d->is_param_rational() && d->terms().size() == 1 && d->terms()[0].mono.empty() &&
                 d->denominator().is_one())) {
      res.factorizable_constraints.push_back(d->str() + " != 0");
      conditional = true;
    }
  }
  if (possible && !conditional) res.kind = RKind::factorizable;
  return res;
}

BiRResult bi_r_matrix_check(const SuperBialgebra& b) {
  BiRResult r;
  r.primal = solve_coboundary(b, Side::primal);
  r.dual = solve_coboundary(b, Side::dual);
  r.is_bi_r = r.primal.consistent && r.dual.consistent;
  return r;
}

ResidualReport isomorphism_residual(const SMatrix& alpha, const SMatrix& r, const SMatrix& rprime,
                                    const SuperAlgebra& target) {
  const int n = target.dim;
  // parity preservation and invertibility
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!alpha.at(i, j).is_zero() && target.grading[static_cast<std::size_t>(i)] != target.grading[static_cast<std::size_t>(j)])
        throw std::invalid_argument("isomorphism map must preserve parity");
  SMatrix alpha_inv = alpha.inverse(); // throws when singular
  (void)alpha_inv;

  auto gr = [&](int u) { return parity_int(target.grading[static_cast<std::size_t>(u)]); };
  SMatrix transformed(n, n);
  transformed.set_gradings(target.grading, target.grading);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      Scalar acc;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          Scalar t = alpha.at(i, j) * alpha.at(k, l) * r.at(i, k);
          if ((gr(j) + gr(l)) % 2) t = -t;
          acc += t;
        }
      transformed.at(j, l) = acc;
    }
  SMatrix delta = transformed - rprime;
  ResidualReport rep;
  rep.zero = true;
  for (int i = 0; i < n; ++i) {
    SMatrix res = coboundary_apply(target, delta, i);
    if (!res.is_zero()) rep.zero = false;
    rep.residuals.push_back(std::move(res));
  }
  return rep;
}

} // namespace sbg
