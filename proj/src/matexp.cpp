#include "superbialg/matexp.hpp"

#include <numeric>

namespace sbg {

namespace {

// Scalar -> parameter polynomial (entries of adjoint matrices are polynomial
// in parameters with rational coefficients).
ParamPoly to_parampoly(const Scalar& s) {
  if (!s.is_param_rational() || !s.denominator().is_one())
    throw UnsupportedSpectrumError("matrix entry is not polynomial in parameters: " + s.str());
  ParamPolyBuilder b;
  for (const auto& t : s.terms()) {
    ParamMono m;
    for (auto& [id, e] : t.mono) m.push_back({id, e});
    b.add(t.coeff, m);
  }
  return b.take();
}

bool is_nilpotent(const SMatrix& M, int max_steps, SMatrix& powers_out) {
  SMatrix p = M;
  for (int k = 1; k <= max_steps; ++k) {
    if (p.is_zero()) return true;
    p = p * M;
  }
  powers_out = p;
  return p.is_zero();
}

SMatrix exp_nilpotent(const SMatrix& M, SymId u) {
  const int n = M.rows();
  SMatrix acc = SMatrix::identity(n);
  SMatrix power = SMatrix::identity(n);
  Rational fact(1);
  Scalar uc = Scalar::symbol(u);
  for (int k = 1; k <= n + 1; ++k) {
    power = power * M;
    if (power.is_zero()) break;
    fact *= Rational(k);
    acc = acc + power.scaled(uc.pow(k) * Scalar(Rational(1) / fact));
  }
  return acc;
}

SMatrix exp_2x2(const SMatrix& M, SymId u) {
  ParamPoly a = to_parampoly(M.at(0, 0));
  ParamPoly b = to_parampoly(M.at(0, 1));
  ParamPoly c = to_parampoly(M.at(1, 0));
  ParamPoly d = to_parampoly(M.at(1, 1));
  // Halved trace must stay polynomial after the rational division below.
  ParamPoly tr_half = (a + d) * Rational(1, 2);
  // K = M - (tr/2) I is traceless; K^2 = D * I with D = k00^2 + b*c.
  ParamPoly k00 = a - tr_half;
  ParamPoly D = k00 * k00 + b * c;

  Scalar e_tr = Scalar::exp_factor(tr_half, u);
  SMatrix K(2, 2);
  K.at(0, 0) = Scalar::from_parampoly(k00);
  K.at(0, 1) = Scalar::from_parampoly(b);
  K.at(1, 0) = Scalar::from_parampoly(c);
  K.at(1, 1) = Scalar::from_parampoly(-k00);

  SMatrix I2 = SMatrix::identity(2);
  SMatrix r(2, 2);
  if (D.is_zero()) {
    // Jordan block: exp = e^{tr u/2} (I + u K)
    r = I2 + K.scaled(Scalar::symbol(u));
  } else if (auto s = D.sqrt()) {
    // real split: cosh/sinh written with exponentials
    Scalar ep = Scalar::exp_factor(*s, u);
    Scalar em = Scalar::exp_factor(-*s, u);
    Scalar half(Rational(1, 2));
    Scalar cosh_su = half * (ep + em);
    Scalar sinh_over_s = (half * (ep - em)) / Scalar::from_parampoly(*s);
    r = I2.scaled(cosh_su) + K.scaled(sinh_over_s);
  } else if (auto sneg = (-D).sqrt()) {
    Scalar cos_su = Scalar::cos_factor(*sneg, u);
    Scalar sin_over_s = Scalar::sin_factor(*sneg, u) / Scalar::from_parampoly(*sneg);
    r = I2.scaled(cos_su) + K.scaled(sin_over_s);
  } else {
    throw UnsupportedSpectrumError("2x2 block has non-factorable spectrum: K^2 = (" + D.str() + ") I");
  }
  return r.scaled(e_tr);
}

} // namespace

SMatrix matrix_exponential(const SMatrix& M, SymId u) {
  if (M.rows() != M.cols()) throw std::invalid_argument("matrix_exponential requires a square matrix");
  if (SymbolTable::instance().is_odd(u) || !SymbolTable::instance().is_coordinate(u))
    throw std::invalid_argument("matrix_exponential parameter must be an even coordinate");
  const int n = M.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (M.at(i, j).depends_on(u))
        throw std::invalid_argument("matrix_exponential: entries must be free of the exponent coordinate");

  // Split into connected components of the off-diagonal sparsity pattern and
  // exponentiate per block.
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (!M.at(i, j).is_zero() || !M.at(j, i).is_zero())) comp[static_cast<std::size_t>(find(i))] = find(j);

  SMatrix result(n, n);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int root = 0; root < n; ++root) {
    if (done[static_cast<std::size_t>(root)]) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (find(i) == find(root)) {
        idx.push_back(i);
        done[static_cast<std::size_t>(i)] = true;
      }
    const int m = static_cast<int>(idx.size());
    SMatrix block(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) block.at(i, j) = M.at(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);

    SMatrix eb(m, m);
    SMatrix scratch(m, m);
    if (m == 1) {
      eb.at(0, 0) = Scalar::exp_factor(to_parampoly(block.at(0, 0)), u);
    } else if (is_nilpotent(block, m + 1, scratch)) {
      eb = exp_nilpotent(block, u);
    } else if (m == 2) {
      eb = exp_2x2(block, u);
    } else {
      throw UnsupportedSpectrumError("unsupported spectrum for block of size " + std::to_string(m));
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) result.at(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]) = eb.at(i, j);
  }
  if (M.has_gradings()) result.set_gradings(M.row_gradings(), M.col_gradings());
  return result;
}

} // namespace sbg
