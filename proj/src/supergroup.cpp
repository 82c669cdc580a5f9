#include "superbialg/supergroup.hpp"

#include "superbialg/conventions.hpp"
#include "superbialg/matexp.hpp"

namespace sbg {

namespace {

std::vector<Scalar> apply_matrix(const SMatrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> w(static_cast<std::size_t>(m.rows()));
  for (int k = 0; k < m.rows(); ++k) {
    Scalar acc;
    for (int l = 0; l < m.cols(); ++l) acc += m.at(k, l) * v[static_cast<std::size_t>(l)];
    w[static_cast<std::size_t>(k)] = acc;
  }
  return w;
}

// ad_{X_nu} with the DeWitt coefficient sign: (ad v)^k = sum_i (-1)^{|nu||v_i|} f^k_{nu i} v_i.
std::vector<Scalar> ad_signed(const SuperAlgebra& alg, int nu, const std::vector<Scalar>& v) {
  const int n = alg.dim;
  std::vector<Scalar> w(static_cast<std::size_t>(n));
  bool nu_odd = alg.grading[static_cast<std::size_t>(nu)] == Parity::odd;
  for (int k = 0; k < n; ++k) {
    Scalar acc;
    for (int i = 0; i < n; ++i) {
      const Scalar& vi = v[static_cast<std::size_t>(i)];
      if (vi.is_zero() || alg.fc(k, nu, i).is_zero()) continue;
      Scalar t = alg.fc(k, nu, i) * vi;
      if (nu_odd && vi.parity_or_throw("adjoint transport") == Parity::odd) t = -t;
      acc += t;
    }
    w[static_cast<std::size_t>(k)] = acc;
  }
  return w;
}

} // namespace

GroupParameterization group_parameterization(const SuperAlgebra& alg, bool dual) {
  GroupParameterization p;
  p.alg = alg;
  p.dual = dual;
  const std::string suffix = dual ? "~" : "";
  int even_seen = 0, odd_seen = 0;
  for (auto par : alg.grading) {
    std::string name;
    if (par == Parity::even)
      name = (even_seen++ == 0) ? "x" : "y";
    else
      name = (odd_seen++ == 0) ? "psi" : "chi";
    p.coords.push_back(sym(name + suffix));
  }
  return p;
}

MaurerCartanForms maurer_cartan(const GroupParameterization& p) {
  const SuperAlgebra& alg = p.alg;
  const int n = alg.dim;
  auto odd = [&](int i) { return alg.grading[static_cast<std::size_t>(i)] == Parity::odd; };

  // Seed of factor mu: X_mu -/+ (1/2) x^mu {X_mu,X_mu} (minus for g^-1 dg).
  auto seed = [&](int mu, bool left_form) {
    std::vector<Scalar> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(mu)] = Scalar(1);
    if (odd(mu)) {
      Scalar half(Rational(left_form ? -1 : 1, 2));
      Scalar coord = Scalar::symbol(p.coords[static_cast<std::size_t>(mu)]);
      for (int k = 0; k < n; ++k) {
        const Scalar& f = alg.fc(k, mu, mu);
        if (!f.is_zero()) v[static_cast<std::size_t>(k)] += half * coord * f;
      }
    }
    return v;
  };

  // Conjugation transport through factor nu: sign -1 for g^-1 Z g, +1 for g Z g^-1.
  auto transport = [&](int nu, int sign, std::vector<Scalar> v) {
    Scalar coord = Scalar::symbol(p.coords[static_cast<std::size_t>(nu)]);
    if (odd(nu)) {
      std::vector<Scalar> av = ad_signed(alg, nu, v);
      for (int k = 0; k < n; ++k) {
        Scalar t = coord * av[static_cast<std::size_t>(k)];
        v[static_cast<std::size_t>(k)] = sign > 0 ? v[static_cast<std::size_t>(k)] + t
                                                  : v[static_cast<std::size_t>(k)] - t;
      }
      return v;
    }
    SMatrix A = ad_matrix(alg, nu);
    if (sign < 0) A = -A;
    SMatrix E = matrix_exponential(A, p.coords[static_cast<std::size_t>(nu)]);
    return apply_matrix(E, v);
  };

  SMatrix CL(n, n), CR(n, n);
  for (int mu = 0; mu < n; ++mu) {
    std::vector<Scalar> vl = seed(mu, true);
    for (int nu = mu + 1; nu < n; ++nu) vl = transport(nu, -1, std::move(vl));
    std::vector<Scalar> vr = seed(mu, false);
    for (int nu = mu - 1; nu >= 0; --nu) vr = transport(nu, +1, std::move(vr));
    for (int i = 0; i < n; ++i) {
      CL.at(mu, i) = vl[static_cast<std::size_t>(i)];
      CR.at(mu, i) = vr[static_cast<std::size_t>(i)];
    }
  }

  MaurerCartanForms m;
  m.param = p;
  m.L_l = CL;
  m.R_l = CR;
  if (!p.dual && conventions().primal_form_sign < 0) {
    // primal decomposition carries the (-1)^i factor on the generator index
    for (int mu = 0; mu < n; ++mu)
      for (int i = 0; i < n; ++i)
        if (odd(i)) {
          m.L_l.at(mu, i) = -m.L_l.at(mu, i);
          m.R_l.at(mu, i) = -m.R_l.at(mu, i);
        }
  }
  m.L_l.set_gradings(alg.grading, alg.grading);
  m.R_l.set_gradings(alg.grading, alg.grading);

  // Right-derivative forms are the exact inverses of the right-derivative
  // fields, so the duality pairings of Eq. (30)/(38) hold in both
  // derivative conventions.
  InvariantFields f = invariant_fields(m);
  m.L_r = f.XL_r.inverse();
  m.R_r = f.XR_r.inverse();
  return m;
}

InvariantFields invariant_fields(const MaurerCartanForms& m) {
  const SuperAlgebra& alg = m.param.alg;
  const int n = alg.dim;
  auto odd_idx = [&](int i) { return parity_int(alg.grading[static_cast<std::size_t>(i)]); };
  InvariantFields f;
  f.param = m.param;
  f.XL_l = m.L_l.inverse();
  f.XR_l = m.R_l.inverse();
  f.XL_l.set_gradings(alg.grading, alg.grading);
  f.XR_l.set_gradings(alg.grading, alg.grading);
  auto to_right = [&](const SMatrix& left) {
    SMatrix r = left;
    for (int j = 0; j < n; ++j)
      for (int nu = 0; nu < n; ++nu) {
        int s = m.param.dual ? odd_idx(j) * odd_idx(nu) : odd_idx(j) * (1 + odd_idx(nu));
        if (s % 2) r.at(j, nu) = -r.at(j, nu);
      }
    return r;
  };
  f.XL_r = to_right(f.XL_l);
  f.XR_r = to_right(f.XR_l);
  return f;
}

PoissonTable sklyanin(const InvariantFields& fields, const SMatrix& r, Structure structure) {
  const SuperAlgebra& alg = fields.param.alg;
  const int n = alg.dim;
  if (!is_super_skew(r, alg))
    throw std::invalid_argument("sklyanin: r must be graded skew-symmetric (apply skew_reduce first)");
  if (structure != Structure::full && !schouten(r, alg).is_zero())
    throw std::invalid_argument("sklyanin: the L/R structures require [[r,r]] = 0");

  auto contract = [&](const SMatrix& Xr, const SMatrix& Xl) {
    SMatrix B(n, n);
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        Scalar acc;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (r.at(i, j).is_zero()) continue;
            // The r coefficient multiplies from the left of both field
            // coefficients; the order matters when both are a-numbers.
            Scalar t = r.at(i, j) * Xr.at(i, mu) * Xl.at(j, nu);
            if (fields.param.dual && alg.grading[static_cast<std::size_t>(i)] == Parity::odd &&
                conventions().dual_bracket_sign < 0)
              t = -t;
            acc += t;
          }
        B.at(mu, nu) = acc;
      }
    return B;
  };

  PoissonTable t;
  t.param = fields.param;
  t.structure = structure;
  switch (structure) {
    case Structure::L: t.bracket = contract(fields.XL_r, fields.XL_l); break;
    case Structure::R: t.bracket = contract(fields.XR_r, fields.XR_l); break;
    case Structure::full:
      t.bracket = contract(fields.XL_r, fields.XL_l) - contract(fields.XR_r, fields.XR_l);
      break;
  }
  t.bracket.set_gradings(alg.grading, alg.grading);
  return t;
}

ValidationReport poisson_axiom_check(const PoissonTable& t) {
  ValidationReport rep;
  const SuperAlgebra& alg = t.param.alg;
  const int n = alg.dim;
  auto gr = [&](int i) { return parity_int(alg.grading[static_cast<std::size_t>(i)]); };
  const SMatrix& B = t.bracket;

  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      Scalar sym = B.at(nu, mu);
      if (gr(mu) && gr(nu)) sym = -sym;
      Scalar viol = B.at(mu, nu) + sym;
      if (!viol.is_zero()) rep.push_back({"antisymmetry", {mu, nu}, viol});
    }

  // {x^a, F} = sum_nu B^{a nu} dF/dx^nu (left derivative)
  auto bracket_with = [&](int a, const Scalar& F) {
    Scalar acc;
    for (int nu = 0; nu < n; ++nu) {
      if (B.at(a, nu).is_zero()) continue;
      Scalar d = F.derive(t.param.coords[static_cast<std::size_t>(nu)], true);
      acc += B.at(a, nu) * d;
    }
    return acc;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Scalar j1 = bracket_with(a, B.at(b, c));
        if (gr(a) && gr(c)) j1 = -j1;
        Scalar j2 = bracket_with(b, B.at(c, a));
        if (gr(b) && gr(a)) j2 = -j2;
        Scalar j3 = bracket_with(c, B.at(a, b));
        if (gr(c) && gr(b)) j3 = -j3;
        Scalar viol = j1 + j2 + j3;
        if (!viol.is_zero()) rep.push_back({"jacobi", {a, b, c}, viol});
      }
  return rep;
}

std::vector<SMatrix> origin_linearization(const PoissonTable& t) {
  const int n = t.param.alg.dim;
  std::vector<SMatrix> out;
  for (int sigma = 0; sigma < n; ++sigma) {
    SMatrix d(n, n);
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        Scalar v = t.bracket.at(mu, nu).derive(t.param.coords[static_cast<std::size_t>(sigma)], true);
        for (SymId c : t.param.coords) v = v.substitute_coord_zero(c);
        d.at(mu, nu) = v;
      }
    out.push_back(std::move(d));
  }
  return out;
}

} // namespace sbg
