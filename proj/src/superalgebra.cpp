#include "superbialg/superalgebra.hpp"

#include <sstream>

namespace sbg {

int SuperAlgebra::bosonic() const {
  int n = 0;
  for (auto p : grading)
    if (p == Parity::even) ++n;
  return n;
}

int SuperAlgebra::fermionic() const { return dim - bosonic(); }

std::string SuperAlgebra::type_string() const {
  return "(" + std::to_string(bosonic()) + "," + std::to_string(fermionic()) + ")";
}

void SuperAlgebra::set_bracket(int i, int j, int k, const Scalar& coeff) {
  fc(k, i, j) += coeff;
  if (i != j) {
    Scalar partner = coeff;
    if (!(parity_int(grading[static_cast<std::size_t>(i)]) && parity_int(grading[static_cast<std::size_t>(j)])))
      partner = -partner; // f^k_{ji} = -(-1)^{ij} f^k_{ij}
    fc(k, j, i) += partner;
  } else if (grading[static_cast<std::size_t>(i)] == Parity::even) {
    throw std::invalid_argument("bracket [X,X] with even X must vanish");
  }
}

SuperAlgebra SuperAlgebra::bind_params(const std::vector<std::pair<SymId, Rational>>& binding) const {
  SuperAlgebra r = *this;
  for (auto& s : r.f)
    for (const auto& [id, v] : binding) s = s.substitute_param(id, v);
  std::vector<ParamPoly> kept;
  for (auto& c : r.constraints) {
    ParamPoly cc = c;
    for (const auto& [id, v] : binding) cc = cc.substitute(id, v);
    if (cc.is_zero())
      throw std::invalid_argument("parameter binding violates constraint " + c.str() + " != 0 of " + name);
    if (!cc.is_constant()) kept.push_back(cc);
  }
  r.constraints = std::move(kept);
  return r;
}

std::string report_str(const ValidationReport& r) {
  std::ostringstream os;
  for (const auto& v : r) {
    os << v.rule << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i] + 1;
    os << "): " << v.value.str() << "\n";
  }
  return os.str();
}

ValidationReport validate(const SuperAlgebra& alg) {
  ValidationReport rep;
  const int n = alg.dim;
  auto gr = [&](int i) { return parity_int(alg.grading[static_cast<std::size_t>(i)]); };

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // Eq. (3): f^k_ij = -(-1)^{ij} f^k_ji
        Scalar anti = alg.fc(k, i, j) + (gr(i) && gr(j) ? -alg.fc(k, j, i) : alg.fc(k, j, i));
        if (!anti.is_zero() && i <= j) rep.push_back({"antisymmetry", {k, i, j}, anti});
        // Eq. (4): grading consistency
        if (!alg.fc(k, i, j).is_zero() && ((gr(i) + gr(j)) % 2) != gr(k))
          rep.push_back({"grading", {k, i, j}, alg.fc(k, i, j)});
      }

  // Eq. (2): (-1)^{i(j+k)} f^m_{jl} f^l_{ki} + f^m_{il} f^l_{jk} + (-1)^{k(i+j)} f^m_{kl} f^l_{ij} = 0
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Scalar acc;
          for (int l = 0; l < n; ++l) {
            Scalar t1 = alg.fc(m, j, l) * alg.fc(l, k, i);
            if (gr(i) && ((gr(j) + gr(k)) % 2)) t1 = -t1;
            Scalar t2 = alg.fc(m, i, l) * alg.fc(l, j, k);
            Scalar t3 = alg.fc(m, k, l) * alg.fc(l, i, j);
            if (gr(k) && ((gr(i) + gr(j)) % 2)) t3 = -t3;
            acc += t1 + t2 + t3;
          }
          if (!acc.is_zero()) rep.push_back({"jacobi", {m, i, j, k}, acc});
        }
  return rep;
}

SMatrix adjoint(const SuperAlgebra& alg, int i) {
  if (i < 0 || i >= alg.dim) throw std::out_of_range("adjoint index out of range");
  SMatrix m(alg.dim, alg.dim);
  for (int l = 0; l < alg.dim; ++l)
    for (int k = 0; k < alg.dim; ++k) m.at(l, k) = -alg.fc(k, i, l);
  m.set_gradings(alg.grading, alg.grading);
  return m;
}

SMatrix ad_matrix(const SuperAlgebra& alg, int i) {
  SMatrix m(alg.dim, alg.dim);
  for (int k = 0; k < alg.dim; ++k)
    for (int l = 0; l < alg.dim; ++l) m.at(k, l) = alg.fc(k, i, l);
  m.set_gradings(alg.grading, alg.grading);
  return m;
}

} // namespace sbg
