/*
 * conventions.hpp
 * ---------------
 * The four DeWitt-style sign choices the construction leaves open. Defaults
 * were fixed once by calibration against the published tables (see
 * docs/conventions.md) and must not change; the SUPERBIALG_CONVENTIONS
 * environment variable can point at an alternate JSON ledger for mutation
 * testing only.
 */
#pragma once

#include <string>

namespace sbg {

struct Conventions {
  // (M^st)[u][v] = s * M[v][u] with s = st_odd_odd when both indices are odd.
  int st_odd_odd = -1;
  // the (-1)^l factor inside the second contraction of the coboundary equation
  int eq21_row_sign = -1;
  // the (-1)^i factor on primal Maurer-Cartan forms
  int primal_form_sign = -1;
  // the (-1)^i prefactor of the dual-group Sklyanin bracket
  int dual_bracket_sign = -1;
};

const Conventions& conventions();
std::string conventions_fingerprint();

// Test hook; overrides the active set (mutation tests only).
void set_conventions_for_testing(const Conventions& c);

} // namespace sbg
