#include "superbialg/conventions.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sbg {

namespace {

Conventions load_initial() {
  Conventions c;
  const char* path = std::getenv("SUPERBIALG_CONVENTIONS");
  if (!path || !*path) return c;
  std::ifstream in(path);
  if (!in) throw std::runtime_error(std::string("cannot open conventions file ") + path);
  nlohmann::json j;
  in >> j;
  c.st_odd_odd = j.value("st_odd_odd", c.st_odd_odd);
  c.eq21_row_sign = j.value("eq21_row_sign", c.eq21_row_sign);
  c.primal_form_sign = j.value("primal_form_sign", c.primal_form_sign);
  c.dual_bracket_sign = j.value("dual_bracket_sign", c.dual_bracket_sign);
  return c;
}

Conventions& active() {
  static Conventions c = load_initial();
  return c;
}

} // namespace

const Conventions& conventions() { return active(); }

std::string conventions_fingerprint() {
  const Conventions& c = active();
  std::ostringstream os;
  os << "st_odd_odd=" << c.st_odd_odd << ";eq21_row_sign=" << c.eq21_row_sign
     << ";primal_form_sign=" << c.primal_form_sign << ";dual_bracket_sign=" << c.dual_bracket_sign;
  return os.str();
}

void set_conventions_for_testing(const Conventions& c) { active() = c; }

} // namespace sbg
