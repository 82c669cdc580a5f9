#include "superbialg/symbols.hpp"

namespace sbg {

SymbolTable& SymbolTable::instance() {
  static SymbolTable table;
  return table;
}

SymbolTable::SymbolTable() {
  // Built-in vocabulary. Group coordinates on G and on the dual group, the
  // real parameters of the catalog, and the anticommuting parameters.
  const char* even_coords[] = {"x", "y", "x~", "y~"};
  const char* odd_coords[] = {"psi", "chi", "psi~", "chi~"};
  const char* parameters[] = {"a", "b", "c", "d", "e", "k", "s", "m", "n", "p", "alpha", "beta", "gamma", "eps"};
  const char* odd_parameters[] = {"zeta", "eta"};
  for (auto* n : even_coords) intern(n, Parity::even, SymbolKind::coordinate);
  for (auto* n : odd_coords) intern(n, Parity::odd, SymbolKind::coordinate);
  for (auto* n : parameters) intern(n, Parity::even, SymbolKind::parameter);
  for (auto* n : odd_parameters) intern(n, Parity::odd, SymbolKind::parameter);
}

SymId SymbolTable::intern(const std::string& name, Parity parity, SymbolKind kind) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    const Entry& e = entries_[it->second];
    if (e.parity != parity || e.kind != kind)
      throw std::invalid_argument("symbol '" + name + "' re-declared with different parity/kind");
    return it->second;
  }
  if (entries_.size() >= 0xFFFF) throw std::length_error("symbol table full");
  SymId id = static_cast<SymId>(entries_.size());
  entries_.push_back({name, parity, kind});
  index_.emplace(name, id);
  return id;
}

SymId SymbolTable::lookup(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown symbol '" + name + "'");
  return it->second;
}

bool SymbolTable::grass_before(SymId a, SymId b) const {
  const Entry& ea = entries_.at(a);
  const Entry& eb = entries_.at(b);
  if (ea.kind != eb.kind) return ea.kind == SymbolKind::coordinate;
  return ea.name < eb.name;
}

SymId sym(const std::string& name) { return SymbolTable::instance().lookup(name); }

SymId sym_declare(const std::string& name, Parity parity, SymbolKind kind) {
  return SymbolTable::instance().intern(name, parity, kind);
}

} // namespace sbg
