/*
 * symbols.hpp
 * -----------
 * Interned symbols with Z2 parity and coordinate/parameter kind. The table is
 * filled once at startup (built-in names plus any declared by input files) and
 * read concurrently afterwards.
 *
 * Odd symbols carry a fixed global order (coordinates before parameters, then
 * lexicographic) so Grassmann monomials have a unique sorted form.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbg {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline int parity_int(Parity p) { return static_cast<int>(p); }

enum class SymbolKind : std::uint8_t { coordinate, parameter };

using SymId = std::uint16_t;

class SymbolTable {
public:
  static SymbolTable& instance();

  SymId intern(const std::string& name, Parity parity, SymbolKind kind);
  SymId lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  const std::string& name(SymId id) const { return entries_.at(id).name; }
  Parity parity(SymId id) const { return entries_.at(id).parity; }
  SymbolKind kind(SymId id) const { return entries_.at(id).kind; }
  bool is_odd(SymId id) const { return parity(id) == Parity::odd; }
  bool is_coordinate(SymId id) const { return kind(id) == SymbolKind::coordinate; }

  std::size_t size() const { return entries_.size(); }

  // Fixed order for Grassmann monomials: coordinates first, then parameters,
  // lexicographic within each group.
  bool grass_before(SymId a, SymId b) const;

private:
  SymbolTable();
  struct Entry {
    std::string name;
    Parity parity;
    SymbolKind kind;
  };
  std::vector<Entry> entries_;
  std::map<std::string, SymId> index_;
};

// Shorthands used throughout the library and tests.
SymId sym(const std::string& name);
SymId sym_declare(const std::string& name, Parity parity, SymbolKind kind);

} // namespace sbg
