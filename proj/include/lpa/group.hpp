#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of a GroupSpec. Its meaning depends on the group: one integer
/// for Z, k integers for Z^k, a residue for Z/n, a row index for a table.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A group in one of the supported families: Z, Z^k, Z/n, or a finite group
/// given by its Cayley table.
class GroupSpec {
 public:
  enum class Kind { integers, lattice, cyclic, table };

  static GroupSpec integers() { return GroupSpec(Kind::integers, 1, 0); }

  static GroupSpec lattice(std::size_t rank) {
    if (rank == 0) throw GroupError("Z^k needs k >= 1");
    return GroupSpec(Kind::lattice, rank, 0);
  }

  static GroupSpec cyclic(std::int64_t n) {
    if (n < 1) throw GroupError("Z/n needs n >= 1");
    return GroupSpec(Kind::cyclic, 1, n);
  }

  /// Finite group from symbols and a multiplication table, where
  /// table[i][j] is the index of symbols[i] * symbols[j]. Group axioms are
  /// checked exhaustively.
  static GroupSpec from_table(std::vector<std::string> symbols,
                              std::vector<std::vector<std::size_t>> table) {
    const std::size_t n = symbols.size();
    if (n == 0) throw GroupError("empty group table");
    if (table.size() != n) throw GroupError("table must have one row per element");
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw GroupError("table row " + symbols[i] + " has wrong length");
      for (std::size_t x : table[i])
        if (x >= n) throw GroupError("table entry out of range in row " + symbols[i]);
      for (std::size_t j = 0; j < i; ++j)
        if (symbols[i] == symbols[j]) throw GroupError("duplicate symbol " + symbols[i]);
    }
    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = table[e][i] == i && table[i][e] == i;
      if (ok) identity = e;
    }
    if (!identity) throw GroupError("table has no identity element");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw GroupError("table is not associative at (" + symbols[a] + "," + symbols[b] +
                             "," + symbols[c] + ")");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table[a][b] == *identity && table[b][a] == *identity) inverse[a] = b;
    for (std::size_t a = 0; a < n; ++a)
      if (inverse[a] == n) throw GroupError("element " + symbols[a] + " has no inverse");

    GroupSpec g(Kind::table, 1, static_cast<std::int64_t>(n));
    g.symbols_ = std::move(symbols);
    g.table_ = std::move(table);
    g.table_identity_ = *identity;
    g.table_inverse_ = std::move(inverse);
    return g;
  }

  /// Reads a table in the format
  ///
  ///     elements: e a b
  ///     e a b
  ///     a b e
  ///     b e a
  ///
  /// Row i, column j holds symbols[i] * symbols[j]. '#' starts a comment.
  static GroupSpec parse_table(std::string_view text) {
    std::vector<std::string> symbols;
    std::vector<std::vector<std::string>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream words(line);
      std::vector<std::string> row;
      for (std::string w; words >> w;) row.push_back(w);
      if (row.empty()) continue;
      if (symbols.empty()) {
        if (row.front() != "elements:") throw GroupError("table must start with 'elements:'");
        symbols.assign(row.begin() + 1, row.end());
      } else {
        rows.push_back(std::move(row));
      }
    }
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : rows) {
      std::vector<std::size_t> r;
      for (const auto& w : row) {
        auto it = std::find(symbols.begin(), symbols.end(), w);
        if (it == symbols.end()) throw GroupError("unknown symbol '" + w + "' in table");
        r.push_back(static_cast<std::size_t>(it - symbols.begin()));
      }
      table.push_back(std::move(r));
    }
    return from_table(std::move(symbols), std::move(table));
  }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_finite() const { return kind_ == Kind::cyclic || kind_ == Kind::table; }
  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] std::int64_t order() const { return modulus_; }

  [[nodiscard]] GroupElement identity() const {
    if (kind_ == Kind::table) return {{static_cast<std::int64_t>(table_identity_)}};
    return {std::vector<std::int64_t>(rank_, 0)};
  }

  [[nodiscard]] GroupElement compose(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    switch (kind_) {
      case Kind::integers:
      case Kind::lattice: {
        GroupElement out = a;
        for (std::size_t i = 0; i < rank_; ++i) out.coords[i] += b.coords[i];
        return out;
      }
      case Kind::cyclic:
        return {{(a.coords[0] + b.coords[0]) % modulus_}};
      case Kind::table:
        return {{static_cast<std::int64_t>(
            table_[static_cast<std::size_t>(a.coords[0])][static_cast<std::size_t>(b.coords[0])])}};
    }
    return {};
  }

  [[nodiscard]] GroupElement inverse(const GroupElement& a) const {
    check(a);
    switch (kind_) {
      case Kind::integers:
      case Kind::lattice: {
        GroupElement out = a;
        for (auto& c : out.coords) c = -c;
        return out;
      }
      case Kind::cyclic:
        return {{(modulus_ - a.coords[0]) % modulus_}};
      case Kind::table:
        return {{static_cast<std::int64_t>(table_inverse_[static_cast<std::size_t>(a.coords[0])])}};
    }
    return {};
  }

  /// The element assigned to every edge by a canonical grading.
  [[nodiscard]] GroupElement generator() const {
    switch (kind_) {
      case Kind::integers:
        return {{1}};
      case Kind::lattice: {
        GroupElement g{std::vector<std::int64_t>(rank_, 0)};
        g.coords[0] = 1;
        return g;
      }
      case Kind::cyclic:
        return {{1 % modulus_}};
      case Kind::table:
        throw GroupError("a table group has no distinguished generator");
    }
    return {};
  }

  /// Every element, for finite groups, in index order.
  [[nodiscard]] std::vector<GroupElement> elements() const {
    if (!is_finite()) throw GroupError("group " + name() + " is infinite");
    std::vector<GroupElement> out;
    for (std::int64_t i = 0; i < modulus_; ++i) out.push_back({{i}});
    return out;
  }

  [[nodiscard]] GroupElement from_int(std::int64_t n) const {
    switch (kind_) {
      case Kind::integers:
        return {{n}};
      case Kind::cyclic:
        return {{((n % modulus_) + modulus_) % modulus_}};
      default:
        throw GroupError("integer literal is not an element of " + name());
    }
  }

  [[nodiscard]] std::string render(const GroupElement& a) const {
    check(a);
    if (kind_ == Kind::table) return symbols_[static_cast<std::size_t>(a.coords[0])];
    std::string out;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(a.coords[i]);
    }
    return out;
  }

  [[nodiscard]] GroupElement parse(std::string_view text) const {
    std::string s(text);
    auto trim = [](std::string x) {
      auto b = x.find_first_not_of(" \t");
      auto e = x.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
    };
    s = trim(s);
    if (kind_ == Kind::table) {
      for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == s) return {{static_cast<std::int64_t>(i)}};
      throw GroupError("unknown group element '" + s + "'");
    }
    std::vector<std::int64_t> coords;
    std::istringstream in(s);
    for (std::string part; std::getline(in, part, ',');) {
      part = trim(part);
      std::size_t used = 0;
      std::int64_t value = 0;
      try {
        value = std::stoll(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (part.empty() || used != part.size())
        throw GroupError("malformed group element '" + s + "'");
      coords.push_back(value);
    }
    if (coords.size() != rank_)
      throw GroupError("group element '" + s + "' needs " + std::to_string(rank_) +
                       " component(s)");
    if (kind_ == Kind::cyclic) return from_int(coords[0]);
    return {coords};
  }

  [[nodiscard]] std::string name() const {
    switch (kind_) {
      case Kind::integers: return "Z";
      case Kind::lattice: return "Z^" + std::to_string(rank_);
      case Kind::cyclic: return "Z/" + std::to_string(modulus_);
      case Kind::table: return "table(" + std::to_string(modulus_) + ")";
    }
    return "?";
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.modulus_ == b.modulus_ &&
           a.symbols_ == b.symbols_ && a.table_ == b.table_;
  }

 private:
  GroupSpec(Kind kind, std::size_t rank, std::int64_t modulus)
      : kind_(kind), rank_(rank), modulus_(modulus) {}

  void check(const GroupElement& a) const {
    if (a.coords.size() != rank_) throw GroupError("group element of wrong shape for " + name());
    if (is_finite() && (a.coords[0] < 0 || a.coords[0] >= modulus_))
      throw GroupError("group element out of range for " + name());
  }

  Kind kind_;
  std::size_t rank_;
  std::int64_t modulus_;  // order, for finite groups
  std::vector<std::string> symbols_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t table_identity_ = 0;
  std::vector<std::size_t> table_inverse_;
};

}  // namespace lpa
