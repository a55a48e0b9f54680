//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/smarts.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "fragit/elements.hpp"
#include "fragit/error.hpp"

namespace fragit {

bool operator==(const AtomPrimitive &x, const AtomPrimitive &y) {
  if (x.kind != y.kind || x.value != y.value)
    return false;
  if (x.kind != AtomPrimitive::Kind::kRecursive)
    return true;
  if (!x.recursive || !y.recursive)
    return x.recursive == y.recursive;
  return *x.recursive == *y.recursive;
}

namespace {

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Element symbols accepted outside brackets.
constexpr std::string_view kOrganic[] = {"Cl", "Br", "B", "C", "N", "O",
                                         "P",  "S",  "F", "I", "H"};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  SmartsPattern parse() {
    SmartsPattern p = parse_pattern(false);
    if (pos_ < text_.size())
      syntax_error(pos_, "unbalanced ')'");
    return p;
  }

private:
  struct OpenRing {
    int atom;
    BondKind kind;
    std::size_t offset;
  };

  [[noreturn]] void syntax_error(std::size_t at, const std::string &what) {
    throw Error(ErrorKind::kPattern, "SMARTS syntax error at offset " +
                                         std::to_string(at) + " in '" +
                                         std::string(text_) + "': " + what);
  }

  [[noreturn]] void unsupported(std::size_t at, std::string_view token) {
    throw Error(ErrorKind::kUnsupportedFeature,
                "unsupported SMARTS feature '" + std::string(token) +
                    "' at offset " + std::to_string(at) + " in '" +
                    std::string(text_) + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  SmartsPattern parse_pattern(bool nested) {
    const std::size_t start = pos_;
    SmartsPattern p;
    std::map<int, OpenRing> open;
    if (at_end() || peek() == ')')
      syntax_error(pos_, "empty pattern");
    parse_chain(p, open, -1, BondKind::kDefault);
    if (!nested && !at_end() && peek() != ')')
      syntax_error(pos_, "unexpected character");
    if (!open.empty()) {
      const auto &[digit, ring] = *open.begin();
      syntax_error(ring.offset,
                   "ring-closure digit " + std::to_string(digit) +
                       " is never closed");
    }
    p.source = std::string(text_.substr(start, pos_ - start));
    return p;
  }

  void parse_chain(SmartsPattern &p, std::map<int, OpenRing> &open, int from,
                   BondKind bond) {
    int prev = parse_branched_atom(p, open, from, bond);
    while (!at_end() && peek() != ')') {
      const std::size_t bond_at = pos_;
      const BondKind next = parse_bond();
      if (at_end() || peek() == ')' || peek() == '(')
        syntax_error(bond_at, "bond is not followed by an atom");
      prev = parse_branched_atom(p, open, prev, next);
    }
  }

  int parse_branched_atom(SmartsPattern &p, std::map<int, OpenRing> &open,
                          int from, BondKind bond) {
    const int idx = parse_atom(p, from);
    if (from >= 0)
      p.bonds.push_back({from, idx, bond});

    for (;;) {
      const std::size_t save = pos_;
      const BondKind kind = parse_bond();
      if (peek() == '%')
        unsupported(pos_, "%");
      if (!is_digit(peek())) {
        pos_ = save;
        break;
      }
      const std::size_t digit_at = pos_;
      const int digit = peek() - '0';
      if (digit == 0)
        unsupported(digit_at, "0");
      ++pos_;
      close_or_open_ring(p, open, idx, digit, kind, digit_at);
    }

    while (peek() == '(') {
      const std::size_t open_at = pos_;
      ++pos_;
      const std::size_t bond_at = pos_;
      const BondKind kind = parse_bond();
      if (at_end() || peek() == ')')
        syntax_error(bond_at, "empty branch");
      parse_chain(p, open, idx, kind);
      if (peek() != ')')
        syntax_error(open_at, "unbalanced '('");
      ++pos_;
    }
    return idx;
  }

  void close_or_open_ring(SmartsPattern &p, std::map<int, OpenRing> &open,
                          int idx, int digit, BondKind kind,
                          std::size_t digit_at) {
    p.ring_tokens[static_cast<std::size_t>(idx)].push_back({digit, kind});
    auto it = open.find(digit);
    if (it == open.end()) {
      open.emplace(digit, OpenRing{idx, kind, digit_at});
      return;
    }
    const OpenRing ring = it->second;
    open.erase(it);
    BondKind resolved = ring.kind;
    if (kind != BondKind::kDefault) {
      if (ring.kind != BondKind::kDefault && ring.kind != kind)
        syntax_error(digit_at, "conflicting bond symbols on ring closure");
      resolved = kind;
    }
    if (ring.atom == idx)
      syntax_error(digit_at, "ring closure bonds an atom to itself");
    for (const auto &b : p.bonds) {
      if (b.i == ring.atom && b.j == idx)
        syntax_error(digit_at, "ring closure duplicates an existing bond");
    }
    p.bonds.push_back({ring.atom, idx, resolved});
    p.ring_closures.push_back({digit, ring.atom, idx});
  }

  BondKind parse_bond() {
    switch (peek()) {
    case '-':
      ++pos_;
      return BondKind::kSingle;
    case '=':
      ++pos_;
      return BondKind::kDouble;
    case '#':
      ++pos_;
      return BondKind::kTriple;
    case '~':
    case ':':
    case '/':
    case '\\':
    case '@':
    case '!':
    case ',':
    case ';':
    case '&':
    case '.':
      unsupported(pos_, std::string_view(&text_[pos_], 1));
    default:
      return BondKind::kDefault;
    }
  }

  int new_atom(SmartsPattern &p, int from, AtomExpr expr) {
    p.atoms.push_back(std::move(expr));
    p.parent.push_back(from);
    p.ring_tokens.emplace_back();
    return static_cast<int>(p.atoms.size()) - 1;
  }

  static AtomPrimitive element(int z) {
    return {AtomPrimitive::Kind::kElement, z, nullptr};
  }

  int parse_atom(SmartsPattern &p, int from) {
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '[')
      return new_atom(p, from, parse_bracket());
    if (c == '*') {
      ++pos_;
      return new_atom(p, from,
                      AtomExpr{{{AtomPrimitive::Kind::kWildcard, 0, nullptr}}});
    }
    if (is_upper(c)) {
      for (auto sym : kOrganic) {
        if (text_.substr(pos_, sym.size()) != sym)
          continue;
        pos_ += sym.size();
        AtomExpr expr{{element(*element_from_symbol(sym))}};
        // "NH2" is shorthand for [NH2]: a bare H right after a bare heavy
        // atom is a hydrogen count, not a hydrogen atom.
        if (sym != "H" && peek() == 'H' && !is_lower(peek(1))) {
          ++pos_;
          expr.primitives.push_back(
              {AtomPrimitive::Kind::kHydrogenCount, read_count(1), nullptr});
        }
        return new_atom(p, from, std::move(expr));
      }
      unsupported(at, std::string_view(&text_[at], 1));
    }
    if (is_lower(c))
      unsupported(at, std::string_view(&text_[at], 1));
    if (c == '\0')
      syntax_error(at, "expected an atom");
    if (c == '(' || c == ')')
      syntax_error(at, "expected an atom");
    if (is_digit(c))
      syntax_error(at, "ring-closure digit without a preceding atom");
    if (c == '$')
      syntax_error(at, "'$(' is only allowed inside brackets");
    if (c == ']')
      syntax_error(at, "unexpected ']'");
    unsupported(at, std::string_view(&text_[at], 1));
  }

  int read_count(int fallback) {
    if (!is_digit(peek()))
      return fallback;
    int n = 0;
    while (is_digit(peek())) {
      n = n * 10 + (peek() - '0');
      ++pos_;
      if (n > 99)
        syntax_error(pos_, "count too large");
    }
    return n;
  }

  AtomExpr parse_bracket() {
    const std::size_t open_at = pos_;
    ++pos_;
    AtomExpr expr;
    for (;;) {
      if (at_end())
        syntax_error(open_at, "unterminated '['");
      const std::size_t at = pos_;
      const char c = peek();
      if (c == ']') {
        ++pos_;
        break;
      }
      if (c == '*') {
        ++pos_;
        expr.primitives.push_back({AtomPrimitive::Kind::kWildcard, 0, nullptr});
      } else if (c == '$') {
        if (peek(1) != '(')
          syntax_error(at, "expected '(' after '$'");
        pos_ += 2;
        auto nested = std::make_shared<SmartsPattern>(parse_pattern(true));
        if (peek() != ')')
          syntax_error(at, "unterminated '$('");
        ++pos_;
        expr.primitives.push_back(
            {AtomPrimitive::Kind::kRecursive, 0, std::move(nested)});
      } else if (c == '+' || c == '-') {
        const int sign = c == '+' ? 1 : -1;
        ++pos_;
        int magnitude = 1;
        if (is_digit(peek())) {
          magnitude = read_count(1);
        } else {
          while (peek() == c) {
            ++magnitude;
            ++pos_;
          }
        }
        expr.primitives.push_back(
            {AtomPrimitive::Kind::kCharge, sign * magnitude, nullptr});
      } else if (c == 'H' && !is_lower(peek(1)) &&
                 !(expr.primitives.empty() && !is_digit(peek(1)))) {
        ++pos_;
        expr.primitives.push_back(
            {AtomPrimitive::Kind::kHydrogenCount, read_count(1), nullptr});
      } else if (is_upper(c)) {
        std::optional<int> z;
        std::size_t len = 1;
        if (is_lower(peek(1))) {
          z = element_from_symbol(text_.substr(pos_, 2));
          len = 2;
        }
        if (!z) {
          z = element_from_symbol(text_.substr(pos_, 1));
          len = 1;
        }
        if (!z)
          unsupported(at, text_.substr(at, 1));
        pos_ += len;
        expr.primitives.push_back(element(*z));
      } else if (is_lower(c) || is_digit(c) || c == '#') {
        unsupported(at, text_.substr(at, 1));
      } else {
        unsupported(at, text_.substr(at, 1));
      }
    }
    if (expr.primitives.empty())
      syntax_error(open_at, "empty bracket atom");
    return expr;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char *bond_symbol(BondKind kind) {
  switch (kind) {
  case BondKind::kDefault:
    return "";
  case BondKind::kSingle:
    return "-";
  case BondKind::kDouble:
    return "=";
  case BondKind::kTriple:
    return "#";
  }
  return "";
}

std::string atom_text(const AtomExpr &expr) {
  if (expr.primitives.size() == 1) {
    const auto &only = expr.primitives.front();
    if (only.kind == AtomPrimitive::Kind::kWildcard)
      return "*";
    if (only.kind == AtomPrimitive::Kind::kElement && only.value != 1) {
      const auto sym = element_symbol(only.value);
      for (auto organic : kOrganic) {
        if (organic == sym)
          return sym;
      }
    }
  }
  std::string out = "[";
  for (std::size_t k = 0; k < expr.primitives.size(); ++k) {
    const auto &prim = expr.primitives[k];
    switch (prim.kind) {
    case AtomPrimitive::Kind::kElement:
      out += element_symbol(prim.value);
      break;
    case AtomPrimitive::Kind::kWildcard:
      out += '*';
      break;
    case AtomPrimitive::Kind::kHydrogenCount:
      out += 'H';
      if (k == 0 || prim.value != 1)
        out += std::to_string(prim.value);
      break;
    case AtomPrimitive::Kind::kCharge:
      out += prim.value < 0 ? '-' : '+';
      if (prim.value != 1 && prim.value != -1)
        out += std::to_string(prim.value < 0 ? -prim.value : prim.value);
      break;
    case AtomPrimitive::Kind::kRecursive:
      out += "$(" + unparse_smarts(*prim.recursive) + ")";
      break;
    }
  }
  return out + "]";
}

// Precomputed visiting order for one pattern.
struct Plan {
  std::vector<int> order;   // pattern atoms in assignment order
  std::vector<int> anchor;  // earlier-assigned neighbour, -1 for the seed
  // For each position: (earlier pattern atom, bond kind) pairs to verify.
  std::vector<std::vector<std::pair<int, BondKind>>> checks;
};

Plan make_plan(const SmartsPattern &p, int seed,
               const std::vector<std::size_t> &weight) {
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<std::pair<int, BondKind>>> adj(
      static_cast<std::size_t>(n));
  for (const auto &b : p.bonds) {
    adj[static_cast<std::size_t>(b.i)].emplace_back(b.j, b.kind);
    adj[static_cast<std::size_t>(b.j)].emplace_back(b.i, b.kind);
  }
  Plan plan;
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  auto place = [&](int atom) {
    position[static_cast<std::size_t>(atom)] =
        static_cast<int>(plan.order.size());
    plan.order.push_back(atom);
    int anchor = -1;
    std::vector<std::pair<int, BondKind>> checks;
    for (auto [other, kind] : adj[static_cast<std::size_t>(atom)]) {
      if (position[static_cast<std::size_t>(other)] < 0 || other == atom)
        continue;
      if (anchor < 0 || position[static_cast<std::size_t>(other)] <
                            position[static_cast<std::size_t>(anchor)])
        anchor = other;
      checks.emplace_back(other, kind);
    }
    plan.anchor.push_back(anchor);
    plan.checks.push_back(std::move(checks));
  };
  place(seed);
  while (static_cast<int>(plan.order.size()) < n) {
    int best = -1;
    for (int a = 0; a < n; ++a) {
      if (position[static_cast<std::size_t>(a)] >= 0)
        continue;
      bool frontier = false;
      for (auto [other, kind] : adj[static_cast<std::size_t>(a)])
        frontier |= position[static_cast<std::size_t>(other)] >= 0;
      if (!frontier)
        continue;
      if (best < 0 || weight[static_cast<std::size_t>(a)] <
                          weight[static_cast<std::size_t>(best)])
        best = a;
    }
    if (best < 0)
      throw Error(ErrorKind::kPattern, "pattern graph is disconnected");
    place(best);
  }
  return plan;
}

class Matcher {
public:
  explicit Matcher(const Molecule &mol) : mol_(mol) {}

  std::vector<Match> all(const SmartsPattern &p) {
    const int n = static_cast<int>(mol_.size());
    const std::size_t m = p.size();
    std::vector<std::vector<char>> ok(m, std::vector<char>(
                                             static_cast<std::size_t>(n) + 1));
    std::vector<std::size_t> weight(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      for (int a = 1; a <= n; ++a) {
        if (atom_matches(p.atoms[k], a)) {
          ok[k][static_cast<std::size_t>(a)] = 1;
          ++weight[k];
        }
      }
    }
    std::vector<Match> out;
    if (m == 0)
      return out;
    int seed = 0;
    for (std::size_t k = 1; k < m; ++k) {
      if (weight[k] < weight[static_cast<std::size_t>(seed)])
        seed = static_cast<int>(k);
    }
    if (weight[static_cast<std::size_t>(seed)] == 0)
      return out;
    const Plan plan = make_plan(p, seed, weight);
    auto accept = [&](int pattern_atom, int a) {
      return ok[static_cast<std::size_t>(pattern_atom)]
               [static_cast<std::size_t>(a)] != 0;
    };
    std::vector<int> image(m, 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int a = 1; a <= n; ++a) {
      if (!accept(seed, a))
        continue;
      extend(plan, accept, 0, a, image, used, [&] {
        out.push_back({image});
        return false;
      });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  // Places `a` at plan position `depth` and recurses. `emit` returns true to
  // stop the search early.
  template <class Accept, class Emit>
  bool extend(const Plan &plan, Accept &accept, std::size_t depth, int a,
              std::vector<int> &image, std::vector<char> &used, Emit &&emit) {
    const int pattern_atom = plan.order[depth];
    for (auto [other, kind] : plan.checks[depth]) {
      if (!bond_kind_matches(
              kind, mol_.bond_order(a, image[static_cast<std::size_t>(other)])))
        return false;
    }
    image[static_cast<std::size_t>(pattern_atom)] = a;
    used[static_cast<std::size_t>(a)] = 1;
    bool stop = false;
    if (depth + 1 == plan.order.size()) {
      stop = emit();
    } else {
      const int next = plan.order[depth + 1];
      const int anchor_image =
          image[static_cast<std::size_t>(plan.anchor[depth + 1])];
      for (int b : mol_.neighbors(anchor_image)) {
        if (used[static_cast<std::size_t>(b)] || !accept(next, b))
          continue;
        if (extend(plan, accept, depth + 1, b, image, used, emit)) {
          stop = true;
          break;
        }
      }
    }
    used[static_cast<std::size_t>(a)] = 0;
    image[static_cast<std::size_t>(pattern_atom)] = 0;
    return stop;
  }

  bool atom_matches(const AtomExpr &expr, int a) {
    const Atom &atom = mol_.atom(a);
    for (const auto &prim : expr.primitives) {
      switch (prim.kind) {
      case AtomPrimitive::Kind::kElement:
        if (atom.element != prim.value)
          return false;
        break;
      case AtomPrimitive::Kind::kWildcard:
        break;
      case AtomPrimitive::Kind::kHydrogenCount:
        if (atom.attached_hydrogens != prim.value)
          return false;
        break;
      case AtomPrimitive::Kind::kCharge:
        if (atom.formal_charge != prim.value)
          return false;
        break;
      case AtomPrimitive::Kind::kRecursive:
        if (!anchored(*prim.recursive, a))
          return false;
        break;
      }
    }
    return true;
  }

  // True when some match of p maps its first atom onto a.
  bool anchored(const SmartsPattern &p, int a) {
    auto &memo = memo_[&p];
    if (memo.empty())
      memo.assign(mol_.size() + 1, -1);
    auto &slot = memo[static_cast<std::size_t>(a)];
    if (slot >= 0)
      return slot != 0;

    auto plan_it = plans_.find(&p);
    if (plan_it == plans_.end()) {
      std::vector<std::size_t> weight(p.size(), 1);
      plan_it = plans_.emplace(&p, make_plan(p, 0, weight)).first;
    }
    const Plan &plan = plan_it->second;
    bool found = false;
    if (atom_matches(p.atoms[0], a)) {
      auto accept = [&](int pattern_atom, int b) {
        return atom_matches(p.atoms[static_cast<std::size_t>(pattern_atom)], b);
      };
      std::vector<int> image(p.size(), 0);
      std::vector<char> used(mol_.size() + 1, 0);
      found = extend(plan, accept, 0, a, image, used, [] { return true; });
    }
    slot = found ? 1 : 0;
    return found;
  }

  const Molecule &mol_;
  std::unordered_map<const SmartsPattern *, std::vector<signed char>> memo_;
  std::unordered_map<const SmartsPattern *, Plan> plans_;
};

} // namespace

SmartsPattern parse_smarts(std::string_view text) {
  return Parser(text).parse();
}

std::string unparse_smarts(const SmartsPattern &pattern) {
  std::string out;
  std::map<std::pair<int, int>, BondKind> tree;
  for (const auto &b : pattern.bonds)
    tree[{b.i, b.j}] = b.kind;
  std::function<void(int)> write = [&](int k) {
    out += atom_text(pattern.atoms[static_cast<std::size_t>(k)]);
    for (const auto &tok : pattern.ring_tokens[static_cast<std::size_t>(k)]) {
      out += bond_symbol(tok.written);
      out += static_cast<char>('0' + tok.digit);
    }
    std::vector<int> children;
    for (std::size_t c = 0; c < pattern.parent.size(); ++c) {
      if (pattern.parent[c] == k)
        children.push_back(static_cast<int>(c));
    }
    for (std::size_t c = 0; c < children.size(); ++c) {
      const bool last = c + 1 == children.size();
      if (!last)
        out += '(';
      out += bond_symbol(tree.at({k, children[c]}));
      write(children[c]);
      if (!last)
        out += ')';
    }
  };
  if (!pattern.atoms.empty())
    write(0);
  return out;
}

bool bond_kind_matches(BondKind kind, int order) {
  switch (kind) {
  case BondKind::kDefault:
  case BondKind::kSingle:
    return order == 1;
  case BondKind::kDouble:
    return order == 2;
  case BondKind::kTriple:
    return order == 3;
  }
  return false;
}

std::vector<Match> match_all(const Molecule &mol, const SmartsPattern &pattern) {
  return Matcher(mol).all(pattern);
}

std::vector<std::vector<int>> match_first_atoms(const Molecule &mol,
                                                const SmartsPattern &pattern) {
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  for (auto &m : match_all(mol, pattern)) {
    if (seen.insert(m.mapping).second)
      out.push_back(std::move(m.mapping));
  }
  return out;
}

} // namespace fragit
