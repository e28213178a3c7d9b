#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "frobforge/groebner.hpp"

namespace frobforge {

/// A field value: a single atom or a bracketed list.
using FieldValue = std::variant<std::string, std::vector<std::string>>;

struct Field {
  std::string key;
  FieldValue value;
  int line = 0;
  int column = 0;

  friend bool operator==(const Field& a, const Field& b) {
    return a.key == b.key && a.value == b.value;
  }
};

struct RingDecl {
  std::string name;
  std::uint32_t characteristic = 2;
  std::vector<std::string> vars;
  /// "grevlex" or "lex".
  std::string order = "grevlex";
  std::vector<std::int64_t> weights;
  /// Canonical polynomial text.
  std::vector<std::string> quotient;
  Ring ring;

  friend bool operator==(const RingDecl& a, const RingDecl& b) {
    return a.name == b.name && a.characteristic == b.characteristic && a.vars == b.vars &&
           a.order == b.order && a.weights == b.weights && a.quotient == b.quotient;
  }
};

struct IdealDecl {
  std::string name;
  std::string ring;
  std::vector<std::string> gens;
  Ideal ideal;

  friend bool operator==(const IdealDecl& a, const IdealDecl& b) {
    return a.name == b.name && a.ring == b.ring && a.gens == b.gens;
  }
};

/// `task VERB { ... }` or `suite { ... }` (verb "suite").
struct Block {
  std::string verb;
  std::vector<Field> fields;
  int line = 0;

  const Field* find(std::string_view key) const;
  /// Typed accessors; values were validated by the parser.
  const std::string* atom(std::string_view key) const;
  const std::vector<std::string>* list(std::string_view key) const;
  std::optional<std::int64_t> integer(std::string_view key) const;

  friend bool operator==(const Block& a, const Block& b) {
    return a.verb == b.verb && a.fields == b.fields;
  }
};

struct TaskFile {
  std::vector<RingDecl> rings;
  std::vector<IdealDecl> ideals;
  std::vector<Block> tasks;
  std::vector<Block> suites;

  const RingDecl* find_ring(std::string_view name) const;
  const IdealDecl* find_ideal(std::string_view name) const;

  friend bool operator==(const TaskFile& a, const TaskFile& b) {
    return a.rings == b.rings && a.ideals == b.ideals && a.tasks == b.tasks &&
           a.suites == b.suites;
  }
};

const std::vector<std::string>& command_verbs();
/// Verbs acting on an ideal (the rest act on a ring).
bool is_ideal_verb(std::string_view verb);

/// Throws ParseError with the line and column of the offending token.
TaskFile parse_taskfile(std::string_view text);

/// Canonical text; parse_taskfile(print_taskfile(t)) == t.
std::string print_taskfile(const TaskFile& file);

}  // namespace frobforge
