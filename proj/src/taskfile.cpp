#include "frobforge/taskfile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "frobforge/errors.hpp"
#include "frobforge/field.hpp"
#include "frobforge/verifier.hpp"

namespace frobforge {

namespace {

enum class ValueKind { Atom, Integer, List };

struct KeySpec {
  const char* key;
  ValueKind kind;
};

const std::vector<KeySpec> kRingKeys{{"char", ValueKind::Integer},
                                     {"vars", ValueKind::List},
                                     {"order", ValueKind::Atom},
                                     {"weights", ValueKind::List},
                                     {"quotient", ValueKind::List}};

const std::vector<KeySpec> kIdealKeys{{"gens", ValueKind::List}};

const std::vector<KeySpec> kSuiteKeys{
    {"preset", ValueKind::Atom},     {"per_theorem", ValueKind::Integer},
    {"primes", ValueKind::List},     {"theorem", ValueKind::Atom},
    {"kind", ValueKind::Atom},       {"count", ValueKind::Integer},
    {"seed", ValueKind::Integer},    {"p", ValueKind::Integer},
    {"n", ValueKind::Integer},       {"max_degree", ValueKind::Integer},
    {"length", ValueKind::Integer},  {"control", ValueKind::Atom},
    {"max_e", ValueKind::Integer},   {"window", ValueKind::Integer},
    {"max_t", ValueKind::Integer}};

/// Keys accepted by `task VERB` beyond name/ideal/ring.
std::vector<KeySpec> task_keys(std::string_view verb) {
  std::vector<KeySpec> keys{{"name", ValueKind::Atom}, {"ideal", ValueKind::Atom}};
  if (!is_ideal_verb(verb)) keys.push_back({"ring", ValueKind::Atom});
  if (verb == "nf") keys.push_back({"polys", ValueKind::List});
  if (verb == "resolve" || verb == "pd") keys.push_back({"steps", ValueKind::Integer});
  if (verb == "be-check") keys.push_back({"complex", ValueKind::Atom});
  if (verb == "bracket") keys.push_back({"e", ValueKind::Integer});
  if (verb == "closure") {
    keys.push_back({"max_e", ValueKind::Integer});
    keys.push_back({"window", ValueKind::Integer});
  }
  if (verb == "serre") keys.push_back({"k", ValueKind::Integer});
  if (verb == "verify") {
    keys.push_back({"theorem", ValueKind::Atom});
    keys.push_back({"max_e", ValueKind::Integer});
    keys.push_back({"window", ValueKind::Integer});
    keys.push_back({"max_t", ValueKind::Integer});
  }
  return keys;
}

struct Pos {
  int line = 1;
  int column = 1;
};

struct RawField {
  Field field;
  Pos key_pos;
  Pos value_pos;
  std::vector<Pos> item_pos;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TaskFile run() {
    TaskFile file;
    for (;;) {
      skip_space();
      if (at_end()) break;
      const Pos where = pos_;
      const std::string word = identifier("declaration");
      if (word == "ring") {
        parse_ring(file, where);
      } else if (word == "ideal") {
        parse_ideal(file);
      } else if (word == "task") {
        parse_task(file);
      } else if (word == "suite") {
        parse_suite(file, where);
      } else {
        fail("unknown declaration '" + word + "'", where);
      }
    }
    return file;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, Pos where) const {
    throw ParseError(msg, where.line, where.column);
  }

  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[i_]; }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
               (at_end() ? std::string(" before end of input") : ""),
           pos_);
    }
    advance();
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  }

  std::string identifier(const char* what) {
    skip_space();
    const Pos where = pos_;
    std::string out;
    while (!at_end() && ident_char(peek())) {
      out += peek();
      advance();
    }
    if (out.empty()) fail(std::string("expected ") + what, where);
    return out;
  }

  static std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  RawField field(const std::vector<KeySpec>& keys, const std::set<std::string>& seen) {
    RawField raw;
    skip_space();
    raw.key_pos = pos_;
    raw.field.key = identifier("a key");
    raw.field.line = raw.key_pos.line;
    raw.field.column = raw.key_pos.column;
    auto spec = std::find_if(keys.begin(), keys.end(),
                             [&](const KeySpec& k) { return raw.field.key == k.key; });
    if (spec == keys.end()) fail("unknown key '" + raw.field.key + "'", raw.key_pos);
    if (seen.count(raw.field.key)) fail("duplicate key '" + raw.field.key + "'", raw.key_pos);
    expect(':');
    skip_space();
    raw.value_pos = pos_;
    if (peek() == '[') {
      advance();
      std::vector<std::string> items;
      std::string cur;
      Pos item_start = pos_;
      bool any = false;
      for (;;) {
        if (at_end()) fail("unterminated list", raw.value_pos);
        const char c = peek();
        if (c == '#') {
          while (!at_end() && peek() != '\n') advance();
          continue;
        }
        if (c == ',' || c == ']') {
          std::string item = trim(cur);
          if (item.empty() && (c == ',' || any)) fail("empty list item", item_start);
          if (!item.empty()) {
            items.push_back(item);
            raw.item_pos.push_back(item_start);
            any = true;
          }
          advance();
          if (c == ']') break;
          cur.clear();
          item_start = pos_;
          continue;
        }
        if (c == '{' || c == '}' || c == '[') fail(std::string("unexpected '") + c + "' in list", pos_);
        if (cur.empty() && std::isspace(static_cast<unsigned char>(c))) {
          advance();
          item_start = pos_;
          continue;
        }
        cur += c;
        advance();
      }
      if (spec->kind != ValueKind::List) fail("key '" + raw.field.key + "' takes a single value", raw.value_pos);
      raw.field.value = std::move(items);
    } else {
      std::string atom;
      while (!at_end()) {
        const char c = peek();
        if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == '[' ||
            c == ']' || c == ',' || c == ':' || c == '#') {
          break;
        }
        atom += c;
        advance();
      }
      if (atom.empty()) fail("expected a value for '" + raw.field.key + "'", raw.value_pos);
      if (spec->kind == ValueKind::List) fail("key '" + raw.field.key + "' takes a list", raw.value_pos);
      if (spec->kind == ValueKind::Integer) check_integer(atom, raw.value_pos);
      raw.field.value = std::move(atom);
    }
    return raw;
  }

  std::int64_t check_integer(const std::string& s, Pos where) const {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("expected an integer, got '" + s + "'", where);
    return v;
  }

  std::vector<RawField> body(const std::vector<KeySpec>& keys) {
    expect('{');
    std::vector<RawField> out;
    std::set<std::string> seen;
    for (;;) {
      skip_space();
      if (at_end()) fail("expected '}' before end of input", pos_);
      if (peek() == '}') {
        advance();
        break;
      }
      out.push_back(field(keys, seen));
      seen.insert(out.back().field.key);
    }
    return out;
  }

  static const RawField* get(const std::vector<RawField>& fs, const char* key) {
    for (const auto& f : fs) {
      if (f.field.key == key) return &f;
    }
    return nullptr;
  }

  static const std::vector<std::string>& items(const RawField& f) {
    return std::get<std::vector<std::string>>(f.field.value);
  }
  static const std::string& atom(const RawField& f) { return std::get<std::string>(f.field.value); }

  /// Rethrows polynomial-level errors at the item position in the file.
  Polynomial polynomial(const RingPtr& P, const std::string& text, Pos where, bool homogeneous) const {
    try {
      auto f = parse_polynomial(text, P);
      if (homogeneous && !f.is_homogeneous()) {
        fail("inhomogeneous polynomial '" + text + "'", where);
      }
      return f;
    } catch (const ParseError& e) {
      std::string msg = e.what();
      if (auto at = msg.rfind(" at "); at != std::string::npos) msg.resize(at);
      if (e.line() == 1 && where.line > 0) {
        // the item lies on one line of the file
        fail(msg, Pos{where.line, where.column + e.column() - 1});
      }
      fail(msg, where);
    } catch (const Error& e) {
      fail(e.what(), where);
    }
  }

  void check_name(const std::string& name, Pos where, TaskFile& file) const {
    if (file.find_ring(name) || file.find_ideal(name)) fail("duplicate name '" + name + "'", where);
  }

  void parse_ring(TaskFile& file, Pos) {
    skip_space();
    const Pos name_pos = pos_;
    RingDecl decl;
    decl.name = identifier("a ring name");
    check_name(decl.name, name_pos, file);
    auto fs = body(kRingKeys);
    const auto* ch = get(fs, "char");
    const auto* vars = get(fs, "vars");
    if (!ch) fail("ring '" + decl.name + "' needs a char field", name_pos);
    if (!vars) fail("ring '" + decl.name + "' needs a vars field", name_pos);
    const auto p = check_integer(atom(*ch), ch->value_pos);
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
      fail("characteristic must be prime", ch->value_pos);
    }
    decl.characteristic = static_cast<std::uint32_t>(p);
    decl.vars = items(*vars);
    if (decl.vars.empty()) fail("vars must not be empty", vars->value_pos);
    std::set<std::string> uniq;
    for (std::size_t k = 0; k < decl.vars.size(); ++k) {
      const auto& v = decl.vars[k];
      const bool ok = std::isalpha(static_cast<unsigned char>(v[0])) &&
                      std::all_of(v.begin(), v.end(), [](char c) {
                        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                      });
      if (!ok) fail("invalid variable name '" + v + "'", vars->item_pos[k]);
      if (!uniq.insert(v).second) fail("duplicate variable '" + v + "'", vars->item_pos[k]);
    }
    MonomialOrder order = MonomialOrder::grevlex();
    if (const auto* o = get(fs, "order")) {
      const auto& name = atom(*o);
      if (name == "grevlex") {
        order = MonomialOrder::grevlex();
      } else if (name == "lex") {
        order = MonomialOrder::lex();
      } else if (name.rfind("elim(", 0) == 0 && name.back() == ')') {
        const auto block = check_integer(name.substr(5, name.size() - 6), o->value_pos);
        if (block < 1 || block >= static_cast<std::int64_t>(decl.vars.size())) {
          fail("elimination block out of range", o->value_pos);
        }
        order = MonomialOrder::elimination(static_cast<std::size_t>(block));
      } else {
        fail("unknown monomial order '" + name + "'", o->value_pos);
      }
      decl.order = order.name();
    }
    if (const auto* w = get(fs, "weights")) {
      const auto& ws = items(*w);
      if (ws.size() != decl.vars.size()) fail("weights must match vars in length", w->value_pos);
      for (std::size_t k = 0; k < ws.size(); ++k) {
        const auto v = check_integer(ws[k], w->item_pos[k]);
        if (v < 1) fail("weights must be positive", w->item_pos[k]);
        decl.weights.push_back(v);
      }
    }
    RingPtr P;
    try {
      P = PolyRing::make(decl.characteristic, decl.vars, order, decl.weights);
    } catch (const Error& e) {
      fail(e.what(), name_pos);
    }
    std::vector<Polynomial> quotient;
    if (const auto* q = get(fs, "quotient")) {
      const auto& qs = items(*q);
      for (std::size_t k = 0; k < qs.size(); ++k) {
        auto f = polynomial(P, qs[k], q->item_pos[k], true);
        decl.quotient.push_back(f.to_string());
        quotient.push_back(std::move(f));
      }
    }
    decl.ring = RingDescriptor::over(P, std::move(quotient));
    file.rings.push_back(std::move(decl));
  }

  void parse_ideal(TaskFile& file) {
    skip_space();
    const Pos name_pos = pos_;
    IdealDecl decl;
    decl.name = identifier("an ideal name");
    check_name(decl.name, name_pos, file);
    skip_space();
    const Pos in_pos = pos_;
    if (identifier("'in'") != "in") fail("expected 'in'", in_pos);
    skip_space();
    const Pos ring_pos = pos_;
    decl.ring = identifier("a ring name");
    const auto* ring = file.find_ring(decl.ring);
    if (!ring) fail("undeclared ring '" + decl.ring + "'", ring_pos);
    auto fs = body(kIdealKeys);
    std::vector<Polynomial> gens;
    if (const auto* g = get(fs, "gens")) {
      const auto& gs = items(*g);
      for (std::size_t k = 0; k < gs.size(); ++k) {
        auto f = polynomial(ring->ring->poly(), gs[k], g->item_pos[k], true);
        decl.gens.push_back(f.to_string());
        gens.push_back(std::move(f));
      }
    }
    decl.ideal = Ideal(ring->ring, std::move(gens));
    file.ideals.push_back(std::move(decl));
  }

  void resolve_target(const std::vector<RawField>& fs, const TaskFile& file, bool ring_ok) const {
    if (const auto* f = get(fs, "ideal")) {
      if (!file.find_ideal(atom(*f))) fail("undeclared ideal '" + atom(*f) + "'", f->value_pos);
    }
    if (const auto* f = get(fs, "ring")) {
      if (!ring_ok) fail("this verb takes an ideal", f->key_pos);
      if (!file.find_ring(atom(*f))) fail("undeclared ring '" + atom(*f) + "'", f->value_pos);
      if (get(fs, "ideal")) fail("give either ring or ideal, not both", f->key_pos);
    }
  }

  static Block to_block(std::string verb, std::vector<RawField> fs, int line) {
    Block b;
    b.verb = std::move(verb);
    b.line = line;
    for (auto& f : fs) b.fields.push_back(std::move(f.field));
    return b;
  }

  void parse_task(TaskFile& file) {
    skip_space();
    const Pos verb_pos = pos_;
    const std::string verb = identifier("a verb");
    const auto& verbs = command_verbs();
    if (verb == "suite" || std::find(verbs.begin(), verbs.end(), verb) == verbs.end()) {
      fail("unknown verb '" + verb + "'", verb_pos);
    }
    auto fs = body(task_keys(verb));
    resolve_target(fs, file, !is_ideal_verb(verb));
    if (verb == "be-check") {
      if (const auto* c = get(fs, "complex")) {
        if (atom(*c) != "koszul" && atom(*c) != "resolution") {
          fail("complex must be koszul or resolution", c->value_pos);
        }
      }
    }
    if (verb == "verify") {
      if (const auto* t = get(fs, "theorem")) {
        if (!find_theorem(atom(*t))) fail("unknown theorem '" + atom(*t) + "'", t->value_pos);
      }
    }
    if (verb == "nf") {
      const auto* p = get(fs, "polys");
      if (!p) fail("nf needs a polys field", verb_pos);
      if (const auto* target = get(fs, "ideal")) {
        const auto& R = file.find_ideal(atom(*target))->ideal.ring();
        for (std::size_t k = 0; k < items(*p).size(); ++k) {
          polynomial(R->poly(), items(*p)[k], p->item_pos[k], false);
        }
      }
    }
    for (const auto& f : fs) {
      if (std::holds_alternative<std::string>(f.field.value) && f.field.key != "name" &&
          f.field.key != "ideal" && f.field.key != "ring" && f.field.key != "complex" &&
          f.field.key != "theorem" && check_integer(atom(f), f.value_pos) < 0) {
        fail("'" + f.field.key + "' must be non-negative", f.value_pos);
      }
    }
    file.tasks.push_back(to_block(verb, std::move(fs), verb_pos.line));
  }

  void parse_suite(TaskFile& file, Pos where) {
    auto fs = body(kSuiteKeys);
    if (const auto* pr = get(fs, "preset")) {
      if (atom(*pr) != "default") fail("unknown preset '" + atom(*pr) + "'", pr->value_pos);
      for (const char* k : {"theorem", "kind", "count", "p", "n", "max_degree", "length", "control"}) {
        if (const auto* f = get(fs, k)) fail(std::string("'") + k + "' does not apply to a preset", f->key_pos);
      }
    } else {
      const auto* th = get(fs, "theorem");
      const auto* kind = get(fs, "kind");
      if (!th || !kind) fail("a suite entry needs theorem and kind (or a preset)", where);
      if (!find_theorem(atom(*th))) fail("unknown theorem '" + atom(*th) + "'", th->value_pos);
      if (!parse_instance_kind(atom(*kind))) fail("unknown instance kind '" + atom(*kind) + "'", kind->value_pos);
      if (const auto* prs = get(fs, "primes")) fail("'primes' applies to a preset; use p", prs->key_pos);
      if (const auto* c = get(fs, "control")) {
        if (atom(*c) != "true" && atom(*c) != "false") fail("control must be true or false", c->value_pos);
      }
    }
    if (const auto* prs = get(fs, "primes")) {
      const auto& ps = items(*prs);
      for (std::size_t k = 0; k < ps.size(); ++k) {
        const auto v = check_integer(ps[k], prs->item_pos[k]);
        if (v < 2 || !is_prime(static_cast<std::uint64_t>(v))) fail("characteristic must be prime", prs->item_pos[k]);
      }
    }
    if (const auto* pf = get(fs, "p")) {
      const auto v = check_integer(atom(*pf), pf->value_pos);
      if (v < 2 || v >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(v))) {
        fail("characteristic must be prime", pf->value_pos);
      }
    }
    for (const auto& f : fs) {
      if (f.field.key == "seed" || !std::holds_alternative<std::string>(f.field.value)) continue;
      if (f.field.key == "preset" || f.field.key == "theorem" || f.field.key == "kind" ||
          f.field.key == "control") {
        continue;
      }
      if (check_integer(atom(f), f.value_pos) < 0) fail("'" + f.field.key + "' must be non-negative", f.value_pos);
    }
    file.suites.push_back(to_block("suite", std::move(fs), where.line));
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Pos pos_;
};

void print_list(std::ostream& out, const std::vector<std::string>& items) {
  out << '[';
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? ", " : "") << items[i];
  out << ']';
}

void print_fields(std::ostream& out, const std::vector<Field>& fields) {
  for (const auto& f : fields) {
    out << "  " << f.key << ": ";
    if (const auto* a = std::get_if<std::string>(&f.value)) {
      out << *a;
    } else {
      print_list(out, std::get<std::vector<std::string>>(f.value));
    }
    out << '\n';
  }
}

}  // namespace

const Field* Block::find(std::string_view key) const {
  for (const auto& f : fields) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

const std::string* Block::atom(std::string_view key) const {
  const auto* f = find(key);
  return f ? std::get_if<std::string>(&f->value) : nullptr;
}

const std::vector<std::string>* Block::list(std::string_view key) const {
  const auto* f = find(key);
  return f ? std::get_if<std::vector<std::string>>(&f->value) : nullptr;
}

std::optional<std::int64_t> Block::integer(std::string_view key) const {
  const auto* a = atom(key);
  if (!a) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(a->data(), a->data() + a->size(), v);
  if (ec != std::errc() || ptr != a->data() + a->size()) return std::nullopt;
  return v;
}

const RingDecl* TaskFile::find_ring(std::string_view name) const {
  for (const auto& r : rings) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const IdealDecl* TaskFile::find_ideal(std::string_view name) const {
  for (const auto& i : ideals) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

const std::vector<std::string>& command_verbs() {
  static const std::vector<std::string> verbs{
      "gb",     "nf",      "dim",     "resolve", "pd",      "grade",  "koszul",
      "be-check", "bracket", "closure", "radical", "serre", "profile", "reduced",
      "normal", "domain",  "verify",  "suite"};
  return verbs;
}

bool is_ideal_verb(std::string_view verb) {
  static const std::set<std::string, std::less<>> ring_verbs{"serre", "profile", "reduced",
                                                             "normal", "domain", "suite"};
  return !ring_verbs.count(verb);
}

TaskFile parse_taskfile(std::string_view text) { return Parser(text).run(); }

std::string print_taskfile(const TaskFile& file) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << '\n';
    first = false;
  };
  for (const auto& r : file.rings) {
    sep();
    out << "ring " << r.name << " {\n  char: " << r.characteristic << "\n  vars: ";
    print_list(out, r.vars);
    out << "\n  order: " << r.order << '\n';
    if (!r.weights.empty()) {
      std::vector<std::string> ws;
      for (auto w : r.weights) ws.push_back(std::to_string(w));
      out << "  weights: ";
      print_list(out, ws);
      out << '\n';
    }
    if (!r.quotient.empty()) {
      out << "  quotient: ";
      print_list(out, r.quotient);
      out << '\n';
    }
    out << "}\n";
  }
  for (const auto& i : file.ideals) {
    sep();
    out << "ideal " << i.name << " in " << i.ring << " {\n  gens: ";
    print_list(out, i.gens);
    out << "\n}\n";
  }
  for (const auto& t : file.tasks) {
    sep();
    out << "task " << t.verb << " {\n";
    print_fields(out, t.fields);
    out << "}\n";
  }
  for (const auto& s : file.suites) {
    sep();
    out << "suite {\n";
    print_fields(out, s.fields);
    out << "}\n";
  }
  return out.str();
}

}  // namespace frobforge
