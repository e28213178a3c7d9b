#include "frobforge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "frobforge/errors.hpp"

namespace frobforge {

namespace {

constexpr std::uint64_t kExponentLimit = std::numeric_limits<std::uint32_t>::max() / 2;

void require_ring(const RingPtr& r) {
  if (!r) throw InvalidArgument("polynomial without ambient ring");
}

}  // namespace

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars,
                   MonomialOrder order, std::vector<std::int64_t> weights)
    : field_(field),
      vars_(std::move(vars)),
      order_(order),
      weights_(std::move(weights)) {
  if (vars_.size() > kMaxVars) {
    throw InvalidArgument("at most " + std::to_string(kMaxVars) +
                          " variables supported");
  }
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size()) {
    throw InvalidArgument("weight list does not match variable count");
  }
  for (auto w : weights_) {
    if (w <= 0) throw InvalidArgument("variable weights must be positive");
  }
  if (order_.kind() == MonomialOrder::Kind::Elimination &&
      order_.block() > vars_.size()) {
    throw InvalidArgument("elimination block exceeds variable count");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) {
        throw InvalidArgument("duplicate variable name " + vars_[i]);
      }
    }
  }
}

RingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> vars,
                       MonomialOrder order, std::vector<std::int64_t> weights) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars),
                                          order, std::move(weights));
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

bool PolyRing::standard_graded() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](std::int64_t w) { return w == 1; });
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = vars_.size();
  switch (order_.kind()) {
    case MonomialOrder::Kind::Grevlex: {
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      for (std::size_t i = n; i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
      }
      return 0;
    }
    case MonomialOrder::Kind::Lex: {
      for (std::size_t i = 0; i < n; ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
      }
      return 0;
    }
    case MonomialOrder::Kind::Elimination: {
      const std::size_t k = order_.block();
      std::int64_t da = 0, db = 0;
      for (std::size_t i = 0; i < k; ++i) {
        da += weights_[i] * a.exps[i];
        db += weights_[i] * b.exps[i];
      }
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = k; i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
      }
      const std::int64_t ra = a.degree - da, rb = b.degree - db;
      if (ra != rb) return ra < rb ? -1 : 1;
      for (std::size_t i = n; i-- > k;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

Monomial PolyRing::variable(std::size_t i, std::uint32_t power) const {
  if (i >= vars_.size()) throw InvalidArgument("variable index out of range");
  Monomial m;
  m.exps[i] = power;
  m.degree = weights_[i] * power;
  return m;
}

Monomial PolyRing::monomial(std::span<const std::uint32_t> exps) const {
  if (exps.size() != vars_.size()) {
    throw InvalidArgument("exponent vector length does not match ring");
  }
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kExponentLimit) throw OverflowError("exponent overflow");
    m.exps[i] = exps[i];
    m.degree += weights_[i] * exps[i];
  }
  return m;
}

Monomial PolyRing::mul(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const std::uint64_t s = std::uint64_t{a.exps[i]} + b.exps[i];
    if (s > kExponentLimit) throw OverflowError("exponent overflow in product");
    m.exps[i] = static_cast<std::uint32_t>(s);
  }
  m.degree = a.degree + b.degree;
  return m;
}

Monomial PolyRing::div(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps[i] = a.exps[i] - b.exps[i];
  m.degree = a.degree - b.degree;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exps[i] = std::max(a.exps[i], b.exps[i]);
  }
  m.degree = degree_of(m);
  return m;
}

Monomial PolyRing::power(const Monomial& a, std::uint64_t n) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exps[i] == 0) continue;
    if (n > kExponentLimit / a.exps[i]) {
      throw OverflowError("exponent overflow in power");
    }
    m.exps[i] = static_cast<std::uint32_t>(a.exps[i] * n);
  }
  m.degree = degree_of(m);
  return m;
}

std::int64_t PolyRing::degree_of(const Monomial& a) const noexcept {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) d += weights_[i] * a.exps[i];
  return d;
}

bool PolyRing::same_as(const PolyRing& other) const noexcept {
  return this == &other ||
         (field_ == other.field_ && vars_ == other.vars_ &&
          order_ == other.order_ && weights_ == other.weights_);
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return std::make_shared<const PolyRing>(field_, vars_, order, weights_);
}

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  require_ring(ring);
  Polynomial f(ring);
  Coeff r = ring->field().reduce(c);
  if (r != 0) f.terms_.push_back({ring->one(), r});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  require_ring(ring);
  Polynomial f(ring);
  f.terms_.push_back({ring->variable(i), 1});
  return f;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, Coeff c) {
  require_ring(ring);
  Polynomial f(ring);
  c %= ring->characteristic();
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  require_ring(ring);
  const PolyRing& R = *ring;
  std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) {
    return R.compare(a.mono, b.mono) > 0;
  });
  Polynomial f(ring);
  for (auto& t : terms) {
    t.coeff %= R.characteristic();
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = R.field().add(f.terms_.back().coeff, t.coeff);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (t.coeff != 0) {
      f.terms_.push_back(t);
    }
  }
  // A pop can expose two equal neighbours only if equal monomials were not
  // adjacent, which sorting rules out.
  return f;
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_unit() const noexcept {
  return terms_.size() == 1 && terms_[0].mono.is_one();
}

std::int64_t Polynomial::degree() const noexcept {
  if (terms_.empty()) return kDegreeMinusInfinity;
  std::int64_t d = terms_[0].mono.degree;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.mono.degree != terms_[0].mono.degree) return false;
  }
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
  return terms_.front();
}

void Polynomial::require_same_ring(const Polynomial& g) const {
  require_ring(ring_);
  require_ring(g.ring_);
  if (!ring_->same_as(*g.ring_)) {
    throw AmbientMismatch("polynomials live in different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial f(*this);
  for (auto& t : f.terms_) t.coeff = ring_->field().neg(t.coeff);
  return f;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_ring(g);
  const PolyRing& R = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = R.compare(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(g.terms_[j++]);
    } else {
      Coeff s = R.field().add(terms_[i].coeff, g.terms_[j].coeff);
      if (s != 0) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i),
             terms_.end());
  out.insert(out.end(), g.terms_.begin() + static_cast<std::ptrdiff_t>(j),
             g.terms_.end());
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) { return *this += -g; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.require_same_ring(g);
  const PolyRing& R = *f.ring_;
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      prod.push_back({R.mul(a.mono, b.mono), R.field().mul(a.coeff, b.coeff)});
    }
  }
  return Polynomial::from_terms(f.ring_, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial Polynomial::scaled(Coeff c) const {
  require_ring(ring_);
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial f(*this);
  for (auto& t : f.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return f;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  require_ring(ring_);
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial f(ring_);
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    f.terms_.push_back({ring_->mul(t.mono, m), ring_->field().mul(t.coeff, c)});
  }
  return f;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_[0].coeff));
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  require_ring(ring_);
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool is_power_of(std::uint64_t q, std::uint64_t p) noexcept {
  if (p < 2 || q == 0) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

Polynomial Polynomial::frobenius_power(std::uint64_t q) const {
  require_ring(ring_);
  if (!is_power_of(q, ring_->characteristic())) {
    throw InvalidArgument("frobenius_power needs a power of the characteristic");
  }
  // Every supported order compares by linear functionals, so scaling all
  // exponents by q keeps the term sequence sorted. Coefficients are fixed by
  // Fermat's little theorem.
  Polynomial f(ring_);
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({ring_->power(t.mono, q), t.coeff});
  return f;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  require_ring(ring_);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.mono.exps[var];
    if (e == 0) continue;
    Coeff c = ring_->field().mul(t.coeff, ring_->field().reduce(e));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.exps[var] -= 1;
    m.degree -= ring_->weights()[var];
    out.push_back({m, c});
  }
  return from_terms(ring_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    if (k > 0) out += " + ";
    const bool one = t.mono.is_one();
    if (t.coeff != 1 || one) {
      out += std::to_string(t.coeff);
      if (!one) out += '*';
    }
    if (!one) out += ring_->monomial_to_string(t.mono);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial poly_power(const Polynomial& f, std::uint64_t n) {
  if (n > 1 && f.has_ring() && is_power_of(n, f.ring().characteristic())) {
    return f.frobenius_power(n);
  }
  return f.pow(n);
}

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw InvalidArgument("leading term of zero polynomial");
  if (order == f.ring().order()) return f.leading_term();
  auto other = f.ring().with_order(order);
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (other->compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         std::span<const std::size_t> index_map) {
  require_ring(target);
  if (target->characteristic() != f.ring().characteristic()) {
    throw AmbientMismatch("characteristics differ");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.ring().nvars(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      if (index_map[i] >= target->nvars()) {
        throw InvalidArgument("variable has no image in target ring");
      }
      m.exps[index_map[i]] += t.mono.exps[i];
    }
    m.degree = target->degree_of(m);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      std::span<const Polynomial> images) {
  if (images.size() != f.ring().nvars()) {
    throw InvalidArgument("substitute needs one image per variable");
  }
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial mono = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.mono.exps[i] > 0) mono *= poly_power(images[i], t.mono.exps[i]);
    }
    result += mono;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring)
      : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
        fail("integer too large");
      }
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    }
    return v;
  }

  Polynomial expr() {
    Polynomial f = product();
    for (;;) {
      if (eat('+')) {
        f += product();
      } else if (eat('-')) {
        f -= product();
      } else {
        return f;
      }
    }
  }

  Polynomial product() {
    Polynomial f = unary();
    while (eat('*')) f *= unary();
    return f;
  }

  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      std::uint64_t n = integer();
      return poly_power(base, n);
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = integer();
      return Polynomial::constant(
          ring_, static_cast<std::int64_t>(v % ring_->characteristic()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_->var_index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  require_ring(ring);
  return PolyParser(text, ring).parse();
}

}  // namespace frobforge
