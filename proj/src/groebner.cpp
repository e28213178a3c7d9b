#include "frobforge/groebner.hpp"

#include <algorithm>
#include <bit>

#include "frobforge/errors.hpp"

namespace frobforge {

namespace {

bool same_vec(const gb::ModVec& a, const gb::ModVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].comp != b[i].comp || a[i].coeff != b[i].coeff ||
        !(a[i].mono == b[i].mono)) {
      return false;
    }
  }
  return true;
}

bool same_basis(const gb::Basis& a, const gb::Basis& b) {
  if (a.elements().size() != b.elements().size()) return false;
  for (std::size_t i = 0; i < a.elements().size(); ++i) {
    if (!same_vec(a.elements()[i], b.elements()[i])) return false;
  }
  return true;
}

void require_same(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw AmbientMismatch("ideals live in different rings");
}

std::vector<Polynomial> basis_polynomials(const gb::Basis& B) {
  std::vector<Polynomial> out;
  out.reserve(B.elements().size());
  for (const auto& e : B.elements()) out.push_back(gb::to_polynomial(B.space(), e));
  return out;
}

/// Uncounted inputs g * e_c for every quotient generator g and every
/// component c in [first, first + count).
void add_quotient_inputs(const Ring& R, std::vector<gb::Input>& inputs,
                         std::uint32_t first, std::uint32_t count) {
  for (const auto& g : R->quotient_basis().elements()) {
    for (std::uint32_t c = first; c < first + count; ++c) {
      gb::ModVec v = g;
      for (auto& t : v) t.comp = c;
      inputs.push_back({std::move(v), false});
    }
  }
}

/// vector entries into module terms at components offset .. offset+size.
void append_entries(gb::ModVec& out, const Submodule::Vector& v,
                    std::uint32_t offset) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const auto& t : v[i].terms()) {
      out.push_back({t.mono, static_cast<std::uint32_t>(offset + i), t.coeff});
    }
  }
}

Polynomial reduce_mod_quotient(const Ring& R, const Polynomial& f) {
  return R->reduce(f);
}

/// Polynomials in component `comp` of basis elements whose leading term sits
/// in `comp` (everything above it vanishes).
std::vector<Polynomial> tail_component(const gb::Basis& B, std::uint32_t comp) {
  std::vector<Polynomial> out;
  for (const auto& e : B.elements()) {
    if (e.front().comp != comp) continue;
    gb::ModVec part;
    for (const auto& t : e) {
      if (t.comp == comp) part.push_back({t.mono, 0, t.coeff});
    }
    out.push_back(gb::to_polynomial(gb::Space(B.space().ring), part));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingDescriptor

void require_homogeneous(const Polynomial& f, const char* what) {
  if (!f.is_homogeneous()) {
    throw InhomogeneousInput(std::string(what) + " is not homogeneous: " +
                             f.to_string());
  }
}

RingDescriptor::RingDescriptor(RingPtr poly, std::vector<Polynomial> quotient)
    : poly_(std::move(poly)) {
  if (!poly_) throw InvalidArgument("ring descriptor without polynomial ring");
  std::vector<gb::Input> inputs;
  for (auto& g : quotient) {
    if (g.has_ring() && !g.ring().same_as(*poly_)) {
      throw AmbientMismatch("quotient generator in a different ring");
    }
    if (g.is_zero()) continue;
    require_homogeneous(g, "quotient generator");
    inputs.push_back({gb::from_polynomial(g), true});
    quotient_.push_back(std::move(g));
  }
  quotient_basis_ = gb::compute(gb::Space(poly_), std::move(inputs)).basis;
}

Ring RingDescriptor::make(std::uint32_t p, std::vector<std::string> vars,
                          std::vector<std::string> quotient, MonomialOrder order,
                          std::vector<std::int64_t> weights) {
  auto P = PolyRing::make(p, std::move(vars), order, std::move(weights));
  std::vector<Polynomial> gens;
  for (const auto& q : quotient) gens.push_back(parse_polynomial(q, P));
  return std::make_shared<const RingDescriptor>(P, std::move(gens));
}

Ring RingDescriptor::over(RingPtr poly, std::vector<Polynomial> quotient) {
  return std::make_shared<const RingDescriptor>(std::move(poly), std::move(quotient));
}

Polynomial RingDescriptor::parse(std::string_view text) const {
  return parse_polynomial(text, poly_);
}

Polynomial RingDescriptor::variable(std::size_t i) const {
  return Polynomial::variable(poly_, i);
}

Polynomial RingDescriptor::reduce(const Polynomial& f) const {
  if (quotient_basis_.is_zero() || f.is_zero()) return f;
  return gb::to_polynomial(quotient_basis_.space(),
                           quotient_basis_.normal_form(gb::from_polynomial(f)));
}

Ring RingDescriptor::ambient() const { return over(poly_, {}); }

Ring RingDescriptor::quotient_by(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = quotient_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return over(poly_, std::move(gens));
}

std::string RingDescriptor::to_string() const {
  std::string s = "F_" + std::to_string(characteristic()) + "[";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += poly_->var_names()[i];
  }
  s += "]";
  if (!quotient_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < quotient_.size(); ++i) {
      if (i) s += ", ";
      s += quotient_[i].to_string();
    }
    s += ")";
  }
  return s;
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->poly()->same_as(*b->poly()) &&
         same_basis(a->quotient_basis(), b->quotient_basis());
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw InvalidArgument("ideal without ring");
  for (auto& g : gens) {
    if (g.has_ring() && !g.ring().same_as(*ring_->poly())) {
      throw AmbientMismatch("ideal generator in a different ring");
    }
    if (g.is_zero()) continue;
    require_homogeneous(g, "ideal generator");
    gens_.push_back(g.has_ring() ? std::move(g) : Polynomial(ring_->poly()));
  }
}

Ideal Ideal::parse(const Ring& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(ring->parse(g));
  return Ideal(ring, std::move(polys));
}

Ideal Ideal::maximal(const Ring& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return Ideal(ring, std::move(vars));
}

const gb::Basis& Ideal::basis() const {
  std::call_once(cache_->once, [this]() {
    std::vector<gb::Input> inputs;
    add_quotient_inputs(ring_, inputs, 0, 1);
    for (const auto& g : gens_) inputs.push_back({gb::from_polynomial(g), true});
    cache_->basis = gb::compute(gb::Space(ring_->poly()), std::move(inputs)).basis;
  });
  return cache_->basis;
}

std::vector<Polynomial> Ideal::gb_polys() const { return basis_polynomials(basis()); }

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (f.is_zero()) return f;
  return gb::to_polynomial(basis().space(), basis().normal_form(gb::from_polynomial(f)));
}

bool Ideal::contains(const Polynomial& f) const {
  return f.is_zero() || basis().reduces_to_zero(gb::from_polynomial(f));
}

bool Ideal::contains(const Ideal& J) const {
  require_same(ring_, J.ring_);
  for (const auto& g : J.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::equals(const Ideal& J) const {
  require_same(ring_, J.ring_);
  return same_basis(basis(), J.basis());
}

bool Ideal::is_unit() const {
  for (const auto& e : basis().elements()) {
    if (e.front().mono.is_one()) return true;
  }
  return false;
}

bool Ideal::is_zero() const {
  for (const auto& g : gens_) {
    if (!ring_->is_zero(g)) return false;
  }
  return true;
}

Ideal Ideal::operator+(const Ideal& J) const {
  require_same(ring_, J.ring_);
  return with(J.gens_);
}

Ideal Ideal::operator*(const Ideal& J) const {
  require_same(ring_, J.ring_);
  std::vector<Polynomial> prods;
  for (const auto& a : gens_) {
    for (const auto& b : J.gens_) prods.push_back(ring_->reduce(a * b));
  }
  return Ideal(ring_, std::move(prods));
}

Ideal Ideal::with(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::lifted() const {
  std::vector<Polynomial> gens = ring_->quotient_gens();
  gens.insert(gens.end(), gens_.begin(), gens_.end());
  return Ideal(ring_->ambient(), std::move(gens));
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Submodule

std::int64_t vector_degree(const Submodule::Vector& v,
                           const std::vector<std::int64_t>& row_degrees) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return v[i].degree() + row_degrees[i];
  }
  return 0;
}

Submodule::Submodule(Ring ring, std::vector<std::int64_t> row_degrees,
                     std::vector<Vector> columns, std::vector<std::int64_t> col_degrees)
    : ring_(std::move(ring)),
      row_degrees_(std::move(row_degrees)),
      columns_(std::move(columns)),
      col_degrees_(std::move(col_degrees)),
      cache_(std::make_shared<Cache>()) {
  if (!ring_) throw InvalidArgument("submodule without ring");
  const bool given = !col_degrees_.empty() || columns_.empty();
  if (given && col_degrees_.size() != columns_.size()) {
    throw InvalidArgument("column degree list does not match column count");
  }
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    auto& c = columns_[j];
    if (c.size() != row_degrees_.size()) {
      throw InvalidArgument("column length does not match module rank");
    }
    std::optional<std::int64_t> deg;
    if (given) deg = col_degrees_[j];
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].has_ring()) c[i] = Polynomial(ring_->poly());
      if (!c[i].ring().same_as(*ring_->poly())) {
        throw AmbientMismatch("column entry in a different ring");
      }
      for (const auto& t : c[i].terms()) {
        std::int64_t d = t.mono.degree + row_degrees_[i];
        if (deg && *deg != d) {
          throw InhomogeneousInput("submodule column is not homogeneous");
        }
        deg = d;
      }
    }
    if (!given) col_degrees_.push_back(deg.value_or(0));
  }
}

const gb::Basis& Submodule::basis() const {
  std::call_once(cache_->once, [this]() {
    std::vector<gb::Input> inputs;
    add_quotient_inputs(ring_, inputs, 0, static_cast<std::uint32_t>(rank()));
    for (const auto& c : columns_) {
      gb::ModVec v;
      append_entries(v, c, 0);
      inputs.push_back({gb::normalize(space(), std::move(v)), true});
    }
    cache_->basis = gb::compute(space(), std::move(inputs)).basis;
  });
  return cache_->basis;
}

const gb::Basis& Submodule::lift_basis() const {
  std::call_once(cache_->lift_once, [this]() {
    const std::size_t r = rank();
    const std::size_t m = columns_.size();
    std::vector<std::int64_t> shifts = row_degrees_;
    auto cd = column_degrees();
    shifts.insert(shifts.end(), cd.begin(), cd.end());
    gb::Space sp(ring_->poly(), shifts);
    std::vector<gb::Input> inputs;
    add_quotient_inputs(ring_, inputs, 0, static_cast<std::uint32_t>(r));
    for (std::size_t j = 0; j < m; ++j) {
      gb::ModVec v;
      append_entries(v, columns_[j], 0);
      v.push_back({ring_->poly()->one(), static_cast<std::uint32_t>(r + j), 1});
      inputs.push_back({gb::normalize(sp, std::move(v)), true});
    }
    cache_->lift_basis = gb::compute(sp, std::move(inputs)).basis;
  });
  return cache_->lift_basis;
}

bool Submodule::contains(const Vector& v) const {
  if (v.size() != rank()) throw InvalidArgument("vector length does not match rank");
  gb::ModVec w;
  append_entries(w, v, 0);
  w = gb::normalize(space(), std::move(w));
  return w.empty() || basis().reduces_to_zero(w);
}

Submodule::Vector Submodule::normal_form(const Vector& v) const {
  if (v.size() != rank()) throw InvalidArgument("vector length does not match rank");
  gb::ModVec w;
  append_entries(w, v, 0);
  w = gb::normalize(space(), std::move(w));
  return gb::to_entries(space(), basis().normal_form(w));
}

bool Submodule::is_everything() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    Vector e(rank(), ring_->zero());
    e[i] = ring_->one();
    if (!contains(e)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Polynomial> buchberger(const Ideal& I) { return I.gb_polys(); }

std::vector<Submodule::Vector> buchberger(const Submodule& M) {
  std::vector<Submodule::Vector> out;
  for (const auto& e : M.basis().elements()) {
    out.push_back(gb::to_entries(M.basis().space(), e));
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) { return I.normal_form(f); }

namespace {

Ideal colon_by_element(const Ideal& I, const Polynomial& h) {
  const Ring& R = I.ring();
  if (I.contains(h)) return Ideal::unit(R);
  gb::Space sp(R->poly(), {0, h.degree()});
  std::vector<gb::Input> inputs;
  add_quotient_inputs(R, inputs, 0, 1);
  for (const auto& g : I.gens()) inputs.push_back({gb::from_polynomial(g, 0), true});
  gb::ModVec hv = gb::from_polynomial(h, 0);
  hv.push_back({R->poly()->one(), 1, 1});
  inputs.push_back({std::move(hv), true});
  auto res = gb::compute(sp, std::move(inputs));
  return Ideal(R, tail_component(res.basis, 1));
}

}  // namespace

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  require_same(I.ring(), J.ring());
  std::optional<Ideal> acc;
  for (const auto& h : J.gens()) {
    Polynomial hr = I.ring()->reduce(h);
    if (hr.is_zero()) continue;
    Ideal c = colon_by_element(I, hr);
    acc = acc ? ideal_intersection(*acc, c) : c;
    if (acc->equals(I)) return I;
  }
  return acc ? *acc : Ideal::unit(I.ring());
}

Ideal saturation(const Ideal& I, const Polynomial& f) {
  Ideal cur = I;
  Ideal fi(I.ring(), {f});
  for (int step = 0; step < 256; ++step) {
    Ideal next = colon_ideal(cur, fi);
    if (next.equals(cur)) return cur;
    cur = Ideal(I.ring(), next.gb_polys());
  }
  throw BudgetExceeded(BudgetExceeded::Kind::Iterations, 256,
                       "saturation did not stabilize");
}

Ideal saturation(const Ideal& I, const Ideal& J) {
  require_same(I.ring(), J.ring());
  std::optional<Ideal> acc;
  for (const auto& h : J.gens()) {
    if (I.ring()->is_zero(h)) continue;
    Ideal s = saturation(I, h);
    acc = acc ? ideal_intersection(*acc, s) : s;
  }
  return acc ? *acc : Ideal::unit(I.ring());
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars) {
  const Ring& R = I.ring();
  const PolyRing& P = *R->poly();
  const std::size_t n = P.nvars();
  std::vector<bool> drop(n, false);
  for (auto v : drop_vars) {
    if (v >= n) throw InvalidArgument("elimination variable out of range");
    drop[v] = true;
  }
  std::vector<Polynomial> gens = R->quotient_gens();
  gens.insert(gens.end(), I.gens().begin(), I.gens().end());
  Ring ambient = R->ambient();
  const std::size_t block = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), true));
  if (block == 0) return Ideal(ambient, gens);

  // Dropped variables first, under an elimination order.
  std::vector<std::size_t> to_new(n), to_old(n);
  std::size_t next_drop = 0, next_keep = block;
  for (std::size_t i = 0; i < n; ++i) {
    to_new[i] = drop[i] ? next_drop++ : next_keep++;
    to_old[to_new[i]] = i;
  }
  std::vector<std::string> names(n);
  std::vector<std::int64_t> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[to_new[i]] = P.var_names()[i];
    weights[to_new[i]] = P.weights()[i];
  }
  auto E = std::make_shared<const PolyRing>(P.field(), names,
                                            MonomialOrder::elimination(block), weights);
  std::vector<gb::Input> inputs;
  for (const auto& g : gens) {
    inputs.push_back({gb::from_polynomial(map_variables(g, E, to_new)), true});
  }
  auto res = gb::compute(gb::Space(E), std::move(inputs));
  const std::uint32_t drop_mask = (block >= 32) ? ~0u : ((1u << block) - 1);
  std::vector<Polynomial> kept;
  for (const auto& e : res.basis.elements()) {
    bool free_of_drop = true;
    for (const auto& t : e) {
      if (t.mono.support_mask() & drop_mask) {
        free_of_drop = false;
        break;
      }
    }
    if (!free_of_drop) continue;
    kept.push_back(map_variables(gb::to_polynomial(res.basis.space(), e), R->poly(), to_old));
  }
  return Ideal(ambient, std::move(kept));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same(I.ring(), J.ring());
  const Ring& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(R);
  if (I.contains(J)) return J;
  if (J.contains(I)) return I;
  gb::Space sp(R->poly(), {0, 0});
  std::vector<gb::Input> inputs;
  add_quotient_inputs(R, inputs, 0, 2);
  for (const auto& g : I.gens()) {
    gb::ModVec v = gb::from_polynomial(g, 0);
    auto w = gb::from_polynomial(g, 1);
    v.insert(v.end(), w.begin(), w.end());
    inputs.push_back({std::move(v), true});
  }
  for (const auto& h : J.gens()) inputs.push_back({gb::from_polynomial(h, 0), true});
  auto res = gb::compute(sp, std::move(inputs));
  return Ideal(R, tail_component(res.basis, 1));
}

Ideal ring_map_preimage(const Ideal& A, const std::vector<Polynomial>& images,
                        const Ring& source) {
  const Ring& T = A.ring();
  const PolyRing& PT = *T->poly();
  const PolyRing& PS = *source->poly();
  if (PT.characteristic() != PS.characteristic()) {
    throw AmbientMismatch("ring map between different characteristics");
  }
  if (images.size() != PS.nvars()) {
    throw InvalidArgument("ring map needs one image per source variable");
  }
  const std::size_t nt = PT.nvars(), ns = PS.nvars();
  if (nt + ns > kMaxVars) {
    throw InvalidArgument("ring map graph needs more than " +
                          std::to_string(kMaxVars) + " variables");
  }
  // Source variable j gets weight deg(image_j); this must be a fixed multiple
  // of its own weight so the preimage is homogeneous in the source.
  std::optional<std::int64_t> scale;
  for (std::size_t j = 0; j < ns; ++j) {
    const Polynomial& im = images[j];
    if (im.is_zero()) continue;
    require_homogeneous(im, "ring map image");
    std::int64_t d = im.degree();
    if (d <= 0 || d % PS.weights()[j] != 0 ||
        (scale && *scale != d / PS.weights()[j])) {
      throw InhomogeneousInput("ring map does not preserve the grading");
    }
    scale = d / PS.weights()[j];
  }
  const std::int64_t c = scale.value_or(1);

  std::vector<std::string> names;
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < nt; ++i) {
    names.push_back("_t" + std::to_string(i));
    weights.push_back(PT.weights()[i]);
  }
  for (std::size_t j = 0; j < ns; ++j) {
    names.push_back("_s" + std::to_string(j));
    weights.push_back(c * PS.weights()[j]);
  }
  auto G = std::make_shared<const PolyRing>(PT.field(), names,
                                            MonomialOrder::elimination(nt), weights);
  std::vector<std::size_t> from_t(nt), from_s(ns);
  for (std::size_t i = 0; i < nt; ++i) from_t[i] = i;
  for (std::size_t j = 0; j < ns; ++j) from_s[j] = nt + j;

  std::vector<gb::Input> inputs;
  for (const auto& g : T->quotient_gens()) {
    inputs.push_back({gb::from_polynomial(map_variables(g, G, from_t)), false});
  }
  for (const auto& g : A.gens()) {
    inputs.push_back({gb::from_polynomial(map_variables(g, G, from_t)), true});
  }
  for (std::size_t j = 0; j < ns; ++j) {
    Polynomial graph = Polynomial::variable(G, nt + j) - map_variables(images[j], G, from_t);
    inputs.push_back({gb::from_polynomial(graph), true});
  }
  auto res = gb::compute(gb::Space(G), std::move(inputs));

  const std::uint32_t target_mask = (1u << nt) - 1;
  std::vector<std::size_t> back(nt + ns, kMaxVars);
  for (std::size_t j = 0; j < ns; ++j) back[nt + j] = j;
  std::vector<Polynomial> gens;
  for (const auto& e : res.basis.elements()) {
    bool pure = true;
    for (const auto& t : e) {
      if (t.mono.support_mask() & target_mask) {
        pure = false;
        break;
      }
    }
    if (!pure) continue;
    gens.push_back(map_variables(gb::to_polynomial(res.basis.space(), e),
                                 source->poly(), back));
  }
  return Ideal(source, std::move(gens));
}

int monomial_dimension(const std::vector<Monomial>& monomials, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& m : monomials) {
    if (m.is_one()) return kEmptyDimension;
    supports.push_back(m.support_mask());
  }
  // Largest variable set containing no leading-monomial support.
  int best = 0;
  const std::uint32_t full = nvars >= 32 ? ~0u : ((1u << nvars) - 1);
  for (std::uint32_t s = 0;; ++s) {
    const int pc = std::popcount(s);
    if (pc > best) {
      bool independent = true;
      for (auto sup : supports) {
        if ((sup & ~s) == 0) {
          independent = false;
          break;
        }
      }
      if (independent) best = pc;
    }
    if (s == full) break;
  }
  return best;
}

int krull_dimension(const Ideal& I) {
  return monomial_dimension(I.basis().leading_monomials(0), I.ring()->nvars());
}

int krull_dimension(const Ring& R) {
  return monomial_dimension(R->quotient_basis().leading_monomials(0), R->nvars());
}

int quotient_dimension(const Submodule& M) {
  int best = kEmptyDimension;
  const auto& B = M.basis();
  for (std::uint32_t c = 0; c < M.rank(); ++c) {
    best = std::max(best, monomial_dimension(B.leading_monomials(c), M.ring()->nvars()));
  }
  return best;
}

std::vector<Polynomial> minimal_generators(const Ideal& I) {
  const Ring& R = I.ring();
  std::vector<gb::Input> inputs;
  add_quotient_inputs(R, inputs, 0, 1);
  const std::size_t offset = inputs.size();
  for (const auto& g : I.gens()) inputs.push_back({gb::from_polynomial(g), true});
  auto res = gb::compute(gb::Space(R->poly()), std::move(inputs));
  std::vector<Polynomial> out;
  for (auto k : res.minimal) out.push_back(R->reduce(I.gens()[k - offset]));
  return out;
}

std::vector<Submodule::Vector> minimal_generators(const Submodule& M) {
  const Ring& R = M.ring();
  std::vector<gb::Input> inputs;
  add_quotient_inputs(R, inputs, 0, static_cast<std::uint32_t>(M.rank()));
  const std::size_t offset = inputs.size();
  const gb::Space sp = M.space();
  for (const auto& c : M.columns()) {
    gb::ModVec v;
    append_entries(v, c, 0);
    inputs.push_back({gb::normalize(sp, std::move(v)), true});
  }
  auto res = gb::compute(sp, std::move(inputs));
  std::vector<Submodule::Vector> out;
  for (auto k : res.minimal) {
    Submodule::Vector v = M.columns()[k - offset];
    for (auto& e : v) e = reduce_mod_quotient(R, e);
    out.push_back(std::move(v));
  }
  return out;
}

Submodule syzygy_module(const Submodule& M) {
  const Ring& R = M.ring();
  const std::size_t r = M.rank();
  const std::size_t m = M.columns().size();
  auto cd = M.column_degrees();
  if (m == 0) return Submodule(R, {}, {});
  const gb::Basis& B = M.lift_basis();
  std::vector<Submodule::Vector> syz;
  for (const auto& e : B.elements()) {
    if (e.front().comp < r) continue;
    auto part = gb::to_entries(B.space(), e, r, m);
    bool nonzero = false;
    for (auto& x : part) {
      x = R->reduce(x);
      nonzero = nonzero || !x.is_zero();
    }
    if (nonzero) syz.push_back(std::move(part));
  }
  Submodule raw(R, cd, std::move(syz));
  auto mins = minimal_generators(raw);
  return Submodule(R, cd, std::move(mins));
}

std::optional<Submodule::Vector> lift(const Submodule::Vector& v,
                                      const Submodule& M) {
  const Ring& R = M.ring();
  const std::size_t r = M.rank();
  const std::size_t m = M.columns().size();
  if (v.size() != r) throw InvalidArgument("vector length does not match rank");
  const gb::Basis& B = M.lift_basis();
  gb::ModVec w;
  append_entries(w, v, 0);
  w = gb::normalize(B.space(), std::move(w));
  Submodule::Vector coeffs(m, R->zero());
  if (w.empty()) return coeffs;
  gb::ModVec nf = B.normal_form(w);
  if (!nf.empty() && nf.front().comp < r) return std::nullopt;
  auto part = gb::to_entries(B.space(), nf, r, m);
  for (std::size_t j = 0; j < m; ++j) coeffs[j] = R->reduce(-part[j]);
  return coeffs;
}

bool submodule_membership(const Submodule::Vector& v, const Submodule& M) {
  return M.contains(v);
}

Ideal annihilator(const Submodule& M) {
  const Ring& R = M.ring();
  const std::size_t r = M.rank();
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> shifts = M.row_degrees();
    shifts.push_back(M.row_degrees()[i]);
    gb::Space sp(R->poly(), shifts);
    std::vector<gb::Input> inputs;
    add_quotient_inputs(R, inputs, 0, static_cast<std::uint32_t>(r));
    for (const auto& c : M.columns()) {
      gb::ModVec v;
      append_entries(v, c, 0);
      inputs.push_back({gb::normalize(sp, std::move(v)), true});
    }
    gb::ModVec ei{{R->poly()->one(), static_cast<std::uint32_t>(i), 1},
                  {R->poly()->one(), static_cast<std::uint32_t>(r), 1}};
    inputs.push_back({std::move(ei), true});
    auto res = gb::compute(sp, std::move(inputs));
    Ideal col(R, tail_component(res.basis, static_cast<std::uint32_t>(r)));
    acc = acc ? ideal_intersection(*acc, col) : col;
  }
  return acc ? *acc : Ideal::unit(R);
}

bool is_nonzerodivisor(const Polynomial& f, const Ideal& I) {
  return colon_ideal(I, Ideal(I.ring(), {f})).equals(I);
}

}  // namespace frobforge
