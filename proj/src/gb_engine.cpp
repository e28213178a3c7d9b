#include "frobforge/gb_engine.hpp"

#include <algorithm>

#include "frobforge/budget.hpp"
#include "frobforge/errors.hpp"

namespace frobforge::gb {

ModVec from_polynomial(const Polynomial& f, std::uint32_t comp) {
  ModVec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.mono, comp, t.coeff});
  return v;
}

ModVec from_entries(const Space& space, std::span<const Polynomial> entries) {
  if (entries.size() != space.rank()) {
    throw InvalidArgument("vector length does not match module rank");
  }
  // Position-over-term with component 0 first: concatenating the entries in
  // order already yields a sorted vector.
  ModVec v;
  for (std::size_t c = 0; c < entries.size(); ++c) {
    if (entries[c].has_ring() && !entries[c].ring().same_as(*space.ring)) {
      throw AmbientMismatch("vector entry lives in a different ring");
    }
    for (const auto& t : entries[c].terms()) {
      v.push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
    }
  }
  return v;
}

std::vector<Polynomial> to_entries(const Space& space, const ModVec& v,
                                   std::size_t first, std::size_t count) {
  std::vector<std::vector<Term>> buckets(count);
  for (const auto& t : v) {
    if (t.comp >= first && t.comp < first + count) {
      buckets[t.comp - first].push_back({t.mono, t.coeff});
    }
  }
  std::vector<Polynomial> out;
  out.reserve(count);
  for (auto& b : buckets) out.push_back(Polynomial::from_sorted(space.ring, std::move(b)));
  return out;
}

std::vector<Polynomial> to_entries(const Space& space, const ModVec& v) {
  return to_entries(space, v, 0, space.rank());
}

Polynomial to_polynomial(const Space& space, const ModVec& v) {
  return to_entries(space, v, 0, 1).front();
}

ModVec normalize(const Space& space, std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&space](const ModTerm& a, const ModTerm& b) {
    return space.compare(a, b) > 0;
  });
  const auto& F = space.ring->field();
  ModVec out;
  for (auto& t : terms) {
    t.coeff %= F.characteristic();
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  return out;
}

ModVec add(const Space& space, const ModVec& a, const ModVec& b) {
  const auto& F = space.ring->field();
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = space.compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Coeff s = F.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

ModVec sub_mul(const Space& space, const ModVec& a, Coeff c, const Monomial& m,
               const ModVec& b) {
  const auto& R = *space.ring;
  const auto& F = R.field();
  const Coeff negc = F.neg(c % F.characteristic());
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  ModTerm tb;
  bool have_tb = false;
  auto next_b = [&]() {
    if (j < b.size()) {
      tb = {R.mul(b[j].mono, m), b[j].comp, F.mul(negc, b[j].coeff)};
      ++j;
      have_tb = true;
    } else {
      have_tb = false;
    }
  };
  next_b();
  while (i < a.size() && have_tb) {
    int cmp = space.compare(a[i], tb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      if (tb.coeff != 0) out.push_back(tb);
      next_b();
    } else {
      Coeff s = F.add(a[i].coeff, tb.coeff);
      if (s != 0) out.push_back({a[i].mono, a[i].comp, s});
      ++i;
      next_b();
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (have_tb) {
    if (tb.coeff != 0) out.push_back(tb);
    next_b();
  }
  return out;
}

ModVec scale(const Space& space, const ModVec& a, Coeff c) {
  const auto& F = space.ring->field();
  c %= F.characteristic();
  if (c == 0) return {};
  ModVec out = a;
  for (auto& t : out) t.coeff = F.mul(t.coeff, c);
  return out;
}

bool is_homogeneous(const Space& space, const ModVec& v) {
  for (const auto& t : v) {
    if (space.degree(t) != space.degree(v.front())) return false;
  }
  return true;
}

namespace {

ModVec make_monic(const Space& space, ModVec v) {
  if (v.empty() || v.front().coeff == 1) return v;
  return scale(space, v, space.ring->field().inv(v.front().coeff));
}

const ModVec* search_reducer(const std::vector<ModVec>& elems,
                             const std::vector<std::uint32_t>& masks,
                             const ModTerm& t, std::uint32_t mask,
                             std::size_t skip = static_cast<std::size_t>(-1)) {
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (k == skip) continue;
    const ModTerm& lt = elems[k].front();
    if (lt.comp != t.comp || (masks[k] & ~mask) != 0) continue;
    if (lt.mono.divides(t.mono)) return &elems[k];
  }
  return nullptr;
}

/// Full reduction of v against monic elements.
ModVec full_reduce(const Space& space, ModVec v, const std::vector<ModVec>& elems,
                   const std::vector<std::uint32_t>& masks,
                   std::size_t skip = static_cast<std::size_t>(-1)) {
  const auto& R = *space.ring;
  ModVec rem;
  while (!v.empty()) {
    const ModTerm& t = v.front();
    const ModVec* g = search_reducer(elems, masks, t, t.mono.support_mask(), skip);
    if (g) {
      v = sub_mul(space, v, t.coeff, R.div(t.mono, g->front().mono), *g);
    } else {
      rem.push_back(t);
      v.erase(v.begin());
    }
  }
  return rem;
}

std::vector<ModVec> interreduce(const Space& space, std::vector<ModVec> elems,
                                bool reduce_tails) {
  std::sort(elems.begin(), elems.end(), [&space](const ModVec& a, const ModVec& b) {
    return space.compare(a.front(), b.front()) < 0;
  });
  std::vector<ModVec> kept;
  std::vector<std::uint32_t> masks;
  for (auto& e : elems) {
    const auto& lt = e.front();
    if (search_reducer(kept, masks, lt, lt.mono.support_mask())) continue;
    masks.push_back(lt.mono.support_mask());
    kept.push_back(make_monic(space, std::move(e)));
  }
  if (reduce_tails) {
    for (std::size_t k = 0; k < kept.size(); ++k) {
      ModVec tail(kept[k].begin() + 1, kept[k].end());
      ModVec red = full_reduce(space, std::move(tail), kept, masks, k);
      red.insert(red.begin(), kept[k].front());
      kept[k] = std::move(red);
    }
  }
  return kept;
}

struct Elem {
  ModVec v;
  std::uint32_t mask;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t comp;
  std::int64_t degree;
  bool live;
};

class Engine {
 public:
  explicit Engine(const Space& space)
      : space_(space), rank_one_(space.rank() == 1) {}

  std::vector<ModVec> elements() const {
    std::vector<ModVec> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(e.v);
    return out;
  }

  /// Returns true iff v survived reduction and was added.
  bool add_reduced(ModVec v) {
    v = top_reduce(std::move(v));
    if (v.empty()) return false;
    insert(make_monic(space_, std::move(v)));
    return true;
  }

  std::optional<std::int64_t> next_pair_degree() const {
    std::optional<std::int64_t> d;
    for (const auto& p : pairs_) {
      if (p.live && (!d || p.degree < *d)) d = p.degree;
    }
    return d;
  }

  void check_pair_cap_for_degree(std::int64_t d) const {
    const std::int64_t cap = effective_degree_cap();
    for (const auto& p : pairs_) {
      if (p.live && p.degree == d && p.lcm.degree > cap) {
        throw BudgetExceeded(BudgetExceeded::Kind::DegreeCap, cap,
                             "Groebner basis needs degree " +
                                 std::to_string(p.lcm.degree) +
                                 " beyond the degree cap " + std::to_string(cap));
      }
    }
  }

  void process_pairs_of_degree(std::int64_t d) {
    for (;;) {
      std::vector<Pair> now;
      std::vector<Pair> later;
      for (auto& p : pairs_) {
        if (!p.live) continue;
        (p.degree == d ? now : later).push_back(p);
      }
      if (now.empty()) return;
      pairs_ = std::move(later);
      std::sort(now.begin(), now.end(), [this](const Pair& a, const Pair& b) {
        int c = space_.ring->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.comp != b.comp) return a.comp > b.comp;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
      });
      for (const auto& p : now) {
        if (++processed_ > current_budget().pair_cap) {
          throw BudgetExceeded(BudgetExceeded::Kind::PairCap,
                               current_budget().pair_cap,
                               "Groebner pair cap exhausted");
        }
        if ((processed_ & 63) == 0) check_deadline();
        add_reduced(s_vector(p));
      }
    }
  }

 private:
  ModVec s_vector(const Pair& p) const {
    const auto& R = *space_.ring;
    const ModVec& a = elems_[p.i].v;
    const ModVec& b = elems_[p.j].v;
    // Multiply a by its cofactor, then subtract the cofactor multiple of b.
    ModVec am;
    am.reserve(a.size());
    const Monomial ma = R.div(p.lcm, a.front().mono);
    for (const auto& t : a) am.push_back({R.mul(t.mono, ma), t.comp, t.coeff});
    return sub_mul(space_, am, 1, R.div(p.lcm, b.front().mono), b);
  }

  ModVec top_reduce(ModVec v) const {
    const auto& R = *space_.ring;
    while (!v.empty()) {
      const ModTerm& t = v.front();
      const std::uint32_t mask = t.mono.support_mask();
      const Elem* found = nullptr;
      for (const auto& e : elems_) {
        const ModTerm& lt = e.v.front();
        if (lt.comp != t.comp || (e.mask & ~mask) != 0) continue;
        if (lt.mono.divides(t.mono)) {
          found = &e;
          break;
        }
      }
      if (!found) return v;
      v = sub_mul(space_, v, t.coeff, R.div(t.mono, found->v.front().mono),
                  found->v);
    }
    return v;
  }

  void insert(ModVec v) {
    const auto& R = *space_.ring;
    const std::size_t k = elems_.size();
    const ModTerm lt = v.front();
    elems_.push_back({std::move(v), lt.mono.support_mask()});

    for (auto& p : pairs_) {
      if (!p.live || p.comp != lt.comp || !lt.mono.divides(p.lcm)) continue;
      Monomial l1 = R.lcm(elems_[p.i].v.front().mono, lt.mono);
      Monomial l2 = R.lcm(elems_[p.j].v.front().mono, lt.mono);
      if (!(l1 == p.lcm) && !(l2 == p.lcm)) p.live = false;
    }

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool live;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < k; ++i) {
      const ModTerm& li = elems_[i].v.front();
      if (li.comp != lt.comp) continue;
      cands.push_back({i, R.lcm(li.mono, lt.mono),
                       rank_one_ && li.mono.coprime(lt.mono), true});
    }
    for (auto& a : cands) {
      for (const auto& b : cands) {
        if (&a == &b) continue;
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.live = false;
          break;
        }
      }
    }
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].live) continue;
      bool any_coprime = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y) {
        if (cands[y].live && cands[y].lcm == cands[x].lcm) {
          any_coprime = any_coprime || cands[y].coprime;
          cands[y].live = false;
        }
      }
      if (any_coprime) cands[x].live = false;
    }
    for (const auto& c : cands) {
      if (!c.live) continue;
      pairs_.push_back({c.i, k, c.lcm, lt.comp,
                        c.lcm.degree + space_.shifts[lt.comp], true});
    }
    if (pairs_.size() > 4 * (live_count_hint_ + 64)) compact();
  }

  void compact() {
    std::erase_if(pairs_, [](const Pair& p) { return !p.live; });
    live_count_hint_ = pairs_.size();
  }

  const Space& space_;
  bool rank_one_;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
  std::size_t live_count_hint_ = 0;
  std::int64_t processed_ = 0;
};

}  // namespace

Basis::Basis(Space space, std::vector<ModVec> elements, bool complete)
    : space_(std::move(space)), elements_(std::move(elements)), complete_(complete) {
  masks_.reserve(elements_.size());
  for (const auto& e : elements_) masks_.push_back(e.front().mono.support_mask());
}

const ModVec* Basis::find_reducer(const ModTerm& t, std::uint32_t mask) const {
  return search_reducer(elements_, masks_, t, mask);
}

ModVec Basis::normal_form(const ModVec& v) const {
  return full_reduce(space_, v, elements_, masks_);
}

bool Basis::reduces_to_zero(const ModVec& v) const {
  const auto& R = *space_.ring;
  ModVec w = v;
  while (!w.empty()) {
    const ModTerm& t = w.front();
    const ModVec* g = find_reducer(t, t.mono.support_mask());
    if (!g) return false;
    w = sub_mul(space_, w, t.coeff, R.div(t.mono, g->front().mono), *g);
  }
  return true;
}

std::vector<Monomial> Basis::leading_monomials(std::uint32_t comp) const {
  std::vector<Monomial> out;
  for (const auto& e : elements_) {
    if (e.front().comp == comp) out.push_back(e.front().mono);
  }
  return out;
}

Result compute(const Space& space, std::vector<Input> inputs,
               const Options& options) {
  if (!space.ring) throw InvalidArgument("Groebner computation without ring");
  struct Pending {
    std::size_t index;
    std::int64_t degree;
    bool counted;
  };
  std::vector<Pending> pending;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    auto& v = inputs[k].vec;
    if (v.empty()) continue;
    for (const auto& t : v) {
      if (t.comp >= space.rank()) {
        throw InvalidArgument("vector component out of range");
      }
    }
    if (!is_homogeneous(space, v)) {
      throw InhomogeneousInput("Groebner input is not homogeneous");
    }
    pending.push_back({k, space.degree(v.front()), inputs[k].counted});
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& a, const Pending& b) {
                     if (a.degree != b.degree) return a.degree < b.degree;
                     return a.counted < b.counted;
                   });

  Engine engine(space);
  Result result;
  std::size_t next_input = 0;
  bool complete = true;
  const std::int64_t cap = effective_degree_cap();
  for (;;) {
    std::optional<std::int64_t> d = engine.next_pair_degree();
    if (next_input < pending.size() &&
        (!d || pending[next_input].degree < *d)) {
      d = pending[next_input].degree;
    }
    if (!d) break;
    if (options.max_degree && *d > *options.max_degree) {
      complete = false;
      break;
    }
    engine.check_pair_cap_for_degree(*d);
    engine.process_pairs_of_degree(*d);
    while (next_input < pending.size() && pending[next_input].degree == *d) {
      const auto& pin = pending[next_input];
      const auto& v = inputs[pin.index].vec;
      if (v.front().mono.degree > cap) {
        throw BudgetExceeded(BudgetExceeded::Kind::DegreeCap, cap,
                             "Groebner input exceeds the degree cap");
      }
      if (engine.add_reduced(v) && pin.counted) {
        result.minimal.push_back(pin.index);
      }
      ++next_input;
    }
  }
  std::sort(result.minimal.begin(), result.minimal.end());
  result.basis = Basis(space, interreduce(space, engine.elements(), options.reduce_tails),
                       complete);
  return result;
}

}  // namespace frobforge::gb
