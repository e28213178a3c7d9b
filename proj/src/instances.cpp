#include <algorithm>
#include <cstdio>

#include "frobforge/errors.hpp"
#include "frobforge/verifier.hpp"

namespace frobforge {

namespace {

std::uint64_t splitmix(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

SeededRng SeededRng::split(std::string_view name) const {
  std::uint64_t x = seed_ ^ fnv1a(name);
  return SeededRng(splitmix(x));
}

std::uint64_t SeededRng::next() { return splitmix(state_); }

std::uint64_t SeededRng::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("empty range");
  const std::uint64_t limit = ~0ull - (~0ull % n);
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % n;
  }
}

std::string stable_digest(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

namespace {

void monomials_of_degree(const PolyRing& P, std::size_t var, std::int64_t left,
                         std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
  if (var == P.nvars()) {
    if (left == 0) out.push_back(P.monomial(exps));
    return;
  }
  const std::int64_t w = P.weights()[var];
  for (std::int64_t e = 0; e * w <= left; ++e) {
    exps[var] = static_cast<std::uint32_t>(e);
    monomials_of_degree(P, var + 1, left - e * w, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

Polynomial random_form(const Ring& R, std::int64_t degree, SeededRng& rng, unsigned terms) {
  const PolyRing& P = *R->poly();
  std::vector<std::uint32_t> exps(P.nvars(), 0);
  std::vector<Monomial> monos;
  monomials_of_degree(P, 0, degree, exps, monos);
  Polynomial f = R->zero();
  if (monos.empty()) return f;
  const std::uint64_t p = R->characteristic();
  for (unsigned t = 0; t < terms; ++t) {
    const auto& m = monos[rng.below(monos.size())];
    const auto c = static_cast<Coeff>(1 + rng.below(p - 1));
    f = f + Polynomial::term(R->poly(), m, c);
  }
  return R->reduce(f);
}

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::RegularSequenceOnQuotient:
      return "RegularSequenceOnQuotient";
    case InstanceKind::HypersurfaceQuotient:
      return "HypersurfaceQuotient";
    case InstanceKind::DeterminantalPerfect:
      return "DeterminantalPerfect";
    case InstanceKind::MonomialCM:
      return "MonomialCM";
    case InstanceKind::ToricDomain:
      return "ToricDomain";
    case InstanceKind::ControlInfinitePd:
      return "ControlInfinitePd";
    case InstanceKind::UserSupplied:
      return "UserSupplied";
  }
  return "?";
}

const std::vector<InstanceKind>& all_instance_kinds() {
  static const std::vector<InstanceKind> kinds{
      InstanceKind::RegularSequenceOnQuotient, InstanceKind::HypersurfaceQuotient,
      InstanceKind::DeterminantalPerfect,      InstanceKind::MonomialCM,
      InstanceKind::ToricDomain,               InstanceKind::ControlInfinitePd};
  return kinds;
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  for (auto k : all_instance_kinds()) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string to_string(Tier tier) {
  switch (tier) {
    case Tier::Exact:
      return "Exact";
    case Tier::Certified:
      return "Certified";
    case Tier::Probable:
      return "Probable";
  }
  return "?";
}

std::string Certificate::label() const {
  std::string s;
  switch (tag) {
    case Tag::FinitePd:
      s = "FinitePd";
      break;
    case Tag::RegularSequenceGens:
      s = "RegularSequenceGens";
      break;
    case Tag::PerfectIdeal:
      s = "PerfectIdeal";
      break;
    case Tag::QuotientDomain:
      s = "QuotientDomain";
      break;
    case Tag::QuotientNormal:
      s = "QuotientNormal";
      break;
    case Tag::ControlNegative:
      s = "ControlNegative";
      break;
  }
  if (value) s += "(" + std::to_string(*value) + ")";
  if (tag == Tag::QuotientDomain) s += "[" + to_string(tier) + "]";
  return s;
}

const Certificate* Instance::find(Certificate::Tag tag) const {
  for (const auto& c : certificates) {
    if (c.tag == tag) return &c;
  }
  return nullptr;
}

std::string Instance::digest() const {
  return stable_digest(to_string(kind) + "|" + ring->to_string() + "|" + ideal.to_string());
}

namespace {

using Tag = Certificate::Tag;

const std::vector<std::string> kVarNames{"x", "y", "z", "w", "u", "v", "s", "t"};

std::vector<std::string> var_names(std::size_t n) {
  if (n == 0 || n > kVarNames.size()) throw InvalidArgument("between 1 and 8 variables");
  return {kVarNames.begin(), kVarNames.begin() + static_cast<std::ptrdiff_t>(n)};
}

Ring base_ring(std::uint32_t p, std::uint64_t pick) {
  switch (pick % 5) {
    case 0:
      return RingDescriptor::make(p, {"x", "y", "z"}, {"x^3 + y^3 + z^3"});
    case 1:
      return RingDescriptor::make(p, {"x", "y", "z"}, {"x*z - y^2"});
    case 2:
      return RingDescriptor::make(p, {"x", "y", "z", "w"}, {"x*w - y*z"});
    case 3:
      return RingDescriptor::make(p, {"x", "y", "z"}, {"x*y"});
    default:
      return RingDescriptor::make(p, {"x", "y", "z"});
  }
}

/// Appends a random form that is regular on R/(seq); false if none found.
bool extend_regular(const Ring& R, std::vector<Polynomial>& seq, std::int64_t max_degree,
                    unsigned retries, SeededRng& rng) {
  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_degree))) +
                           static_cast<std::int64_t>(attempt / 15);
    Polynomial f = random_form(R, d, rng, 3 + attempt / 20);
    if (f.is_zero()) continue;
    Ideal J(R, seq);
    if (J.contains(f)) continue;
    if (!is_nonzerodivisor(f, J)) continue;
    seq.push_back(f.monic());
    return true;
  }
  return false;
}

/// Domain and normality certificates of R/I, when they can be established.
void annotate_quotient(Instance& inst, const PrimeBudget& primes) {
  try {
    Ring S = inst.ring->quotient_by(inst.ideal.gens());
    if (is_domain(S, primes).status == DomainVerdict::Status::Yes) {
      inst.certificates.push_back({Tag::QuotientDomain, Tier::Certified, std::nullopt});
    }
    auto eq = equidimensional(S);
    if ((eq == Equidimensional::Yes) && is_normal(S, eq).holds) {
      inst.certificates.push_back({Tag::QuotientNormal, Tier::Exact, std::nullopt});
    }
  } catch (const BudgetExceeded&) {
  }
}

void certify_pd(Instance& inst) {
  auto pd = projective_dimension(inst.ideal);
  if (!pd) {
    inst.certificates.push_back({Tag::ControlNegative, Tier::Exact, std::nullopt});
    return;
  }
  inst.certificates.push_back({Tag::FinitePd, Tier::Exact, *pd});
  if (!inst.ideal.is_zero() && grade(inst.ideal) == *pd) {
    inst.certificates.push_back({Tag::PerfectIdeal, Tier::Exact, *pd});
  }
}

Instance regular_sequence_instance(const GenerationParams& params, SeededRng rng) {
  Ring R = params.base ? *params.base : base_ring(params.p, rng.split("base").next());
  const int depth = depth_graded(R);
  if (static_cast<int>(params.length) > depth) {
    throw InvalidArgument("regular sequence longer than depth " + std::to_string(depth));
  }
  std::vector<Polynomial> seq;
  for (unsigned k = 0; k < params.length; ++k) {
    if (!extend_regular(R, seq, params.max_degree, params.retries, rng)) {
      throw InvalidArgument("no regular element found within the retry budget");
    }
  }
  Instance inst;
  inst.ring = R;
  inst.ideal = Ideal(R, seq);
  inst.name = "regular sequence " + inst.ideal.to_string() + " on " + R->to_string();
  inst.certificates.push_back({Tag::RegularSequenceGens, Tier::Exact, static_cast<int>(params.length)});
  inst.certificates.push_back({Tag::FinitePd, Tier::Exact, static_cast<int>(params.length)});
  if (params.length > 0) {
    // grade of an ideal generated by a regular sequence is its length.
    inst.certificates.push_back({Tag::PerfectIdeal, Tier::Exact, static_cast<int>(params.length)});
  }
  return inst;
}

Instance hypersurface_instance(const GenerationParams& params, SeededRng& rng) {
  Ring R = RingDescriptor::make(params.p, var_names(std::min<std::size_t>(params.n, 4)));
  for (unsigned attempt = 0; attempt < params.retries; ++attempt) {
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(params.max_degree)));
    Polynomial f = random_form(R, d, rng, 4);
    if (f.is_zero()) continue;
    Instance inst;
    inst.ring = R;
    inst.ideal = Ideal(R, {f.monic()});
    inst.name = "hypersurface (" + f.monic().to_string() + ")";
    inst.certificates.push_back({Tag::FinitePd, Tier::Exact, 1});
    inst.certificates.push_back({Tag::PerfectIdeal, Tier::Exact, 1});
    return inst;
  }
  throw InvalidArgument("no nonzero form found");
}

Instance determinantal_instance(const GenerationParams& params, SeededRng& rng) {
  Ring R = RingDescriptor::make(params.p, var_names(std::clamp<std::size_t>(params.n, 3, 6)));
  for (unsigned attempt = 0; attempt < params.retries; ++attempt) {
    GradedMatrix A(R, {0, 0, 0}, {1, 1});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) A.set(i, j, random_form(R, 1, rng, 2));
    Ideal I(R, minimal_generators(minors_ideal(A, 2)));
    if (I.is_zero() || I.is_unit() || grade(I) != 2) continue;
    Instance inst;
    inst.ring = R;
    inst.ideal = I;
    inst.name = "maximal minors of " + A.to_string();
    // Hilbert-Burch: the minors of a 3x2 matrix with grade 2 have pd 2.
    inst.certificates.push_back({Tag::FinitePd, Tier::Exact, 2});
    inst.certificates.push_back({Tag::PerfectIdeal, Tier::Exact, 2});
    return inst;
  }
  throw InvalidArgument("no grade-2 determinantal ideal found");
}

Instance monomial_instance(const GenerationParams& params, SeededRng& rng) {
  const std::size_t n = std::clamp<std::size_t>(params.n, 1, 4);
  Ring R = RingDescriptor::make(params.p, var_names(n));
  std::vector<std::size_t> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(vars[i - 1], vars[rng.below(i)]);
  std::vector<Polynomial> gens;
  std::string shape;
  if (n >= 3 && rng.below(2) == 0) {
    // Three coordinate axes' worth of squarefree quadrics.
    const auto a = R->variable(vars[0]), b = R->variable(vars[1]), c = R->variable(vars[2]);
    gens = {a * b, b * c, a * c};
    shape = "squarefree";
  } else {
    const std::size_t k = 1 + rng.below(std::min<std::size_t>(n, 3));
    for (std::size_t i = 0; i < k; ++i) {
      const auto e = 1 + rng.below(static_cast<std::uint64_t>(params.max_degree) + 1);
      gens.push_back(R->variable(vars[i]).pow(e));
    }
    shape = "pure powers";
  }
  Instance inst;
  inst.ring = R;
  inst.ideal = Ideal(R, gens);
  inst.name = "monomial " + shape + " " + inst.ideal.to_string();
  certify_pd(inst);
  return inst;
}

Instance toric_instance(const GenerationParams& params, SeededRng& rng) {
  Ring R = RingDescriptor::make(params.p, {"x", "y", "z", "w"}, {"x*w - y*z"});
  static const std::vector<std::string> cuts{"y - z", "x - w", "y + z", "x + w"};
  const auto& cut = cuts[rng.below(cuts.size())];
  Instance inst;
  inst.ring = R;
  inst.ideal = Ideal::parse(R, {cut});
  inst.name = "Segre quadric cut by " + cut;
  inst.certificates.push_back({Tag::FinitePd, Tier::Exact, 1});
  inst.certificates.push_back({Tag::PerfectIdeal, Tier::Exact, 1});
  return inst;
}

Instance control_instance(const GenerationParams& params) {
  Instance inst;
  if (params.n <= 1) {
    inst.ring = RingDescriptor::make(params.p, {"x"}, {"x^2"});
  } else {
    inst.ring = RingDescriptor::make(params.p, {"x", "y"}, {"x^2"});
  }
  inst.ideal = Ideal::parse(inst.ring, {"x"});
  inst.name = "control (x) in " + inst.ring->to_string();
  inst.certificates.push_back({Tag::ControlNegative, Tier::Exact, std::nullopt});
  return inst;
}

}  // namespace

Instance generate_instance(InstanceKind kind, const GenerationParams& params, std::uint64_t seed) {
  SeededRng rng = SeededRng(seed).split(to_string(kind));
  Instance inst;
  switch (kind) {
    case InstanceKind::RegularSequenceOnQuotient:
      inst = regular_sequence_instance(params, rng);
      break;
    case InstanceKind::HypersurfaceQuotient:
      inst = hypersurface_instance(params, rng);
      break;
    case InstanceKind::DeterminantalPerfect:
      inst = determinantal_instance(params, rng);
      break;
    case InstanceKind::MonomialCM:
      inst = monomial_instance(params, rng);
      break;
    case InstanceKind::ToricDomain:
      inst = toric_instance(params, rng);
      break;
    case InstanceKind::ControlInfinitePd:
      inst = control_instance(params);
      break;
    case InstanceKind::UserSupplied:
      throw InvalidArgument("user-supplied instances are not generated");
  }
  inst.kind = kind;
  inst.seed = seed;
  if (kind != InstanceKind::ControlInfinitePd) annotate_quotient(inst, PrimeBudget{});
  return inst;
}

void recheck_certificates(const Instance& inst) {
  auto fail = [&](const Certificate& c) {
    throw DataIntegrityError("certificate " + c.label() + " failed its re-check on " + inst.name);
  };
  const Ring& R = inst.ring;
  for (const auto& c : inst.certificates) {
    if (c.tier == Tier::Probable) continue;
    switch (c.tag) {
      case Tag::FinitePd: {
        auto pd = projective_dimension(inst.ideal);
        if (!pd || (c.value && *pd != *c.value)) fail(c);
        break;
      }
      case Tag::RegularSequenceGens: {
        std::vector<Polynomial> prefix;
        for (const auto& g : inst.ideal.gens()) {
          Ideal J(R, prefix);
          if (J.contains(g) || !is_nonzerodivisor(g, J)) fail(c);
          prefix.push_back(g);
        }
        if (!Ideal(R, prefix).is_zero() && Ideal(R, prefix).is_unit()) fail(c);
        break;
      }
      case Tag::PerfectIdeal: {
        auto pd = projective_dimension(inst.ideal);
        if (!pd || inst.ideal.is_zero() || grade(inst.ideal) != *pd) fail(c);
        if (c.value && *pd != *c.value) fail(c);
        break;
      }
      case Tag::QuotientDomain:
        if (is_domain(R->quotient_by(inst.ideal.gens())).status != DomainVerdict::Status::Yes) fail(c);
        break;
      case Tag::QuotientNormal:
        if (!is_normal(R->quotient_by(inst.ideal.gens())).holds) fail(c);
        break;
      case Tag::ControlNegative:
        if (projective_dimension(inst.ideal)) fail(c);
        break;
    }
  }
}

std::vector<RegularSequence> sample_regular_sequences(const Ring& R, unsigned length,
                                                      unsigned count, std::uint64_t seed) {
  const int depth = depth_graded(R);
  if (static_cast<int>(length) > depth) {
    throw InvalidArgument("insufficient depth: " + std::to_string(length) + " > " + std::to_string(depth));
  }
  std::vector<RegularSequence> out;
  if (length == 0) return out;
  SeededRng base(seed);
  for (unsigned c = 0; c < count; ++c) {
    SeededRng rng = base.split("sequence " + std::to_string(c));
    RegularSequence s;
    for (unsigned k = 0; k < length; ++k) {
      if (!extend_regular(R, s.elements, 1, 200, rng)) {
        throw InvalidArgument("no regular element found within the retry budget");
      }
    }
    s.maximal = static_cast<int>(length) == depth;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace frobforge
