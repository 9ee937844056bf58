#include "ringnc/dominance.hpp"

#include <algorithm>
#include <mutex>

#include "ringnc/error.hpp"

namespace ringnc {

namespace {

// galois_field() searches for a modulus; partition rings reuse the same
// handful of fields many times.
RingSpec field_spec(std::uint64_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, RingSpec> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({p, k});
  if (it == cache.end()) it = cache.emplace(std::pair{p, k}, RingSpec::galois_field(p, k)).first;
  return it->second;
}

std::vector<RingSpec> factors_of(const RingSpec& r) {
  if (r.is<Product>()) return r.as<Product>().factors;
  return {r};
}

std::string join_exponents(const std::vector<unsigned>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// (p, m) field factors of a partition ring in canonical order.
std::vector<std::pair<std::uint64_t, unsigned>> field_list(const PartitionRing& r) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (const auto& [p, a] : r.assignment) {
    for (unsigned m : a.parts()) out.emplace_back(p, m);
  }
  return out;
}

// Exponent of the residue field GF(p^m) of a catalog factor, if its
// characteristic is divisible by p.
std::optional<unsigned> residue_exponent(const RingSpec& f, std::uint64_t p) {
  if (auto fo = field_order(f)) {
    if (fo->first == p) return fo->second;
    return std::nullopt;
  }
  if (f.is<DualNumbers>()) {
    if (f.as<DualNumbers>().p == p) return 1u;
    return std::nullopt;
  }
  if (f.is<IntegersMod>() && f.as<IntegersMod>().n % p == 0) return 1u;
  return std::nullopt;
}

bool square_free(std::uint64_t n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

// Factors that are dominance-equivalent to a product of fields: fields,
// D(p) (equivalent to GF(p) x GF(p)) and square-free Z(n).
bool exact_factor(const RingSpec& f) {
  if (is_field(f) || f.is<DualNumbers>()) return true;
  return f.is<IntegersMod>() && square_free(f.as<IntegersMod>().n);
}

// p-exponents of the field product equivalent to an exact ring.
std::vector<unsigned> equivalent_exponents(const RingSpec& r, std::uint64_t p) {
  std::vector<unsigned> out;
  for (const auto& f : factors_of(r)) {
    if (auto fo = field_order(f)) {
      if (fo->first == p) out.push_back(fo->second);
    } else if (f.is<DualNumbers>()) {
      if (f.as<DualNumbers>().p == p) {
        out.push_back(1);
        out.push_back(1);
      }
    } else if (f.is<IntegersMod>() && f.as<IntegersMod>().n % p == 0) {
      out.push_back(1);
    }
  }
  return out;
}

}  // namespace

PartitionRing to_partition_ring(const std::vector<std::pair<std::uint64_t, unsigned>>& fields) {
  if (fields.empty()) throw DomainError("to_partition_ring: empty field list");
  std::map<std::uint64_t, std::vector<unsigned>> grouped;
  for (const auto& [p, k] : fields) {
    if (!is_prime(p)) throw DomainError("to_partition_ring: " + std::to_string(p) + " is not prime");
    if (k == 0) throw DomainError("to_partition_ring: exponent must be positive");
    grouped[p].push_back(k);
  }
  PartitionRing out;
  for (auto& [p, parts] : grouped) out.assignment.emplace(p, Partition(std::move(parts)));
  return out;
}

std::optional<PartitionRing> as_partition_ring(const RingSpec& r) {
  std::vector<std::pair<std::uint64_t, unsigned>> fields;
  for (const auto& f : factors_of(canonicalize(r))) {
    auto fo = field_order(f);
    if (!fo) return std::nullopt;
    fields.push_back(*fo);
  }
  return to_partition_ring(fields);
}

Factorization size_factors(const PartitionRing& r) {
  Factorization out;
  for (const auto& [p, a] : r.assignment) out.emplace_back(p, a.total());
  return out;
}

RingSpec to_ring_spec(const PartitionRing& r) {
  std::vector<RingSpec> factors;
  for (const auto& [p, m] : field_list(r)) factors.push_back(field_spec(p, m));
  if (factors.size() == 1) return factors.front();
  return RingSpec::product(std::move(factors));
}

std::string to_string(const PartitionRing& r) {
  std::string out;
  for (const auto& [p, m] : field_list(r)) {
    if (!out.empty()) out += 'x';
    out += "GF(" + std::to_string(p);
    if (m > 1) out += "^" + std::to_string(m);
    out += ')';
  }
  return out;
}

std::string render_symbolic(const Partition& a, const std::string& prime_label) {
  std::string out;
  for (unsigned m : a.parts()) {
    if (!out.empty()) out += 'x';
    out += "GF(" + prime_label;
    if (m > 1) out += "^" + std::to_string(m);
    out += ')';
  }
  return out;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Dominates: return "Dominates";
    case Relation::NotDominates: return "NotDominates";
    case Relation::Unknown: return "Unknown";
  }
  return "?";
}

std::string describe(const Step& s) {
  std::string out = to_string(s.kind);
  if (s.kind == HomKind::Projection) out += "[" + std::to_string(s.index + 1) + "]";
  return out + " " + to_string(s.from) + " -> " + to_string(s.to);
}

std::string describe(const DominanceVerdict& v) {
  switch (v.relation) {
    case Relation::Dominates: return "YES";
    case Relation::NotDominates: {
      const auto& w = *v.violation;
      if (w.criterion == Criterion::FieldProduct) {
        return "NO (prime " + std::to_string(w.prime) + " exponent " +
               std::to_string(w.exponent) + " has no divisor in " +
               join_exponents(w.candidates) + ")";
      }
      return "NO (characteristic " + std::to_string(w.left_characteristic) +
             " is not divisible by " + std::to_string(w.required) + ")";
    }
    case Relation::Unknown: return "UNKNOWN (" + v.obligation + ")";
  }
  return "?";
}

std::vector<RingSpec> atomize(const RingSpec& r) {
  std::vector<RingSpec> out;
  for (const auto& f : factors_of(r)) {
    if (f.is<Product>()) {
      for (auto& g : atomize(f)) out.push_back(std::move(g));
    } else if (f.is<IntegersMod>()) {
      for (const auto& [p, e] : factorize(f.as<IntegersMod>().n)) {
        out.push_back(e == 1 ? RingSpec::prime_field(p)
                             : RingSpec::integers_mod(*checked_pow(p, e)));
      }
    } else {
      out.push_back(f);
    }
  }
  return out;
}

DominanceVerdict field_product_dominates(const PartitionRing& s, const PartitionRing& r) {
  DominanceVerdict v{Relation::Dominates, to_ring_spec(s), to_ring_spec(r), {}, std::nullopt, {}};
  const auto left = field_list(s);
  const bool product = left.size() > 1;
  for (const auto& [p, k] : field_list(r)) {
    std::optional<std::size_t> pick;
    std::vector<unsigned> candidates;
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i].first != p) continue;
      candidates.push_back(left[i].second);
      if (!pick && k % left[i].second == 0) pick = i;
    }
    if (!pick) {
      v.relation = Relation::NotDominates;
      v.certificate.clear();
      v.violation = Violation{Criterion::FieldProduct, p, k, candidates, 0, 0};
      return v;
    }
    const unsigned m = left[*pick].second;
    Chain chain;
    RingSpec cur = v.lhs;
    if (product) {
      chain.push_back({HomKind::Projection, v.lhs, field_spec(p, m), *pick});
      cur = field_spec(p, m);
    }
    if (m != k) chain.push_back({HomKind::SubringInclusion, cur, field_spec(p, k), 0});
    if (chain.empty()) chain.push_back({HomKind::Identity, v.lhs, v.lhs, 0});
    v.certificate.push_back(std::move(chain));
  }
  return v;
}

bool partition_dominance_bridge(const PartitionRing& s, const PartitionRing& r) {
  if (size_factors(s) != size_factors(r)) {
    throw DomainError("partition_dominance_bridge: rings differ in size or prime support");
  }
  for (const auto& [p, a] : r.assignment) {
    if (!divides(s.assignment.at(p), a)) return false;
  }
  return true;
}

DominanceVerdict zmod_dominates(std::uint64_t n, std::uint64_t m) {
  auto zn = RingSpec::integers_mod(n);
  auto zm = RingSpec::integers_mod(m);
  DominanceVerdict v{Relation::Dominates, zn, zm, {}, std::nullopt, {}};
  if (n % m == 0) {
    if (n == m) {
      v.certificate.push_back({{HomKind::Identity, zn, zn, 0}});
    } else {
      v.certificate.push_back({{HomKind::ModReduction, zn, zm, 0}});
    }
    return v;
  }
  v.relation = Relation::NotDominates;
  v.violation = Violation{Criterion::Characteristic, 0, 0, {}, m, n};
  return v;
}

namespace {

struct AtomOutcome {
  Relation relation;
  Chain chain;
  std::optional<Violation> violation;
  std::string obligation;
};

AtomOutcome dominate_atom(const RingSpec& s, const RingSpec& atom) {
  const auto factors = factors_of(s);
  const bool product = s.is<Product>();
  const std::uint64_t char_s = characteristic(s);
  auto project = [&](std::size_t i) {
    Chain chain;
    if (product) chain.push_back({HomKind::Projection, s, factors[i], i});
    return chain;
  };

  if (atom.is<IntegersMod>()) {
    // Z(p^e) with e >= 2
    const std::uint64_t q = atom.as<IntegersMod>().n;
    const auto [p, e] = *prime_power(q);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      if (!f.is<IntegersMod>() || f.as<IntegersMod>().n % q != 0) continue;
      Chain chain = project(i);
      if (!(f == atom)) chain.push_back({HomKind::ModReduction, f, atom, 0});
      if (chain.empty()) chain.push_back({HomKind::Identity, s, s, 0});
      return {Relation::Dominates, std::move(chain), std::nullopt, {}};
    }
    if (char_s % q != 0) {
      return {Relation::NotDominates, {}, Violation{Criterion::Characteristic, p, e, {}, q, char_s},
              {}};
    }
    return {Relation::Unknown, {}, std::nullopt,
            to_string(s) + " ⪯ " + to_string(atom) + ": no factor reduces onto " + to_string(atom)};
  }

  // A field GF(p^k), or D(p), which is equivalent to GF(p).
  std::uint64_t p;
  unsigned k;
  if (atom.is<DualNumbers>()) {
    p = atom.as<DualNumbers>().p;
    k = 1;
  } else {
    std::tie(p, k) = *field_order(atom);
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    auto r = residue_exponent(f, p);
    if (!r || k % *r != 0) continue;
    Chain chain = project(i);
    if (!(f == atom)) {
      RingSpec cur = f;
      if (f.is<DualNumbers>()) {
        chain.push_back({HomKind::DualAugmentation, f, RingSpec::prime_field(p), 0});
        cur = RingSpec::prime_field(p);
      } else if (f.is<IntegersMod>()) {
        chain.push_back({HomKind::ModReduction, f, RingSpec::prime_field(p), 0});
        cur = RingSpec::prime_field(p);
      }
      if (!(cur == atom)) chain.push_back({HomKind::SubringInclusion, cur, atom, 0});
    }
    if (chain.empty()) chain.push_back({HomKind::Identity, s, s, 0});
    return {Relation::Dominates, std::move(chain), std::nullopt, {}};
  }
  if (std::all_of(factors.begin(), factors.end(), exact_factor)) {
    return {Relation::NotDominates, {},
            Violation{Criterion::FieldProduct, p, k, equivalent_exponents(s, p), 0, 0}, {}};
  }
  if (char_s % p != 0) {
    return {Relation::NotDominates, {},
            Violation{Criterion::Characteristic, p, 1, {}, p, char_s}, {}};
  }
  return {Relation::Unknown, {}, std::nullopt,
          to_string(s) + " ⪯ " + to_string(atom) + ": no factor has a residue field GF(" +
              std::to_string(p) + "^m) with m | " + std::to_string(k) +
              ", and the non-field factors have no known field-product equivalent"};
}

}  // namespace

DominanceVerdict catalog_dominates(const RingSpec& s, const RingSpec& r) {
  DominanceVerdict v{Relation::Dominates, canonicalize(s), canonicalize(r), {}, std::nullopt, {}};
  std::vector<std::string> open;
  for (const auto& atom : atomize(v.rhs)) {
    auto out = dominate_atom(v.lhs, atom);
    if (out.relation == Relation::NotDominates) {
      v.relation = Relation::NotDominates;
      v.certificate.clear();
      v.violation = out.violation;
      v.obligation.clear();
      return v;
    }
    if (out.relation == Relation::Unknown) {
      open.push_back(out.obligation);
    } else {
      v.certificate.push_back(std::move(out.chain));
    }
  }
  if (!open.empty()) {
    v.relation = Relation::Unknown;
    v.certificate.clear();
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (i > 0) v.obligation += "; ";
      v.obligation += open[i];
    }
  }
  return v;
}

namespace {

// Re-derived separately from atomize() so the checker does not trust it.
std::vector<RingSpec> reference_atoms(const RingSpec& r) {
  std::vector<RingSpec> out;
  std::vector<RingSpec> pending = factors_of(r);
  std::reverse(pending.begin(), pending.end());
  while (!pending.empty()) {
    RingSpec f = pending.back();
    pending.pop_back();
    if (f.is<Product>()) {
      auto inner = f.as<Product>().factors;
      pending.insert(pending.end(), inner.rbegin(), inner.rend());
      continue;
    }
    if (f.is<IntegersMod>()) {
      std::uint64_t n = f.as<IntegersMod>().n;
      for (std::uint64_t p = 2; n > 1; ++p) {
        if (n % p != 0) continue;
        std::uint64_t q = 1;
        while (n % p == 0) {
          n /= p;
          q *= p;
        }
        out.push_back(q == p ? RingSpec::prime_field(p) : RingSpec::integers_mod(q));
      }
      continue;
    }
    out.push_back(f);
  }
  return out;
}

bool instantiable_small(const RingSpec& from, const RingSpec& to) {
  try {
    return size(from) <= 512 && size(to) <= kEnumerationLimit;
  } catch (const LimitError&) {
    return false;
  }
}

}  // namespace

std::optional<std::string> check_certificate(const DominanceVerdict& v) {
  if (v.relation == Relation::Unknown) {
    if (v.obligation.empty()) return "unknown verdict without an obligation";
    return std::nullopt;
  }
  if (v.relation == Relation::NotDominates) {
    if (!v.violation) return "negative verdict without a violation";
    const auto& w = *v.violation;
    if (w.criterion == Criterion::Characteristic) {
      if (w.left_characteristic != characteristic(v.lhs)) return "wrong left characteristic";
      if (w.required < 2 || characteristic(v.rhs) % w.required != 0) {
        return "required divisor does not divide the target characteristic";
      }
      if (w.left_characteristic % w.required == 0) return "characteristic criterion not violated";
      return std::nullopt;
    }
    for (const auto& f : factors_of(v.lhs)) {
      if (!exact_factor(f)) return "field-product criterion applied to " + to_string(f);
    }
    bool target_found = false;
    for (const auto& a : reference_atoms(v.rhs)) {
      auto fo = field_order(a);
      if (fo && fo->first == w.prime && fo->second == w.exponent) target_found = true;
      if (a.is<DualNumbers>() && a.as<DualNumbers>().p == w.prime && w.exponent == 1) {
        target_found = true;
      }
    }
    if (!target_found) return "violation names a factor the target does not have";
    auto exps = equivalent_exponents(v.lhs, w.prime);
    if (exps != w.candidates) return "violation lists the wrong candidate exponents";
    for (unsigned m : exps) {
      if (w.exponent % m == 0) return "candidate exponent " + std::to_string(m) + " divides";
    }
    return std::nullopt;
  }

  if (v.certificate.empty()) return "positive verdict without chains";
  std::vector<RingSpec> ends;
  for (const auto& chain : v.certificate) {
    if (chain.empty()) return "empty chain";
    if (!(chain.front().from == v.lhs)) return "chain does not start at the left ring";
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto& st = chain[i];
      if (i > 0 && !(chain[i - 1].to == st.from)) return "chain links do not connect";
      if (auto defect = structural_defect(st.kind, st.from, st.to, st.index)) return defect;
      if (instantiable_small(st.from, st.to)) {
        auto h = RingHom::make(st.kind, st.from, st.to, st.index);
        if (auto bad = check_hom_laws(h)) return bad;
      }
    }
    ends.push_back(chain.back().to);
  }
  if (ends.size() == 1 && ends.front() == v.rhs) return std::nullopt;
  if (ends != reference_atoms(v.rhs)) return "chains do not end at the atomic factors of the target";
  return std::nullopt;
}

bool is_maximal_ring(const RingSpec& r) {
  auto pr = as_partition_ring(r);
  if (!pr) return false;
  for (const auto& [p, a] : pr->assignment) {
    if (!is_maximal(a)) return false;
  }
  return true;
}

std::vector<PartitionRing> maximal_rings(const Factorization& size) {
  if (size.empty()) throw DomainError("maximal_rings: empty factorization");
  std::vector<std::vector<Partition>> choices;
  for (std::size_t i = 0; i < size.size(); ++i) {
    const auto& [p, k] = size[i];
    if (!is_prime(p)) throw DomainError("maximal_rings: " + std::to_string(p) + " is not prime");
    for (std::size_t j = 0; j < i; ++j) {
      if (size[j].first == p) throw DomainError("maximal_rings: repeated prime");
    }
    if (k > kMaxMaximalK) throw LimitError("maximal_rings: exponents must be at most 40");
    choices.push_back(maximal_partitions(k));
  }
  std::vector<PartitionRing> out;
  std::vector<std::size_t> idx(size.size(), 0);
  while (true) {
    PartitionRing pr;
    for (std::size_t i = 0; i < size.size(); ++i) {
      pr.assignment.emplace(size[i].first, choices[i][idx[i]]);
    }
    out.push_back(std::move(pr));
    std::size_t i = size.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

RingSpec smallest_field_refuge(const RingSpec& r, std::uint64_t p) {
  if (!is_prime(p) || size(r) % p != 0) {
    throw DomainError("smallest_field_refuge: " + std::to_string(p) + " does not divide the size of " +
                      to_string(r));
  }
  std::optional<unsigned> best;
  for (const auto& f : factors_of(canonicalize(r))) {
    auto e = residue_exponent(f, p);
    if (e && (!best || *e > *best)) best = e;
  }
  return field_spec(p, *best);
}

std::vector<RingSpec> square_free_fields(std::uint64_t n) {
  if (n < 2 || !square_free(n)) {
    throw DomainError("square_free_fields: " + std::to_string(n) + " is not square-free");
  }
  std::vector<RingSpec> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(RingSpec::prime_field(p));
  return out;
}

PartitionRing maximal_dominator(const RingSpec& r) {
  // Replace each local factor by the field of its size, then move every
  // partition up to a maximal one it divides.
  std::vector<std::pair<std::uint64_t, unsigned>> fields;
  for (const auto& f : factors_of(canonicalize(r))) {
    for (const auto& [p, e] : factorize(size(f))) fields.emplace_back(p, e);
  }
  PartitionRing local = to_partition_ring(fields);
  PartitionRing out;
  for (const auto& [p, a] : local.assignment) {
    for (auto& m : maximal_partitions(a.total())) {
      if (divides(a, m)) {
        out.assignment.emplace(p, std::move(m));
        break;
      }
    }
  }
  return out;
}

}  // namespace ringnc
