#include "trispec/commring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "trispec/error.hpp"

namespace trispec {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  std::ostringstream os;
  os << "a=" << a << " b=" << b << " c=" << c;
  return os.str();
}

std::string pair(Elem a, Elem b) {
  std::ostringstream os;
  os << "a=" << a << " b=" << b;
  return os.str();
}

[[noreturn]] void violation(const std::string& law, const std::string& witness) {
  throw Error(ErrorKind::AxiomViolation, law + " fails at " + witness, witness);
}

}  // namespace

RingDescriptor RingDescriptor::zn(std::size_t n) {
  RingDescriptor d;
  d.kind = Kind::zn;
  d.n = n;
  return d;
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> factors) {
  RingDescriptor d;
  d.kind = Kind::product;
  d.factors = std::move(factors);
  return d;
}

RingDescriptor RingDescriptor::table(std::size_t size, std::vector<std::vector<std::int64_t>> add,
                                     std::vector<std::vector<std::int64_t>> mul, std::int64_t one) {
  RingDescriptor d;
  d.kind = Kind::table;
  d.size = size;
  d.add = std::move(add);
  d.mul = std::move(mul);
  d.one = one;
  return d;
}

std::size_t RingDescriptor::carrier_size() const {
  switch (kind) {
    case Kind::zn: return n;
    case Kind::table: return size;
    case Kind::product: {
      std::size_t total = 1;
      for (const auto& f : factors) {
        std::size_t s = f.carrier_size();
        // Saturate instead of overflowing; anything this large is rejected anyway.
        if (s != 0 && total > SIZE_MAX / s) return SIZE_MAX;
        total *= s;
      }
      return total;
    }
  }
  return 0;
}

FiniteCommRing FiniteCommRing::from_tables(std::size_t size, std::vector<Elem> add,
                                           std::vector<Elem> mul, Elem one, std::string label,
                                           RingDescriptor::Kind provenance) {
  if (size == 0) throw Error(ErrorKind::AxiomViolation, "ring carrier must be non-empty");
  if (add.size() != size * size || mul.size() != size * size)
    throw Error(ErrorKind::AxiomViolation, "operation tables must be size x size");
  if (one >= size) throw Error(ErrorKind::RangeError, "one out of range");
  for (Elem v : add)
    if (v >= size) throw Error(ErrorKind::RangeError, "add table entry out of range");
  for (Elem v : mul)
    if (v >= size) throw Error(ErrorKind::RangeError, "mul table entry out of range");

  FiniteCommRing r;
  r.size_ = size;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.one_ = one;
  r.label_ = std::move(label);
  r.provenance_ = provenance;

  const auto n = static_cast<Elem>(size);
  r.neg_.assign(size, 0);
  for (Elem a = 0; a < n; ++a) {
    if (r.add(0, a) != a) violation("additive identity", pair(0, a));
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) {
      if (r.add(a, b) == 0) {
        r.neg_[a] = b;
        found = true;
      }
    }
    if (!found) violation("additive inverse", pair(a, a));
    if (r.mul(one, a) != a) violation("multiplicative identity", pair(one, a));
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) violation("additive commutativity", pair(a, b));
      if (r.mul(a, b) != r.mul(b, a)) violation("multiplicative commutativity", pair(a, b));
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = r.add(a, b);
      const Elem ab_mul = r.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c)))
          violation("additive associativity", triple(a, b, c));
        if (r.mul(ab_mul, c) != r.mul(a, r.mul(b, c)))
          violation("multiplicative associativity", triple(a, b, c));
        if (r.mul(a, r.add(b, c)) != r.add(ab_mul, r.mul(a, c)))
          violation("distributivity", triple(a, b, c));
      }
    }
  }
  return r;
}

Elem FiniteCommRing::power(Elem a, std::size_t m) const {
  Elem result = one_;
  for (std::size_t i = 0; i < m; ++i) result = mul(result, a);
  return result;
}

namespace {

FiniteCommRing make_zn(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::SchemaError, "Z_n requires n >= 1");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  return FiniteCommRing::from_tables(n, std::move(add), std::move(mul), static_cast<Elem>(1 % n),
                                     "Z_" + std::to_string(n), RingDescriptor::Kind::zn);
}

// Mixed radix with the first factor most significant.
FiniteCommRing make_product(const std::vector<FiniteCommRing>& factors) {
  std::size_t n = 1;
  std::string label;
  for (const auto& f : factors) {
    n *= f.size();
    if (!label.empty()) label += " x ";
    label += f.label();
  }
  if (factors.empty()) label = "Z_1";
  auto decode = [&](std::size_t idx) {
    std::vector<Elem> digits(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      digits[k] = static_cast<Elem>(idx % factors[k].size());
      idx /= factors[k].size();
    }
    return digits;
  };
  auto encode = [&](const std::vector<Elem>& digits) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) idx = idx * factors[k].size() + digits[k];
    return static_cast<Elem>(idx);
  };
  std::vector<std::vector<Elem>> decoded(n);
  for (std::size_t i = 0; i < n; ++i) decoded[i] = decode(i);

  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<Elem> s(factors.size()), p(factors.size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < factors.size(); ++k) {
        s[k] = factors[k].add(decoded[a][k], decoded[b][k]);
        p[k] = factors[k].mul(decoded[a][k], decoded[b][k]);
      }
      add[a * n + b] = encode(s);
      mul[a * n + b] = encode(p);
    }
  }
  std::vector<Elem> ones(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) ones[k] = factors[k].one();
  return FiniteCommRing::from_tables(n, std::move(add), std::move(mul), encode(ones), label,
                                     RingDescriptor::Kind::product);
}

FiniteCommRing make_table(const RingDescriptor& d) {
  const std::size_t n = d.size;
  if (n == 0) throw Error(ErrorKind::SchemaError, "table ring requires size >= 1");
  if (d.add.size() != n || d.mul.size() != n)
    throw Error(ErrorKind::SchemaError, "table rows must match size");
  std::vector<Elem> add(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (d.add[a].size() != n || d.mul[a].size() != n)
      throw Error(ErrorKind::SchemaError, "table columns must match size");
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = d.add[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorKind::RangeError, "add entry out of range", pair(Elem(a), Elem(b)));
      add[a * n + b] = static_cast<Elem>(v);
    }
  }
  if (d.one < 0 || static_cast<std::size_t>(d.one) >= n)
    throw Error(ErrorKind::RangeError, "one out of range");
  // Resolve -k through the additive inverse table before validation.
  std::vector<Elem> neg(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (add[a * n + b] == 0) {
        neg[a] = static_cast<Elem>(b);
        found = true;
      }
    }
    if (!found) violation("additive inverse", pair(Elem(a), Elem(a)));
  }
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = d.mul[a][b];
      const auto mag = static_cast<std::size_t>(v < 0 ? -v : v);
      if (mag >= n) throw Error(ErrorKind::RangeError, "mul entry out of range", pair(Elem(a), Elem(b)));
      mul[a * n + b] = v < 0 ? neg[mag] : static_cast<Elem>(mag);
    }
  }
  return FiniteCommRing::from_tables(n, std::move(add), std::move(mul), static_cast<Elem>(d.one),
                                     "table(" + std::to_string(n) + ")", RingDescriptor::Kind::table);
}

}  // namespace

FiniteCommRing make_ring(const RingDescriptor& descriptor, const Limits& limits) {
  const std::size_t n = descriptor.carrier_size();
  if (n > limits.max_size)
    throw Error(ErrorKind::SizeLimit,
                "ring of size " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_size),
                std::to_string(n));
  switch (descriptor.kind) {
    case RingDescriptor::Kind::zn: return make_zn(descriptor.n);
    case RingDescriptor::Kind::table: return make_table(descriptor);
    case RingDescriptor::Kind::product: {
      std::vector<FiniteCommRing> factors;
      factors.reserve(descriptor.factors.size());
      for (const auto& f : descriptor.factors) factors.push_back(make_ring(f, limits));
      return make_product(factors);
    }
  }
  throw Error(ErrorKind::SchemaError, "unknown ring descriptor kind");
}

// ---------------------------------------------------------------------------
// Ideals

Ideal Ideal::from_members(std::size_t carrier_size, std::vector<Elem> members) {
  Ideal s;
  s.mask_.assign(carrier_size, false);
  for (Elem m : members) s.mask_.at(m) = true;
  s.members_.reserve(members.size());
  for (std::size_t i = 0; i < carrier_size; ++i)
    if (s.mask_[i]) s.members_.push_back(static_cast<Elem>(i));
  return s;
}

bool Ideal::is_subset_of(const Ideal& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Elem x) { return other.contains(x); });
}

std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
  if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

bool is_ideal(const FiniteCommRing& ring, std::span<const Elem> members) {
  std::vector<bool> in(ring.size(), false);
  for (Elem m : members) {
    if (m >= ring.size()) return false;
    in[m] = true;
  }
  if (!in[0]) return false;
  for (Elem a : members) {
    for (Elem b : members)
      if (!in[ring.add(a, b)]) return false;
    if (!in[ring.neg(a)]) return false;
    for (Elem r = 0; r < ring.size(); ++r)
      if (!in[ring.mul(r, a)]) return false;
  }
  return true;
}

Ideal zero_ideal(const FiniteCommRing& ring) { return Ideal::from_members(ring.size(), {0}); }

Ideal unit_ideal(const FiniteCommRing& ring) {
  std::vector<Elem> all(ring.size());
  std::iota(all.begin(), all.end(), Elem{0});
  return Ideal::from_members(ring.size(), std::move(all));
}

Ideal ideal_generated(const FiniteCommRing& ring, std::span<const Elem> gens) {
  const std::size_t n = ring.size();
  std::vector<bool> is_step(n, false);
  std::vector<Elem> steps;
  for (Elem g : gens) {
    for (Elem r = 0; r < n; ++r) {
      const Elem p = ring.mul(r, g);
      if (p != 0 && !is_step[p]) {
        is_step[p] = true;
        steps.push_back(p);
      }
    }
  }
  // Additive closure; in a finite group this already contains all negatives.
  std::vector<bool> in(n, false);
  std::vector<Elem> members{0};
  in[0] = true;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem s = queue.front();
    queue.pop_front();
    for (Elem g : steps) {
      const Elem t = ring.add(s, g);
      if (!in[t]) {
        in[t] = true;
        members.push_back(t);
        queue.push_back(t);
      }
    }
  }
  return Ideal::from_members(n, std::move(members));
}

Ideal principal_ideal(const FiniteCommRing& ring, Elem generator) {
  const Elem g[] = {generator};
  return ideal_generated(ring, g);
}

Ideal ideal_sum(const FiniteCommRing& ring, const Ideal& a, const Ideal& b) {
  std::vector<bool> in(ring.size(), false);
  std::vector<Elem> members;
  for (Elem x : a.members()) {
    for (Elem y : b.members()) {
      const Elem s = ring.add(x, y);
      if (!in[s]) {
        in[s] = true;
        members.push_back(s);
      }
    }
  }
  return Ideal::from_members(ring.size(), std::move(members));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  std::vector<Elem> members;
  for (Elem x : a.members())
    if (b.contains(x)) members.push_back(x);
  return Ideal::from_members(a.carrier_size(), std::move(members));
}

Ideal ideal_product(const FiniteCommRing& ring, const Ideal& a, const Ideal& b) {
  std::vector<bool> seen(ring.size(), false);
  std::vector<Elem> products;
  for (Elem x : a.members()) {
    for (Elem y : b.members()) {
      const Elem p = ring.mul(x, y);
      if (!seen[p]) {
        seen[p] = true;
        products.push_back(p);
      }
    }
  }
  return ideal_generated(ring, products);
}

std::vector<Ideal> enumerate_ideals(const FiniteCommRing& ring, const Limits& limits) {
  std::set<Ideal> found;
  std::vector<Ideal> principals;
  const auto enforce_cap = [&] {
    if (found.size() > limits.max_ideals)
      throw Error(ErrorKind::SizeLimit, "ideal count exceeds cap " + std::to_string(limits.max_ideals),
                  std::to_string(found.size()));
  };
  for (Elem a = 0; a < ring.size(); ++a) {
    Ideal p = principal_ideal(ring, a);
    if (found.insert(p).second) principals.push_back(std::move(p));
  }
  enforce_cap();
  std::deque<Ideal> queue(principals.begin(), principals.end());
  while (!queue.empty()) {
    const Ideal current = std::move(queue.front());
    queue.pop_front();
    for (const auto& p : principals) {
      if (p.is_subset_of(current)) continue;
      Ideal next = ideal_sum(ring, current, p);
      if (found.insert(next).second) {
        enforce_cap();
        queue.push_back(std::move(next));
      }
    }
  }
  return {found.begin(), found.end()};
}

bool is_prime_ideal(const FiniteCommRing& ring, const Ideal& ideal) {
  if (ideal.is_whole()) return false;
  for (Elem a = 0; a < ring.size(); ++a) {
    if (ideal.contains(a)) continue;
    for (Elem b = 0; b < ring.size(); ++b)
      if (!ideal.contains(b) && ideal.contains(ring.mul(a, b))) return false;
  }
  return true;
}

bool is_nilpotent(const FiniteCommRing& ring, Elem x) {
  Elem p = x;
  for (std::size_t m = 1; m <= ring.size(); ++m) {
    if (p == 0) return true;
    p = ring.mul(p, x);
  }
  return false;
}

Ideal nilradical_comm(const FiniteCommRing& ring) {
  std::vector<Elem> members;
  for (Elem x = 0; x < ring.size(); ++x)
    if (is_nilpotent(ring, x)) members.push_back(x);
  if (!is_ideal(ring, members))
    throw Error(ErrorKind::AxiomViolation, "nilpotent elements do not form an ideal");
  return Ideal::from_members(ring.size(), std::move(members));
}

QuotientRing quotient_ring(const FiniteCommRing& ring, const Ideal& ideal) {
  const std::size_t n = ring.size();
  constexpr Elem unassigned = ~Elem{0};
  std::vector<Elem> project(n, unassigned);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (project[x] != unassigned) continue;
    // Every smaller element already sits in an earlier coset, so x is the minimum of its own.
    const auto coset = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : ideal.members()) project[ring.add(x, i)] = coset;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> add(q * q), mul(q * q);
  for (std::size_t c = 0; c < q; ++c) {
    for (std::size_t d = 0; d < q; ++d) {
      add[c * q + d] = project[ring.add(reps[c], reps[d])];
      mul[c * q + d] = project[ring.mul(reps[c], reps[d])];
    }
  }
  auto qring = FiniteCommRing::from_tables(q, std::move(add), std::move(mul), project[ring.one()],
                                           ring.label() + "/" + format_set(ideal.members()));
  return {std::move(qring), std::move(project), std::move(reps)};
}

std::string format_set(std::span<const Elem> members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

}  // namespace trispec
