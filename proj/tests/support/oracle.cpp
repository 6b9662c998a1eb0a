#include "oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

using trispec::FiniteCommRing;
using trispec::TriElement;
using trispec::Triring;

namespace {

Set sorted(std::set<Elem> s) { return {s.begin(), s.end()}; }

bool has(const Set& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

Set intersection(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Set> ideals_by_subsets(const FiniteCommRing& ring) {
  const std::size_t n = ring.size();
  if (n > 20) throw std::invalid_argument("ideals_by_subsets: carrier too large");
  std::vector<Set> out;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // bit 0 (zero) always set
    auto in = [mask](Elem x) { return (mask >> x) & 1u; };
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      for (Elem b = 0; b < n && ok; ++b) {
        if (in(b) && !in(ring.add(a, b))) ok = false;
        if (!in(ring.mul(b, a))) ok = false;
      }
    }
    if (!ok) continue;
    Set s;
    for (Elem a = 0; a < n; ++a)
      if (in(a)) s.push_back(a);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Set ideal_closure(const FiniteCommRing& ring, const Set& gens) {
  std::set<Elem> s(gens.begin(), gens.end());
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const Set cur(s.begin(), s.end());
    for (Elem a : cur) {
      for (Elem b : cur) grew |= s.insert(ring.add(a, b)).second;
      for (Elem r = 0; r < ring.size(); ++r) grew |= s.insert(ring.mul(r, a)).second;
    }
  }
  return sorted(std::move(s));
}

bool prime(const FiniteCommRing& ring, const Set& ideal) {
  if (ideal.size() == ring.size()) return false;
  for (Elem a = 0; a < ring.size(); ++a)
    for (Elem b = 0; b < ring.size(); ++b)
      if (has(ideal, ring.mul(a, b)) && !has(ideal, a) && !has(ideal, b)) return false;
  return true;
}

bool nilpotent(const FiniteCommRing& ring, Elem x) {
  Elem p = x;
  for (std::size_t m = 1; m <= ring.size() + 1; ++m) {
    if (p == 0) return true;
    p = ring.mul(p, x);
  }
  return false;
}

Set nilradical(const FiniteCommRing& ring) {
  Set out;
  for (Elem a = 0; a < ring.size(); ++a)
    if (nilpotent(ring, a)) out.push_back(a);
  return out;
}

Pair from(const trispec::Triideal& t) { return {t.even.members(), t.odd.members()}; }

trispec::Triideal to(const Triring& ring, const Pair& p) {
  return {trispec::Ideal::from_members(ring.even().size(), p.even),
          trispec::Ideal::from_members(ring.odd().size(), p.odd)};
}

bool contains(const Pair& outer, const Pair& inner) {
  return std::includes(outer.even.begin(), outer.even.end(), inner.even.begin(), inner.even.end()) &&
         std::includes(outer.odd.begin(), outer.odd.end(), inner.odd.begin(), inner.odd.end());
}

Pair meet(const Triring& ring, const std::vector<Pair>& family) {
  Pair out;
  for (Elem a = 0; a < ring.even().size(); ++a) out.even.push_back(a);
  for (Elem a = 0; a < ring.odd().size(); ++a) out.odd.push_back(a);
  for (const auto& p : family) {
    out.even = intersection(out.even, p.even);
    out.odd = intersection(out.odd, p.odd);
  }
  return out;
}

std::vector<Pair> triideals(const Triring& ring) {
  const auto evens = ideals_by_subsets(ring.even());
  const auto odds = ideals_by_subsets(ring.odd());
  std::vector<Pair> out;
  for (const auto& e : evens)
    for (const auto& o : odds) {
      bool ok = true;
      for (Elem a : e)
        for (Elem b : o)
          for (std::size_t r = 0; r < ring.size() && ok; ++r) {
            const TriElement x{a, b}, y = ring.element(r);
            for (TriElement z : {ring.mul(x, y), ring.mul(y, x)})
              if (!has(e, z.even) || !has(o, z.odd)) ok = false;
          }
      if (ok) out.push_back({e, o});
    }
  return out;
}

bool prime_triideal(const Triring& ring, const Pair& p) {
  if (p.even.size() == ring.even().size() && p.odd.size() == ring.odd().size()) return false;
  const Elem n0 = static_cast<Elem>(ring.even().size()), n1 = static_cast<Elem>(ring.odd().size());
  for (Elem x = 0; x < n0; ++x)
    for (Elem y = 0; y < n0; ++y)
      if (has(p.even, ring.mul({x, 0}, {y, 0}).even) && !has(p.even, x) && !has(p.even, y)) return false;
  for (Elem x = 0; x < n0; ++x)
    for (Elem y = 0; y < n1; ++y) {
      if (has(p.odd, ring.mul({x, 0}, {0, y}).odd) && !has(p.even, x) && !has(p.odd, y)) return false;
      if (has(p.odd, ring.mul({0, y}, {x, 0}).odd) && !has(p.odd, y) && !has(p.even, x)) return false;
    }
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n1; ++y)
      if (has(p.odd, ring.odd().mul(x, y)) && !has(p.odd, x) && !has(p.odd, y)) return false;
  return true;
}

std::vector<Pair> primes(const Triring& ring) {
  std::vector<Pair> out;
  for (const auto& p : triideals(ring))
    if (prime_triideal(ring, p)) out.push_back(p);
  return out;
}

Pair radical(const Triring& ring, const Pair& ideal) {
  auto root = [](const FiniteCommRing& r, const Set& s) {
    Set out;
    for (Elem a = 0; a < r.size(); ++a) {
      Elem p = a;
      for (std::size_t m = 1; m <= r.size() + 1; ++m, p = r.mul(p, a))
        if (has(s, p)) {
          out.push_back(a);
          break;
        }
    }
    return out;
  };
  return {root(ring.even(), ideal.even), root(ring.odd(), ideal.odd)};
}

bool triring_axioms(const trispec::TriringCandidate& c) {
  const FiniteCommRing& r0 = c.even;
  const FiniteCommRing& r1 = c.odd;
  const Elem n1 = static_cast<Elem>(r1.size());
  const std::size_t n = r0.size() * r1.size();
  auto element = [&](std::size_t i) { return TriElement{static_cast<Elem>(i / n1), static_cast<Elem>(i % n1)}; };
  auto add = [&](TriElement x, TriElement y) { return TriElement{r0.add(x.even, y.even), r1.add(x.odd, y.odd)}; };
  const auto& mul = c.mul;
  const TriElement one{r0.one(), 0}, zero{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const TriElement x = element(i);
    if (mul(one, x) != x || mul(x, one) != x) return false;
    for (std::size_t j = 0; j < n; ++j) {
      const TriElement y = element(j);
      const TriElement xy = mul(x, y);
      const bool x_even = x.odd == 0, y_even = y.odd == 0, x_odd = x.even == 0, y_odd = y.even == 0;
      if (x_even && y_even && (xy.odd != 0 || xy != mul(y, x))) return false;
      if (x_odd && y_odd && xy != zero) return false;
      if ((x_odd || y_odd) && xy.even != 0) return false;
      for (std::size_t k = 0; k < n; ++k) {
        const TriElement z = element(k);
        if (mul(xy, z) != mul(x, mul(y, z))) return false;
        if (mul(x, add(y, z)) != add(xy, mul(x, z))) return false;
        if (mul(add(y, z), x) != add(mul(y, x), mul(z, x))) return false;
      }
    }
    // Triassociative law with alpha, beta odd.
    for (Elem a = 0; a < n1; ++a)
      for (Elem b = 0; b < n1; ++b) {
        const TriElement ab{0, r1.mul(a, b)};
        if (mul(x, ab).odd != r1.mul(mul(x, {0, a}).odd, b)) return false;
        if (mul(ab, x).odd != r1.mul(a, mul({0, b}, x).odd)) return false;
      }
    // R1 x0 = x0 R1 as sets.
    std::set<Elem> left, right;
    for (Elem a = 0; a < n1; ++a) {
      left.insert(mul({0, a}, {x.even, 0}).odd);
      right.insert(mul({x.even, 0}, {0, a}).odd);
    }
    if (left != right) return false;
  }
  return true;
}

bool triring_axioms(const Triring& ring) {
  return triring_axioms(trispec::TriringCandidate{ring.even(), ring.odd(),
                                                  [&ring](TriElement x, TriElement y) { return ring.mul(x, y); }});
}

bool has_generic_point(const std::vector<Pair>& points, const std::vector<std::size_t>& members) {
  for (std::size_t g : members) {
    std::vector<std::size_t> closure;
    for (std::size_t q = 0; q < points.size(); ++q)
      if (contains(points[q], points[g])) closure.push_back(q);
    if (closure == members) return true;
  }
  return false;
}

}  // namespace oracle
