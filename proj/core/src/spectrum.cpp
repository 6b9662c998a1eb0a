#include "trispec/spectrum.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

#include "trispec/error.hpp"

namespace trispec {

bool is_prime_triideal(const Triring& ring, const Triideal& p) {
  if (p.is_whole()) return false;
  const auto n0 = static_cast<Elem>(ring.even().size());
  const auto n1 = static_cast<Elem>(ring.odd().size());
  const Ideal& p0 = p.even;
  const Ideal& p1 = p.odd;
  // x0 y0 in P0 => x0 in P0 or y0 in P0
  for (Elem x = 0; x < n0; ++x)
    for (Elem y = 0; y < n0; ++y)
      if (p0.contains(ring.mul({x, 0}, {y, 0}).even) && !p0.contains(x) && !p0.contains(y))
        return false;
  // x0 y1 in P1 => x0 in P0 or y1 in P1
  for (Elem x = 0; x < n0; ++x)
    for (Elem y = 0; y < n1; ++y)
      if (p1.contains(ring.mul({x, 0}, {0, y}).odd) && !p0.contains(x) && !p1.contains(y))
        return false;
  // x1 y0 in P1 => x1 in P1 or y0 in P0
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n0; ++y)
      if (p1.contains(ring.mul({0, x}, {y, 0}).odd) && !p1.contains(x) && !p0.contains(y))
        return false;
  // x1 # y1 in P1 => x1 in P1 or y1 in P1
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n1; ++y)
      if (p1.contains(ring.sharp(x, y)) && !p1.contains(x) && !p1.contains(y)) return false;
  return true;
}

std::vector<Triideal> enumerate_triideals(const Triring& ring, const Limits& limits) {
  const std::vector<Ideal> evens = enumerate_ideals(ring.even(), limits);
  const std::vector<Ideal> odds = enumerate_ideals(ring.odd(), limits);
  std::vector<Triideal> out;
  for (const auto& e : evens) {
    for (const auto& o : odds) {
      if (!is_triideal_by_components(ring, e, o)) continue;
      out.push_back({e, o});
      if (out.size() > limits.max_ideals)
        throw Error(ErrorKind::SizeLimit,
                    "triideal count exceeds cap " + std::to_string(limits.max_ideals),
                    std::to_string(out.size()));
    }
  }
  return out;
}

Trispectrum::Trispectrum(Triring ring, std::vector<Triideal> triideals)
    : ring_(std::move(ring)), triideals_(std::move(triideals)) {
  for (const auto& t : triideals_)
    if (is_prime_triideal(ring_, t)) points_.push_back(t);
  for (std::size_t i = 0; i < points_.size(); ++i) (is_even_point(i) ? even_ : odd_).push_back(i);
}

PointSet Trispectrum::all_points() const {
  PointSet all(points_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

Trispectrum trispectrum(const Triring& ring, const Limits& limits) {
  Trispectrum spec(ring, enumerate_triideals(ring, limits));
  if (!ring.even().is_zero_ring() && spec.even_points().empty())
    throw std::logic_error("even trispectrum of a nonzero triring is empty");
  if (!ring.odd().is_zero_ring() && spec.odd_points().empty())
    throw std::logic_error("odd trispectrum is empty although R1 != 0");
  return spec;
}

Triideal extend_odd_prime(const Triring& ring, const Ideal& odd_prime, const Limits& limits) {
  if (odd_prime.carrier_size() != ring.odd().size() || !is_ideal(ring.odd(), odd_prime.members()) ||
      !is_prime_ideal(ring.odd(), odd_prime))
    throw Error(ErrorKind::NotPrimeInput, "odd ideal is not a prime ideal of (R1, #)",
                format_set(odd_prime.members()));
  auto absorbed = [&](Elem x0) {
    for (Elem alpha = 0; alpha < ring.odd().size(); ++alpha)
      if (!odd_prime.contains(ring.mul({0, alpha}, {x0, 0}).odd)) return false;
    return true;
  };
  std::vector<Elem> members;
  for (Elem x0 = 0; x0 < ring.even().size(); ++x0)
    if (absorbed(x0)) members.push_back(x0);
  Triideal result{Ideal::from_members(ring.even().size(), std::move(members)), odd_prime};

  if (!is_ideal(ring.even(), result.even.members()) || !is_prime_ideal(ring.even(), result.even))
    throw std::logic_error("extension P0 is not a prime ideal of R0");
  if (!is_triideal(ring, result.even, result.odd) || !is_prime_triideal(ring, result))
    throw std::logic_error("extension is not a prime triideal: " + format_triideal(result));
  for (const auto& i0 : enumerate_ideals(ring.even(), limits)) {
    const bool in_omega = std::all_of(i0.members().begin(), i0.members().end(), absorbed);
    if (in_omega && !i0.is_subset_of(result.even))
      throw std::logic_error("extension misses compatible ideal " + format_set(i0.members()));
  }
  return result;
}

ClosedSet vsharp(const Trispectrum& spec, const Triideal& ideal) {
  ClosedSet c{ideal, {}};
  for (std::size_t i = 0; i < spec.points().size(); ++i)
    if (ideal.is_subset_of(spec.points()[i])) c.members.push_back(i);
  return c;
}

PointSet dsharp(const Trispectrum& spec, const Triideal& ideal) {
  PointSet out;
  for (std::size_t i = 0; i < spec.points().size(); ++i)
    if (!ideal.is_subset_of(spec.points()[i])) out.push_back(i);
  return out;
}

PointSet dsharp_even(const Trispectrum& spec, Elem x0) {
  const Elem g[] = {x0};
  return dsharp(spec, make_triideal(spec.ring(), g, {}));
}

PointSet dsharp_odd(const Trispectrum& spec, Elem x1) {
  const Elem g[] = {x1};
  return dsharp(spec, make_triideal(spec.ring(), {}, g));
}

std::vector<PointSet> closed_sets(const Trispectrum& spec) {
  std::vector<PointSet> out;
  for (const auto& t : spec.triideals()) out.push_back(vsharp(spec, t).members);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_irreducible_by_search(const Trispectrum& spec, const PointSet& members) {
  if (members.empty()) return false;
  std::vector<PointSet> proper;
  for (auto& f : closed_sets(spec))
    if (f != members && std::includes(members.begin(), members.end(), f.begin(), f.end()))
      proper.push_back(std::move(f));
  for (std::size_t a = 0; a < proper.size(); ++a) {
    for (std::size_t b = a; b < proper.size(); ++b) {
      PointSet u;
      std::set_union(proper[a].begin(), proper[a].end(), proper[b].begin(), proper[b].end(),
                     std::back_inserter(u));
      if (u == members) return false;
    }
  }
  return true;
}

bool is_irreducible(const Trispectrum& spec, const ClosedSet& closed) {
  if (closed.members.empty())
    throw Error(ErrorKind::EmptySet, "irreducibility is undefined for the empty closed set",
                format_triideal(closed.defining_ideal));
  const bool by_search = is_irreducible_by_search(spec, closed.members);
  const bool by_radical = is_prime_triideal(spec.ring(), radical(spec.ring(), closed.defining_ideal));
  if (by_search != by_radical)
    throw std::logic_error("irreducibility disagrees with primality of the radical for " +
                           format_triideal(closed.defining_ideal));
  return by_search;
}

Subcover quasicompact_subcover(const Trispectrum& spec, std::span<const Triideal> cover,
                               CoverTarget target) {
  const PointSet targets = target == CoverTarget::full ? spec.all_points() : spec.odd_points();
  auto covered_by = [&](std::size_t p, std::span<const std::size_t> indices) {
    return std::any_of(indices.begin(), indices.end(),
                       [&](std::size_t i) { return !cover[i].is_subset_of(spec.points()[p]); });
  };
  std::vector<std::size_t> everything(cover.size());
  for (std::size_t i = 0; i < cover.size(); ++i) everything[i] = i;
  for (std::size_t p : targets)
    if (!covered_by(p, everything))
      throw Error(ErrorKind::NotACover, "point " + std::to_string(p) + " is not covered",
                  format_triideal(spec.points()[p]));

  const bool full = target == CoverTarget::full;
  const FiniteCommRing& comp = full ? spec.ring().even() : spec.ring().odd();
  const Elem goal = comp.one();
  struct Step {
    Elem prev;
    std::size_t cover_index;
    Elem element;
  };
  std::vector<std::optional<Step>> parent(comp.size());
  std::vector<bool> seen(comp.size(), false);
  seen[0] = true;
  std::deque<Elem> queue{0};
  while (!queue.empty() && !seen[goal]) {
    const Elem s = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < cover.size() && !seen[goal]; ++i) {
      const Ideal& part = full ? cover[i].even : cover[i].odd;
      for (Elem x : part.members()) {
        const Elem t = comp.add(s, x);
        if (seen[t]) continue;
        seen[t] = true;
        parent[t] = Step{s, i, x};
        queue.push_back(t);
        if (t == goal) break;
      }
    }
  }
  if (!seen[goal]) throw std::logic_error("no partition of unity found for a covering family");

  std::vector<std::pair<std::size_t, Elem>> summands;
  for (Elem s = goal; parent[s]; s = parent[s]->prev)
    summands.emplace_back(parent[s]->cover_index, parent[s]->element);
  std::sort(summands.begin(), summands.end());
  Subcover out;
  for (const auto& [i, x] : summands) {
    if (!out.witness.empty() && out.witness.back().first == i)
      out.witness.back().second = comp.add(out.witness.back().second, x);
    else
      out.witness.emplace_back(i, x);
  }
  Elem total = 0;
  for (const auto& [i, x] : out.witness) {
    out.sublist.push_back(i);
    total = comp.add(total, x);
  }
  if (total != goal) throw std::logic_error("subcover witness does not sum to the identity");
  for (std::size_t p : targets)
    if (!covered_by(p, out.sublist)) throw std::logic_error("subcover misses a point");
  return out;
}

SpecializationOrder specialization_order(const Trispectrum& spec) {
  const auto& pts = spec.points();
  const std::size_t n = pts.size();
  SpecializationOrder order;
  order.specializes.assign(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) order.specializes[p][q] = pts[p].is_subset_of(pts[q]);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q || !order.specializes[p][q]) continue;
      bool covering = true;
      for (std::size_t r = 0; r < n && covering; ++r)
        if (r != p && r != q && order.specializes[p][r] && order.specializes[r][q]) covering = false;
      if (covering) order.hasse_edges.emplace_back(p, q);
    }
  return order;
}

PointSet closure(const Trispectrum& spec, const PointSet& points) {
  Triideal meet = whole_triideal(spec.ring());
  for (std::size_t p : points) meet = intersect(meet, spec.points()[p]);
  return vsharp(spec, meet).members;
}

FaithfulnessDiagnostic odd_prime_faithfulness(const Trispectrum& spec) {
  const Triring& ring = spec.ring();
  FaithfulnessDiagnostic d;
  for (const auto& p : spec.triideals()) {
    if (p.odd.is_whole()) continue;
    ++d.examined;
    bool criterion = is_prime_ideal(ring.even(), p.even) && is_prime_ideal(ring.odd(), p.odd);
    for (Elem x0 = 0; x0 < ring.even().size() && criterion; ++x0) {
      if (p.even.contains(x0)) continue;
      bool left = false, right = false;
      for (std::size_t k = 0; k < ring.size() && !(left && right); ++k) {
        const TriElement y = ring.element(k);
        left = left || !p.contains(ring.mul({x0, 0}, y));
        right = right || !p.contains(ring.mul(y, {x0, 0}));
      }
      criterion = left && right;
    }
    if (criterion == is_prime_triideal(ring, p)) ++d.agreements;
    else d.disagreements.push_back(p);
  }
  return d;
}

std::string format_points(const PointSet& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ",";
    out += "P" + std::to_string(points[i]);
  }
  return out + "}";
}

}  // namespace trispec
