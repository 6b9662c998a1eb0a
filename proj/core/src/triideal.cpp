#include "trispec/triideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "trispec/error.hpp"
#include "trispec/spectrum.hpp"

namespace trispec {

std::string format_triideal(const Triideal& ideal) {
  return "(" + format_set(ideal.even.members()) + "," + format_set(ideal.odd.members()) + ")";
}

Triideal zero_triideal(const Triring& ring) {
  return {zero_ideal(ring.even()), zero_ideal(ring.odd())};
}

Triideal whole_triideal(const Triring& ring) {
  return {unit_ideal(ring.even()), unit_ideal(ring.odd())};
}

namespace {

bool additive_subgroup(const FiniteCommRing& r, const Ideal& s) {
  if (s.carrier_size() != r.size() || !s.contains(0)) return false;
  for (Elem a : s.members())
    for (Elem b : s.members())
      if (!s.contains(r.add(a, b))) return false;
  return true;
}

}  // namespace

bool is_triideal(const Triring& ring, const Ideal& even, const Ideal& odd) {
  if (!additive_subgroup(ring.even(), even) || !additive_subgroup(ring.odd(), odd)) return false;
  if (!is_ideal(ring.odd(), odd.members())) return false;
  const Triideal candidate{even, odd};
  for (Elem a : even.members()) {
    for (Elem b : odd.members()) {
      const TriElement x{a, b};
      for (std::size_t k = 0; k < ring.size(); ++k) {
        const TriElement r = ring.element(k);
        if (!candidate.contains(ring.mul(x, r)) || !candidate.contains(ring.mul(r, x))) return false;
      }
    }
  }
  return true;
}

bool is_triideal_by_components(const Triring& ring, const Ideal& even, const Ideal& odd) {
  if (even.carrier_size() != ring.even().size() || odd.carrier_size() != ring.odd().size())
    return false;
  if (!is_ideal(ring.even(), even.members()) || !is_ideal(ring.odd(), odd.members())) return false;
  for (Elem a : even.members())
    for (Elem r = 0; r < ring.odd().size(); ++r)
      if (!odd.contains(ring.sharp(ring.lambda(a), r)) || !odd.contains(ring.sharp(r, ring.rho(a))))
        return false;
  return true;
}

Triideal principal_even_triideal(const Triring& ring, Elem x0) {
  std::vector<Elem> even, odd;
  for (Elem r = 0; r < ring.even().size(); ++r) even.push_back(ring.mul({r, 0}, {x0, 0}).even);
  for (Elem alpha = 0; alpha < ring.odd().size(); ++alpha)
    odd.push_back(ring.mul({0, alpha}, {x0, 0}).odd);
  return {Ideal::from_members(ring.even().size(), std::move(even)),
          Ideal::from_members(ring.odd().size(), std::move(odd))};
}

Triideal principal_odd_triideal(const Triring& ring, Elem x1) {
  std::vector<Elem> odd;
  for (Elem alpha = 0; alpha < ring.odd().size(); ++alpha) odd.push_back(ring.sharp(alpha, x1));
  return {zero_ideal(ring.even()), Ideal::from_members(ring.odd().size(), std::move(odd))};
}

Triideal make_triideal(const Triring& ring, std::span<const Elem> even_gens,
                       std::span<const Elem> odd_gens) {
  Ideal even = ideal_generated(ring.even(), even_gens);
  std::vector<Elem> odd_seed(odd_gens.begin(), odd_gens.end());
  for (Elem a : even.members()) {
    odd_seed.push_back(ring.lambda(a));
    odd_seed.push_back(ring.rho(a));
  }
  Triideal result{std::move(even), ideal_generated(ring.odd(), odd_seed)};
  if (!is_triideal(ring, result.even, result.odd))
    throw std::logic_error("generated pair is not a triideal: " + format_triideal(result));
  if (even_gens.size() == 1 && odd_gens.empty() &&
      result != principal_even_triideal(ring, even_gens[0]))
    throw std::logic_error("R x0 disagrees with R0 x0 (+) R1 x0");
  if (odd_gens.size() == 1 && even_gens.empty() &&
      result != principal_odd_triideal(ring, odd_gens[0]))
    throw std::logic_error("generated odd triideal disagrees with R1 # x1");
  return result;
}

bool is_subtriring(const Triring& ring, std::span<const std::size_t> elements) {
  std::vector<bool> in(ring.size(), false);
  for (std::size_t i : elements) {
    if (i >= ring.size()) return false;
    in[i] = true;
  }
  auto has = [&](TriElement x) { return bool(in[ring.index(x)]); };
  if (!has(ring.one()) || !has(ring.local_one())) return false;
  std::vector<TriElement> members;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (in[i]) members.push_back(ring.element(i));
  for (TriElement s : members) {
    if (!has({s.even, 0}) || !has({0, s.odd})) return false;
    for (TriElement t : members) {
      if (!has(ring.add(s, t)) || !has(ring.mul(s, t))) return false;
      if (!has({0, ring.sharp(s.odd, t.odd)})) return false;
    }
  }
  return true;
}

Triideal sum(const Triring& ring, const Triideal& a, const Triideal& b) {
  return {ideal_sum(ring.even(), a.even, b.even), ideal_sum(ring.odd(), a.odd, b.odd)};
}

Triideal sum(const Triring& ring, std::span<const Triideal> family) {
  Triideal total = zero_triideal(ring);
  for (const auto& i : family) total = sum(ring, total, i);
  return total;
}

Triideal intersect(const Triideal& a, const Triideal& b) {
  return {ideal_intersection(a.even, b.even), ideal_intersection(a.odd, b.odd)};
}

Triideal intersect(const Triring& ring, std::span<const Triideal> family) {
  Triideal total = whole_triideal(ring);
  for (const auto& i : family) total = intersect(total, i);
  return total;
}

Triideal mixed_product(const Triring& ring, const Triideal& a, const Triideal& b) {
  Triideal result{ideal_product(ring.even(), a.even, b.even), ideal_product(ring.odd(), a.odd, b.odd)};
  if (!is_triideal(ring, result.even, result.odd))
    throw std::logic_error("mixed product is not a triideal: " + format_triideal(result));
  return result;
}

// ---------------------------------------------------------------------------
// Homomorphisms and quotients

bool TriringHom::is_surjective() const {
  std::vector<bool> hit(target.size(), false);
  for (TriElement y : map) hit[target.index(y)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::optional<HomViolation> find_hom_violation(const Triring& source, const Triring& target,
                                               const std::vector<TriElement>& map) {
  if (map.size() != source.size()) return HomViolation{"total", "map size mismatch"};
  for (TriElement y : map)
    if (y.even >= target.even().size() || y.odd >= target.odd().size())
      return HomViolation{"total", "value " + format_element(y) + " outside target"};
  auto phi = [&](TriElement x) { return map[source.index(x)]; };
  auto w2 = [](TriElement x, TriElement y) {
    return "x=" + format_element(x) + " y=" + format_element(y);
  };
  const std::size_t n = source.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const TriElement x = source.element(i), y = source.element(j);
      if (phi(source.add(x, y)) != target.add(phi(x), phi(y))) return HomViolation{"additive", w2(x, y)};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const TriElement x = source.element(i), y = source.element(j);
      if (phi(source.mul(x, y)) != target.mul(phi(x), phi(y)))
        return HomViolation{"multiplicative", w2(x, y)};
    }
  if (phi(source.one()) != target.one())
    return HomViolation{"unit", "phi(1)=" + format_element(phi(source.one()))};
  for (Elem a = 0; a < source.even().size(); ++a)
    if (phi({a, 0}).odd != 0) return HomViolation{"even-grade", "x=" + format_element({a, 0})};
  for (Elem a = 0; a < source.odd().size(); ++a)
    if (phi({0, a}).even != 0) return HomViolation{"odd-grade", "x=" + format_element({0, a})};
  for (Elem a = 0; a < source.odd().size(); ++a)
    for (Elem b = 0; b < source.odd().size(); ++b)
      if (phi({0, source.sharp(a, b)}) != TriElement{0, target.sharp(phi({0, a}).odd, phi({0, b}).odd)})
        return HomViolation{"sharp", w2({0, a}, {0, b})};
  if (phi(source.local_one()) != target.local_one())
    return HomViolation{"local-unit", "phi(1#)=" + format_element(phi(source.local_one()))};
  return std::nullopt;
}

bool is_triring_isomorphism(const Triring& source, const Triring& target,
                            const std::vector<TriElement>& map) {
  if (source.size() != target.size()) return false;
  if (find_hom_violation(source, target, map)) return false;
  std::vector<bool> hit(target.size(), false);
  for (TriElement y : map) {
    if (hit[target.index(y)]) return false;
    hit[target.index(y)] = true;
  }
  return true;
}

QuotientTriring quotient_triring(const Triring& ring, const Triideal& ideal) {
  QuotientRing q0 = quotient_ring(ring.even(), ideal.even);
  QuotientRing q1 = quotient_ring(ring.odd(), ideal.odd);
  std::vector<Elem> lambda(q0.ring.size()), rho(q0.ring.size());
  for (Elem c = 0; c < q0.ring.size(); ++c) {
    lambda[c] = q1.project[ring.lambda(q0.representative[c])];
    rho[c] = q1.project[ring.rho(q0.representative[c])];
  }
  Triring quotient = build_triring(q0.ring, q1.ring, std::move(lambda), std::move(rho),
                                   ring.name() + "/" + format_triideal(ideal));
  std::vector<TriElement> nu(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const TriElement x = ring.element(i);
    nu[i] = {q0.project[x.even], q1.project[x.odd]};
  }
  if (auto v = find_hom_violation(ring, quotient, nu))
    throw std::logic_error("natural map fails " + v->condition + " at " + v->witness);
  TriringHom natural{ring, quotient, std::move(nu)};
  return {std::move(quotient), std::move(natural)};
}

Triideal kernel(const TriringHom& hom) {
  const Triring& s = hom.source;
  std::vector<Elem> even, odd;
  for (Elem a = 0; a < s.even().size(); ++a)
    if (hom({a, 0}) == TriElement{0, 0}) even.push_back(a);
  for (Elem a = 0; a < s.odd().size(); ++a)
    if (hom({0, a}) == TriElement{0, 0}) odd.push_back(a);
  Triideal k{Ideal::from_members(s.even().size(), std::move(even)),
             Ideal::from_members(s.odd().size(), std::move(odd))};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const TriElement x = s.element(i);
    if ((hom(x) == TriElement{0, 0}) != k.contains(x))
      throw std::logic_error("kernel does not split at " + format_element(x));
  }
  return k;
}

std::vector<std::size_t> image(const TriringHom& hom) {
  std::vector<std::size_t> out;
  for (TriElement y : hom.map) out.push_back(hom.target.index(y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Triideal image_of(const TriringHom& hom, const Triideal& ideal) {
  std::vector<Elem> even, odd;
  for (Elem a : ideal.even.members()) even.push_back(hom({a, 0}).even);
  for (Elem b : ideal.odd.members()) odd.push_back(hom({0, b}).odd);
  return {Ideal::from_members(hom.target.even().size(), std::move(even)),
          Ideal::from_members(hom.target.odd().size(), std::move(odd))};
}

Triideal preimage_of(const TriringHom& hom, const Triideal& ideal) {
  const Triring& s = hom.source;
  std::vector<Elem> even, odd;
  for (Elem a = 0; a < s.even().size(); ++a)
    if (ideal.contains(hom({a, 0}))) even.push_back(a);
  for (Elem b = 0; b < s.odd().size(); ++b)
    if (ideal.contains(hom({0, b}))) odd.push_back(b);
  return {Ideal::from_members(s.even().size(), std::move(even)),
          Ideal::from_members(s.odd().size(), std::move(odd))};
}

HomAnalysis analyze_hom(std::vector<TriElement> map, const Triring& source, const Triring& target) {
  if (auto v = find_hom_violation(source, target, map))
    throw Error(ErrorKind::NotAHom, "map is not a triring homomorphism (" + v->condition + ")",
                v->condition + ": " + v->witness);
  HomAnalysis out{TriringHom{source, target, std::move(map)}, {}, {}, false, false};
  out.kernel = kernel(out.hom);
  if (!is_triideal(source, out.kernel.even, out.kernel.odd))
    throw std::logic_error("kernel is not a triideal");
  out.image = image(out.hom);
  out.image_is_subtriring = is_subtriring(target, out.image);

  // x + Ker -> phi(x)
  const QuotientTriring q = quotient_triring(source, out.kernel);
  constexpr Elem unset = ~Elem{0};
  std::vector<TriElement> induced(q.ring.size(), TriElement{unset, unset});
  bool well_defined = true;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const TriElement x = source.element(i);
    TriElement& slot = induced[q.ring.index(q.natural(x))];
    if (slot.even == unset) slot = out.hom(x);
    else if (slot != out.hom(x)) well_defined = false;
  }
  if (well_defined && !find_hom_violation(q.ring, target, induced)) {
    std::vector<std::size_t> hit;
    for (TriElement y : induced) hit.push_back(target.index(y));
    std::sort(hit.begin(), hit.end());
    const bool injective = std::adjacent_find(hit.begin(), hit.end()) == hit.end();
    out.first_isomorphism = injective && hit == out.image;
  }
  return out;
}

CheckList correspondence_check(const TriringHom& hom, const Limits& limits) {
  if (!hom.is_surjective()) throw Error(ErrorKind::Precondition, "homomorphism is not surjective");
  const Triring& s = hom.source;
  const Triring& t = hom.target;
  CheckList report;

  {
    const Triideal even_image = image_of(hom, {unit_ideal(s.even()), zero_ideal(s.odd())});
    const Triideal odd_image = image_of(hom, {zero_ideal(s.even()), unit_ideal(s.odd())});
    report.add("components-onto",
               even_image.even.is_whole() && even_image.odd.is_zero() && odd_image.odd.is_whole() &&
                   odd_image.even.is_zero());
  }

  const Triideal ker = kernel(hom);
  std::vector<Triideal> above;
  for (auto& i : enumerate_triideals(s, limits))
    if (ker.is_subset_of(i)) above.push_back(std::move(i));
  const std::vector<Triideal> targets = enumerate_triideals(t, limits);

  std::string w_image, w_left, w_right, w_iso;
  std::vector<Triideal> images;
  for (const auto& i : above) {
    Triideal img = image_of(hom, i);
    if (w_image.empty() && !is_triideal(t, img.even, img.odd)) w_image = format_triideal(i);
    if (w_left.empty() && preimage_of(hom, img) != i) w_left = format_triideal(i);
    if (w_iso.empty()) {
      const QuotientTriring qs = quotient_triring(s, i);
      const QuotientTriring qt = quotient_triring(t, img);
      std::vector<TriElement> iso(qs.ring.size());
      for (std::size_t k = 0; k < s.size(); ++k) {
        const TriElement x = s.element(k);
        iso[qs.ring.index(qs.natural(x))] = qt.natural(hom(x));
      }
      if (!is_triring_isomorphism(qs.ring, qt.ring, iso)) w_iso = format_triideal(i);
    }
    images.push_back(std::move(img));
  }
  for (const auto& j : targets) {
    const Triideal pre = preimage_of(hom, j);
    if (w_right.empty() &&
        (image_of(hom, pre) != j || !ker.is_subset_of(pre) || !is_triideal(s, pre.even, pre.odd)))
      w_right = format_triideal(j);
  }
  std::sort(images.begin(), images.end());
  const bool bijective = std::adjacent_find(images.begin(), images.end()) == images.end() &&
                         images == targets;
  report.add("image-is-triideal", w_image.empty(), w_image);
  report.add("preimage-of-image", w_left.empty(), w_left);
  report.add("image-of-preimage", w_right.empty(), w_right);
  report.add("bijection", bijective,
             bijective ? "" : std::to_string(above.size()) + " above kernel vs " +
                                  std::to_string(targets.size()) + " in target");
  report.add("quotient-isomorphism", w_iso.empty(), w_iso);
  return report;
}

// ---------------------------------------------------------------------------
// Nilpotence and radicals

bool is_trinilpotent(const Triring& ring, TriElement x) {
  return is_nilpotent(ring.even(), x.even) && is_nilpotent(ring.odd(), x.odd);
}

Triideal trinilradical(const Triring& ring) {
  Triideal n{nilradical_comm(ring.even()), nilradical_comm(ring.odd())};
  if (!is_triideal(ring, n.even, n.odd))
    throw std::logic_error("trinilradical is not a triideal");
  return n;
}

namespace {

Ideal component_radical(const FiniteCommRing& r, const Ideal& i) {
  std::vector<Elem> members;
  for (Elem x = 0; x < r.size(); ++x) {
    Elem p = x;
    for (std::size_t m = 1; m <= r.size(); ++m) {
      if (i.contains(p)) {
        members.push_back(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return Ideal::from_members(r.size(), std::move(members));
}

}  // namespace

Triideal radical(const Triring& ring, const Triideal& ideal) {
  Triideal rad{component_radical(ring.even(), ideal.even), component_radical(ring.odd(), ideal.odd)};
  if (!is_triideal(ring, rad.even, rad.odd))
    throw std::logic_error("radical is not a triideal: " + format_triideal(rad));
  const QuotientTriring q = quotient_triring(ring, ideal);
  if (preimage_of(q.natural, trinilradical(q.ring)) != rad)
    throw std::logic_error("radical disagrees with the trinilradical of the quotient");
  return rad;
}

std::vector<std::size_t> ordinary_nilradical(const Triring& ring) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const TriElement x = ring.element(i);
    TriElement p = x;
    for (std::size_t m = 1; m <= ring.size(); ++m) {
      if (p == ring.zero()) {
        out.push_back(i);
        break;
      }
      p = ring.mul(p, x);
    }
  }
  return out;
}

}  // namespace trispec
