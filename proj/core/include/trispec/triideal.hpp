#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trispec/check.hpp"
#include "trispec/commring.hpp"
#include "trispec/triring.hpp"

namespace trispec {

/// I = I0 (+) I1 with I0 an ideal of R0 and I1 an ideal of (R1, #).
/// The pair representation makes the direct-sum splitting automatic.
struct Triideal {
  Ideal even;
  Ideal odd;

  bool contains(TriElement x) const { return even.contains(x.even) && odd.contains(x.odd); }
  bool is_subset_of(const Triideal& other) const {
    return even.is_subset_of(other.even) && odd.is_subset_of(other.odd);
  }
  bool is_whole() const { return even.is_whole() && odd.is_whole(); }
  std::size_t size() const { return even.size() * odd.size(); }

  friend bool operator==(const Triideal&, const Triideal&) = default;
  friend std::strong_ordering operator<=>(const Triideal& a, const Triideal& b) {
    if (auto c = a.even <=> b.even; c != 0) return c;
    return a.odd <=> b.odd;
  }
};

std::string format_triideal(const Triideal& ideal);

Triideal zero_triideal(const Triring& ring);
Triideal whole_triideal(const Triring& ring);

/// Direct route: I0, I1 are additive subgroups, I1 is a #-ideal and
/// IR + RI is contained in I on the assembled product.
bool is_triideal(const Triring& ring, const Ideal& even, const Ideal& odd);
/// Component route: I0 ideal of R0, I1 #-ideal, lambda(I0) # R1 + R1 # rho(I0) within I1.
bool is_triideal_by_components(const Triring& ring, const Ideal& even, const Ideal& odd);

/// Smallest triideal containing the generators.
Triideal make_triideal(const Triring& ring, std::span<const Elem> even_gens,
                       std::span<const Elem> odd_gens);

/// R x0 = R0 x0 (+) R1 x0, computed straight from the products.
Triideal principal_even_triideal(const Triring& ring, Elem x0);
/// R1 # x1.
Triideal principal_odd_triideal(const Triring& ring, Elem x1);

/// Subtriring test on full element indices. The odd part must contain 1#.
bool is_subtriring(const Triring& ring, std::span<const std::size_t> elements);

Triideal sum(const Triring& ring, const Triideal& a, const Triideal& b);
Triideal sum(const Triring& ring, std::span<const Triideal> family);
Triideal intersect(const Triideal& a, const Triideal& b);
Triideal intersect(const Triring& ring, std::span<const Triideal> family);
/// Even part I0 J0, odd part I1 # J1, each closed to an ideal.
Triideal mixed_product(const Triring& ring, const Triideal& a, const Triideal& b);

/// A total map on the source carrier, indexed by full source index.
struct TriringHom {
  Triring source;
  Triring target;
  std::vector<TriElement> map;

  TriElement operator()(TriElement x) const { return map[source.index(x)]; }
  bool is_surjective() const;
};

struct HomViolation {
  std::string condition;
  std::string witness;
};

/// First failing homomorphism condition, if any: additive, multiplicative,
/// unit, even-grade, odd-grade, sharp, local-unit.
std::optional<HomViolation> find_hom_violation(const Triring& source, const Triring& target,
                                               const std::vector<TriElement>& map);

/// Is `map` a bijective triring homomorphism?
bool is_triring_isomorphism(const Triring& source, const Triring& target,
                            const std::vector<TriElement>& map);

struct QuotientTriring {
  Triring ring;
  TriringHom natural;
};

/// R/I on coset pairs (R0/I0, R1/I1) with minimum-index representatives,
/// together with the natural surjection.
QuotientTriring quotient_triring(const Triring& ring, const Triideal& ideal);

Triideal kernel(const TriringHom& hom);
/// Full target indices of phi(R), sorted.
std::vector<std::size_t> image(const TriringHom& hom);
Triideal image_of(const TriringHom& hom, const Triideal& ideal);
Triideal preimage_of(const TriringHom& hom, const Triideal& ideal);

struct HomAnalysis {
  TriringHom hom;
  Triideal kernel;
  std::vector<std::size_t> image;
  bool image_is_subtriring = false;
  /// x + Ker -> phi(x) is a well-defined structure-preserving bijection onto Im.
  bool first_isomorphism = false;
};

/// Validates the homomorphism conditions (throws NotAHom with the failing
/// condition) and computes kernel, image and the induced quotient map.
HomAnalysis analyze_hom(std::vector<TriElement> map, const Triring& source, const Triring& target);

/// Lattice correspondence for a surjective homomorphism: phi(R_i) equals
/// the target components, I -> phi(I) and its preimage inverse are mutually
/// inverse bijections between triideals above the kernel and triideals of
/// the target, and R/I is isomorphic to target/phi(I) for each such I.
/// Throws Precondition if phi is not surjective.
CheckList correspondence_check(const TriringHom& hom, const Limits& limits = {});

bool is_trinilpotent(const Triring& ring, TriElement x);
/// nilrad(R0, .) (+) nilrad(R1, #).
Triideal trinilradical(const Triring& ring);
/// Elements whose even part has a power in I0 and odd part a local power in I1.
/// Also checks that it maps onto the trinilradical of R/I.
Triideal radical(const Triring& ring, const Triideal& ideal);

/// Ordinary nilradical of (R, +, .) computed by power iteration on every element.
std::vector<std::size_t> ordinary_nilradical(const Triring& ring);

}  // namespace trispec
