#pragma once

// Prime triideals, the trispectrum and its extended Zariski topology.
//
// Primality is decided by the four graded implications on the assembled
// product (even.even, even.odd, odd.even, odd#odd), never via component
// shortcuts; those only appear as cross-checks.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trispec/commring.hpp"
#include "trispec/triideal.hpp"
#include "trispec/triring.hpp"

namespace trispec {

/// Sorted indices into Trispectrum::points().
using PointSet = std::vector<std::size_t>;

bool is_prime_triideal(const Triring& ring, const Triideal& p);

/// All (I0, I1) from the component ideal lattices that form a triideal,
/// ordered by even ideal then odd ideal. Throws SizeLimit past max_ideals.
std::vector<Triideal> enumerate_triideals(const Triring& ring, const Limits& limits = {});

class Trispectrum {
 public:
  const Triring& ring() const noexcept { return ring_; }
  const std::vector<Triideal>& points() const noexcept { return points_; }
  const PointSet& even_points() const noexcept { return even_; }
  const PointSet& odd_points() const noexcept { return odd_; }
  /// The whole triideal lattice the points were filtered from.
  const std::vector<Triideal>& triideals() const noexcept { return triideals_; }
  bool is_even_point(std::size_t i) const { return points_[i].odd.is_whole(); }
  PointSet all_points() const;

 private:
  Trispectrum(Triring ring, std::vector<Triideal> triideals);
  friend Trispectrum trispectrum(const Triring&, const Limits&);

  Triring ring_;
  std::vector<Triideal> triideals_;
  std::vector<Triideal> points_;
  PointSet even_;
  PointSet odd_;
};

/// Even points are the primes containing R1. Asserts the even part is
/// non-empty (for a nonzero ring) and the odd part is non-empty when R1 != 0.
Trispectrum trispectrum(const Triring& ring, const Limits& limits = {});

/// P0 = { x0 : R1 x0 within P1 }, the greatest even ideal compatible with
/// P1. Returns P0 (+) P1 after checking it is a prime triideal and contains
/// every such ideal. Throws NotPrimeInput when P1 is not #-prime.
Triideal extend_odd_prime(const Triring& ring, const Ideal& odd_prime, const Limits& limits = {});

struct ClosedSet {
  Triideal defining_ideal;
  PointSet members;
};

/// Points containing the ideal.
ClosedSet vsharp(const Trispectrum& spec, const Triideal& ideal);
/// Complement of vsharp.
PointSet dsharp(const Trispectrum& spec, const Triideal& ideal);
/// Basic opens D(x0) = D(R x0) and D(x1) = D(R1 # x1).
PointSet dsharp_even(const Trispectrum& spec, Elem x0);
PointSet dsharp_odd(const Trispectrum& spec, Elem x1);

/// Every closed set, canonicalized by member points, sorted.
std::vector<PointSet> closed_sets(const Trispectrum& spec);

/// Brute force: a non-empty closed set is irreducible when it is not the
/// union of two closed proper subsets of itself.
bool is_irreducible_by_search(const Trispectrum& spec, const PointSet& members);

/// Brute-force irreducibility, cross-checked against primality of the
/// radical of the defining ideal (logic_error on disagreement). Throws
/// EmptySet on the empty closed set.
bool is_irreducible(const Trispectrum& spec, const ClosedSet& closed);

enum class CoverTarget { full, odd };

struct Subcover {
  std::vector<std::size_t> sublist;                   // indices into the cover, ascending
  std::vector<std::pair<std::size_t, Elem>> witness;  // (cover index, component element), summing to 1 or 1#
};

/// Finite subcover found by expressing 1 (full) or 1# (odd) as a sum of
/// components of the cover ideals. Breadth-first over partial sums, so the
/// witness uses as few summands as possible; ties go to earlier cover
/// entries. Throws NotACover naming an uncovered point.
Subcover quasicompact_subcover(const Trispectrum& spec, std::span<const Triideal> cover,
                               CoverTarget target);

struct SpecializationOrder {
  /// specializes[p][q]: p specializes to q, i.e. q contains p.
  std::vector<std::vector<bool>> specializes;
  /// Covering pairs (p, q) of the strict order, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
};

SpecializationOrder specialization_order(const Trispectrum& spec);

/// Closure of a point set: V of the intersection of its points.
PointSet closure(const Trispectrum& spec, const PointSet& points);

/// Report-only check of the bimodule characterization of odd primes: for
/// each triideal P not containing R1, compare "P0 prime, P1 prime and R/P
/// faithful on both sides over R0/P0" with the graded prime test.
struct FaithfulnessDiagnostic {
  std::size_t examined = 0;
  std::size_t agreements = 0;
  std::vector<Triideal> disagreements;
};

FaithfulnessDiagnostic odd_prime_faithfulness(const Trispectrum& spec);

std::string format_points(const PointSet& points);

}  // namespace trispec
