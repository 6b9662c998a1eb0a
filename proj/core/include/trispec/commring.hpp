#pragma once

// Finite commutative unital rings given by operation tables, and the
// exhaustive ideal machinery the rest of the library is built on. Both the
// even part (R0, +, .) and the odd part (R1, +, #) of a triring are
// FiniteCommRing values.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace trispec {

/// Index of a ring element. The carrier of a ring of size n is 0..n-1 and
/// 0 is always the additive identity.
using Elem = std::uint32_t;

struct Limits {
  std::size_t max_size = 64;     // elements per component ring
  std::size_t max_ideals = 4096;  // ideals per ring, triideals per triring
};

/// How a ring was described. Table entries are kept as written so that a
/// document round-trips; negative entries in `mul` denote additive inverses
/// (-k is neg(k)) and are resolved when the ring is built.
struct RingDescriptor {
  enum class Kind { table, zn, product };

  Kind kind = Kind::zn;
  std::size_t n = 0;
  std::vector<RingDescriptor> factors;
  std::size_t size = 0;
  std::vector<std::vector<std::int64_t>> add;
  std::vector<std::vector<std::int64_t>> mul;
  std::int64_t one = 0;

  static RingDescriptor zn(std::size_t n);
  static RingDescriptor product(std::vector<RingDescriptor> factors);
  static RingDescriptor table(std::size_t size, std::vector<std::vector<std::int64_t>> add,
                              std::vector<std::vector<std::int64_t>> mul, std::int64_t one);

  /// Carrier size implied by the descriptor, without building anything.
  std::size_t carrier_size() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

class FiniteCommRing {
 public:
  /// Validates every ring law exhaustively; throws Error(AxiomViolation)
  /// with a witness triple on the first failure.
  static FiniteCommRing from_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul,
                                    Elem one, std::string label,
                                    RingDescriptor::Kind provenance = RingDescriptor::Kind::table);

  std::size_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }
  RingDescriptor::Kind provenance() const noexcept { return provenance_; }
  bool is_zero_ring() const noexcept { return size_ == 1; }

  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// a^m with a^0 = one.
  Elem power(Elem a, std::size_t m) const;

  const std::vector<Elem>& add_table() const noexcept { return add_; }
  const std::vector<Elem>& mul_table() const noexcept { return mul_; }

  friend bool operator==(const FiniteCommRing& a, const FiniteCommRing& b) {
    return a.size_ == b.size_ && a.one_ == b.one_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  FiniteCommRing() = default;

  std::size_t size_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::string label_;
  RingDescriptor::Kind provenance_ = RingDescriptor::Kind::table;
};

/// Builds and validates a ring. Throws SizeLimit when the carrier exceeds
/// limits.max_size, AxiomViolation when tables break a ring law, and
/// RangeError for out-of-range table entries.
FiniteCommRing make_ring(const RingDescriptor& descriptor, const Limits& limits = {});

/// A subset of a ring carrier stored as sorted members plus a membership
/// mask. Used for ideals of both component rings; whether the set really is
/// an ideal is decided by the functions below, not by the type.
class Ideal {
 public:
  Ideal() = default;
  static Ideal from_members(std::size_t carrier_size, std::vector<Elem> members);

  bool contains(Elem x) const { return x < mask_.size() && mask_[x]; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t carrier_size() const noexcept { return mask_.size(); }
  bool is_whole() const noexcept { return members_.size() == mask_.size(); }
  bool is_zero() const noexcept { return members_.size() == 1; }
  bool is_subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.mask_.size() == b.mask_.size() && a.members_ == b.members_;
  }
  /// Deterministic order: by size, then lexicographically by members.
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b);

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

bool is_ideal(const FiniteCommRing& ring, std::span<const Elem> members);

Ideal zero_ideal(const FiniteCommRing& ring);
Ideal unit_ideal(const FiniteCommRing& ring);

/// Smallest ideal containing `gens`: the additive span of ring * gens.
Ideal ideal_generated(const FiniteCommRing& ring, std::span<const Elem> gens);
Ideal principal_ideal(const FiniteCommRing& ring, Elem generator);

Ideal ideal_sum(const FiniteCommRing& ring, const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// Ideal generated by all products ab with a in `a`, b in `b`.
Ideal ideal_product(const FiniteCommRing& ring, const Ideal& a, const Ideal& b);

/// Every ideal exactly once, sorted by (size, members). Computed as the
/// closure of the principal ideals under ideal sums. Throws SizeLimit past
/// limits.max_ideals.
std::vector<Ideal> enumerate_ideals(const FiniteCommRing& ring, const Limits& limits = {});

bool is_prime_ideal(const FiniteCommRing& ring, const Ideal& ideal);

bool is_nilpotent(const FiniteCommRing& ring, Elem x);
Ideal nilradical_comm(const FiniteCommRing& ring);

/// R/I with the minimum index of each coset as its representative; coset k
/// is the k-th smallest representative, so the zero coset is index 0.
struct QuotientRing {
  FiniteCommRing ring;
  std::vector<Elem> project;         // element of R -> coset index
  std::vector<Elem> representative;  // coset index -> minimum member of R
};

QuotientRing quotient_ring(const FiniteCommRing& ring, const Ideal& ideal);

std::string format_set(std::span<const Elem> members);

}  // namespace trispec
