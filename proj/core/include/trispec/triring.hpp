#pragma once

// Finite trirings R = R0 (+) R1.
//
// A triring is assembled from its even part (R0, +, .), its odd part
// (R1, +, #) and two ring maps lambda, rho : R0 -> R1 with
// lambda(x0) = x0 . 1#, rho(x0) = 1# . x0. The triassociative law then
// forces x0 alpha = lambda(x0) # alpha and alpha x0 = alpha # rho(x0), so
//
//   (x0 + x1)(y0 + y1) = x0 y0 + (lambda(x0) # y1 + x1 # rho(y0)).
//
// The representation is only a constructor convenience: build_triring
// re-validates every triring axiom on the assembled product.
//
// R0 and R1 are checked as commutative subrings of the assembled ring R
// (R1 with the zero product). The defining axiom literally names the even
// part as the ambient ring, which cannot be meant.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "trispec/check.hpp"
#include "trispec/commring.hpp"

namespace trispec {

/// x = x0 + x1, stored as component indices.
struct TriElement {
  Elem even = 0;
  Elem odd = 0;

  friend auto operator<=>(const TriElement&, const TriElement&) = default;
};

std::string format_element(TriElement x);

class Triring {
 public:
  const FiniteCommRing& even() const noexcept { return even_; }
  const FiniteCommRing& odd() const noexcept { return odd_; }
  Elem lambda(Elem x0) const { return lambda_[x0]; }
  Elem rho(Elem x0) const { return rho_[x0]; }
  const std::vector<Elem>& lambda_map() const noexcept { return lambda_; }
  const std::vector<Elem>& rho_map() const noexcept { return rho_; }
  const std::string& name() const noexcept { return name_; }

  /// Carrier size |R0| * |R1|. Full index = even * |R1| + odd.
  std::size_t size() const noexcept { return even_.size() * odd_.size(); }
  TriElement element(std::size_t index) const {
    return {static_cast<Elem>(index / odd_.size()), static_cast<Elem>(index % odd_.size())};
  }
  std::size_t index(TriElement x) const { return x.even * odd_.size() + x.odd; }

  TriElement zero() const noexcept { return {0, 0}; }
  TriElement one() const noexcept { return {even_.one(), 0}; }
  TriElement local_one() const noexcept { return {0, odd_.one()}; }

  TriElement add(TriElement x, TriElement y) const {
    return {even_.add(x.even, y.even), odd_.add(x.odd, y.odd)};
  }
  TriElement neg(TriElement x) const { return {even_.neg(x.even), odd_.neg(x.odd)}; }
  TriElement mul(TriElement x, TriElement y) const {
    return {even_.mul(x.even, y.even),
            odd_.add(odd_.mul(lambda_[x.even], y.odd), odd_.mul(x.odd, rho_[y.even]))};
  }
  /// Local product on odd components.
  Elem sharp(Elem a, Elem b) const { return odd_.mul(a, b); }

  bool is_even(TriElement x) const noexcept { return x.odd == 0; }
  bool is_odd(TriElement x) const noexcept { return x.even == 0; }

 private:
  Triring(FiniteCommRing even, FiniteCommRing odd, std::vector<Elem> lambda, std::vector<Elem> rho,
          std::string name)
      : even_(std::move(even)),
        odd_(std::move(odd)),
        lambda_(std::move(lambda)),
        rho_(std::move(rho)),
        name_(std::move(name)) {}

  friend Triring build_triring(FiniteCommRing, FiniteCommRing, std::vector<Elem>, std::vector<Elem>,
                               std::string);

  FiniteCommRing even_;
  FiniteCommRing odd_;
  std::vector<Elem> lambda_;
  std::vector<Elem> rho_;
  std::string name_;
};

/// An unvalidated triring: component rings plus an arbitrary full product.
/// Addition is always componentwise.
struct TriringCandidate {
  FiniteCommRing even;
  FiniteCommRing odd;
  std::function<TriElement(TriElement, TriElement)> mul;
};

TriringCandidate assemble_candidate(const FiniteCommRing& even, const FiniteCommRing& odd,
                                    const std::vector<Elem>& lambda, const std::vector<Elem>& rho);

/// Exhaustive pass/fail for every triring axiom over all element triples:
/// identity, associativity, distributivity, grading, even commutativity,
/// both triassociative laws and R1 x0 = x0 R1.
CheckList verify_axioms(const TriringCandidate& candidate);
CheckList verify_axioms(const Triring& ring);

/// Homomorphism checks for lambda and rho (additive, multiplicative, unital).
CheckList verify_structure_maps(const FiniteCommRing& even, const FiniteCommRing& odd,
                                const std::vector<Elem>& lambda, const std::vector<Elem>& rho);

/// Throws NotAHomomorphism, LocalIdentityMismatch, Axiom3Violation,
/// TriassocViolation or AxiomViolation, each carrying a witness.
Triring build_triring(FiniteCommRing even, FiniteCommRing odd, std::vector<Elem> lambda,
                      std::vector<Elem> rho, std::string name = {});

/// A commutative ring viewed as a triring with zero odd part.
Triring commutative_triring(const FiniteCommRing& ring, std::string name = {});

/// Triquaternions A1 + Ai (even) and Aj + Ak (odd) over a finite base ring,
/// with i.i = -1, i.j = k, j.i = -k, j#j = j, j#k = k, k#k = -j extended
/// A-bilinearly. Even index a + b i is a*|A| + b; odd index c j + d k is
/// c*|A| + d. Throws when the extension breaks an axiom (e.g. over Z_5,
/// where (2 + i) and (2 - i) generate different ideals).
Triring triquaternions_over(const FiniteCommRing& base, const Limits& limits = {});

enum class ElementOp { add, neg, mul, sharp };

/// neg ignores y. sharp requires both operands odd (OddOnly otherwise).
TriElement element_op(const Triring& ring, ElementOp op, TriElement x, TriElement y = {});

/// alpha^{#n}, with alpha^{#0} = 1#.
TriElement local_power(const Triring& ring, TriElement alpha, std::size_t n);

/// x^m in the assembled ring, x^0 = 1.
TriElement power(const Triring& ring, TriElement x, std::size_t m);

}  // namespace trispec
