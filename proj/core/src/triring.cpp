#include "trispec/triring.hpp"

#include <algorithm>
#include <sstream>

#include "trispec/error.hpp"

namespace trispec {

std::string format_element(TriElement x) {
  std::ostringstream os;
  os << "(" << x.even << "," << x.odd << ")";
  return os.str();
}

namespace {

std::string witness(std::initializer_list<std::pair<const char*, TriElement>> items) {
  std::string out;
  for (const auto& [label, x] : items) {
    if (!out.empty()) out += " ";
    out += label;
    out += "=";
    out += format_element(x);
  }
  return out;
}

/// The assembled product as a flat table over full indices.
struct ProductTable {
  std::size_t n1;
  std::size_t size;
  std::vector<TriElement> table;

  ProductTable(const TriringCandidate& c) : n1(c.odd.size()), size(c.even.size() * c.odd.size()) {
    table.resize(size * size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) table[i * size + j] = c.mul(element(i), element(j));
  }
  TriElement element(std::size_t i) const {
    return {static_cast<Elem>(i / n1), static_cast<Elem>(i % n1)};
  }
  std::size_t index(TriElement x) const { return x.even * n1 + x.odd; }
  TriElement mul(TriElement x, TriElement y) const { return table[index(x) * size + index(y)]; }
};

}  // namespace

TriringCandidate assemble_candidate(const FiniteCommRing& even, const FiniteCommRing& odd,
                                    const std::vector<Elem>& lambda, const std::vector<Elem>& rho) {
  TriringCandidate c{even, odd, {}};
  c.mul = [even, odd, lambda, rho](TriElement x, TriElement y) {
    return TriElement{even.mul(x.even, y.even),
                      odd.add(odd.mul(lambda[x.even], y.odd), odd.mul(x.odd, rho[y.even]))};
  };
  return c;
}

CheckList verify_axioms(const TriringCandidate& c) {
  const FiniteCommRing& even = c.even;
  const FiniteCommRing& odd = c.odd;
  const ProductTable p(c);
  const std::size_t n = p.size;
  auto add = [&](TriElement x, TriElement y) {
    return TriElement{even.add(x.even, y.even), odd.add(x.odd, y.odd)};
  };
  auto elem = [&](std::size_t i) { return p.element(i); };
  const TriElement one{even.one(), 0};
  CheckList report;

  {
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      const TriElement x = elem(i);
      if (p.mul(one, x) != x || p.mul(x, one) != x) w = witness({{"x", x}});
    }
    report.add("identity", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      for (std::size_t j = 0; j < n && w.empty(); ++j) {
        const TriElement xy = p.mul(elem(i), elem(j));
        for (std::size_t k = 0; k < n; ++k) {
          if (p.mul(xy, elem(k)) != p.mul(elem(i), p.mul(elem(j), elem(k)))) {
            w = witness({{"x", elem(i)}, {"y", elem(j)}, {"z", elem(k)}});
            break;
          }
        }
      }
    }
    report.add("associativity", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      for (std::size_t j = 0; j < n && w.empty(); ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const TriElement x = elem(i), y = elem(j), z = elem(k);
          if (p.mul(x, add(y, z)) != add(p.mul(x, y), p.mul(x, z)) ||
              p.mul(add(y, z), x) != add(p.mul(y, x), p.mul(z, x))) {
            w = witness({{"x", x}, {"y", y}, {"z", z}});
            break;
          }
        }
      }
    }
    report.add("distributivity", w.empty(), w);
  }
  {
    std::string w;
    for (Elem a = 0; a < even.size() && w.empty(); ++a) {
      for (Elem b = 0; b < even.size() && w.empty(); ++b)
        if (p.mul({a, 0}, {b, 0}).odd != 0) w = witness({{"x", {a, 0}}, {"y", {b, 0}}});
      for (Elem beta = 0; beta < odd.size() && w.empty(); ++beta)
        if (p.mul({a, 0}, {0, beta}).even != 0 || p.mul({0, beta}, {a, 0}).even != 0)
          w = witness({{"x", {a, 0}}, {"y", {0, beta}}});
    }
    for (Elem alpha = 0; alpha < odd.size() && w.empty(); ++alpha)
      for (Elem beta = 0; beta < odd.size() && w.empty(); ++beta)
        if (p.mul({0, alpha}, {0, beta}) != TriElement{0, 0})
          w = witness({{"x", {0, alpha}}, {"y", {0, beta}}});
    report.add("grading", w.empty(), w);
  }
  {
    std::string w;
    for (Elem a = 0; a < even.size() && w.empty(); ++a)
      for (Elem b = 0; b < even.size() && w.empty(); ++b)
        if (p.mul({a, 0}, {b, 0}) != p.mul({b, 0}, {a, 0})) w = witness({{"x", {a, 0}}, {"y", {b, 0}}});
    report.add("even-commutativity", w.empty(), w);
  }
  {
    // x (alpha # beta) = (x alpha) # beta
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      const TriElement x = elem(i);
      for (Elem alpha = 0; alpha < odd.size() && w.empty(); ++alpha) {
        const TriElement xa = p.mul(x, {0, alpha});
        for (Elem beta = 0; beta < odd.size(); ++beta) {
          const TriElement lhs = p.mul(x, {0, odd.mul(alpha, beta)});
          if (xa.even != 0 || lhs != TriElement{0, odd.mul(xa.odd, beta)}) {
            w = witness({{"x", x}, {"alpha", {0, alpha}}, {"beta", {0, beta}}});
            break;
          }
        }
      }
    }
    report.add("triassociative-left", w.empty(), w);
  }
  {
    // (alpha # beta) x = alpha # (beta x)
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      const TriElement x = elem(i);
      for (Elem beta = 0; beta < odd.size() && w.empty(); ++beta) {
        const TriElement bx = p.mul({0, beta}, x);
        for (Elem alpha = 0; alpha < odd.size(); ++alpha) {
          const TriElement lhs = p.mul({0, odd.mul(alpha, beta)}, x);
          if (bx.even != 0 || lhs != TriElement{0, odd.mul(alpha, bx.odd)}) {
            w = witness({{"x", x}, {"alpha", {0, alpha}}, {"beta", {0, beta}}});
            break;
          }
        }
      }
    }
    report.add("triassociative-right", w.empty(), w);
  }
  {
    // R1 x0 = x0 R1 as sets
    std::string w;
    for (Elem a = 0; a < even.size() && w.empty(); ++a) {
      std::vector<TriElement> left, right;
      for (Elem alpha = 0; alpha < odd.size(); ++alpha) {
        left.push_back(p.mul({0, alpha}, {a, 0}));
        right.push_back(p.mul({a, 0}, {0, alpha}));
      }
      std::sort(left.begin(), left.end());
      left.erase(std::unique(left.begin(), left.end()), left.end());
      std::sort(right.begin(), right.end());
      right.erase(std::unique(right.begin(), right.end()), right.end());
      if (left != right) w = witness({{"x0", {a, 0}}});
    }
    report.add("odd-even-commutation", w.empty(), w);
  }
  return report;
}

CheckList verify_axioms(const Triring& ring) {
  TriringCandidate c{ring.even(), ring.odd(), [&ring](TriElement x, TriElement y) { return ring.mul(x, y); }};
  return verify_axioms(c);
}

CheckList verify_structure_maps(const FiniteCommRing& even, const FiniteCommRing& odd,
                                const std::vector<Elem>& lambda, const std::vector<Elem>& rho) {
  CheckList report;
  auto check_map = [&](const std::string& name, const std::vector<Elem>& f) {
    bool shape_ok = f.size() == even.size() &&
                    std::all_of(f.begin(), f.end(), [&](Elem v) { return v < odd.size(); });
    report.add(name + "-total", shape_ok, shape_ok ? "" : "length or range mismatch");
    if (!shape_ok) return;
    std::string add_w, mul_w;
    for (Elem a = 0; a < even.size(); ++a) {
      for (Elem b = 0; b < even.size(); ++b) {
        if (add_w.empty() && f[even.add(a, b)] != odd.add(f[a], f[b]))
          add_w = "a=" + std::to_string(a) + " b=" + std::to_string(b);
        if (mul_w.empty() && f[even.mul(a, b)] != odd.mul(f[a], f[b]))
          mul_w = "a=" + std::to_string(a) + " b=" + std::to_string(b);
      }
    }
    report.add(name + "-additive", add_w.empty(), add_w);
    report.add(name + "-multiplicative", mul_w.empty(), mul_w);
    const bool unital = f[even.one()] == odd.one();
    report.add(name + "-unital", unital,
               unital ? "" : name + "(" + std::to_string(even.one()) + ")=" + std::to_string(f[even.one()]));
  };
  check_map("lambda", lambda);
  check_map("rho", rho);
  return report;
}

Triring build_triring(FiniteCommRing even, FiniteCommRing odd, std::vector<Elem> lambda,
                      std::vector<Elem> rho, std::string name) {
  for (const auto* f : {&lambda, &rho}) {
    const char* which = f == &lambda ? "lambda" : "rho";
    if (f->size() != even.size())
      throw Error(ErrorKind::RangeError, std::string(which) + " must have one entry per even element");
    for (std::size_t i = 0; i < f->size(); ++i)
      if ((*f)[i] >= odd.size())
        throw Error(ErrorKind::RangeError, std::string(which) + " entry out of range",
                    std::string(which) + "[" + std::to_string(i) + "]");
  }
  if (lambda[even.one()] != odd.one() || rho[even.one()] != odd.one()) {
    const bool l = lambda[even.one()] != odd.one();
    throw Error(ErrorKind::LocalIdentityMismatch,
                std::string(l ? "lambda" : "rho") + "(1) differs from the local identity",
                std::string(l ? "lambda" : "rho") + "(1)=" +
                    std::to_string(l ? lambda[even.one()] : rho[even.one()]));
  }
  const CheckList maps = verify_structure_maps(even, odd, lambda, rho);
  if (const Check* f = maps.first_failure())
    throw Error(ErrorKind::NotAHomomorphism, f->name + " fails", f->witness);

  for (Elem x = 0; x < even.size(); ++x) {
    if (principal_ideal(odd, lambda[x]) != principal_ideal(odd, rho[x]))
      throw Error(ErrorKind::Axiom3Violation,
                  "x0 R1 and R1 x0 differ for x0=" + std::to_string(x),
                  "x0=" + std::to_string(x));
  }

  const CheckList axioms = verify_axioms(assemble_candidate(even, odd, lambda, rho));
  if (const Check* f = axioms.first_failure()) {
    ErrorKind kind = ErrorKind::AxiomViolation;
    if (f->name.rfind("triassociative", 0) == 0) kind = ErrorKind::TriassocViolation;
    if (f->name == "odd-even-commutation") kind = ErrorKind::Axiom3Violation;
    throw Error(kind, f->name + " fails", f->witness);
  }
  if (name.empty()) name = even.label() + " (+) " + odd.label();
  return Triring(std::move(even), std::move(odd), std::move(lambda), std::move(rho), std::move(name));
}

Triring commutative_triring(const FiniteCommRing& ring, std::string name) {
  FiniteCommRing zero = make_ring(RingDescriptor::zn(1));
  std::vector<Elem> maps(ring.size(), 0);
  if (name.empty()) name = ring.label();
  return build_triring(ring, std::move(zero), maps, maps, std::move(name));
}

Triring triquaternions_over(const FiniteCommRing& base, const Limits& limits) {
  const std::size_t n = base.size();
  if (n * n > limits.max_size)
    throw Error(ErrorKind::SizeLimit,
                "triquaternion component of size " + std::to_string(n * n) + " exceeds cap " +
                    std::to_string(limits.max_size),
                std::to_string(n * n));
  const std::size_t m = n * n;
  auto enc = [n](Elem a, Elem b) { return static_cast<Elem>(a * n + b); };
  // Both components are A[t]/(t^2 + 1): t = i on the even side (1 is the unit),
  // and on the odd side j is the local unit with k # k = -j.
  std::vector<Elem> add(m * m), mul(m * m);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          const std::size_t at = enc(a, b) * m + enc(c, d);
          add[at] = enc(base.add(a, c), base.add(b, d));
          mul[at] = enc(base.sub(base.mul(a, c), base.mul(b, d)),
                        base.add(base.mul(a, d), base.mul(b, c)));
        }
  const Elem unit = enc(base.one(), 0);
  auto even = FiniteCommRing::from_tables(m, add, mul, unit, base.label() + "[i]");
  auto odd = FiniteCommRing::from_tables(m, add, mul, unit, base.label() + "[j,k]");

  // lambda(a + b i) = (a + b i) j = a j + b k, rho(a + b i) = j (a + b i) = a j - b k.
  std::vector<Elem> lambda(m), rho(m);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      lambda[enc(a, b)] = enc(a, b);
      rho[enc(a, b)] = enc(a, base.neg(b));
    }
  try {
    return build_triring(std::move(even), std::move(odd), std::move(lambda), std::move(rho),
                         "triquaternions over " + base.label());
  } catch (const Error& e) {
    throw Error(ErrorKind::AxiomViolation,
                "triquaternions over " + base.label() + " are not a triring: " + e.what(), e.witness());
  }
}

TriElement element_op(const Triring& ring, ElementOp op, TriElement x, TriElement y) {
  switch (op) {
    case ElementOp::add: return ring.add(x, y);
    case ElementOp::neg: return ring.neg(x);
    case ElementOp::mul: return ring.mul(x, y);
    case ElementOp::sharp:
      if (!ring.is_odd(x) || !ring.is_odd(y))
        throw Error(ErrorKind::OddOnly, "local product needs odd operands",
                    format_element(ring.is_odd(x) ? y : x));
      return {0, ring.sharp(x.odd, y.odd)};
  }
  return {};
}

TriElement local_power(const Triring& ring, TriElement alpha, std::size_t n) {
  if (!ring.is_odd(alpha))
    throw Error(ErrorKind::OddOnly, "local power needs an odd element", format_element(alpha));
  return {0, ring.odd().power(alpha.odd, n)};
}

TriElement power(const Triring& ring, TriElement x, std::size_t m) {
  TriElement result = ring.one();
  for (std::size_t i = 0; i < m; ++i) result = ring.mul(result, x);
  return result;
}

}  // namespace trispec
