#include <doctest.h>

#include "oracle.hpp"
#include "trispec/commring.hpp"
#include "trispec/error.hpp"

using namespace trispec;

namespace {

using Table = std::vector<std::vector<std::int64_t>>;

std::vector<Elem> members(const Ideal& i) { return i.members(); }

RingDescriptor f4() {
  return RingDescriptor::table(4, Table{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                               Table{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}, 1);
}

std::vector<RingDescriptor> small_rings() {
  std::vector<RingDescriptor> out;
  for (std::size_t n = 1; n <= 16; ++n) out.push_back(RingDescriptor::zn(n));
  auto z = RingDescriptor::zn;
  out.push_back(RingDescriptor::product({z(2), z(2)}));
  out.push_back(RingDescriptor::product({z(2), z(4)}));
  out.push_back(RingDescriptor::product({z(2), z(2), z(2)}));
  out.push_back(RingDescriptor::product({z(3), z(3)}));
  out.push_back(RingDescriptor::product({z(4), z(4)}));
  out.push_back(f4());
  return out;
}

Ideal ideal_of(const FiniteCommRing& r, std::vector<Elem> m) { return Ideal::from_members(r.size(), std::move(m)); }

}  // namespace

TEST_SUITE("commring") {
  TEST_CASE("zn arithmetic is modular") {
    const auto z4 = make_ring(RingDescriptor::zn(4));
    CHECK(z4.size() == 4);
    CHECK(z4.mul(2, 3) == 2);
    CHECK(z4.add(3, 3) == 2);
    CHECK(z4.neg(1) == 3);
    CHECK(z4.one() == 1);
    CHECK(z4.label() == "Z_4");
    CHECK(z4.power(3, 0) == 1);
    CHECK(z4.power(2, 2) == 0);
  }

  TEST_CASE("zero ring has a single element and one == zero") {
    const auto z1 = make_ring(RingDescriptor::zn(1));
    CHECK(z1.is_zero_ring());
    CHECK(z1.one() == 0);
    CHECK(enumerate_ideals(z1).size() == 1);
  }

  TEST_CASE("product rings are componentwise with the first factor most significant") {
    const auto r = make_ring(RingDescriptor::product({RingDescriptor::zn(2), RingDescriptor::zn(3)}));
    CHECK(r.size() == 6);
    CHECK(r.label() == "Z_2 x Z_3");
    CHECK(r.one() == 1 * 3 + 1);
    // (1,2) * (1,2) = (1,1); (1,2) + (1,2) = (0,1)
    CHECK(r.mul(5, 5) == 4);
    CHECK(r.add(5, 5) == 1);
  }

  TEST_CASE("explicit tables accept negative mul entries as additive inverses") {
    // Z_3 written with mul[2][2] = -2, i.e. neg(2) = 1.
    const auto r = make_ring(RingDescriptor::table(3, Table{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
                                                   Table{{0, 0, 0}, {0, 1, 2}, {0, 2, -2}}, 1));
    CHECK(r == make_ring(RingDescriptor::zn(3)));
  }

  TEST_CASE("non-associative multiplication table is rejected with a witness") {
    // Additive group Z_2; 1 * 1 = 0 while 1 is declared the identity.
    const auto bad = RingDescriptor::table(2, Table{{0, 1}, {1, 0}}, Table{{0, 0}, {0, 0}}, 1);
    try {
      make_ring(bad);
      FAIL("expected AxiomViolation");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::AxiomViolation);
      CHECK_FALSE(e.witness().empty());
    }
  }

  TEST_CASE("a table that is not a group is rejected") {
    const auto bad = RingDescriptor::table(2, Table{{0, 1}, {1, 1}}, Table{{0, 0}, {0, 1}}, 1);
    CHECK_THROWS_AS(make_ring(bad), Error);
  }

  TEST_CASE("out-of-range table entries are a RangeError") {
    const auto bad = RingDescriptor::table(2, Table{{0, 1}, {1, 5}}, Table{{0, 0}, {0, 1}}, 1);
    try {
      make_ring(bad);
      FAIL("expected RangeError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RangeError);
    }
  }

  TEST_CASE("size cap") {
    CHECK_NOTHROW(make_ring(RingDescriptor::zn(64)));
    try {
      make_ring(RingDescriptor::zn(65));
      FAIL("expected SizeLimit");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SizeLimit);
      CHECK(exit_code(e.kind()) == 3);
    }
    CHECK_NOTHROW(make_ring(RingDescriptor::zn(65), Limits{100, 4096}));
    CHECK_THROWS_AS(make_ring(RingDescriptor::product({RingDescriptor::zn(9), RingDescriptor::zn(9)})), Error);
  }

  TEST_CASE("ideal generation") {
    const auto z6 = make_ring(RingDescriptor::zn(6));
    const Elem two[] = {2};
    CHECK(members(ideal_generated(z6, two)) == std::vector<Elem>{0, 2, 4});
    CHECK(members(ideal_generated(z6, {})) == std::vector<Elem>{0});
    const auto z4 = make_ring(RingDescriptor::zn(4));
    const Elem one[] = {1};
    CHECK(ideal_generated(z4, one).is_whole());
  }

  TEST_CASE("ideal generation matches the closure oracle and is idempotent") {
    for (const auto& d : small_rings()) {
      const auto r = make_ring(d);
      CAPTURE(r.label());
      for (Elem a = 0; a < r.size(); ++a)
        for (Elem b = a; b < r.size(); ++b) {
          const Elem gens[] = {a, b};
          const Ideal i = ideal_generated(r, gens);
          CHECK(members(i) == oracle::ideal_closure(r, {a, b}));
          CHECK(ideal_generated(r, i.members()) == i);
          CHECK(is_ideal(r, i.members()));
        }
    }
  }

  TEST_CASE("ideal lattices of Z_6, Z_5 and Z_4") {
    using V = std::vector<std::vector<Elem>>;
    auto lattice = [](std::size_t n) {
      V out;
      for (const auto& i : enumerate_ideals(make_ring(RingDescriptor::zn(n)))) out.push_back(i.members());
      return out;
    };
    CHECK(lattice(6) == V{{0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});
    CHECK(lattice(5) == V{{0}, {0, 1, 2, 3, 4}});
    CHECK(lattice(4) == V{{0}, {0, 2}, {0, 1, 2, 3}});
  }

  TEST_CASE("enumerate_ideals equals the subgroup oracle") {
    for (const auto& d : small_rings()) {
      const auto r = make_ring(d);
      CAPTURE(r.label());
      std::vector<std::vector<Elem>> got;
      for (const auto& i : enumerate_ideals(r)) got.push_back(i.members());
      auto want = oracle::ideals_by_subsets(r);
      auto sorted_got = got;
      std::sort(sorted_got.begin(), sorted_got.end());
      CHECK(sorted_got == want);
      // Deterministic order: size, then members.
      CHECK(std::is_sorted(got.begin(), got.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      }));
    }
  }

  TEST_CASE("ideal cap") {
    const auto r = make_ring(RingDescriptor::product(
        {RingDescriptor::zn(2), RingDescriptor::zn(2), RingDescriptor::zn(2)}));  // 8 ideals
    CHECK(enumerate_ideals(r, Limits{64, 8}).size() == 8);
    try {
      enumerate_ideals(r, Limits{64, 7});
      FAIL("expected SizeLimit");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SizeLimit);
    }
  }

  TEST_CASE("prime ideals") {
    const auto z6 = make_ring(RingDescriptor::zn(6));
    CHECK(is_prime_ideal(z6, ideal_of(z6, {0, 2, 4})));
    CHECK(is_prime_ideal(z6, ideal_of(z6, {0, 3})));
    CHECK_FALSE(is_prime_ideal(z6, ideal_of(z6, {0})));
    CHECK_FALSE(is_prime_ideal(z6, unit_ideal(z6)));
  }

  TEST_CASE("primality agrees with the oracle and with a domain quotient") {
    for (const auto& d : small_rings()) {
      const auto r = make_ring(d);
      CAPTURE(r.label());
      for (const auto& i : enumerate_ideals(r)) {
        const bool p = is_prime_ideal(r, i);
        CHECK(p == oracle::prime(r, i.members()));
        const QuotientRing q = quotient_ring(r, i);
        bool domain = !q.ring.is_zero_ring();
        for (Elem a = 1; a < q.ring.size(); ++a)
          for (Elem b = 1; b < q.ring.size(); ++b) domain = domain && q.ring.mul(a, b) != 0;
        CHECK(p == domain);
      }
    }
  }

  TEST_CASE("nilradical") {
    CHECK(members(nilradical_comm(make_ring(RingDescriptor::zn(4)))) == std::vector<Elem>{0, 2});
    CHECK(members(nilradical_comm(make_ring(RingDescriptor::zn(6)))) == std::vector<Elem>{0});
    CHECK(members(nilradical_comm(make_ring(f4()))) == std::vector<Elem>{0});
    const auto z8 = make_ring(RingDescriptor::zn(8));
    CHECK(is_nilpotent(z8, 2));
    CHECK_FALSE(is_nilpotent(z8, 3));
  }

  TEST_CASE("nilradical equals the oracle and the intersection of primes") {
    for (const auto& d : small_rings()) {
      const auto r = make_ring(d);
      CAPTURE(r.label());
      const Ideal n = nilradical_comm(r);
      CHECK(n.members() == oracle::nilradical(r));
      Ideal meet = unit_ideal(r);
      for (const auto& i : enumerate_ideals(r))
        if (is_prime_ideal(r, i)) meet = ideal_intersection(meet, i);
      CHECK(meet == n);
    }
  }

  TEST_CASE("sum, intersection and product of ideals") {
    const auto z12 = make_ring(RingDescriptor::zn(12));
    const Elem g4[] = {4}, g6[] = {6};
    const Ideal a = ideal_generated(z12, g4), b = ideal_generated(z12, g6);
    CHECK(members(ideal_sum(z12, a, b)) == std::vector<Elem>{0, 2, 4, 6, 8, 10});
    CHECK(members(ideal_intersection(a, b)) == std::vector<Elem>{0});
    CHECK(members(ideal_product(z12, a, b)) == std::vector<Elem>{0});
    CHECK(members(ideal_product(z12, b, unit_ideal(z12))) == b.members());
  }

  TEST_CASE("quotient by an ideal") {
    const auto z6 = make_ring(RingDescriptor::zn(6));
    const QuotientRing q = quotient_ring(z6, ideal_of(z6, {0, 3}));
    CHECK(q.ring.size() == 3);
    CHECK(q.representative == std::vector<Elem>{0, 1, 2});
    CHECK(q.project == std::vector<Elem>{0, 1, 2, 0, 1, 2});
    CHECK(q.ring == make_ring(RingDescriptor::zn(3)));
  }

  TEST_CASE("set formatting") {
    const Elem xs[] = {0, 2};
    CHECK(format_set(xs) == "{0,2}");
  }
}
