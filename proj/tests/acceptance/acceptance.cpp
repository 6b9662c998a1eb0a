// Acceptance run over the fixture corpus. Prints one PASS/FAIL line per
// criterion and exits non-zero if any criterion fails. Set equalities are
// exact; the only tolerances are the wall-clock limits below.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracle.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/triideal.hpp"

using namespace trispec;

namespace {

constexpr double kConstructionSeconds = 10.0;
constexpr double kNilradicalSeconds = 30.0;
constexpr double kRadicalSeconds = 30.0;
constexpr std::size_t kMinCorpus = 10;
constexpr std::size_t kMaxPower = 6;
constexpr int kRepeats = 3;
constexpr std::array<int, 2> kWorkerCounts{1, 4};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Loaded {
  std::string name;
  Triring ring;
  Trispectrum spec;
};

std::vector<Loaded> load_corpus() {
  std::vector<Loaded> out;
  for (const auto& name : corpus::valid_names()) {
    Triring r = corpus::load(name);
    Trispectrum s = trispectrum(r);
    out.push_back({name, std::move(r), std::move(s)});
  }
  return out;
}

PointSet V(const Trispectrum& s, const Triideal& i) { return vsharp(s, i).members; }

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet m;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

// 1. Corpus construction.
Outcome corpus_construction() {
  Outcome o;
  std::size_t built = 0, commutative = 0, product_even = 0;
  bool z4z2 = false, h2 = false, h3 = false;
  for (const auto& name : corpus::valid_names()) {
    const Triring r = corpus::load(name);
    if (!verify_axioms(r).all_passed() || !oracle::triring_axioms(r)) o.fail(name + " fails an axiom");
    ++built;
    commutative += r.odd().is_zero_ring();
    product_even += r.even().provenance() == RingDescriptor::Kind::product;
    z4z2 |= name == "z4z2";
    h2 |= name == "triquaternion_z2";
    h3 |= name == "triquaternion_z3";
  }
  if (built < kMinCorpus) o.fail("only " + std::to_string(built) + " trirings");
  if (!z4z2 || !h2 || !h3) o.fail("required members missing");
  if (commutative < 2) o.fail("fewer than two commutative trirings");
  if (product_even < 1) o.fail("no product-ring even part");
  if (o.pass)
    o.detail = std::to_string(built) + " trirings, " + std::to_string(commutative) + " commutative, " +
               std::to_string(product_even) + " with product even part";
  return o;
}

// 2. Trinilradical is the intersection of all prime triideals.
Outcome trinilradical_is_meet(const std::vector<Loaded>& all) {
  Outcome o;
  for (const auto& [name, r, s] : all) {
    const Triideal n = trinilradical(r);
    if (intersect(r, s.points()) != n) o.fail(name + ": library intersection differs");
    if (oracle::from(n) != oracle::meet(r, oracle::primes(r))) o.fail(name + ": oracle intersection differs");
    if (name == "z4z2" && (s.points().size() != 2 || format_triideal(n) != "({0,2},{0})"))
      o.fail("z4z2 witness counts differ");
    if (name == "triquaternion_z3" && (s.points().size() != 2 || n != zero_triideal(r)))
      o.fail("triquaternion_z3 witness counts differ");
  }
  if (o.pass) o.detail = std::to_string(all.size()) + " trirings";
  return o;
}

// 3. Radical of a proper triideal is the intersection of the primes above it.
Outcome radical_is_meet(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, r, s] : all)
    for (const auto& i : s.triideals()) {
      if (i.is_whole()) continue;
      std::vector<Triideal> above;
      std::vector<oracle::Pair> oracle_above;
      for (const auto& p : s.points())
        if (i.is_subset_of(p)) above.push_back(p);
      for (const auto& p : oracle::primes(r))
        if (oracle::contains(p, oracle::from(i))) oracle_above.push_back(p);
      const Triideal rad = radical(r, i);
      if (rad != intersect(r, above)) o.fail(name + ": " + format_triideal(i));
      if (oracle::from(rad) != oracle::meet(r, oracle_above)) o.fail(name + ": oracle " + format_triideal(i));
      ++checked;
    }
  if (o.pass) o.detail = std::to_string(checked) + " proper triideals";
  return o;
}

// 4. Closed-set identities.
Outcome closed_set_identities(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t families = 0;
  for (const auto& [name, r, s] : all) {
    if (V(s, zero_triideal(r)) != s.all_points() || !V(s, whole_triideal(r)).empty())
      o.fail(name + ": V(0) or V(R) wrong");
    const auto& t = s.triideals();
    std::vector<PointSet> v;
    for (const auto& i : t) v.push_back(V(s, i));
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) {
        const PointSet u = set_union(v[a], v[b]);
        if (u != V(s, intersect(t[a], t[b])) || u != V(s, mixed_product(r, t[a], t[b])))
          o.fail(name + ": union identity at " + format_triideal(t[a]) + " " + format_triideal(t[b]));
      }
    auto family_ok = [&](const std::vector<std::size_t>& idx) {
      PointSet meet = s.all_points();
      std::vector<Triideal> fam;
      for (std::size_t k : idx) {
        meet = set_intersection(meet, v[k]);
        fam.push_back(t[k]);
      }
      ++families;
      return meet == V(s, sum(r, fam));
    };
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a; b < t.size(); ++b)
        for (std::size_t c = b; c < t.size(); ++c)
          if (!family_ok({a}) || !family_ok({a, b}) || !family_ok({a, b, c}))
            o.fail(name + ": intersection identity");
    std::vector<std::size_t> everything(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) everything[k] = k;
    if (!family_ok(everything)) o.fail(name + ": full-family intersection identity");
  }
  if (o.pass) o.detail = std::to_string(families) + " families";
  return o;
}

// 5. Irreducibility of V(I) agrees with primality of the radical.
Outcome irreducibility(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t checked = 0, disagreements = 0;
  for (const auto& [name, r, s] : all)
    for (const auto& i : s.triideals()) {
      const bool by_search = is_irreducible_by_search(s, V(s, i));
      const bool by_radical = is_prime_triideal(r, radical(r, i));
      ++checked;
      if (by_search != by_radical) {
        ++disagreements;
        o.fail(name + ": " + format_triideal(i));
      }
    }
  o.detail = std::to_string(disagreements) + " disagreements in " + std::to_string(checked) + " closed sets" +
             (o.pass ? "" : "; first at " + o.detail);
  return o;
}

// 6. Quasicompactness of the full and odd trispectra.
Outcome quasicompactness(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t covers = 0;
  for (const auto& [name, r, s] : all) {
    std::vector<Triideal> full, odd;
    for (Elem a = 0; a < r.even().size(); ++a) full.push_back(principal_even_triideal(r, a));
    for (Elem a = 0; a < r.odd().size(); ++a) {
      full.push_back(principal_odd_triideal(r, a));
      odd.push_back(principal_odd_triideal(r, a));
    }
    auto valid = [&](const std::vector<Triideal>& cover, CoverTarget target) {
      const Subcover sub = quasicompact_subcover(s, cover, target);
      const FiniteCommRing& comp = target == CoverTarget::full ? r.even() : r.odd();
      Elem total = 0;
      for (const auto& [idx, x] : sub.witness) {
        const Ideal& part = target == CoverTarget::full ? cover[idx].even : cover[idx].odd;
        if (!part.contains(x) || !std::binary_search(sub.sublist.begin(), sub.sublist.end(), idx)) return false;
        total = comp.add(total, x);
      }
      PointSet covered;
      for (std::size_t idx : sub.sublist) covered = set_union(covered, dsharp(s, cover[idx]));
      const PointSet& want = target == CoverTarget::full ? s.all_points() : s.odd_points();
      return total == comp.one() && std::includes(covered.begin(), covered.end(), want.begin(), want.end());
    };
    if (!valid(full, CoverTarget::full)) o.fail(name + ": full cover");
    ++covers;
    if (!r.odd().is_zero_ring()) {
      if (!valid(odd, CoverTarget::odd)) o.fail(name + ": odd cover");
      ++covers;
    }
  }
  if (o.pass) o.detail = std::to_string(covers) + " covers";
  return o;
}

// 7. Odd primes extend to prime triideals with the greatest compatible even part.
Outcome odd_prime_extension(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t extended = 0;
  for (const auto& [name, r, s] : all) {
    if (r.odd().is_zero_ring()) continue;
    const auto even_ideals = oracle::ideals_by_subsets(r.even());
    for (const auto& p1 : oracle::ideals_by_subsets(r.odd())) {
      if (!oracle::prime(r.odd(), p1)) continue;
      const Triideal p = extend_odd_prime(r, Ideal::from_members(r.odd().size(), p1));
      ++extended;
      if (p.odd.members() != p1 || !oracle::prime_triideal(r, oracle::from(p))) o.fail(name + ": not prime");
      for (const auto& i0 : even_ideals) {
        bool compatible = true;
        for (Elem x : i0)
          for (Elem a = 0; a < r.odd().size() && compatible; ++a)
            compatible = std::binary_search(p1.begin(), p1.end(), r.mul({0, a}, {x, 0}).odd);
        if (compatible && !std::includes(p.even.members().begin(), p.even.members().end(), i0.begin(), i0.end()))
          o.fail(name + ": misses a compatible ideal");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(extended) + " odd primes";
  return o;
}

// 8. Natural maps, first isomorphism and lattice correspondence.
Outcome natural_maps(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, r, s] : all)
    for (const auto& i : s.triideals()) {
      const QuotientTriring q = quotient_triring(r, i);
      const HomAnalysis h = analyze_hom(q.natural.map, r, q.ring);
      if (h.kernel != i || !h.first_isomorphism) o.fail(name + ": kernel at " + format_triideal(i));
      const CheckList c = correspondence_check(q.natural);
      if (const Check* f = c.first_failure()) o.fail(name + ": " + f->name + " at " + format_triideal(i));
      ++checked;
    }
  if (o.pass) o.detail = std::to_string(checked) + " quotients";
  return o;
}

// 9. Local product and local power identities.
Outcome local_identities(const std::vector<Loaded>& all) {
  Outcome o;
  for (const auto& [name, r, s] : all) {
    const Elem n1 = static_cast<Elem>(r.odd().size());
    for (std::size_t i = 0; i < r.size() && o.pass; ++i) {
      const TriElement x = r.element(i);
      for (Elem a = 0; a < n1; ++a) {
        const TriElement alpha{0, a};
        const TriElement xa = r.mul(x, alpha), ax = r.mul(alpha, x);
        for (std::size_t m = 0; m <= kMaxPower; ++m) {
          const TriElement am = local_power(r, alpha, m), xm = power(r, x, m);
          if (local_power(r, xa, m) != r.mul(xm, am) || local_power(r, ax, m) != r.mul(am, xm))
            o.fail(name + ": power identity at x=" + format_element(x) + " m=" + std::to_string(m));
        }
        for (std::size_t j = 0; j < r.size(); ++j) {
          const TriElement y = r.element(j), xy = r.mul(x, y);
          for (Elem b = 0; b < n1; ++b) {
            const TriElement ab{0, r.sharp(a, b)};
            const Elem left = r.sharp(xa.odd, r.mul(y, {0, b}).odd);
            const Elem right = r.sharp(ax.odd, r.mul({0, b}, y).odd);
            if (TriElement{0, left} != r.mul(xy, ab) || TriElement{0, right} != r.mul(ab, xy))
              o.fail(name + ": product identity at x=" + format_element(x) + " y=" + format_element(y));
          }
        }
      }
    }
  }
  if (o.pass) o.detail = "m <= " + std::to_string(kMaxPower);
  return o;
}

std::string capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

// 10. Byte-identical CLI output across repeats and worker counts.
Outcome determinism() {
  Outcome o;
  std::size_t runs = 0;
  const std::string cli = TRISPEC_CLI_PATH;
  for (const auto& name : corpus::valid_names()) {
    const std::string file = "'" + corpus::path(name) + "'";
    for (const std::string& args : {"verify " + file + " --suite all", "topology " + file + " --format dot",
                                   "topology " + file + " --format json"}) {
      std::string reference;
      for (int workers : kWorkerCounts)
        for (int k = 0; k < kRepeats; ++k) {
          const std::string out = capture(cli + " " + args + " --workers " + std::to_string(workers));
          ++runs;
          if (reference.empty()) reference = out;
          if (out.empty() || out != reference) o.fail(name + ": " + args);
        }
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " runs";
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::vector<Loaded> all = load_corpus();

  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0 = no runtime limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "corpus construction", kConstructionSeconds, corpus_construction},
      {2, "trinilradical equals the intersection of prime triideals", kNilradicalSeconds,
       [&] { return trinilradical_is_meet(all); }},
      {3, "radical equals the intersection of primes above", kRadicalSeconds, [&] { return radical_is_meet(all); }},
      {4, "closed-set identities", 0, [&] { return closed_set_identities(all); }},
      {5, "irreducibility agrees with primality of the radical", 0, [&] { return irreducibility(all); }},
      {6, "quasicompact subcovers with witnesses", 0, [&] { return quasicompactness(all); }},
      {7, "odd prime extension", 0, [&] { return odd_prime_extension(all); }},
      {8, "natural maps and correspondence", 0, [&] { return natural_maps(all); }},
      {9, "local product and power identities", 0, [&] { return local_identities(all); }},
      {10, "byte-identical CLI output", 0, determinism},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds)
      o.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    all_pass = all_pass && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail
         << "] " << seconds << " s";
    if (c.limit_seconds > 0) line << " (limit " << c.limit_seconds << " s)";
    std::cout << line.str() << std::endl;
  }
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << (all_pass ? "acceptance: PASS" : "acceptance: FAIL") << " (" << total << " s)" << std::endl;
  return all_pass ? 0 : 1;
}
