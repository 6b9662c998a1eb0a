#include "trispec/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "trispec/error.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/triideal.hpp"

namespace trispec {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "axioms") return Suite::axioms;
  if (name == "ideals") return Suite::ideals;
  if (name == "spectrum") return Suite::spectrum;
  if (name == "nilradical") return Suite::nilradical;
  if (name == "topology") return Suite::topology;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::axioms: return "axioms";
    case Suite::ideals: return "ideals";
    case Suite::spectrum: return "spectrum";
    case Suite::nilradical: return "nilradical";
    case Suite::topology: return "topology";
    case Suite::all: return "all";
  }
  return "?";
}

bool SuiteReport::all_passed() const { return count(Status::fail) == 0; }

std::size_t SuiteReport::count(Status status) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                [&](const SuiteEntry& e) { return e.status == status; }));
}

const SuiteEntry* SuiteReport::find(std::string_view suite_name, std::string_view check) const {
  for (const auto& e : entries)
    if (e.suite == suite_name && e.check == check) return &e;
  return nullptr;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "triring: " << ring_name << "\n";
  os << "suite: " << to_string(suite) << "\n";
  for (const auto& e : entries) {
    os << (e.status == Status::pass ? "PASS " : e.status == Status::fail ? "FAIL " : "INFO ");
    os << e.suite << "/" << e.check;
    if (!e.detail.empty()) os << "  " << e.detail;
    os << "\n";
  }
  os << "summary: " << count(Status::pass) << " passed, " << count(Status::fail) << " failed, "
     << count(Status::info) << " info\n";
  return os.str();
}

namespace {

using Entries = std::vector<SuiteEntry>;
using Task = std::function<Entries()>;

/// Runs fn(0..n-1) on up to `workers` threads; fn writes only to its own slot.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

SuiteEntry entry(std::string suite, std::string check, bool ok, std::string detail = {}) {
  return {std::move(suite), std::move(check), ok ? Status::pass : Status::fail, std::move(detail)};
}

struct Context {
  const Triring& ring;
  Trispectrum spec;
  std::vector<Triideal> radicals;  // parallel to spec.triideals()

  const std::vector<Triideal>& triideals() const { return spec.triideals(); }
};

// Wraps a task so that a broken internal invariant becomes a failing entry
// instead of aborting the whole report. Size limits still propagate.
Task guarded(std::string suite, std::string check, std::function<Entries()> body) {
  return [suite = std::move(suite), check = std::move(check), body = std::move(body)]() -> Entries {
    try {
      return body();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SizeLimit) throw;
      return {entry(suite, check, false, e.what())};
    } catch (const std::logic_error& e) {
      return {entry(suite, check, false, e.what())};
    }
  };
}

Task single(std::string suite, std::string check, std::function<SuiteEntry()> body) {
  return guarded(suite, check, [body = std::move(body)] { return Entries{body()}; });
}

std::string el(TriElement x) { return format_element(x); }
std::string ti(const Triideal& i) { return format_triideal(i); }

// ---------------------------------------------------------------------------

void add_axiom_tasks(std::vector<Task>& tasks, const Triring& r) {
  const std::string s = "axioms";
  tasks.push_back(guarded(s, "structure-maps", [&r, s] {
    Entries out;
    for (const auto& c : verify_structure_maps(r.even(), r.odd(), r.lambda_map(), r.rho_map()).checks)
      out.push_back(entry(s, c.name, c.passed, c.witness));
    return out;
  }));
  tasks.push_back(guarded(s, "ring-laws", [&r, s] {
    Entries out;
    for (const auto& c : verify_axioms(r).checks) out.push_back(entry(s, c.name, c.passed, c.witness));
    return out;
  }));
  tasks.push_back(single(s, "derived-representation", [&r, s] {
    for (Elem a = 0; a < r.even().size(); ++a)
      for (Elem alpha = 0; alpha < r.odd().size(); ++alpha)
        if (r.mul({a, 0}, {0, alpha}) != TriElement{0, r.sharp(r.lambda(a), alpha)} ||
            r.mul({0, alpha}, {a, 0}) != TriElement{0, r.sharp(alpha, r.rho(a))})
          return entry(s, "derived-representation", false, "x0=" + el({a, 0}) + " alpha=" + el({0, alpha}));
    return entry(s, "derived-representation", true);
  }));
  tasks.push_back(single(s, "local-product-identities", [&r, s] {
    // (x alpha) # (y beta) = (xy)(alpha # beta), (alpha x) # (beta y) = (alpha # beta) xy
    const std::size_t n = r.size();
    const Elem n1 = static_cast<Elem>(r.odd().size());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const TriElement x = r.element(i), y = r.element(j), xy = r.mul(x, y);
        for (Elem a = 0; a < n1; ++a) {
          const TriElement xa = r.mul(x, {0, a}), ax = r.mul({0, a}, x);
          for (Elem b = 0; b < n1; ++b) {
            const TriElement yb = r.mul(y, {0, b}), by = r.mul({0, b}, y);
            const TriElement ab{0, r.sharp(a, b)};
            if (TriElement{0, r.sharp(xa.odd, yb.odd)} != r.mul(xy, ab) ||
                TriElement{0, r.sharp(ax.odd, by.odd)} != r.mul(ab, xy))
              return entry(s, "local-product-identities", false,
                           "x=" + el(x) + " y=" + el(y) + " alpha=" + el({0, a}) + " beta=" + el({0, b}));
          }
        }
      }
    return entry(s, "local-product-identities", true);
  }));
  tasks.push_back(single(s, "local-power-identities", [&r, s] {
    // (x alpha)^{#m} = x^m alpha^{#m}, (alpha x)^{#m} = alpha^{#m} x^m
    const std::size_t bound = std::max<std::size_t>(6, r.odd().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      const TriElement x = r.element(i);
      for (Elem a = 0; a < r.odd().size(); ++a) {
        const TriElement xa = r.mul(x, {0, a}), ax = r.mul({0, a}, x);
        for (std::size_t m = 1; m <= bound; ++m) {
          const TriElement am = local_power(r, {0, a}, m), xm = power(r, x, m);
          if (local_power(r, xa, m) != r.mul(xm, am) || local_power(r, ax, m) != r.mul(am, xm))
            return entry(s, "local-power-identities", false,
                         "x=" + el(x) + " alpha=" + el({0, a}) + " m=" + std::to_string(m));
        }
      }
    }
    return entry(s, "local-power-identities", true, "m <= " + std::to_string(bound));
  }));
}

void add_ideal_tasks(std::vector<Task>& tasks, const Context& ctx, const Limits& limits) {
  const std::string s = "ideals";
  const Triring& r = ctx.ring;
  tasks.push_back(single(s, "pair-characterization", [&r, s, limits] {
    const auto evens = enumerate_ideals(r.even(), limits);
    const auto odds = enumerate_ideals(r.odd(), limits);
    for (const auto& e : evens)
      for (const auto& o : odds)
        if (is_triideal(r, e, o) != is_triideal_by_components(r, e, o))
          return entry(s, "pair-characterization", false, ti({e, o}));
    return entry(s, "pair-characterization", true);
  }));
  tasks.push_back(single(s, "principal-triideals", [&r, s] {
    for (Elem a = 0; a < r.even().size(); ++a) {
      const Triideal p = principal_even_triideal(r, a);
      const Elem g[] = {a};
      if (!is_triideal(r, p.even, p.odd) || make_triideal(r, g, {}) != p)
        return entry(s, "principal-triideals", false, "x0=" + std::to_string(a));
    }
    for (Elem a = 0; a < r.odd().size(); ++a) {
      const Triideal p = principal_odd_triideal(r, a);
      const Elem g[] = {a};
      if (!is_triideal(r, p.even, p.odd) || make_triideal(r, {}, g) != p)
        return entry(s, "principal-triideals", false, "x1=" + std::to_string(a));
    }
    return entry(s, "principal-triideals", true);
  }));
  tasks.push_back(single(s, "sum-and-intersection", [&ctx, &r, s] {
    const auto& t = ctx.triideals();
    for (const auto& i : t)
      for (const auto& j : t) {
        const Triideal a = sum(r, i, j), m = intersect(i, j);
        if (!is_triideal(r, a.even, a.odd) || !is_triideal(r, m.even, m.odd) || !i.is_subset_of(a) ||
            !m.is_subset_of(i) || !m.is_subset_of(j))
          return entry(s, "sum-and-intersection", false, ti(i) + " " + ti(j));
      }
    return entry(s, "sum-and-intersection", true);
  }));
  tasks.push_back(single(s, "mixed-product", [&ctx, &r, s] {
    const auto& t = ctx.triideals();
    for (const auto& i : t)
      for (const auto& j : t) {
        const Triideal p = mixed_product(r, i, j);
        if (!p.is_subset_of(intersect(i, j)) || p != mixed_product(r, j, i))
          return entry(s, "mixed-product", false, ti(i) + " " + ti(j));
      }
    return entry(s, "mixed-product", true);
  }));
  tasks.push_back(single(s, "identity-homomorphism", [&r, s] {
    std::vector<TriElement> id(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) id[i] = r.element(i);
    const HomAnalysis h = analyze_hom(id, r, r);
    const bool ok = h.kernel == zero_triideal(r) && h.image.size() == r.size() && h.first_isomorphism;
    return entry(s, "identity-homomorphism", ok);
  }));
  for (std::size_t k = 0; k < ctx.triideals().size(); ++k) {
    tasks.push_back(guarded(s, "natural-map", [&ctx, &r, s, k, limits] {
      const Triideal& i = ctx.triideals()[k];
      const QuotientTriring q = quotient_triring(r, i);
      const HomAnalysis h = analyze_hom(q.natural.map, r, q.ring);
      const bool ok = h.kernel == i && h.first_isomorphism && h.image_is_subtriring &&
                      q.natural.is_surjective();
      Entries out{entry(s, "natural-map[" + std::to_string(k) + "]", ok, ok ? "" : ti(i))};
      const CheckList c = correspondence_check(q.natural, limits);
      const Check* f = c.first_failure();
      out.push_back(entry(s, "correspondence[" + std::to_string(k) + "]", f == nullptr,
                          f ? f->name + " " + f->witness : ""));
      return out;
    }));
  }
}

void add_spectrum_tasks(std::vector<Task>& tasks, const Context& ctx, const Limits& limits) {
  const std::string s = "spectrum";
  const Triring& r = ctx.ring;
  const Trispectrum& spec = ctx.spec;
  tasks.push_back(single(s, "prime-count", [&spec, s] {
    return SuiteEntry{s, "prime-count", Status::info,
                      std::to_string(spec.points().size()) + " prime triideals (" +
                          std::to_string(spec.even_points().size()) + " even, " +
                          std::to_string(spec.odd_points().size()) + " odd)"};
  }));
  tasks.push_back(single(s, "even-odd-partition", [&spec, s] {
    PointSet merged;
    std::merge(spec.even_points().begin(), spec.even_points().end(), spec.odd_points().begin(),
               spec.odd_points().end(), std::back_inserter(merged));
    bool ok = merged == spec.all_points();
    for (std::size_t p : spec.even_points()) ok = ok && spec.points()[p].odd.is_whole();
    for (std::size_t p : spec.odd_points()) ok = ok && !spec.points()[p].odd.is_whole();
    return entry(s, "even-odd-partition", ok);
  }));
  tasks.push_back(single(s, "even-point-characterization", [&ctx, &r, s] {
    for (const auto& p : ctx.triideals()) {
      if (!p.odd.is_whole()) continue;
      if (is_prime_triideal(r, p) != is_prime_ideal(r.even(), p.even))
        return entry(s, "even-point-characterization", false, ti(p));
    }
    return entry(s, "even-point-characterization", true);
  }));
  tasks.push_back(single(s, "odd-point-components", [&spec, &r, s] {
    for (std::size_t p : spec.odd_points()) {
      const Triideal& q = spec.points()[p];
      if (!is_prime_ideal(r.even(), q.even) || !is_prime_ideal(r.odd(), q.odd))
        return entry(s, "odd-point-components", false, ti(q));
    }
    return entry(s, "odd-point-components", true);
  }));
  tasks.push_back(single(s, "odd-spectrum-nonempty", [&spec, &r, s] {
    const bool ok = r.odd().is_zero_ring() || !spec.odd_points().empty();
    return entry(s, "odd-spectrum-nonempty", ok);
  }));
  tasks.push_back(single(s, "odd-prime-extension", [&r, &spec, s, limits] {
    if (r.odd().is_zero_ring()) return entry(s, "odd-prime-extension", true, "R1 = 0");
    std::size_t extended = 0;
    for (const auto& p1 : enumerate_ideals(r.odd(), limits)) {
      if (!is_prime_ideal(r.odd(), p1)) continue;
      const Triideal p = extend_odd_prime(r, p1, limits);
      const auto& pts = spec.points();
      if (std::find(pts.begin(), pts.end(), p) == pts.end())
        return entry(s, "odd-prime-extension", false, ti(p));
      ++extended;
    }
    return entry(s, "odd-prime-extension", true, "extended " + std::to_string(extended) + " odd prime(s)");
  }));
  tasks.push_back(single(s, "mixed-product-primality", [&ctx, &spec, &r, s] {
    const auto& t = ctx.triideals();
    for (const auto& p : spec.points())
      for (const auto& i : t)
        for (const auto& j : t)
          if (mixed_product(r, i, j).is_subset_of(p) != (i.is_subset_of(p) || j.is_subset_of(p)))
            return entry(s, "mixed-product-primality", false, ti(p) + " " + ti(i) + " " + ti(j));
    return entry(s, "mixed-product-primality", true);
  }));
  tasks.push_back(single(s, "odd-prime-faithfulness", [&spec, s] {
    const FaithfulnessDiagnostic d = odd_prime_faithfulness(spec);
    std::string detail = std::to_string(d.agreements) + " of " + std::to_string(d.examined) +
                         " odd-type triideals agree";
    for (const auto& p : d.disagreements) detail += "; disagrees at " + ti(p);
    return SuiteEntry{s, "odd-prime-faithfulness", Status::info, detail};
  }));
}

void add_nilradical_tasks(std::vector<Task>& tasks, const Context& ctx) {
  const std::string s = "nilradical";
  const Triring& r = ctx.ring;
  const Trispectrum& spec = ctx.spec;
  tasks.push_back(single(s, "trinilradical-elementwise", [&r, s] {
    const Triideal n = trinilradical(r);
    for (std::size_t i = 0; i < r.size(); ++i)
      if (n.contains(r.element(i)) != is_trinilpotent(r, r.element(i)))
        return entry(s, "trinilradical-elementwise", false, el(r.element(i)));
    return entry(s, "trinilradical-elementwise", true, ti(n));
  }));
  tasks.push_back(single(s, "trinilradical-is-triideal", [&r, s] {
    const Triideal n = trinilradical(r);
    return entry(s, "trinilradical-is-triideal", is_triideal(r, n.even, n.odd));
  }));
  tasks.push_back(single(s, "ordinary-nilradical-decomposition", [&r, s] {
    const Triideal expected{nilradical_comm(r.even()), unit_ideal(r.odd())};
    std::vector<std::size_t> want;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (expected.contains(r.element(i))) want.push_back(i);
    return entry(s, "ordinary-nilradical-decomposition", ordinary_nilradical(r) == want);
  }));
  tasks.push_back(single(s, "trinilradical-within-nilradical", [&r, s] {
    const Triideal n = trinilradical(r);
    const auto ordinary = ordinary_nilradical(r);
    for (std::size_t i = 0; i < r.size(); ++i)
      if (n.contains(r.element(i)) && !std::binary_search(ordinary.begin(), ordinary.end(), i))
        return entry(s, "trinilradical-within-nilradical", false, el(r.element(i)));
    return entry(s, "trinilradical-within-nilradical", true);
  }));
  tasks.push_back(single(s, "reduced-quotient", [&r, s] {
    const QuotientTriring q = quotient_triring(r, trinilradical(r));
    return entry(s, "reduced-quotient", trinilradical(q.ring) == zero_triideal(q.ring));
  }));
  tasks.push_back(single(s, "trinilradical-is-intersection-of-primes", [&r, &spec, s] {
    const Triideal meet = intersect(r, spec.points());
    const Triideal n = trinilradical(r);
    return entry(s, "trinilradical-is-intersection-of-primes", meet == n,
                 meet == n ? ti(n) : "nilradical " + ti(n) + " vs intersection " + ti(meet));
  }));
  tasks.push_back(single(s, "radical-is-intersection-of-primes-above", [&ctx, &r, &spec, s] {
    for (std::size_t k = 0; k < ctx.triideals().size(); ++k) {
      const Triideal& i = ctx.triideals()[k];
      if (i.is_whole()) continue;
      std::vector<Triideal> above;
      for (const auto& p : spec.points())
        if (i.is_subset_of(p)) above.push_back(p);
      if (intersect(r, above) != ctx.radicals[k])
        return entry(s, "radical-is-intersection-of-primes-above", false, ti(i));
    }
    return entry(s, "radical-is-intersection-of-primes-above", true);
  }));
  tasks.push_back(single(s, "radical-idempotent", [&ctx, &r, s] {
    for (std::size_t k = 0; k < ctx.triideals().size(); ++k)
      if (radical(r, ctx.radicals[k]) != ctx.radicals[k])
        return entry(s, "radical-idempotent", false, ti(ctx.triideals()[k]));
    return entry(s, "radical-idempotent", true);
  }));
  tasks.push_back(single(s, "radical-of-zero", [&r, s] {
    return entry(s, "radical-of-zero", radical(r, zero_triideal(r)) == trinilradical(r));
  }));
}

void add_topology_tasks(std::vector<Task>& tasks, const Context& ctx) {
  const std::string s = "topology";
  const Triring& r = ctx.ring;
  const Trispectrum& spec = ctx.spec;
  auto V = [&spec](const Triideal& i) { return vsharp(spec, i).members; };
  tasks.push_back(single(s, "closed-set-extremes", [&ctx, &r, &spec, V, s] {
    const bool ok = V(zero_triideal(r)) == spec.all_points() && V(whole_triideal(r)).empty();
    return entry(s, "closed-set-extremes", ok);
  }));
  tasks.push_back(single(s, "closed-set-union", [&ctx, &r, &spec, V, s] {
    const auto& t = ctx.triideals();
    for (const auto& i : t)
      for (const auto& j : t) {
        PointSet u;
        const PointSet vi = V(i), vj = V(j);
        std::set_union(vi.begin(), vi.end(), vj.begin(), vj.end(), std::back_inserter(u));
        if (u != V(intersect(i, j)) || u != V(mixed_product(r, i, j)))
          return entry(s, "closed-set-union", false, ti(i) + " " + ti(j));
      }
    return entry(s, "closed-set-union", true);
  }));
  tasks.push_back(single(s, "closed-set-intersection", [&ctx, &r, &spec, V, s] {
    const auto& t = ctx.triideals();
    auto check = [&](const std::vector<Triideal>& family) {
      PointSet meet = spec.all_points();
      for (const auto& i : family) {
        PointSet next;
        const PointSet vi = V(i);
        std::set_intersection(meet.begin(), meet.end(), vi.begin(), vi.end(), std::back_inserter(next));
        meet = std::move(next);
      }
      return meet == V(sum(r, family));
    };
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        for (std::size_t c = b; c < n; ++c)
          if (!check({t[a]}) || !check({t[a], t[b]}) || !check({t[a], t[b], t[c]}))
            return entry(s, "closed-set-intersection", false, ti(t[a]) + " " + ti(t[b]) + " " + ti(t[c]));
    return entry(s, "closed-set-intersection", check(t), "families of size <= 3 and the full family");
  }));
  tasks.push_back(single(s, "closed-set-radical-order", [&ctx, &r, &spec, V, s] {
    const auto& t = ctx.triideals();
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) {
        const PointSet va = V(t[a]), vb = V(t[b]);
        const bool contained = std::includes(vb.begin(), vb.end(), va.begin(), va.end());
        if (contained != ctx.radicals[b].is_subset_of(ctx.radicals[a]))
          return entry(s, "closed-set-radical-order", false, ti(t[a]) + " " + ti(t[b]));
      }
    for (std::size_t a = 0; a < t.size(); ++a)
      if (V(t[a]) != V(ctx.radicals[a])) return entry(s, "closed-set-radical-order", false, ti(t[a]));
    return entry(s, "closed-set-radical-order", true);
  }));
  tasks.push_back(single(s, "basic-open-base", [&ctx, &r, &spec, V, s] {
    std::vector<PointSet> d_even(r.even().size()), d_odd(r.odd().size());
    for (Elem a = 0; a < r.even().size(); ++a) d_even[a] = dsharp_even(spec, a);
    for (Elem a = 0; a < r.odd().size(); ++a) d_odd[a] = dsharp_odd(spec, a);
    for (const auto& i : ctx.triideals()) {
      PointSet u;
      auto absorb = [&u](const PointSet& p) {
        PointSet next;
        std::set_union(u.begin(), u.end(), p.begin(), p.end(), std::back_inserter(next));
        u = std::move(next);
      };
      for (Elem a : i.even.members()) absorb(d_even[a]);
      for (Elem a : i.odd.members()) absorb(d_odd[a]);
      if (u != dsharp(spec, i)) return entry(s, "basic-open-base", false, ti(i));
    }
    const bool extremes = d_even[0].empty() && d_even[r.even().one()] == spec.all_points() &&
                          d_odd[r.odd().one()] == (r.odd().is_zero_ring() ? PointSet{} : spec.odd_points());
    bool odd_inside = true;
    for (const auto& d : d_odd)
      odd_inside = odd_inside && std::includes(spec.odd_points().begin(), spec.odd_points().end(),
                                               d.begin(), d.end());
    return entry(s, "basic-open-base", extremes && odd_inside,
                 extremes && odd_inside ? "" : "D(0), D(1), D(1#) or D(x1) out of place");
  }));
  tasks.push_back(single(s, "quasicompact-full", [&ctx, &r, &spec, V, s] {
    std::vector<Triideal> cover;
    for (Elem a = 0; a < r.even().size(); ++a) cover.push_back(principal_even_triideal(r, a));
    for (Elem a = 0; a < r.odd().size(); ++a) cover.push_back(principal_odd_triideal(r, a));
    const Subcover sub = quasicompact_subcover(spec, cover, CoverTarget::full);
    return entry(s, "quasicompact-full", true, std::to_string(sub.sublist.size()) + " member subcover");
  }));
  tasks.push_back(single(s, "quasicompact-odd", [&ctx, &r, &spec, V, s] {
    if (r.odd().is_zero_ring()) return entry(s, "quasicompact-odd", true, "R1 = 0");
    std::vector<Triideal> cover;
    for (Elem a = 0; a < r.odd().size(); ++a) cover.push_back(principal_odd_triideal(r, a));
    const Subcover sub = quasicompact_subcover(spec, cover, CoverTarget::odd);
    return entry(s, "quasicompact-odd", true, std::to_string(sub.sublist.size()) + " member subcover");
  }));
  tasks.push_back(single(s, "irreducible-iff-prime-radical", [&ctx, &r, &spec, V, s] {
    std::size_t irreducible = 0;
    for (std::size_t k = 0; k < ctx.triideals().size(); ++k) {
      const ClosedSet c = vsharp(spec, ctx.triideals()[k]);
      if (c.members.empty()) {
        // The empty set is not irreducible; its radical is the whole ring.
        if (is_prime_triideal(r, ctx.radicals[k]))
          return entry(s, "irreducible-iff-prime-radical", false, ti(c.defining_ideal));
        continue;
      }
      if (is_irreducible(spec, c)) ++irreducible;
    }
    return entry(s, "irreducible-iff-prime-radical", true,
                 std::to_string(irreducible) + " irreducible closed sets among " +
                     std::to_string(ctx.triideals().size()) + " triideals");
  }));
  tasks.push_back(single(s, "point-closure", [&ctx, &r, &spec, V, s] {
    for (std::size_t p = 0; p < spec.points().size(); ++p) {
      const PointSet c = closure(spec, {p});
      if (c != V(spec.points()[p]) || closure(spec, c) != c)
        return entry(s, "point-closure", false, "P" + std::to_string(p));
    }
    return entry(s, "point-closure", true);
  }));
}

bool wants(Suite selected, Suite s) { return selected == Suite::all || selected == s; }

}  // namespace

SuiteReport run_suite(const Triring& ring, Suite suite, const SuiteOptions& options) {
  SuiteReport report{ring.name(), suite, {}};
  const std::size_t workers = std::max<std::size_t>(options.workers, 1);

  std::optional<Context> ctx;
  if (suite != Suite::axioms) {
    ctx.emplace(Context{ring, trispectrum(ring, options.limits), {}});
    if (wants(suite, Suite::nilradical) || wants(suite, Suite::topology)) {
      const auto& t = ctx->triideals();
      ctx->radicals.resize(t.size());
      parallel_for(t.size(), workers, [&](std::size_t k) { ctx->radicals[k] = radical(ring, t[k]); });
    }
  }

  std::vector<Task> tasks;
  if (wants(suite, Suite::axioms)) add_axiom_tasks(tasks, ring);
  if (wants(suite, Suite::ideals)) add_ideal_tasks(tasks, *ctx, options.limits);
  if (wants(suite, Suite::spectrum)) add_spectrum_tasks(tasks, *ctx, options.limits);
  if (wants(suite, Suite::nilradical)) add_nilradical_tasks(tasks, *ctx);
  if (wants(suite, Suite::topology)) add_topology_tasks(tasks, *ctx);

  std::vector<Entries> results(tasks.size());
  parallel_for(tasks.size(), workers, [&](std::size_t i) { results[i] = tasks[i](); });
  for (auto& r : results)
    for (auto& e : r) report.entries.push_back(std::move(e));
  return report;
}

SuiteReport run_suite(const TriringDocument& doc, Suite suite, const SuiteOptions& options) {
  try {
    const Triring ring = build_from_document(doc, options.limits);
    return run_suite(ring, suite, options);
  } catch (const Error& e) {
    if (exit_code(e.kind()) != 1) throw;
    SuiteReport report{doc.name.value_or("(unnamed)"), suite, {}};
    report.entries.push_back({"axioms", "construction", Status::fail,
                              std::string(e.what()) + (e.witness().empty() ? "" : " [" + e.witness() + "]")});
    if (doc.kind == TriringDocument::Kind::explicit_maps) {
      const DocumentParts parts = resolve_parts(doc, options.limits);
      for (const auto& c : verify_structure_maps(parts.even, parts.odd, parts.lambda, parts.rho).checks)
        report.entries.push_back({"axioms", c.name, c.passed ? Status::pass : Status::fail, c.witness});
      const TriringCandidate cand = assemble_candidate(parts.even, parts.odd, parts.lambda, parts.rho);
      for (const auto& c : verify_axioms(cand).checks)
        report.entries.push_back({"axioms", c.name, c.passed ? Status::pass : Status::fail, c.witness});
    }
    return report;
  }
}

}  // namespace trispec
