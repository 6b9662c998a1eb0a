#include "trispec/topology_export.hpp"

#include <sstream>

#include "json.hpp"

namespace trispec {

using nlohmann::json;

std::optional<TopologyFormat> parse_topology_format(std::string_view name) {
  if (name == "dot") return TopologyFormat::dot;
  if (name == "json") return TopologyFormat::json;
  return std::nullopt;
}

Generators greedy_generators(const Triring& ring, const Triideal& ideal) {
  Generators g;
  Triideal current = zero_triideal(ring);
  for (Elem a : ideal.even.members()) {
    if (current.even.contains(a)) continue;
    g.even.push_back(a);
    current = make_triideal(ring, g.even, g.odd);
  }
  for (Elem a : ideal.odd.members()) {
    if (current.odd.contains(a)) continue;
    g.odd.push_back(a);
    current = make_triideal(ring, g.even, g.odd);
  }
  return g;
}

namespace {

std::string join(const std::vector<Elem>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string to_dot(const Trispectrum& spec) {
  const Triring& r = spec.ring();
  const SpecializationOrder order = specialization_order(spec);
  std::ostringstream os;
  os << "digraph trispectrum {\n";
  os << "  label=\"" << escape_dot(r.name()) << "\";\n";
  os << "  node [shape=box];\n";
  for (std::size_t p = 0; p < spec.points().size(); ++p) {
    const Generators g = greedy_generators(r, spec.points()[p]);
    os << "  p" << p << " [label=\"P" << p << " " << (spec.is_even_point(p) ? "even" : "odd") << "\\n<"
       << join(g.even) << " | " << join(g.odd) << ">\"];\n";
  }
  for (const auto& [p, q] : order.hasse_edges) os << "  p" << p << " -> p" << q << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const Trispectrum& spec) {
  const Triring& r = spec.ring();
  json points = json::array();
  for (std::size_t p = 0; p < spec.points().size(); ++p) {
    const Triideal& P = spec.points()[p];
    const Generators g = greedy_generators(r, P);
    points.push_back({{"id", p},
                      {"parity", spec.is_even_point(p) ? "even" : "odd"},
                      {"even", P.even.members()},
                      {"odd", P.odd.members()},
                      {"generators", {{"even", g.even}, {"odd", g.odd}}}});
  }
  json closed = json::array();
  for (const auto& c : closed_sets(spec)) closed.push_back(c);
  json even_opens = json::array(), odd_opens = json::array();
  for (Elem a = 0; a < r.even().size(); ++a)
    even_opens.push_back({{"element", a}, {"points", dsharp_even(spec, a)}});
  for (Elem a = 0; a < r.odd().size(); ++a)
    odd_opens.push_back({{"element", a}, {"points", dsharp_odd(spec, a)}});
  json edges = json::array();
  for (const auto& [p, q] : specialization_order(spec).hasse_edges) edges.push_back({p, q});
  json root = {{"ring", r.name()},
               {"points", points},
               {"closed_sets", closed},
               {"basic_opens", {{"even", even_opens}, {"odd", odd_opens}}},
               {"specialization", edges}};
  return root.dump() + "\n";
}

}  // namespace

std::string export_topology(const Trispectrum& spec, TopologyFormat format) {
  return format == TopologyFormat::dot ? to_dot(spec) : to_json(spec);
}

std::string export_topology(const TriringDocument& doc, TopologyFormat format, const Limits& limits) {
  const Triring ring = build_from_document(doc, limits);
  return export_topology(trispectrum(ring, limits), format);
}

}  // namespace trispec
