#pragma once

// Renders the trispectrum's topology. Output is byte-deterministic.
//
// dot:  one node per prime triideal, labeled "P<i> even|odd" and a generator
//       list; one edge p -> q per covering pair of the specialization order.
// json: {"closed_sets":[[...]],"basic_opens":{"even":[...],"odd":[...]},
//        "points":[...],"ring":...,"specialization":[[p,q],...]}

#include <optional>
#include <string>
#include <string_view>

#include "trispec/commring.hpp"
#include "trispec/document.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/triring.hpp"

namespace trispec {

enum class TopologyFormat { dot, json };

std::optional<TopologyFormat> parse_topology_format(std::string_view name);

/// Greedy generator lists of a triideal: elements taken in index order,
/// even part first, each one kept only if it enlarges the generated triideal.
struct Generators {
  std::vector<Elem> even;
  std::vector<Elem> odd;
};
Generators greedy_generators(const Triring& ring, const Triideal& ideal);

std::string export_topology(const Trispectrum& spec, TopologyFormat format);
std::string export_topology(const TriringDocument& doc, TopologyFormat format, const Limits& limits = {});

}  // namespace trispec
