#pragma once

// JSON triring documents.
//
//   {"kind":"explicit","name":"z4z2",
//    "even":{"kind":"zn","n":4},"odd":{"kind":"zn","n":2},
//    "lambda":[0,1,0,1],"rho":[0,1,0,1]}
//
//   {"kind":"triquaternion","base":{"kind":"zn","n":3}}
//
// Ring descriptors are {"kind":"zn","n":N}, {"kind":"product","factors":[...]}
// or {"kind":"table","size":K,"add":[[...]],"mul":[[...]],"one":J}. A
// negative entry -k in a mul table, lambda or rho stands for the additive
// inverse of k. "name" is optional; unknown fields are rejected.
// Serialization is canonical: sorted keys, no insignificant whitespace.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trispec/commring.hpp"
#include "trispec/triring.hpp"

namespace trispec {

struct TriringDocument {
  enum class Kind { explicit_maps, triquaternion };

  Kind kind = Kind::explicit_maps;
  std::optional<std::string> name;
  RingDescriptor even;
  RingDescriptor odd;
  std::vector<std::int64_t> lambda;
  std::vector<std::int64_t> rho;
  RingDescriptor base;  // triquaternion only

  friend bool operator==(const TriringDocument&, const TriringDocument&) = default;
};

/// Throws ParseError (line/column in the message), SchemaError (field in the
/// witness) or RangeError (field[index] in the witness).
TriringDocument parse_document(std::string_view text);
std::string serialize_document(const TriringDocument& doc);

TriringDocument read_document_file(const std::string& path);

/// Builds and fully validates the triring a document describes.
Triring build_from_document(const TriringDocument& doc, const Limits& limits = {});

/// Explicit-table document for an existing triring (used to print quotients).
TriringDocument document_from_triring(const Triring& ring);

/// The unvalidated candidate behind an explicit document: component rings
/// are built, structure maps are resolved and range-checked, nothing else.
struct DocumentParts {
  FiniteCommRing even;
  FiniteCommRing odd;
  std::vector<Elem> lambda;
  std::vector<Elem> rho;
};
DocumentParts resolve_parts(const TriringDocument& doc, const Limits& limits = {});

}  // namespace trispec
