#include "trispec/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "trispec/error.hpp"

namespace trispec {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& reason) {
  throw Error(ErrorKind::SchemaError, field + ": " + reason, field);
}

[[noreturn]] void range_error(const std::string& field, std::size_t index) {
  const std::string where = field + "[" + std::to_string(index) + "]";
  throw Error(ErrorKind::RangeError, where + " out of range", where);
}

void only_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!ok.count(key)) schema_error(path.empty() ? key : path + "." + key, "unknown field");
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    schema_error(path, "integer too large");
  return v.get<std::int64_t>();
}

std::size_t as_size(const json& v, const std::string& path) {
  const auto i = as_int(v, path);
  if (i < 0) schema_error(path, "expected a non-negative integer");
  return static_cast<std::size_t>(i);
}

std::vector<std::int64_t> as_int_list(const json& v, const std::string& path) {
  if (!v.is_array()) schema_error(path, "expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<std::int64_t>> as_matrix(const json& v, const std::string& path, std::size_t n) {
  if (!v.is_array()) schema_error(path, "expected an array of rows");
  if (v.size() != n) schema_error(path, "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t r = 0; r < n; ++r) {
    auto row = as_int_list(v[r], path + "[" + std::to_string(r) + "]");
    if (row.size() != n) schema_error(path + "[" + std::to_string(r) + "]", "expected " + std::to_string(n) + " entries");
    out.push_back(std::move(row));
  }
  return out;
}

RingDescriptor parse_descriptor(const json& v, const std::string& path) {
  if (!v.is_object()) schema_error(path, "expected a ring descriptor object");
  const json& kind = field(v, path, "kind");
  if (!kind.is_string()) schema_error(path + ".kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "zn") {
    only_fields(v, path, {"kind", "n"});
    const auto n = as_size(field(v, path, "n"), path + ".n");
    if (n == 0) schema_error(path + ".n", "must be at least 1");
    return RingDescriptor::zn(n);
  }
  if (k == "product") {
    only_fields(v, path, {"kind", "factors"});
    const json& fs = field(v, path, "factors");
    if (!fs.is_array()) schema_error(path + ".factors", "expected an array");
    std::vector<RingDescriptor> factors;
    for (std::size_t i = 0; i < fs.size(); ++i)
      factors.push_back(parse_descriptor(fs[i], path + ".factors[" + std::to_string(i) + "]"));
    return RingDescriptor::product(std::move(factors));
  }
  if (k == "table") {
    only_fields(v, path, {"kind", "size", "add", "mul", "one"});
    const auto n = as_size(field(v, path, "size"), path + ".size");
    if (n == 0) schema_error(path + ".size", "must be at least 1");
    auto add = as_matrix(field(v, path, "add"), path + ".add", n);
    auto mul = as_matrix(field(v, path, "mul"), path + ".mul", n);
    const auto one = as_int(field(v, path, "one"), path + ".one");
    const auto size = static_cast<std::int64_t>(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (add[r][c] < 0 || add[r][c] >= size) range_error(path + ".add", r * n + c);
        if (mul[r][c] <= -size || mul[r][c] >= size) range_error(path + ".mul", r * n + c);
      }
    if (one < 0 || one >= size) range_error(path + ".one", 0);
    return RingDescriptor::table(n, std::move(add), std::move(mul), one);
  }
  schema_error(path + ".kind", "unknown ring kind '" + k + "'");
}

json descriptor_json(const RingDescriptor& d) {
  switch (d.kind) {
    case RingDescriptor::Kind::zn: return {{"kind", "zn"}, {"n", d.n}};
    case RingDescriptor::Kind::product: {
      json fs = json::array();
      for (const auto& f : d.factors) fs.push_back(descriptor_json(f));
      return {{"kind", "product"}, {"factors", fs}};
    }
    case RingDescriptor::Kind::table:
      return {{"kind", "table"}, {"size", d.size}, {"add", d.add}, {"mul", d.mul}, {"one", d.one}};
  }
  return {};
}

void check_map(const std::vector<std::int64_t>& map, const char* name, std::size_t even_size,
               std::size_t odd_size) {
  if (map.size() != even_size)
    schema_error(name, "length mismatch: expected " + std::to_string(even_size) + ", got " +
                           std::to_string(map.size()));
  const auto bound = static_cast<std::int64_t>(odd_size);
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] <= -bound || map[i] >= bound) range_error(name, i);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

TriringDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string detail = e.what();
    // nlohmann reports "... syntax error while parsing value - <reason>"; keep the reason.
    if (auto at = detail.find(" - "); at != std::string::npos) detail = detail.substr(at + 3);
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail,
                std::to_string(line) + ":" + std::to_string(column));
  }
  if (!root.is_object()) schema_error("document", "expected a JSON object");

  TriringDocument doc;
  const json& kind = field(root, "", "kind");
  if (!kind.is_string()) schema_error("kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) schema_error("name", "expected a string");
    doc.name = it->get<std::string>();
  }
  if (k == "explicit") {
    only_fields(root, "", {"kind", "name", "even", "odd", "lambda", "rho"});
    doc.kind = TriringDocument::Kind::explicit_maps;
    doc.even = parse_descriptor(field(root, "", "even"), "even");
    doc.odd = parse_descriptor(field(root, "", "odd"), "odd");
    doc.lambda = as_int_list(field(root, "", "lambda"), "lambda");
    doc.rho = as_int_list(field(root, "", "rho"), "rho");
    check_map(doc.lambda, "lambda", doc.even.carrier_size(), doc.odd.carrier_size());
    check_map(doc.rho, "rho", doc.even.carrier_size(), doc.odd.carrier_size());
  } else if (k == "triquaternion") {
    only_fields(root, "", {"kind", "name", "base"});
    doc.kind = TriringDocument::Kind::triquaternion;
    doc.base = parse_descriptor(field(root, "", "base"), "base");
  } else {
    schema_error("kind", "unknown document kind '" + k + "'");
  }
  return doc;
}

std::string serialize_document(const TriringDocument& doc) {
  json root;
  if (doc.name) root["name"] = *doc.name;
  if (doc.kind == TriringDocument::Kind::triquaternion) {
    root["kind"] = "triquaternion";
    root["base"] = descriptor_json(doc.base);
  } else {
    root["kind"] = "explicit";
    root["even"] = descriptor_json(doc.even);
    root["odd"] = descriptor_json(doc.odd);
    root["lambda"] = doc.lambda;
    root["rho"] = doc.rho;
  }
  return root.dump();
}

TriringDocument read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path, path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

DocumentParts resolve_parts(const TriringDocument& doc, const Limits& limits) {
  if (doc.kind != TriringDocument::Kind::explicit_maps)
    throw Error(ErrorKind::Precondition, "only explicit documents have separate parts");
  FiniteCommRing even = make_ring(doc.even, limits);
  FiniteCommRing odd = make_ring(doc.odd, limits);
  check_map(doc.lambda, "lambda", even.size(), odd.size());
  check_map(doc.rho, "rho", even.size(), odd.size());
  auto resolve = [&](const std::vector<std::int64_t>& raw) {
    std::vector<Elem> out;
    for (auto v : raw) out.push_back(v < 0 ? odd.neg(static_cast<Elem>(-v)) : static_cast<Elem>(v));
    return out;
  };
  auto lambda = resolve(doc.lambda);
  auto rho = resolve(doc.rho);
  return {std::move(even), std::move(odd), std::move(lambda), std::move(rho)};
}

Triring build_from_document(const TriringDocument& doc, const Limits& limits) {
  if (doc.kind == TriringDocument::Kind::triquaternion) {
    const FiniteCommRing base = make_ring(doc.base, limits);
    Triring q = triquaternions_over(base, limits);
    if (!doc.name) return q;
    return build_triring(q.even(), q.odd(), q.lambda_map(), q.rho_map(), *doc.name);
  }
  DocumentParts parts = resolve_parts(doc, limits);
  return build_triring(std::move(parts.even), std::move(parts.odd), std::move(parts.lambda),
                       std::move(parts.rho), doc.name.value_or(""));
}

namespace {

RingDescriptor table_descriptor(const FiniteCommRing& r) {
  const std::size_t n = r.size();
  std::vector<std::vector<std::int64_t>> add(n, std::vector<std::int64_t>(n)), mul = add;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = r.add(static_cast<Elem>(a), static_cast<Elem>(b));
      mul[a][b] = r.mul(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  return RingDescriptor::table(n, std::move(add), std::move(mul), r.one());
}

}  // namespace

TriringDocument document_from_triring(const Triring& ring) {
  TriringDocument doc;
  doc.kind = TriringDocument::Kind::explicit_maps;
  doc.name = ring.name();
  doc.even = table_descriptor(ring.even());
  doc.odd = table_descriptor(ring.odd());
  doc.lambda.assign(ring.lambda_map().begin(), ring.lambda_map().end());
  doc.rho.assign(ring.rho_map().begin(), ring.rho_map().end());
  return doc;
}

}  // namespace trispec
