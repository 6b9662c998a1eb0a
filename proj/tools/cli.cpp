#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "trispec/document.hpp"
#include "trispec/error.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/suite.hpp"
#include "trispec/topology_export.hpp"
#include "trispec/triideal.hpp"

namespace trispec::cli {

namespace {

struct Options {
  std::string file;
  std::string even_gens;
  std::string odd_gens;
  std::string suite = "all";
  std::string format;
  std::string output;
  std::size_t max_size = Limits{}.max_size;
  std::size_t max_ideals = Limits{}.max_ideals;
  std::size_t workers = 1;

  Limits limits() const { return {max_size, max_ideals}; }
};

std::vector<Elem> parse_gens(const std::string& text, const char* flag, std::size_t bound) {
  std::vector<Elem> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item(text.data() + start, comma - start);
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw Error(ErrorKind::ParseError, std::string(flag) + ": expected a comma-separated index list",
                  std::string(item));
    if (value >= bound)
      throw Error(ErrorKind::RangeError, std::string(flag) + "[" + std::to_string(out.size()) + "] out of range",
                  std::string(flag) + "[" + std::to_string(out.size()) + "]");
    out.push_back(static_cast<Elem>(value));
    start = comma + 1;
  }
  return out;
}

Triideal ideal_from_flags(const Triring& ring, const Options& o) {
  const auto even = parse_gens(o.even_gens, "--even-gens", ring.even().size());
  const auto odd = parse_gens(o.odd_gens, "--odd-gens", ring.odd().size());
  return make_triideal(ring, even, odd);
}

struct Outcome {
  std::string text;
  int code = 0;
};

Outcome cmd_check(const Options& o) {
  const TriringDocument doc = read_document_file(o.file);
  const Triring r = build_from_document(doc, o.limits());
  std::ostringstream os;
  os << "triring: " << r.name() << "\n";
  os << "even: " << r.even().label() << " (" << r.even().size() << " elements)\n";
  os << "odd: " << r.odd().label() << " (" << r.odd().size() << " elements)\n";
  for (const auto& c : verify_structure_maps(r.even(), r.odd(), r.lambda_map(), r.rho_map()).checks)
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
  for (const auto& c : verify_axioms(r).checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
  os << "valid\n";
  return {os.str(), 0};
}

Outcome cmd_spectrum(const Options& o) {
  const Triring r = build_from_document(read_document_file(o.file), o.limits());
  const Trispectrum spec = trispectrum(r, o.limits());
  std::ostringstream os;
  os << "triring: " << r.name() << "\n";
  os << "triideals: " << spec.triideals().size() << "\n";
  os << "prime triideals: " << spec.points().size() << " (" << spec.even_points().size() << " even, "
     << spec.odd_points().size() << " odd)\n";
  for (std::size_t p = 0; p < spec.points().size(); ++p)
    os << "P" << p << " " << (spec.is_even_point(p) ? "even" : "odd ") << " "
       << format_triideal(spec.points()[p]) << "\n";
  return {os.str(), 0};
}

Outcome cmd_nilradical(const Options& o) {
  const Triring r = build_from_document(read_document_file(o.file), o.limits());
  std::ostringstream os;
  os << "triring: " << r.name() << "\n";
  os << "trinilradical: " << format_triideal(trinilradical(r)) << "\n";
  os << "ordinary nilradical: {";
  const auto nil = ordinary_nilradical(r);
  for (std::size_t i = 0; i < nil.size(); ++i) os << (i ? "," : "") << format_element(r.element(nil[i]));
  os << "}\n";
  return {os.str(), 0};
}

Outcome cmd_radical(const Options& o) {
  const Triring r = build_from_document(read_document_file(o.file), o.limits());
  const Triideal i = ideal_from_flags(r, o);
  std::ostringstream os;
  os << "triideal: " << format_triideal(i) << "\n";
  os << "radical: " << format_triideal(radical(r, i)) << "\n";
  return {os.str(), 0};
}

Outcome cmd_quotient(const Options& o) {
  const Triring r = build_from_document(read_document_file(o.file), o.limits());
  const QuotientTriring q = quotient_triring(r, ideal_from_flags(r, o));
  return {serialize_document(document_from_triring(q.ring)) + "\n", 0};
}

Outcome cmd_verify(const Options& o) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw Error(ErrorKind::ParseError, "unknown suite '" + o.suite + "'", o.suite);
  const SuiteReport report = run_suite(read_document_file(o.file), *suite, {o.limits(), o.workers});
  return {report.to_text(), report.all_passed() ? 0 : 1};
}

Outcome cmd_topology(const Options& o) {
  const auto format = parse_topology_format(o.format);
  if (!format) throw Error(ErrorKind::ParseError, "unknown format '" + o.format + "'", o.format);
  return {export_topology(read_document_file(o.file), *format, o.limits()), 0};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite triring toolkit: triideals, trispectra and their topology", "trispec"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--max-size", o.max_size, "Largest component ring accepted")->check(CLI::PositiveNumber);
  app.add_option("--max-ideals", o.max_ideals, "Largest triideal lattice accepted")->check(CLI::PositiveNumber);
  app.add_option("--workers", o.workers, "Worker threads for verify")->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "Write the result to a file instead of stdout");

  auto with_file = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Triring document")->required();
    return sub;
  };
  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("--even-gens", o.even_gens, "Even generators, e.g. 0,2");
    sub->add_option("--odd-gens", o.odd_gens, "Odd generators, e.g. 1");
  };

  using Command = Outcome (*)(const Options&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  commands.emplace_back(with_file("check", "Validate a triring document"), cmd_check);
  commands.emplace_back(with_file("spectrum", "List the prime triideals"), cmd_spectrum);
  commands.emplace_back(with_file("nilradical", "Trinilradical and ordinary nilradical"), cmd_nilradical);
  CLI::App* radical_cmd = with_file("radical", "Radical of a generated triideal");
  add_gens(radical_cmd);
  commands.emplace_back(radical_cmd, cmd_radical);
  CLI::App* quotient_cmd = with_file("quotient", "Quotient by a generated triideal, as a document");
  add_gens(quotient_cmd);
  commands.emplace_back(quotient_cmd, cmd_quotient);
  CLI::App* verify_cmd = with_file("verify", "Run verification suites");
  verify_cmd->add_option("--suite", o.suite, "axioms, ideals, spectrum, nilradical, topology or all");
  commands.emplace_back(verify_cmd, cmd_verify);
  CLI::App* topology_cmd = with_file("topology", "Export the trispectrum topology");
  topology_cmd->add_option("--format", o.format, "dot or json")->required();
  commands.emplace_back(topology_cmd, cmd_topology);

  std::vector<const char*> argv{"trispec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? 0 : exit_code(ErrorKind::ParseError);
  }

  try {
    for (const auto& [sub, command] : commands) {
      if (!sub->parsed()) continue;
      const Outcome result = command(o);
      if (o.output.empty()) {
        out << result.text;
      } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!(file << result.text))
          throw Error(ErrorKind::ParseError, "cannot write " + o.output, o.output);
      }
      return result.code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}

}  // namespace trispec::cli
