// ucg: unitary Cayley graphs of finite rings from the command line.
//
// Exit codes: 0 perfect / no hole / pass, 1 not perfect / hole found / fail,
// 2 input error, 3 size cap, 4 classifier-oracle disagreement, 5 time budget.

#include "ucg/classify.hpp"
#include "ucg/graph.hpp"
#include "ucg/holes.hpp"
#include "ucg/ring.hpp"
#include "ucg/selftest.hpp"
#include "ucg/text.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

enum Exit : int
{
  ok = 0,
  negative = 1,
  input_error = 2,
  size_cap = 3,
  disagreement = 4,
  budget = 5,
};

struct Limits
{
  std::uint64_t max_ring_size = ucg::default_max_ring_size;
  std::size_t oracle_cap = ucg::default_oracle_cap;
  double time_budget = 0.0; // seconds; 0 = none
};

auto budget_of(const Limits& l) -> std::optional<ucg::Clock::duration>
{
  if (l.time_budget <= 0)
    return std::nullopt;
  return std::chrono::duration_cast<ucg::Clock::duration>(std::chrono::duration<double>(l.time_budget));
}

auto read_file(const std::string& path) -> std::string
{
  std::ifstream in(path);
  if (!in)
    throw ucg::InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

auto describe_vertex(const ucg::Graph& g, std::size_t v) -> std::string
{
  auto s = std::to_string(v);
  if (g.has_labels())
    s += " = " + ucg::render(g.labels()[v]);
  return s;
}

auto print_hole_report(std::ostream& os, const std::string& where, const ucg::Graph& g, const ucg::HoleReport& r)
  -> void
{
  if (r.found()) {
    const auto& h = r.hole();
    os << where << ": odd hole of length " << h.vertices.size() << "\n";
    for (auto v : h.vertices)
      os << "  " << describe_vertex(g, v) << "\n";
  } else {
    os << where << ": no odd hole up to length " << r.none().max_length
       << (r.none().exhaustive ? " (exhaustive)" : " (not exhaustive)") << "\n";
  }
}

auto cmd_build(const std::string& spec_text, const std::string& format, const std::string& out_path,
               const Limits& lim) -> int
{
  const auto spec = ucg::parse_ring_spec(spec_text);
  const auto g = ucg::build_unitary_cayley(spec, lim.max_ring_size);
  std::ostringstream summary;
  summary << "ring: " << ucg::render(spec) << "\nvertices: " << g.order() << "\nedges: " << g.edge_count()
          << "\ndegree: " << ucg::unit_count(spec) << " (" << ucg::unit_count(spec) << "-regular)\n";
  const bool emit = !format.empty() || !out_path.empty();
  if (!emit) {
    std::cout << summary.str();
    return ok;
  }
  const auto text = ucg::export_graph(g, ucg::parse_graph_format(format.empty() ? "edgelist" : format));
  if (out_path.empty()) {
    std::cout << text;
    std::cerr << summary.str();
  } else {
    std::ofstream out(out_path);
    if (!out)
      throw ucg::InvalidArgument("cannot write " + out_path);
    out << text;
    std::cout << summary.str();
  }
  return ok;
}

auto cmd_classify(const std::string& spec_text, bool verify_oracle, bool emit_witness, const Limits& lim) -> int
{
  const auto spec = ucg::parse_ring_spec(spec_text);
  const auto ss = ucg::semisimplify(spec);
  const auto verdict = ucg::classify(ss);
  std::cout << "ring: " << ucg::render(spec) << "\n"
            << "semisimple: " << ucg::render(ss) << "\n"
            << "radical size: " << ss.radical_size << "\n"
            << "verdict: " << (verdict.perfect ? "Perfect" : "NotPerfect") << "\n"
            << "reason: " << ucg::reason_name(verdict.reason);
  if (verdict.witness)
    std::cout << " (" << ucg::family_name(verdict.witness->family) << ")";
  std::cout << "\n";
  if (emit_witness && verdict.witness)
    std::cout << ucg::render_witness(*verdict.witness);

  if (verify_oracle) {
    if (spec.size() > lim.oracle_cap && !budget_of(lim)) {
      std::cerr << "error: oracle needs at most " << lim.oracle_cap << " vertices (ring has " << spec.size()
                << "); pass --time-budget to try anyway\n";
      return size_cap;
    }
    const auto g = ucg::build_unitary_cayley(spec, lim.max_ring_size);
    const auto oracle = ucg::is_perfect_oracle(g, {lim.oracle_cap, budget_of(lim)});
    if (oracle.answer == ucg::OracleAnswer::unknown) {
      std::cout << "oracle: unknown (time budget exhausted)\n";
      return budget;
    }
    const bool oracle_perfect = oracle.answer == ucg::OracleAnswer::perfect;
    std::cout << "oracle: " << (oracle_perfect ? "Perfect" : "NotPerfect");
    if (oracle_perfect != verdict.perfect) {
      std::cout << "\n";
      std::cerr << "error: classifier and oracle DISAGREE on " << ucg::render(spec) << "\n";
      return disagreement;
    }
    std::cout << " (agrees)\n";
    if (oracle.certificate.found())
      print_hole_report(std::cout, oracle.certificate.hole().in_complement ? "complement" : "graph", g,
                        oracle.certificate);
  }
  return verdict.perfect ? ok : negative;
}

auto cmd_holes(const std::string& input, std::size_t max_length, bool exhaustive, bool complement_only,
               const Limits& lim) -> int
{
  ucg::Graph g;
  if (std::filesystem::is_regular_file(input))
    g = ucg::parse_edgelist(read_file(input));
  else
    g = ucg::build_unitary_cayley(ucg::parse_ring_spec(input), lim.max_ring_size);

  std::size_t bound = ucg::exhaustive_bound(g);
  if (!exhaustive && max_length != 0) {
    if (max_length < 5 || max_length % 2 == 0)
      throw ucg::InvalidArgument("--max-length must be odd and at least 5");
    bound = max_length;
  }
  ucg::SearchOptions opts;
  if (const auto b = budget_of(lim))
    opts.deadline = ucg::Clock::now() + *b;

  std::cout << "vertices: " << g.order() << ", edges: " << g.edge_count() << "\n";
  bool found = false;
  if (!complement_only) {
    const auto r = ucg::find_odd_hole(g, bound, opts);
    print_hole_report(std::cout, "graph", g, r);
    found = r.found();
  }
  const auto co = ucg::complement(g);
  const auto rc = ucg::find_odd_hole(co, bound, opts);
  print_hole_report(std::cout, "complement", co, rc);
  found = found || rc.found();
  return found ? negative : ok;
}

auto cmd_verify(const std::string& spec_text, const std::string& witness_path) -> int
{
  const auto spec = ucg::parse_ring_spec(spec_text);
  const auto elems = ucg::parse_element_list(read_file(witness_path), spec);
  if (elems.size() != 5)
    throw ucg::ShapeMismatch("a witness has 5 elements, the file has " + std::to_string(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    std::cout << "r" << i + 1 << " = " << ucg::render(elems[i]) << "\n";
  for (const auto& c : ucg::difference_checks(spec, elems))
    std::cout << "r" << c.i + 1 << " - r" << c.j + 1 << ": " << (c.unit ? "unit" : "non-unit") << ", expected "
              << (c.expected_unit ? "unit" : "non-unit") << (c.ok() ? "" : "  MISMATCH") << "\n";
  const bool pass = ucg::verify_witness(spec, elems);
  std::cout << (pass ? "PASS: induced 5-cycle" : "FAIL: not an induced 5-cycle") << "\n";
  return pass ? ok : negative;
}

auto cmd_selftest(const Limits& lim, bool inject_fault, bool quiet) -> int
{
  ucg::selftest::Options opt;
  opt.max_ring_size = lim.max_ring_size;
  opt.oracle_cap = lim.oracle_cap;
  opt.time_budget = budget_of(lim);
  opt.inject_fault = inject_fault;
  if (!quiet) {
    opt.table = &std::cout;
    std::cout << "  ring                              classifier   oracle\n";
  }
  const auto results = ucg::selftest::run_all(opt);
  bool all = true;
  for (const auto& r : results) {
    std::cout << ucg::selftest::format_result(r) << "\n";
    all = all && r.passed;
  }
  if (!all)
    for (const auto& r : results)
      if (!r.passed) {
        std::cerr << "first failure: criterion " << r.id << ": " << r.detail << "\n";
        break;
      }
  return all ? ok : negative;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Unitary Cayley graphs of finite rings: construction, perfectness, odd holes"};
  app.require_subcommand(1);
  app.fallthrough();

  Limits lim;
  app.add_option("--max-ring-size", lim.max_ring_size, "Largest ring materialized as a graph")
    ->envname("UCG_MAX_RING_SIZE");
  app.add_option("--oracle-cap", lim.oracle_cap, "Largest graph given to the brute-force oracle")
    ->envname("UCG_ORACLE_CAP");
  app.add_option("--time-budget", lim.time_budget, "Wall-clock budget in seconds for exhaustive searches")
    ->envname("UCG_TIME_BUDGET");

  std::string spec_text, format, out_path, input, witness_path;
  bool verify_oracle = false, emit_witness = false, exhaustive = false, complement_only = false;
  bool inject_fault = false, quiet = false;
  std::size_t max_length = 0;

  auto* build = app.add_subcommand("build", "Build G_R and report or export it");
  build->add_option("spec", spec_text, "Ring, e.g. \"M(2,GF(2)) x GF(3)\"")->required();
  build->add_option("--format", format, "edgelist or dot")->check(CLI::IsMember({"edgelist", "dot"}));
  build->add_option("--out", out_path, "Write the graph here instead of stdout");

  auto* classify = app.add_subcommand("classify", "Decide whether G_R is perfect");
  classify->add_option("spec", spec_text, "Ring")->required();
  classify->add_flag("--verify-oracle", verify_oracle, "Cross-check with the brute-force oracle");
  classify->add_flag("--emit-witness", emit_witness, "Print the certified induced 5-cycle");

  auto* holes = app.add_subcommand("holes", "Search for odd holes in G_R or an edgelist file");
  holes->add_option("input", input, "Ring spec or edgelist file")->required();
  holes->add_option("--max-length", max_length, "Longest odd hole length to search (default: exhaustive)");
  holes->add_flag("--exhaustive", exhaustive, "Search every odd length up to the vertex count");
  holes->add_flag("--complement", complement_only, "Search only the complement graph");

  auto* verify = app.add_subcommand("verify", "Check a witness file against a ring");
  verify->add_option("spec", spec_text, "Ring")->required();
  verify->add_option("witness", witness_path, "Witness file: one element per line, '#' comments")
    ->required()
    ->check(CLI::ExistingFile);

  auto* selftest = app.add_subcommand("selftest", "Run the full agreement and invariant corpus");
  selftest->add_flag("--inject-fault", inject_fault, "Flip one classifier verdict (negative control)");
  selftest->add_flag("--quiet", quiet, "Only print the per-criterion lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*build)
      return cmd_build(spec_text, format, out_path, lim);
    if (*classify)
      return cmd_classify(spec_text, verify_oracle, emit_witness, lim);
    if (*holes)
      return cmd_holes(input, max_length, exhaustive, complement_only, lim);
    if (*verify)
      return cmd_verify(spec_text, witness_path);
    if (*selftest)
      return cmd_selftest(lim, inject_fault, quiet);
  } catch (const ucg::SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return size_cap;
  } catch (const ucg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return budget;
  } catch (const ucg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}
