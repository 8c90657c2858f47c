// hnzz: barcodes, HN filtrations and affine lifts from the command line.
//
// Exit codes: 0 success, 1 usage/I-O error or failed verification,
// 2 malformed JSON, 3 invariant violation or bad parameters, 4 shape not
// supported by the requested path, 5 oracle guard exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hnzz/affine.hpp"
#include "hnzz/error.hpp"
#include "hnzz/generate.hpp"
#include "hnzz/hn.hpp"
#include "hnzz/io.hpp"
#include "hnzz/verify.hpp"
#include "hnzz/zigzag.hpp"

namespace {

using namespace hnzz;

enum Exit : int { ok = 0, usage = 1, malformed = 2, invalid = 3, unsupported = 4, guard = 5 };

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{usage, "cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{usage, "cannot write " + path};
  out << text;
}

StabilityCondition read_weights(const std::string& path, std::size_t vertex_count) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("weights file: ") + e.what());
  }
  const nlohmann::json& w = doc.is_object() && doc.contains("weights") ? doc.at("weights") : doc;
  if (!w.is_array()) throw ParseError("weights file must hold an array or {\"weights\": [...]}");
  StabilityCondition alpha;
  for (const auto& e : w) {
    if (e.is_string())
      alpha.weights.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer())
      alpha.weights.emplace_back(e.get<long>());
    else
      throw ParseError("weights must be integers or \"a/b\" strings");
  }
  if (alpha.weights.size() != vertex_count)
    throw InvalidArgument("weights file has " + std::to_string(alpha.weights.size()) + " entries for " +
                          std::to_string(vertex_count) + " vertices");
  return alpha;
}

Field parse_field_flag(const std::string& text) {
  if (text == "Q" || text == "q") return Field::rational();
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw Failure{invalid, "--field must be Q or a prime, got " + text};
  }
  if (p > 0x7fffffffu || !is_prime_number(p)) throw Failure{invalid, "--field " + text + " is not a prime below 2^31"};
  return Field::prime(static_cast<std::uint32_t>(p));
}

int cmd_barcode(const std::string& input, const std::string& out) {
  Instance inst = parse_instance(read_file(input));
  if (!path_layout(inst.rep.quiver)) throw Failure{unsupported, "barcode needs a type-A path quiver"};
  Report r;
  r.barcode = barcode(inst.rep);
  write_output(out, serialize_report(r));
  return ok;
}

int cmd_hn(const std::string& input, const std::string& stability, bool oracle, const std::string& out) {
  Instance inst = parse_instance(read_file(input));
  const Representation& v = inst.rep;
  if (!is_acyclic(v.quiver)) throw Failure{unsupported, "HN filtrations need an acyclic quiver"};
  const bool euler = stability == "euler";
  const StabilityCondition alpha = euler ? euler_stability(v.quiver) : read_weights(stability, v.quiver.vertex_count());

  std::optional<HNReport> fast;
  std::string why_no_fast;
  if (inst.affine) {
    if (!euler)
      why_no_fast = "the affine fast path supports only the Euler condition";
    else
      fast = v.is_zero() ? HNReport{} : eta_from_lift(*inst.affine, v);
  } else if (is_equioriented_path(v.quiver)) {
    if (!is_antitone(alpha))
      why_no_fast = "the stability condition is not antitone on interval modules";
    else
      fast = hn_from_barcode(barcode(v), v.quiver, alpha);
  } else {
    why_no_fast = "no fast path for this quiver shape (equioriented path or affine instance required)";
  }

  Report r;
  if (oracle) {
    HNReport brute = hn_bruteforce(v, alpha);
    if (fast) r.oracle_agrees = same_steps(*fast, brute);
    r.hn = fast ? *fast : brute;
  } else {
    if (!fast) throw Failure{unsupported, why_no_fast + "; pass --oracle for the brute-force route"};
    r.hn = *fast;
  }
  write_output(out, serialize_report(r));
  return ok;
}

int cmd_lift(const std::string& input, std::optional<std::size_t> window, const std::string& out) {
  Instance inst = parse_instance(read_file(input));
  if (!inst.affine) throw Failure{unsupported, "lift needs an affine instance"};
  const AffineQuiver& aq = *inst.affine;
  LiftWindow w = window ? LiftWindow{*window} : default_window(aq, inst.rep);
  if (w.D % aq.n != 0 || w.D < 2 * aq.n)
    throw Failure{unsupported, "--window " + std::to_string(w.D) + " must be a multiple of n = " +
                                   std::to_string(aq.n) + " and at least 2n"};
  LiftedMultiplicities m;
  try {
    m = lifted_multiplicities(aq, inst.rep, w);
  } catch (const InvalidArgument& e) {
    throw Failure{unsupported, e.what()};
  }
  Report r;
  r.barcode = m.barcode;
  r.window = m.window.D;
  r.d_inf = m.d_inf;
  r.classes = m.classes;
  write_output(out, serialize_report(r));
  return ok;
}

struct GenOptions {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string field = "2";
  std::size_t max_summands = 3;
  std::size_t max_total_dim = 0;
  bool zigzag = false;
  std::string out;
  std::string truth;
};

int cmd_gen(const GenOptions& o) {
  const Field field = parse_field_flag(o.field);
  Rng rng(o.seed);
  std::string instance, truth;
  if (o.kind == "persistence") {
    if (o.n < 1) throw Failure{invalid, "--n must be at least 1"};
    PersistenceParams p;
    p.n = o.n;
    p.field = field;
    p.max_summands = o.max_summands;
    p.max_total_dim = o.max_total_dim;
    p.max_vertex_dim = 0;
    p.zigzag = o.zigzag;
    GeneratedPersistence g = generate_persistence(p, rng);
    instance = serialize_instance({g.rep, std::nullopt});
    truth = serialize_truth(g.truth);
  } else {
    if (o.n < 2) throw Failure{invalid, "--n must be at least 2 for affine instances"};
    AffineParams p;
    p.n = o.n;
    p.field = field;
    p.max_summands = o.max_summands;
    p.max_total_dim = o.max_total_dim;
    GeneratedAffine g = generate_affine(p, rng);
    instance = serialize_instance({g.rep, g.quiver});
    truth = serialize_truth(g.truth);
  }
  write_output(o.out, instance);
  write_output(o.truth.empty() ? o.out + ".truth.json" : o.truth, truth);
  return ok;
}

int cmd_verify(const std::string& theorem, std::size_t cases, std::uint64_t seed) {
  VerifySummary s = theorem == "a" ? verify_theorem_a(cases, seed) : verify_theorem_b(cases, seed);
  std::cout << "theorem " << theorem << ": " << s.passed << "/" << s.cases << " passed, " << (s.cases - s.passed)
            << " failed\n";
  if (s.first_failure) {
    std::cout << "first failure: case " << *s.first_failure << ": " << s.failure_reason << "\n";
    std::cout << s.failure_instance;
    return usage;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zigzag barcodes, Harder-Narasimhan filtrations and affine lifts"};
  app.require_subcommand(1);

  std::string input, out, stability = "euler", theorem;
  bool oracle = false;
  std::optional<std::size_t> window;
  std::size_t cases = 100;
  std::uint64_t seed = 0;
  GenOptions gen;

  auto* barcode_cmd = app.add_subcommand("barcode", "Interval decomposition of a type-A instance");
  barcode_cmd->add_option("input", input, "Instance JSON")->required();
  barcode_cmd->add_option("--out", out, "Report path (default stdout)");

  auto* hn_cmd = app.add_subcommand("hn", "Harder-Narasimhan quotients");
  hn_cmd->add_option("input", input, "Instance JSON")->required();
  hn_cmd->add_option("--stability", stability, "euler, or a JSON file of vertex weights")->capture_default_str();
  hn_cmd->add_flag("--oracle", oracle, "Also run the brute-force oracle over GF(p)");
  hn_cmd->add_option("--out", out, "Report path (default stdout)");

  auto* lift_cmd = app.add_subcommand("lift", "Truncated lift of an affine instance");
  lift_cmd->add_option("input", input, "Affine instance JSON")->required();
  lift_cmd->add_option("--window", window, "Window length D (multiple of n, at least 2n)");
  lift_cmd->add_option("--out", out, "Report path (default stdout)");

  auto* gen_cmd = app.add_subcommand("gen", "Random instance plus ground-truth sidecar");
  gen_cmd->add_option("--kind", gen.kind, "persistence or affine")
      ->required()
      ->check(CLI::IsMember({"persistence", "affine"}));
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--field", gen.field, "Q or a prime p")->capture_default_str();
  gen_cmd->add_option("--max-summands", gen.max_summands, "Upper bound on indecomposable summands")
      ->capture_default_str();
  gen_cmd->add_option("--max-total-dim", gen.max_total_dim, "Skip summands beyond this total dimension (0: none)")
      ->capture_default_str();
  gen_cmd->add_flag("--zigzag", gen.zigzag, "Random edge directions for persistence instances");
  gen_cmd->add_option("--out", gen.out, "Instance path")->required();
  gen_cmd->add_option("--truth", gen.truth, "Ground-truth path (default <out>.truth.json)");

  auto* verify_cmd = app.add_subcommand("verify", "Compare fast paths with the brute-force oracle on random cases");
  verify_cmd->add_option("--theorem", theorem, "a (persistence) or b (affine)")
      ->required()
      ->check(CLI::IsMember({"a", "b"}));
  verify_cmd->add_option("--cases", cases, "Number of cases")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    if (*barcode_cmd) return cmd_barcode(input, out);
    if (*hn_cmd) return cmd_hn(input, stability, oracle, out);
    if (*lift_cmd) return cmd_lift(input, window, out);
    if (*gen_cmd) return cmd_gen(gen);
    if (*verify_cmd) return cmd_verify(theorem, cases, seed);
  } catch (const Failure& f) {
    std::cerr << "hnzz: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    std::cerr << "hnzz: " << e.what() << "\n";
    return malformed;
  } catch (const GuardExceeded& e) {
    std::cerr << "hnzz: guard exceeded: " << e.what() << "\n";
    return guard;
  } catch (const InvalidArgument& e) {
    std::cerr << "hnzz: " << e.what() << "\n";
    return invalid;
  } catch (const InternalError& e) {
    std::cerr << "hnzz: internal invariant violated: " << e.what() << "\n";
    return invalid;
  }
  return usage;
}
