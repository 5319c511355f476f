#include "cli.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "CLI11.hpp"
#include "ccodes/bounds.hpp"
#include "ccodes/construct.hpp"
#include "ccodes/error.hpp"
#include "ccodes/io.hpp"
#include "ccodes/verify.hpp"
#include "json.hpp"

namespace ccodes::cli {

namespace {

struct Config {
  std::string graph_path;
  std::string code_path;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> alpha;
  std::vector<Felt> defining_set;
  std::string mode = "systematic-dsys";
  std::optional<std::size_t> k;
  std::size_t max_exact_s = kDefaultExactGuard;
  std::size_t max_subset_s = kDefaultSubsetGuard;
  std::string out_path;
  std::vector<Felt> message;
  std::vector<Felt> received;
  std::vector<std::size_t> erasures;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
};

std::optional<Field> field_override(const Config& c, const ConstraintGraph& g) {
  if (!c.p && !c.m && !c.alpha) return std::nullopt;
  const std::uint32_t m = c.m.value_or(1);
  std::uint32_t p = c.p.value_or(m > 1 ? 2 : 0);
  if (p == 0) p = default_field(g).characteristic();
  return Field::make(p, m, c.alpha);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_bounds(const Config& c, std::ostream& out) {
  const auto g = graph_from_json(read_file(c.graph_path));
  out << bounds_to_json(bounds_report(g, {c.max_subset_s, c.max_exact_s})) << '\n';
  return kOk;
}

int cmd_construct(const Config& c, std::ostream& out, std::ostream& err) {
  const auto g = graph_from_json(read_file(c.graph_path));
  ConstructOptions opts;
  opts.field = field_override(c, g);
  if (!c.defining_set.empty()) opts.defining_set = c.defining_set;
  opts.k = c.k;
  opts.guards = {c.max_subset_s, c.max_exact_s};
  const Mode mode = parse_mode(c.mode);
  if (c.k && mode != Mode::generic) throw InvalidInput("--k applies only to --mode generic");
  const auto spec = construct(g, mode, opts);

  std::ostream& summary = c.out_path.empty() ? err : out;
  summary << "mode " << to_string(spec.mode) << ", GF(" << spec.field.order() << "), alpha " << spec.field.primitive()
          << ", n " << spec.length() << ", k " << spec.k << ", claimed distance " << spec.claimed_distance
          << (spec.distance_exact ? " (exact)" : " (lower bound)");
  if (spec.matching) summary << ", systematic columns " << join(spec.matching->column);
  summary << '\n';
  if (c.out_path.empty())
    out << code_to_json(spec) << '\n';
  else
    write_file(c.out_path, code_to_json(spec));
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const auto spec = code_from_json(read_file(c.code_path));
  const auto g = graph_from_json(read_file(c.graph_path));
  const auto rep = verify_code(spec, g);

  auto j = nlohmann::ordered_json::parse(verify_to_json(rep));
  int status = kOk;
  if (!rep.valid_pattern) {
    err << "generator violates a structural zero of the graph\n";
    status = kMismatch;
  }
  if (spec.distance_exact ? rep.distance.distance != spec.claimed_distance
                          : rep.distance.distance < spec.claimed_distance) {
    err << "claimed distance " << spec.claimed_distance << " disagrees with exhaustive distance "
        << rep.distance.distance << '\n';
    status = kMismatch;
  }

  if (c.trials > 0) {
    // Random messages with up to floor((n-k)/2) random symbol errors.
    const SubcodeDecoder dec(spec);
    const std::size_t t = dec.base().error_radius();
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<Felt> sym(0, spec.field.order() - 1);
    std::uniform_int_distribution<Felt> nonzero(1, spec.field.order() - 1);
    std::size_t failures = 0;
    for (std::size_t trial = 0; trial < c.trials; ++trial) {
      std::vector<Felt> msg(spec.messages());
      for (auto& x : msg) x = sym(rng);
      auto word = subcode_encode(spec, msg);
      std::vector<std::size_t> pos(spec.length());
      std::iota(pos.begin(), pos.end(), 0);
      std::shuffle(pos.begin(), pos.end(), rng);
      const std::size_t weight = std::uniform_int_distribution<std::size_t>(0, t)(rng);
      for (std::size_t e = 0; e < weight; ++e) word[pos[e]] = spec.field.add(word[pos[e]], nonzero(rng));
      try {
        if (dec.decode(word) != msg) ++failures;
      } catch (const DecodeFailure&) {
        ++failures;
      }
    }
    j["roundtrip_trials"] = c.trials;
    j["roundtrip_failures"] = failures;
    if (failures > 0) status = kMismatch;
  }
  out << j.dump(2) << '\n';
  return status;
}

int cmd_encode(const Config& c, std::ostream& out) {
  const auto spec = code_from_json(read_file(c.code_path));
  nlohmann::ordered_json j;
  j["codeword"] = subcode_encode(spec, c.message);
  out << j.dump() << '\n';
  return kOk;
}

int cmd_decode(const Config& c, std::ostream& out) {
  const auto spec = code_from_json(read_file(c.code_path));
  nlohmann::ordered_json j;
  if (spec.systematic() && c.erasures.empty()) {
    auto fast = systematic_fast_read(spec, c.received);
    if (fast.clean) {
      j["message"] = fast.message;
      j["fast_path"] = true;
      out << j.dump() << '\n';
      return kOk;
    }
  }
  const SubcodeDecoder dec(spec);
  const auto msg = dec.decode(c.received, c.erasures);
  const auto cw = subcode_encode(spec, msg);
  std::vector<std::size_t> corrected;
  std::vector<bool> erased(spec.length(), false);
  for (auto e : c.erasures) erased[e] = true;
  for (std::size_t j2 = 0; j2 < spec.length(); ++j2)
    if (!erased[j2] && cw[j2] != c.received[j2]) corrected.push_back(j2);
  j["message"] = msg;
  j["fast_path"] = false;
  j["corrected_positions"] = corrected;
  out << j.dump() << '\n';
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Codes with encoding constraints: bounds, constructions, verification, decoding"};
  app.require_subcommand(1);
  Config c;
  DemoOptions demo;

  auto add_guards = [&](CLI::App* sub) {
    sub->add_option("--max-exact-s", c.max_exact_s, "Largest s for the exact k_sys search")->capture_default_str();
    sub->add_option("--max-subset-s", c.max_subset_s, "Largest s for exhaustive subset enumeration")
        ->capture_default_str();
  };

  auto* bounds = app.add_subcommand("bounds", "Distance bounds for a constraint graph (JSON)");
  bounds->add_option("graph", c.graph_path, "Graph JSON file")->required();
  add_guards(bounds);

  auto* construct_cmd = app.add_subcommand("construct", "Build a valid generator matrix (code JSON)");
  construct_cmd->add_option("graph", c.graph_path, "Graph JSON file")->required();
  construct_cmd->add_option("--mode", c.mode, "generic | systematic-dmin | systematic-dsys | mds-nullspace")
      ->capture_default_str();
  construct_cmd->add_option("--p", c.p, "Field characteristic (default: smallest prime >= n)");
  construct_cmd->add_option("--m", c.m, "Extension degree (characteristic 2 only)");
  construct_cmd->add_option("--alpha", c.alpha, "Primitive element (default: smallest generator)");
  construct_cmd->add_option("--defining-set", c.defining_set, "Comma-separated RS nodes")->delimiter(',');
  construct_cmd->add_option("--k", c.k, "RS dimension for generic mode");
  construct_cmd->add_option("--out", c.out_path, "Write the code here instead of stdout");
  add_guards(construct_cmd);

  auto* verify = app.add_subcommand("verify", "Exhaustively verify a code against its graph (JSON)");
  verify->add_option("code", c.code_path, "Code JSON file")->required();
  verify->add_option("graph", c.graph_path, "Graph JSON file")->required();
  verify->add_option("--trials", c.trials, "Random decode round trips to run");
  verify->add_option("--seed", c.seed, "Seed for --trials")->capture_default_str();

  auto* encode = app.add_subcommand("encode", "Encode a message");
  encode->add_option("code", c.code_path, "Code JSON file")->required();
  encode->add_option("--message", c.message, "Comma-separated message symbols")->delimiter(',')->required();

  auto* decode = app.add_subcommand("decode", "Decode a received word");
  decode->add_option("code", c.code_path, "Code JSON file")->required();
  decode->add_option("--received", c.received, "Comma-separated received symbols")->delimiter(',')->required();
  decode->add_option("--erasures", c.erasures, "Comma-separated erased positions (0-based)")->delimiter(',');

  auto* demo_cmd = app.add_subcommand("demo-paper-example", "Walk through the built-in GF(7) example");
  demo_cmd->add_option("--p", demo.p, "Prime field to build over")->capture_default_str();
  demo_cmd->add_option("--alpha", demo.alpha, "Primitive element");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bounds) return cmd_bounds(c, out);
    if (*construct_cmd) return cmd_construct(c, out, err);
    if (*verify) return cmd_verify(c, out, err);
    if (*encode) return cmd_encode(c, out);
    if (*decode) return cmd_decode(c, out);
    if (*demo_cmd) return run_demo(demo, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const DecodeFailure& e) {
    err << "decoding failed: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace ccodes::cli
