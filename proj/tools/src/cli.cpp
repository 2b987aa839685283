#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "toric/bratteli.hpp"
#include "toric/errors.hpp"
#include "toric/json_io.hpp"
#include "toric/representation.hpp"

namespace toric {

namespace {

struct Config {
  std::string theta;
  std::string input;
  std::size_t depth = 0;
  bool has_depth = false;
  std::string mode = "algebraic";
  std::string format = "json";
  unsigned jobs = 1;
  std::size_t max_preperiod = 8;
  std::size_t max_period = 8;
  std::vector<std::string> compare;
  bool stationary = false;
  long genus = 0;
};

/// Error raised for malformed JSON text, carrying the byte offset.
struct SyntaxError {
  std::string message;
  std::size_t position;
};

int exit_code_for(ErrorKind kind) {
  if (is_indeterminate(kind)) return kExitIndeterminate;
  if (kind == ErrorKind::kNoCommonTail) return kExitNoCommonTail;
  return kExitInvalid;
}

Json error_json(std::string_view kind, const std::string& message, std::optional<std::size_t> position = {}) {
  Json e{{"kind", std::string(kind)}, {"message", message}};
  if (position) e["position"] = *position;
  return Json{{"error", e}};
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SyntaxError{e.what(), e.byte};
  }
}

/// Inline JSON, or the contents of a file when `arg` names one.
Json load_argument(const std::string& arg) {
  std::error_code ec;
  if (arg == "-" || std::filesystem::is_regular_file(arg, ec)) return parse_text(read_file(arg));
  return parse_text(arg);
}

Json load_input(const Config& cfg) {
  if (!cfg.theta.empty()) return parse_text(cfg.theta);
  if (!cfg.input.empty()) return parse_text(read_file(cfg.input));
  throw Error(ErrorKind::kInvalidArgument, "one of --theta or --input is required");
}

ScalarReader reader_for(const Config& cfg) {
  ScalarReader::Options o;
  if (cfg.mode == "rational") {
    o.allow_algebraic = false;
    o.allow_interval = false;
  } else if (cfg.mode == "algebraic") {
    o.allow_interval = false;
  } else {
    o.decimals_as_intervals = true;
  }
  return ScalarReader(o);
}

bool is_tagged_scalar(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string()) return false;
  const auto& tag = j[0].get_ref<const std::string&>();
  return tag == "rat" || tag == "alg" || tag == "ivl";
}

bool is_batch(const Json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_array() && !is_tagged_scalar(e); });
}

ScalarVector theta_of(const Json& j, ScalarReader& reader) {
  if (j.is_object()) {
    if (!j.contains("theta")) throw Error(ErrorKind::kParseError, "object input needs a \"theta\" key at /");
    return reader.vector(j["theta"], "/theta");
  }
  return reader.vector(j);
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string blocks_text(const std::vector<DigitVector>& blocks) {
  std::string s;
  for (const auto& b : blocks) s += (s.empty() ? "" : " ") + to_string(b);
  return s;
}

std::string expansion_text(const JpaExpansion& e) {
  std::ostringstream os;
  os << "rank " << e.rank() << ", " << tail_kind_name(e.tail()) << " after " << e.depth() << " blocks\n";
  os << blocks_text(e.blocks()) << "\n";
  if (e.tail() == TailKind::kPeriodic) {
    os << "preperiod " << e.preperiod() << ", period " << blocks_text(e.period()) << "\n";
  }
  return os.str();
}

JpaExpansion expand_vector(const ScalarVector& theta, const Config& cfg, std::size_t default_depth) {
  const std::size_t depth = cfg.has_depth ? cfg.depth : default_depth;
  return expand_with_period(theta, depth, cfg.max_preperiod, cfg.max_period);
}

/// Expansion JSON as is, or a theta vector to expand.
JpaExpansion expansion_of(const Json& j, ScalarReader& reader, const Config& cfg) {
  if (j.is_object() && j.contains("blocks")) return expansion_from_json(j, reader);
  return expand_vector(theta_of(j, reader), cfg, 32);
}

// ---------------------------------------------------------------------------

int cmd_expand(const Config& cfg, std::ostream& out, std::ostream& err) {
  Json input = load_input(cfg);
  ScalarReader reader = reader_for(cfg);
  if (!is_batch(input)) {
    JpaExpansion e = expand_vector(theta_of(input, reader), cfg, 32);
    out << (cfg.format == "text" ? expansion_text(e) : dump(expansion_to_json(e)));
    return kExitOk;
  }
  std::vector<ScalarVector> items;
  for (std::size_t i = 0; i < input.size(); ++i) items.push_back(reader.vector(input[i], "/" + std::to_string(i)));
  std::vector<std::string> results(items.size());
  std::vector<int> codes(items.size(), kExitOk);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        JpaExpansion e = expand_vector(items[i], cfg, 32);
        results[i] = cfg.format == "text" ? expansion_text(e) : expansion_to_json(e).dump();
      } catch (const Error& e) {
        codes[i] = exit_code_for(e.kind());
        results[i] = error_json(error_kind_name(e.kind()), e.what()).dump();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kExitOk;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (codes[i] != kExitOk) {
      err << results[i] << "\n";
      if (code == kExitOk) code = codes[i];
    }
  }
  if (cfg.format == "text") {
    for (const auto& r : results) out << r;
  } else {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(Json::parse(r));
    out << dump(arr);
  }
  return code;
}

int cmd_bratteli(const Config& cfg, std::ostream& out) {
  ScalarReader reader = reader_for(cfg);
  if (!cfg.compare.empty()) {
    JpaExpansion a = expansion_of(load_argument(cfg.compare[0]), reader, cfg);
    JpaExpansion b = expansion_of(load_argument(cfg.compare[1]), reader, cfg);
    TailDecision d = tail_equivalent(a, b, cfg.has_depth ? cfg.depth : 64);
    if (cfg.format == "json") {
      out << dump(tail_decision_to_json(d));
    } else if (d.verdict == TailVerdict::kEquivalent) {
      out << "equivalent, offsets " << d.p << "/" << d.q << "\n";
    } else if (d.verdict == TailVerdict::kNotEquivalent) {
      out << "not equivalent\n";
    } else {
      out << "inconclusive at depth " << d.depth << (d.has_offsets ? ", witness offsets " : "");
      if (d.has_offsets) out << d.p << "/" << d.q;
      out << "\n";
    }
    return kExitOk;
  }
  Json input = load_input(cfg);
  std::optional<BratteliDiagram> diag;
  if (input.is_object() && input.contains("diagram") && !cfg.has_depth) {
    diag = diagram_from_json(input, reader);
  } else if (input.is_object() && input.contains("blocks")) {
    JpaExpansion e = expansion_from_json(input, reader);
    diag = build_diagram(e, cfg.has_depth ? std::optional<std::size_t>(cfg.depth) : std::nullopt);
  } else {
    JpaExpansion e = expand_vector(theta_of(input, reader), cfg, 8);
    diag = build_diagram(e, std::min(cfg.has_depth ? cfg.depth : 8, e.available_depth()));
  }
  if (cfg.format == "dot") {
    out << export_dot(*diag);
  } else if (cfg.format == "text") {
    out << "rank " << diag->rank() << ", " << diag->depth() << " digit levels, "
        << tail_kind_name(diag->tail()) << "\n";
    for (const auto& d : dimension_vectors(*diag, diag->depth() + (diag->depth() > 0 ? 1 : 0))) {
      out << "(";
      for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i].get_str();
      out << ")\n";
    }
  } else {
    Json j = diagram_to_json(*diag);
    if (cfg.stationary) j["stationarity"] = stationarity_to_json(is_stationary(diag->source(), cfg.max_preperiod, cfg.max_period));
    out << dump(j);
  }
  return kExitOk;
}

int cmd_represent(const Config& cfg, std::ostream& out) {
  Json input = load_input(cfg);
  ScalarReader reader = reader_for(cfg);
  GroupActionInput g;
  if (input.is_object() && input.contains("blocks")) {
    if (!input.contains("theta")) throw Error(ErrorKind::kParseError, "expansion input needs \"theta\" at /");
    g.theta = reader.vector(input["theta"], "/theta");
  } else {
    g = group_action_from_json(input, reader);
  }
  TailOptions options;
  if (cfg.has_depth) options.expansion_depth = cfg.depth;
  options.max_preperiod = cfg.max_preperiod;
  options.max_period = cfg.max_period;
  Representation rep = build_representation(g.theta, g.generators, options);
  rep.report = verify(rep, g.relations, cfg.max_preperiod, cfg.max_period);
  if (cfg.format == "text") {
    out << "rank " << rep.rank << ", tail " << certification_name(rep.alignment.level) << ", base offset "
        << rep.base_offset << "\n";
    for (const auto& gen : rep.generators) out << gen.name << " = " << gen.a << "\n";
    for (const auto& f : rep.report.findings) out << "- " << f << "\n";
  } else {
    out << dump(representation_to_json(rep));
  }
  return kExitOk;
}

int cmd_genus(const Config& cfg, std::ostream& out) {
  const long n = genus_rank(cfg.genus);
  if (cfg.format == "text") {
    out << n << "\n";
  } else {
    out << dump(Json{{"genus", cfg.genus}, {"rank", n}});
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Jacobi-Perron expansions, Bratteli diagrams and integer representations", "toricaf"};
  app.require_subcommand(1);
  const std::vector<std::string> modes{"rational", "algebraic", "interval"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--theta", cfg.theta, "input as inline JSON");
    sub->add_option("--input", cfg.input, "input JSON file ('-' for stdin)");
    sub->add_option("--mode", cfg.mode, "arithmetic mode")->check(CLI::IsMember(modes));
    sub->add_option("--budget-preperiod", cfg.max_preperiod, "preperiod budget for period detection");
    sub->add_option("--budget-period", cfg.max_period, "period budget for period detection");
    sub->add_option("--depth", cfg.depth, "depth budget")->check(CLI::NonNegativeNumber);
  };

  CLI::App* expand = app.add_subcommand("expand", "Jacobi-Perron expansion of a vector");
  add_common(expand);
  expand->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  expand->add_option("--jobs", cfg.jobs, "worker threads for batch input")->check(CLI::PositiveNumber);

  CLI::App* bratteli = app.add_subcommand("bratteli", "Bratteli diagram of an expansion");
  add_common(bratteli);
  bratteli->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot", "text"}));
  bratteli->add_option("--compare", cfg.compare, "decide tail equivalence of two expansions")->expected(2);
  bratteli->add_flag("--stationary", cfg.stationary, "include the stationarity report");

  CLI::App* represent = app.add_subcommand("represent", "integer representation of a group action");
  add_common(represent);
  represent->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* genus = app.add_subcommand("genus", "rank of the pseudo-lattice for a genus");
  genus->add_option("genus", cfg.genus, "genus g")->required();
  genus->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("UsageError", e.what()).dump() << "\n";
    return kExitInvalid;
  }

  for (CLI::App* sub : {expand, bratteli, represent}) {
    if (sub->parsed() && sub->count("--depth") > 0) cfg.has_depth = true;
  }

  try {
    if (expand->parsed()) return cmd_expand(cfg, out, err);
    if (bratteli->parsed()) return cmd_bratteli(cfg, out);
    if (represent->parsed()) return cmd_represent(cfg, out);
    return cmd_genus(cfg, out);
  } catch (const SyntaxError& e) {
    err << error_json("ParseError", e.message, e.position).dump() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << error_json(error_kind_name(e.kind()), e.what()).dump() << "\n";
    return exit_code_for(e.kind());
  } catch (const Json::exception& e) {
    err << error_json("ParseError", e.what()).dump() << "\n";
    return kExitInvalid;
  }
}

}  // namespace toric
