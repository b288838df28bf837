// Batch command-line front end: a JSON problem document in, a JSON result out.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropelim/eliminate.hpp"
#include "tropelim/implicit.hpp"
#include "tropelim/io.hpp"
#include "tropelim/newton.hpp"
#include "tropelim/svg.hpp"
#include "tropelim/tropical.hpp"

namespace tropelim::cli {

inline constexpr int kOk = 0;
inline constexpr int kSchemaError = 2;
inline constexpr int kMathError = 3;
inline constexpr int kGenericityError = 4;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"tropicalize-ci", "tropicalize-hypersurface", "pushforward", "implicitize",
                                              "newton",         "mixed-fiber",              "fiber",       "check-balance"};
  return names;
}

struct Options {
  std::string command;
  std::string input;
  std::string output;
  std::string svg;
  std::optional<std::string> delta;
  std::optional<std::uint64_t> seed;
  bool via_graph = false;
  bool drop_collapsed = false;
};

namespace detail {

using io::Json;
using io::SchemaError;

// Either a value to report or a figure failure carried to the caller.
struct Outcome {
  Json body = Json::object();
  std::optional<TropicalCycle> cycle;
  std::optional<RationalPolytope> polytope;
};

class Failure {
 public:
  Failure(int code, std::string kind, std::string message, Json extra = Json::object())
      : code(code), kind(std::move(kind)), message(std::move(message)), extra(std::move(extra)) {}
  int code;
  std::string kind;
  std::string message;
  Json extra;
};

inline const Json& require(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string("the document lacks the field \"") + key + "\"");
  return *it;
}

inline std::vector<LatticePolytope> polytopes_from(const Json& doc) {
  const Json& arr = require(doc, "polytopes");
  if (!arr.is_array()) throw SchemaError("\"polytopes\" must be an array");
  std::vector<LatticePolytope> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(io::polytope_from_json(arr[i], "polytopes[" + std::to_string(i) + "]"));
  return out;
}

inline Integer resolve_delta(const Options& opt, const Json& doc) {
  if (opt.delta) {
    Json text = *opt.delta;
    return io::integer_from_json(text, "--delta");
  }
  if (doc.contains("delta")) return io::integer_from_json(doc["delta"], "delta");
  return 1;
}

inline std::uint64_t resolve_seed(const Options& opt, const Json& doc) {
  if (opt.seed) return *opt.seed;
  if (doc.contains("seed")) {
    Integer s = io::integer_from_json(doc["seed"], "seed");
    if (s < 0 || s > std::numeric_limits<std::uint64_t>::max()) throw SchemaError("seed must fit in 64 unsigned bits");
    return static_cast<std::uint64_t>(s);
  }
  if (const char* env = std::getenv("TROPELIM_SEED"); env && *env) {
    std::string s(env);
    if (!io::detail::is_integer_text(s) || s[0] == '-') throw SchemaError("TROPELIM_SEED must be a nonnegative integer");
    return std::stoull(s);
  }
  return 0;
}

inline Json balance_failure(const BalanceReport& rep) {
  Json extra;
  extra["face"] = io::cone_rays_json(*rep.face);
  extra["residual"] = io::to_json(*rep.residual);
  return extra;
}

inline void require_balanced(const TropicalCycle& t) {
  auto rep = balance_report(t);
  if (!rep.balanced)
    throw Failure(kMathError, std::string(to_string(ErrorKind::NotBalanced)),
                  "the cycle fails the balancing condition at the reported face", balance_failure(rep));
}

inline Outcome execute(const Options& opt, const Json& doc) {
  Outcome r;
  const std::string& cmd = opt.command;
  const std::uint64_t seed = resolve_seed(opt, doc);
  if (cmd == "tropicalize-ci") {
    auto ps = polytopes_from(doc);
    std::size_t n = 0;
    if (doc.contains("dim")) n = io::size_from_json(doc["dim"], "dim");
    else if (!ps.empty()) n = ps.front().ambient_rank();
    else throw SchemaError("give \"dim\" when there are no polytopes");
    r.cycle = tropical_ci({n, ps});
  } else if (cmd == "tropicalize-hypersurface") {
    r.cycle = tropical_hypersurface(io::polytope_from_json(require(doc, "polytope")));
  } else if (cmd == "pushforward") {
    auto t = io::cycle_from_json(require(doc, "cycle"));
    MonomialMap map(io::matrix_from_json(require(doc, "matrix")), resolve_delta(opt, doc));
    r.cycle = pushforward(t, map, {seed, opt.drop_collapsed});
  } else if (cmd == "implicitize") {
    ParametrizationInput in;
    in.polytopes = polytopes_from(doc);
    if (in.polytopes.empty()) throw SchemaError("\"polytopes\" is empty");
    in.source_rank = doc.contains("source_rank") ? io::size_from_json(doc["source_rank"], "source_rank")
                                                 : in.polytopes.front().ambient_rank();
    in.target_rank = in.polytopes.size();
    in.degree = resolve_delta(opt, doc);
    r.cycle = opt.via_graph ? graph_implicitization(in, seed) : tropical_implicitization(in, seed);
  } else if (cmd == "newton") {
    auto t = io::cycle_from_json(require(doc, "cycle"));
    require_balanced(t);
    r.polytope = RationalPolytope::from(reconstruct_polytope(t, seed));
  } else if (cmd == "mixed-fiber") {
    auto ps = polytopes_from(doc);
    MonomialMap map(io::matrix_from_json(require(doc, "matrix")), resolve_delta(opt, doc));
    r.polytope = RationalPolytope::from(mixed_fiber_polytope(ps, map, seed));
  } else if (cmd == "fiber") {
    auto p = io::polytope_from_json(require(doc, "polytope"));
    std::size_t c = io::size_from_json(require(doc, "c"), "c");
    MonomialMap map(io::matrix_from_json(require(doc, "matrix")), resolve_delta(opt, doc));
    r.polytope = fiber_polytope(p, map, c, seed);
  } else if (cmd == "check-balance") {
    auto t = io::cycle_from_json(require(doc, "cycle"));
    require_balanced(t);
    r.body["balanced"] = true;
    r.cycle = t;
  }
  if (r.cycle && cmd != "check-balance") r.body["cycle"] = io::to_json(*r.cycle);
  if (r.polytope) r.body["polytope"] = io::to_json(*r.polytope);
  return r;
}

inline void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.output, std::ios::binary);
  if (!f) throw SchemaError("cannot open " + opt.output + " for writing");
  f << text;
}

inline Json document_head(const std::string& command) {
  Json j;
  j["version"] = "1";
  j["command"] = command;
  return j;
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using detail::Json;
  Options opt;
  CLI::App app{"Exact tropical elimination: tropicalization, push-forward, implicitization, Newton polytopes",
               "tropelim"};
  app.add_option("command", opt.command, "Command to run")->required()->check(CLI::IsMember(commands()));
  app.add_option("--input", opt.input, "Problem document (default: standard input)");
  app.add_option("--output", opt.output, "Result document (default: standard output)");
  app.add_option("--delta", opt.delta, "Degree of the map onto its image (default 1)");
  app.add_option("--seed", opt.seed, "Seed for generic points (default: TROPELIM_SEED or 0)");
  app.add_option("--svg", opt.svg, "Also draw a planar result as SVG");
  app.add_flag("--via-graph", opt.via_graph, "implicitize: go through the graph complete intersection");
  app.add_flag("--drop-collapsed", opt.drop_collapsed, "pushforward: skip cells whose image loses dimension");

  std::vector<std::string> argv_store{"tropelim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSchemaError;
  }

  auto fail_with = [&](const detail::Failure& f) {
    Json doc = detail::document_head(opt.command);
    Json e;
    e["kind"] = f.kind;
    e["message"] = f.message;
    for (auto it = f.extra.begin(); it != f.extra.end(); ++it) e[it.key()] = it.value();
    doc["error"] = e;
    err << "tropelim " << opt.command << ": " << f.kind << ": " << f.message << "\n";
    try {
      detail::emit(opt, doc.dump(2) + "\n", out);
    } catch (const std::exception&) {
    }
    return f.code;
  };

  try {
    Json doc;
    try {
      if (opt.input.empty()) {
        doc = Json::parse(in);
      } else {
        std::ifstream f(opt.input, std::ios::binary);
        if (!f) throw io::SchemaError("cannot open " + opt.input);
        doc = Json::parse(f);
      }
    } catch (const Json::parse_error& e) {
      throw io::SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw io::SchemaError("the problem document must be an object");
    const Json& version = detail::require(doc, "version");
    if (!version.is_string() || version.get<std::string>() != "1") throw io::SchemaError("\"version\" must be \"1\"");

    detail::Outcome r = detail::execute(opt, doc);

    std::string figure;
    if (!opt.svg.empty()) {
      if (r.polytope && r.polytope->ambient_rank() == 2) figure = svg::polygon(*r.polytope);
      else if (r.cycle && r.cycle->ambient_rank() == 2) figure = svg::planar_fan(*r.cycle);
      else throw detail::Failure(kSchemaError, "SvgUnavailable", "--svg needs a result in the plane");
    }

    Json result = detail::document_head(opt.command);
    for (auto it = r.body.begin(); it != r.body.end(); ++it) result[it.key()] = it.value();
    detail::emit(opt, result.dump(2) + "\n", out);
    if (!figure.empty()) {
      std::ofstream f(opt.svg, std::ios::binary);
      if (!f) throw io::SchemaError("cannot open " + opt.svg + " for writing");
      f << figure;
    }
    return kOk;
  } catch (const detail::Failure& f) {
    return fail_with(f);
  } catch (const io::SchemaError& e) {
    return fail_with({kSchemaError, "SchemaError", e.what()});
  } catch (const Error& e) {
    int code = e.kind() == ErrorKind::GenericityFailure ? kGenericityError : kMathError;
    std::string kind(to_string(e.kind())), message = e.what();
    if (message.rfind(kind + ": ", 0) == 0) message.erase(0, kind.size() + 2);
    return fail_with({code, kind, message});
  }
}

inline int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, in, out, err);
}

}  // namespace tropelim::cli
