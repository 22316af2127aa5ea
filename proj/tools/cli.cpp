#include "cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "gmac/channel.hpp"
#include "gmac/error.hpp"
#include "gmac/io.hpp"
#include "gmac/optimizer.hpp"
#include "gmac/regions.hpp"
#include "gmac/version.hpp"
#include "gmac/wiretap_sim.hpp"

namespace gmac::cli {

using io::Json;
namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorKind::Internal, "SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

VarSet parse_var_list(const std::string& text, const std::string& query) {
  VarSet out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    auto name = trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (name.empty()) fail(ErrorKind::InvalidInput, "empty variable name in query '" + query + "'");
    out.push_back(std::move(name));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

InfoQuery parse_info_query(const std::string& raw) {
  const std::string text = trim(raw);
  auto bad = [&]() -> InfoQuery { fail(ErrorKind::InvalidInput, "malformed query '" + raw + "'; expected I(A;B|C) or H(A|B)"); };
  if (text.size() < 4 || (text[0] != 'I' && text[0] != 'H') || text[1] != '(' || text.back() != ')') return bad();
  const std::string body = text.substr(2, text.size() - 3);
  InfoQuery q;
  q.mutual = text[0] == 'I';
  std::string head = body;
  if (const auto bar = body.find('|'); bar != std::string::npos) {
    head = body.substr(0, bar);
    q.given = parse_var_list(body.substr(bar + 1), raw);
  }
  if (q.mutual) {
    const auto semi = head.find(';');
    if (semi == std::string::npos) return bad();
    q.a = parse_var_list(head.substr(0, semi), raw);
    q.b = parse_var_list(head.substr(semi + 1), raw);
  } else {
    if (head.find(';') != std::string::npos) return bad();
    q.a = parse_var_list(head, raw);
  }
  return q;
}

double evaluate_info_query(const JointPMF& joint, const InfoQuery& q) {
  return q.mutual ? mutual_information(joint, q.a, q.b, q.given) : entropy(joint, q.a, q.given);
}

namespace {

std::string format9(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidInput, "cannot write '" + path.string() + "'");
  f << content;
  if (!f) fail(ErrorKind::InvalidInput, "failed writing '" + path.string() + "'");
}

Json digest_of(const std::optional<std::string>& path) {
  if (!path) return nullptr;
  return "sha256:" + sha256_hex(io::read_file(*path));
}

Json make_manifest(const std::string& command, const std::vector<std::string>& args,
                   const std::optional<std::string>& channel_path, const std::optional<std::string>& config_path,
                   const std::vector<std::uint64_t>& seeds, double seconds, const Json& outputs) {
  return {{"command", command},
          {"arguments", args},
          {"channel_digest", digest_of(channel_path)},
          {"config_digest", digest_of(config_path)},
          {"tool_version", kVersion},
          {"seeds", seeds},
          {"wall_clock_seconds", seconds},
          {"outputs", outputs}};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string::npos ? std::string::npos : p - start)));
    if (p == std::string::npos) return out;
    start = p + 1;
  }
}

std::map<std::string, double> parse_fixes(const std::vector<std::string>& fixes) {
  std::map<std::string, double> out;
  for (const auto& f : fixes) {
    for (const auto& item : split(f, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) fail(ErrorKind::InvalidInput, "--fix expects name=value, got '" + item + "'");
      const auto name = trim(item.substr(0, eq));
      const auto text = trim(item.substr(eq + 1));
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size() || text.empty() || !std::isfinite(v)) {
        fail(ErrorKind::InvalidInput, "--fix value for '" + name + "' is not a number");
      }
      if (!out.emplace(name, v).second) fail(ErrorKind::InvalidInput, "coordinate '" + name + "' fixed twice");
    }
  }
  return out;
}

std::string plot_script(const std::string& csv_name, const std::array<std::string, 2>& plane) {
  return "# Plots the frontier written next to this script.\n"
         "import csv\n"
         "import sys\n"
         "import matplotlib\n"
         "matplotlib.use(\"Agg\")\n"
         "import matplotlib.pyplot as plt\n\n"
         "with open(\"" + csv_name + "\") as f:\n"
         "    rows = list(csv.reader(f))[1:]\n"
         "xs = [float(r[0]) for r in rows]\n"
         "ys = [float(r[1]) for r in rows]\n"
         "plt.plot(xs, ys, marker=\"o\")\n"
         "plt.fill_between(xs, ys, alpha=0.2)\n"
         "plt.xlabel(\"" + plane[0] + "\")\n"
         "plt.ylabel(\"" + plane[1] + "\")\n"
         "plt.savefig(sys.argv[1] if len(sys.argv) > 1 else \"" + csv_name + ".png\")\n";
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (double v : p) a.push_back(v == 0.0 ? 0.0 : v);
  return a;
}

struct RegionArgs {
  std::string channel, bound, config, plane, out;
  std::vector<std::string> fix;
  std::size_t resolution = 64;
  std::size_t jobs = 0;
  bool emit_plot = false;
};

int cmd_region(const RegionArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto channel = io::load_channel(a.channel);
  SearchConfig config = a.config.empty() ? SearchConfig{} : io::search_config_from_json(io::load_json(a.config));
  if (a.jobs != 0) config.jobs = a.jobs;
  const BoundKind bound = parse_bound(a.bound);
  const auto& coords = bound_coords(bound);

  std::array<std::string, 2> plane{coords[0], coords[1]};
  if (!a.plane.empty()) {
    const auto parts = split(a.plane, ',');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty() || parts[0] == parts[1]) {
      fail(ErrorKind::InvalidInput, "--plane expects two distinct coordinate names, e.g. R0,R1");
    }
    plane = {parts[0], parts[1]};
  }
  for (const auto& name : plane) {
    if (std::find(coords.begin(), coords.end(), name) == coords.end()) {
      fail(ErrorKind::UnknownVariable, "coordinate '" + name + "' is not part of bound " + a.bound);
    }
  }
  const auto fixed = parse_fixes(a.fix);
  if (a.resolution < 2) fail(ErrorKind::InvalidInput, "--resolution must be at least 2");

  const auto result = assemble_region(channel, bound, config);
  const auto front = frontier_detailed(result.region, plane, fixed, a.resolution);

  std::vector<std::array<double, 2>> pts;
  Json witness_points = Json::array();
  for (const auto& f : front) {
    pts.push_back(f.point);
    Json sources = Json::array();
    for (const auto& [h, w] : f.sources) {
      const auto index = result.region.provenance.at(result.region.hull_sources.at(h));
      sources.push_back({{"weight", w},
                         {"hull_point", point_json((*result.region.hull_points)[h])},
                         {"scheme_index", index},
                         {"scheme", io::scheme_to_json(make_scheme(result.shape, result.schemes.at(index)))}});
    }
    witness_points.push_back({{"point", {f.point[0], f.point[1]}}, {"full", point_json(f.full)}, {"sources", sources}});
  }
  const std::string csv = frontier_csv(pts, plane);
  Json fixed_json = Json::object();
  for (const auto& [k, v] : fixed) fixed_json[k] = v;
  const Json witness = {{"bound", a.bound},
                        {"coords", coords},
                        {"plane", plane},
                        {"fixed", fixed_json},
                        {"strategy", std::string(strategy_name(result.strategy))},
                        {"search", io::search_config_to_json(config)},
                        {"schemes_evaluated", result.evaluated},
                        {"schemes_pruned", result.pruned},
                        {"warnings", result.region.warnings},
                        {"frontier", witness_points}};
  const std::string witness_text = witness.dump(2) + "\n";

  const fs::path csv_path = a.out;
  const fs::path witness_path = a.out + ".witness.json";
  const fs::path manifest_path = a.out + ".manifest.json";
  write_file(csv_path, csv);
  write_file(witness_path, witness_text);
  Json outputs = {{csv_path.filename().string(), "sha256:" + sha256_hex(csv)},
                  {witness_path.filename().string(), "sha256:" + sha256_hex(witness_text)}};
  if (a.emit_plot) {
    const fs::path plot_path = a.out + ".plot.py";
    const auto script = plot_script(csv_path.filename().string(), plane);
    write_file(plot_path, script);
    outputs[plot_path.filename().string()] = "sha256:" + sha256_hex(script);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto manifest =
      make_manifest("region", argv, a.channel, a.config.empty() ? std::nullopt : std::optional(a.config),
                    {config.seed}, seconds, outputs);
  write_file(manifest_path, manifest.dump(2) + "\n");

  out << Json{{"frontier", csv_path.string()},
              {"points", pts.size()},
              {"witness", witness_path.string()},
              {"manifest", manifest_path.string()},
              {"warnings", result.region.warnings}}
             .dump()
      << "\n";
  return 0;
}

int cmd_check_degraded(const std::string& channel_path, double tol, std::ostream& out) {
  const auto channel = io::load_channel(channel_path);
  if (!(tol > 0.0) || !std::isfinite(tol)) fail(ErrorKind::InvalidInput, "--tol must be positive");
  const auto cert = classify_degradedness(channel, tol);
  Json witness = nullptr;
  if (cert.witness) {
    witness = Json::array();
    for (std::size_t r = 0; r < cert.witness->rows; ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < cert.witness->cols; ++c) row.push_back((*cert.witness)(r, c));
      witness.push_back(std::move(row));
    }
  }
  out << Json{{"verdict", std::string(degradedness_name(cert.verdict))},
              {"residual", cert.residual},
              {"tolerance", tol},
              {"witness_rows", "y * |X2| + x2"},
              {"witness", witness}}
             .dump(2)
      << "\n";
  return 0;
}

int cmd_secrecy_capacity(const std::string& channel_path, double r0, const std::string& config_path, bool degraded,
                         std::size_t jobs, std::ostream& out) {
  const auto channel = io::load_channel(channel_path);
  SearchConfig config = config_path.empty() ? SearchConfig{} : io::search_config_from_json(io::load_json(config_path));
  if (jobs != 0) config.jobs = jobs;
  const auto r = maximize_secrecy_capacity(channel, r0, config,
                                           degraded ? SecrecyVariant::Degraded : SecrecyVariant::General);
  Json doc = {{"r0", r0},
              {"value", r.value},
              {"variant", degraded ? "degraded" : "general"},
              {"strategy", std::string(strategy_name(r.strategy))},
              {"schemes_evaluated", r.evaluated},
              {"witness", io::scheme_to_json(r.witness)}};
  if (degraded && classify_degradedness(channel).verdict == Degradedness::NotDegraded) {
    doc["warnings"] = {kNotDegradedWarning};
  }
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& channel_override, const std::string& csv_out,
                 std::size_t jobs, std::ostream& out) {
  const auto config = io::sim_config_from_json(io::load_json(config_path));
  const auto channel = channel_override.empty()
                           ? io::resolve_sim_channel(config, fs::path(config_path).parent_path())
                           : io::load_channel(channel_override);
  const auto summary = simulate(channel, config.dims, io::input_or_uniform(config, channel), config.seeds, jobs);
  if (!csv_out.empty()) write_file(csv_out, io::sim_summary_csv(summary));
  out << io::sim_summary_to_json(summary).dump(2) << "\n";
  return 0;
}

int cmd_info(const std::string& channel_path, const std::string& scheme_path, const std::string& query,
             std::ostream& out) {
  const auto channel = io::load_channel(channel_path);
  const auto scheme = io::scheme_from_json(io::load_json(scheme_path));
  const auto q = parse_info_query(query);
  const JointPMF joint = std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SchemeOneSet>) return assemble_joint_one_set(s, channel);
        else if constexpr (std::is_same_v<T, SchemeOneSetOuter>) return assemble_joint_outer(s, channel);
        else if constexpr (std::is_same_v<T, SchemeTwoSet>) return assemble_joint_two_set(s, channel);
        else return assemble_joint_degraded(s, channel);
      },
      scheme);
  out << format9(evaluate_info_query(joint, q)) << "\n";
  return 0;
}

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Validation: return 2;
    case ErrorCategory::ResourceGuard: return 3;
    case ErrorCategory::Internal: return 4;
  }
  return 4;
}

void report_error(std::ostream& err, std::string_view kind, std::string_view category, const std::string& message) {
  err << Json{{"error", std::string(kind)}, {"category", std::string(category)}, {"message", message}}.dump()
      << "\n";
}

std::string_view category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Validation: return "validation";
    case ErrorCategory::ResourceGuard: return "resource-guard";
    case ErrorCategory::Internal: return "internal";
  }
  return "internal";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rate regions, secrecy capacity and exact code simulation for multiple-access channels with "
               "confidential messages",
               "gmac"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RegionArgs ra;
  auto* region = app.add_subcommand("region", "Search schemes, convexify a bound and export its frontier");
  region->add_option("channel", ra.channel, "Channel JSON file")->required();
  region->add_option("--bound", ra.bound, "inner1|outer1|secrecy1|degraded|two-set|secrecy2")->required();
  region->add_option("--config", ra.config, "Search configuration JSON");
  region->add_option("--plane", ra.plane, "Two coordinates, e.g. R0,R1");
  region->add_option("--fix", ra.fix, "Pinned coordinates name=value (repeatable)");
  region->add_option("--out", ra.out, "Frontier CSV path")->required();
  region->add_option("--resolution", ra.resolution, "Support directions across the quarter circle");
  region->add_option("--jobs", ra.jobs, "Worker threads (default: hardware concurrency)");
  region->add_flag("--emit-plot", ra.emit_plot, "Also write a plotting script next to the CSV");

  std::string dg_channel;
  double dg_tol = kDefaultDegradedTolerance;
  auto* check = app.add_subcommand("check-degraded", "Classify the channel's degradedness");
  check->add_option("channel", dg_channel, "Channel JSON file")->required();
  check->add_option("--tol", dg_tol, "Residual tolerance");

  std::string sc_channel, sc_config;
  double sc_r0 = 0.0;
  bool sc_degraded = false;
  std::size_t sc_jobs = 0;
  auto* secrecy = app.add_subcommand("secrecy-capacity", "Maximize the secrecy rate at a given common rate");
  secrecy->add_option("channel", sc_channel, "Channel JSON file")->required();
  secrecy->add_option("--r0", sc_r0, "Common-message rate");
  secrecy->add_option("--config", sc_config, "Search configuration JSON");
  secrecy->add_flag("--degraded", sc_degraded, "Use the degraded-channel expression");
  secrecy->add_option("--jobs", sc_jobs, "Worker threads");

  std::string sim_config, sim_channel, sim_csv;
  std::size_t sim_jobs = 0;
  auto* sim = app.add_subcommand("simulate", "Exact error probability and equivocation of random binning codes");
  sim->add_option("config", sim_config, "Simulation configuration JSON")->required();
  sim->add_option("--channel", sim_channel, "Channel JSON file (overrides the config)");
  sim->add_option("--csv", sim_csv, "Also write per-seed rows as CSV");
  sim->add_option("--jobs", sim_jobs, "Worker threads");

  std::string info_channel, info_scheme, info_query;
  auto* info = app.add_subcommand("info", "Evaluate I(A;B|C) or H(A|B) under a scheme");
  info->add_option("channel", info_channel, "Channel JSON file")->required();
  info->add_option("--scheme", info_scheme, "Scheme JSON file")->required();
  info->add_option("--query", info_query, "e.g. \"I(U;Y|X2,Q)\"")->required();

  std::vector<std::string> owned{"gmac"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : owned) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "InvalidInput", "validation", e.what());
    return 2;
  }

  try {
    if (*region) return cmd_region(ra, args, out);
    if (*check) return cmd_check_degraded(dg_channel, dg_tol, out);
    if (*secrecy) return cmd_secrecy_capacity(sc_channel, sc_r0, sc_config, sc_degraded, sc_jobs, out);
    if (*sim) return cmd_simulate(sim_config, sim_channel, sim_csv, sim_jobs, out);
    if (*info) return cmd_info(info_channel, info_scheme, info_query, out);
    fail(ErrorKind::Internal, "no subcommand selected");
  } catch (const Error& e) {
    report_error(err, error_name(e.kind()), category_name(e.category()), e.what());
    return exit_code(e.category());
  } catch (const std::exception& e) {
    report_error(err, "Internal", "internal", e.what());
    return 4;
  }
}

}  // namespace gmac::cli
