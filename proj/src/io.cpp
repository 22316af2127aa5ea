#include "gmac/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "gmac/error.hpp"

namespace gmac::io {

namespace {

void require_object(const Json& doc, const std::string& what) {
  if (!doc.is_object()) fail(ErrorKind::InvalidInput, what + " must be a JSON object");
}

void reject_unknown(const Json& doc, const std::set<std::string>& known, const std::string& what) {
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) fail(ErrorKind::InvalidInput, "unknown key '" + key + "' in " + what);
  }
}

std::size_t get_count(const Json& doc, const char* key, const std::string& what) {
  if (!doc.contains(key)) fail(ErrorKind::InvalidInput, what + " is missing '" + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(ErrorKind::InvalidInput, what + " field '" + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double get_number(const Json& v, const std::string& what) {
  if (!v.is_number()) fail(ErrorKind::InvalidInput, what + " must be a number");
  return v.get<double>();
}

std::vector<double> number_array(const Json& v, const std::string& what) {
  if (!v.is_array()) fail(ErrorKind::InvalidInput, what + " must be an array");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(get_number(x, what));
  return out;
}

// Flattens a nested array checking the expected extent at every level.
void flatten(const Json& v, const std::vector<std::size_t>& shape, std::size_t level, std::vector<double>& out,
             const std::string& what) {
  if (level == shape.size()) {
    out.push_back(get_number(v, what + " entries"));
    return;
  }
  if (!v.is_array()) fail(ErrorKind::InvalidInput, what + " must be nested arrays");
  if (v.size() != shape[level]) {
    fail(ErrorKind::DimensionMismatch, what + " has extent " + std::to_string(v.size()) + " at depth " +
                                           std::to_string(level) + ", expected " + std::to_string(shape[level]));
  }
  for (const auto& x : v) flatten(x, shape, level + 1, out, what);
}

ProbMatrix matrix_from_json(const Json& v, const std::string& what) {
  if (!v.is_array() || v.empty() || !v[0].is_array()) fail(ErrorKind::InvalidInput, what + " must be a nested array");
  std::vector<double> data;
  flatten(v, {v.size(), v[0].size()}, 0, data, what);
  return ProbMatrix(v.size(), v[0].size(), std::move(data));
}

Json matrix_to_json(const ProbMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

const Json& field(const Json& doc, const char* key, const std::string& what) {
  if (!doc.contains(key)) fail(ErrorKind::InvalidInput, what + " is missing '" + key + "'");
  return doc.at(key);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, "malformed JSON in " + what + ": " + e.what());
  }
}

Json load_json(const std::filesystem::path& path) { return parse_json(read_file(path), path.string()); }

ChannelSpec channel_from_json(const Json& doc) {
  const std::string what = "channel";
  require_object(doc, what);
  reject_unknown(doc, {"x1", "x2", "y", "y1", "y2", "p", "name", "description"}, what);
  AlphabetSizes s{get_count(doc, "x1", what), get_count(doc, "x2", what), get_count(doc, "y", what),
                  get_count(doc, "y1", what), get_count(doc, "y2", what)};
  if (s.x1 == 0 || s.x2 == 0 || s.y == 0 || s.y1 == 0 || s.y2 == 0) {
    fail(ErrorKind::DimensionMismatch, "channel alphabet sizes must be positive");
  }
  std::vector<double> raw;
  raw.reserve(s.total());
  flatten(field(doc, "p", what), {s.x1, s.x2, s.y, s.y1, s.y2}, 0, raw, "channel p");
  return validate_channel(std::move(raw), s);
}

Json channel_to_json(const ChannelSpec& channel) {
  const auto& s = channel.sizes();
  Json p = Json::array();
  for (std::size_t a = 0; a < s.x1; ++a) {
    Json pa = Json::array();
    for (std::size_t b = 0; b < s.x2; ++b) {
      Json pb = Json::array();
      for (std::size_t y = 0; y < s.y; ++y) {
        Json py = Json::array();
        for (std::size_t y1 = 0; y1 < s.y1; ++y1) {
          Json py1 = Json::array();
          for (std::size_t y2 = 0; y2 < s.y2; ++y2) py1.push_back(channel.p(a, b, y, y1, y2));
          py.push_back(std::move(py1));
        }
        pb.push_back(std::move(py));
      }
      pa.push_back(std::move(pb));
    }
    p.push_back(std::move(pa));
  }
  return Json{{"x1", s.x1}, {"x2", s.x2}, {"y", s.y}, {"y1", s.y1}, {"y2", s.y2}, {"p", std::move(p)}};
}

ChannelSpec load_channel(const std::filesystem::path& path) { return channel_from_json(load_json(path)); }

AnyScheme scheme_from_json(const Json& doc) {
  const std::string what = "scheme";
  require_object(doc, what);
  const auto& kind = field(doc, "kind", what);
  if (!kind.is_string()) fail(ErrorKind::InvalidInput, "scheme kind must be a string");
  const auto k = kind.get<std::string>();
  auto m = [&](const char* key) { return matrix_from_json(field(doc, key, what), std::string("scheme ") + key); };
  if (k == "one-set") {
    reject_unknown(doc, {"kind", "q_x2", "u_given_q", "x1_given_u"}, what);
    SchemeOneSet s{m("q_x2"), m("u_given_q"), m("x1_given_u")};
    s.validate();
    return s;
  }
  if (k == "outer") {
    reject_unknown(doc, {"kind", "q_x2", "u_given_q", "x1_given_u", "v_given_q"}, what);
    SchemeOneSetOuter s{{m("q_x2"), m("u_given_q"), m("x1_given_u")}, m("v_given_q")};
    s.validate();
    return s;
  }
  if (k == "two-set") {
    reject_unknown(doc, {"kind", "q", "u_given_q", "x1_given_u", "v_given_q", "x2_given_v"}, what);
    SchemeTwoSet s{number_array(field(doc, "q", what), "scheme q"), m("u_given_q"), m("x1_given_u"), m("v_given_q"),
                   m("x2_given_v")};
    s.validate();
    return s;
  }
  if (k == "degraded") {
    reject_unknown(doc, {"kind", "q_x2", "x1_given_q"}, what);
    SchemeDegraded s{m("q_x2"), m("x1_given_q")};
    s.validate();
    return s;
  }
  fail(ErrorKind::InvalidInput, "unknown scheme kind '" + k + "'");
}

Json scheme_to_json(const AnyScheme& scheme) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SchemeOneSet>) {
          return {{"kind", "one-set"},
                  {"q_x2", matrix_to_json(s.q_x2)},
                  {"u_given_q", matrix_to_json(s.u_given_q)},
                  {"x1_given_u", matrix_to_json(s.x1_given_u)}};
        } else if constexpr (std::is_same_v<T, SchemeOneSetOuter>) {
          return {{"kind", "outer"},
                  {"q_x2", matrix_to_json(s.base.q_x2)},
                  {"u_given_q", matrix_to_json(s.base.u_given_q)},
                  {"x1_given_u", matrix_to_json(s.base.x1_given_u)},
                  {"v_given_q", matrix_to_json(s.v_given_q)}};
        } else if constexpr (std::is_same_v<T, SchemeTwoSet>) {
          return {{"kind", "two-set"},
                  {"q", s.q},
                  {"u_given_q", matrix_to_json(s.u_given_q)},
                  {"x1_given_u", matrix_to_json(s.x1_given_u)},
                  {"v_given_q", matrix_to_json(s.v_given_q)},
                  {"x2_given_v", matrix_to_json(s.x2_given_v)}};
        } else {
          return {{"kind", "degraded"}, {"q_x2", matrix_to_json(s.q_x2)}, {"x1_given_q", matrix_to_json(s.x1_given_q)}};
        }
      },
      scheme);
}

SearchConfig search_config_from_json(const Json& doc) {
  const std::string what = "search config";
  require_object(doc, what);
  reject_unknown(doc,
                 {"cardinalities", "strategy", "grid_resolution", "sample_count", "seed", "refine_iterations",
                  "refine_step", "jobs"},
                 what);
  SearchConfig c;
  if (doc.contains("cardinalities")) {
    const auto& card = doc.at("cardinalities");
    require_object(card, "cardinalities");
    reject_unknown(card, {"Q", "U", "V"}, "cardinalities");
    if (card.contains("Q")) c.q = get_count(card, "Q", "cardinalities");
    if (card.contains("U")) c.u = get_count(card, "U", "cardinalities");
    if (card.contains("V")) c.v = get_count(card, "V", "cardinalities");
  }
  if (doc.contains("strategy")) {
    if (!doc.at("strategy").is_string()) fail(ErrorKind::InvalidInput, "strategy must be a string");
    c.strategy = parse_strategy(doc.at("strategy").get<std::string>());
  }
  if (doc.contains("grid_resolution")) c.grid_resolution = get_count(doc, "grid_resolution", what);
  if (doc.contains("sample_count")) c.sample_count = get_count(doc, "sample_count", what);
  if (doc.contains("seed")) c.seed = get_count(doc, "seed", what);
  if (doc.contains("refine_iterations")) c.refine_iterations = get_count(doc, "refine_iterations", what);
  if (doc.contains("refine_step")) c.refine_step = get_number(doc.at("refine_step"), "refine_step");
  if (doc.contains("jobs")) c.jobs = get_count(doc, "jobs", what);
  c.validate();
  return c;
}

Json search_config_to_json(const SearchConfig& c) {
  return {{"cardinalities", {{"Q", c.q}, {"U", c.u}, {"V", c.v}}},
          {"strategy", std::string(strategy_name(c.strategy))},
          {"grid_resolution", c.grid_resolution},
          {"sample_count", c.sample_count},
          {"seed", c.seed},
          {"refine_iterations", c.refine_iterations},
          {"refine_step", c.refine_step}};
}

SimConfig sim_config_from_json(const Json& doc) {
  const std::string what = "simulation config";
  require_object(doc, what);
  reject_unknown(doc, {"channel", "n", "M0", "M1", "M2", "J1", "J2", "input_dist", "seeds"}, what);
  SimConfig c;
  if (doc.contains("channel")) {
    c.channel = doc.at("channel");
    if (!c.channel.is_string() && !c.channel.is_object()) {
      fail(ErrorKind::InvalidInput, "'channel' must be a file path or an inline channel object");
    }
  }
  c.dims.n = get_count(doc, "n", what);
  auto opt = [&](const char* key, std::size_t& dst) {
    if (doc.contains(key)) dst = get_count(doc, key, what);
  };
  opt("M0", c.dims.m0);
  opt("M1", c.dims.m1);
  opt("M2", c.dims.m2);
  opt("J1", c.dims.j1);
  opt("J2", c.dims.j2);
  c.dims.validate();
  if (doc.contains("input_dist")) {
    const auto& d = doc.at("input_dist");
    require_object(d, "input_dist");
    reject_unknown(d, {"x1", "x2"}, "input_dist");
    c.input = InputDistribution{number_array(field(d, "x1", "input_dist"), "input_dist x1"),
                                number_array(field(d, "x2", "input_dist"), "input_dist x2")};
  }
  if (doc.contains("seeds")) {
    const auto& s = doc.at("seeds");
    if (!s.is_array() || s.empty()) fail(ErrorKind::InvalidInput, "'seeds' must be a nonempty array");
    c.seeds.clear();
    for (const auto& x : s) {
      if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
        fail(ErrorKind::InvalidInput, "seeds must be nonnegative integers");
      }
      c.seeds.push_back(x.get<std::uint64_t>());
    }
  }
  return c;
}

ChannelSpec resolve_sim_channel(const SimConfig& config, const std::filesystem::path& base_dir) {
  if (config.channel.is_object()) return channel_from_json(config.channel);
  if (config.channel.is_string()) {
    std::filesystem::path p = config.channel.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return load_channel(p);
  }
  fail(ErrorKind::InvalidInput, "simulation config has no channel");
}

InputDistribution input_or_uniform(const SimConfig& config, const ChannelSpec& channel) {
  if (config.input) return *config.input;
  const auto& s = channel.sizes();
  return {std::vector<double>(s.x1, 1.0 / static_cast<double>(s.x1)),
          std::vector<double>(s.x2, 1.0 / static_cast<double>(s.x2))};
}

Json sim_summary_to_json(const SimSummary& summary) {
  Json reports = Json::array();
  for (const auto& r : summary.reports) {
    reports.push_back({{"seed", r.seed},
                       {"error_probability", r.error_probability},
                       {"equivocation_user2", r.equivocation_user2},
                       {"equivocation_user1", r.equivocation_user1},
                       {"rates", {{"R0", r.rates[0]}, {"R1", r.rates[1]}, {"R2", r.rates[2]}}},
                       {"mass", r.mass}});
  }
  return {{"reports", std::move(reports)},
          {"mean_error_probability", summary.mean_error_probability},
          {"mean_equivocation_user2", summary.mean_equivocation_user2},
          {"mean_equivocation_user1", summary.mean_equivocation_user1}};
}

std::string sim_summary_csv(const SimSummary& summary) {
  std::string out = "seed,error_probability,equivocation_user2,equivocation_user1,R0,R1,R2\n";
  char buf[256];
  for (const auto& r : summary.reports) {
    std::snprintf(buf, sizeof buf, "%llu,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n", static_cast<unsigned long long>(r.seed),
                  r.error_probability, r.equivocation_user2, r.equivocation_user1, r.rates[0], r.rates[1], r.rates[2]);
    out += buf;
  }
  return out;
}

}  // namespace gmac::io
