#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gmac/channel.hpp"
#include "gmac/error.hpp"
#include "gmac/examples.hpp"
#include "gmac/infotheory.hpp"
#include "gmac/io.hpp"
#include "gmac/optimizer.hpp"
#include "gmac/regions.hpp"
#include "gmac/version.hpp"
#include "gmac/wiretap_sim.hpp"

namespace py = pybind11;
using namespace gmac;
using io::Json;

namespace {

// Structured data crosses the boundary as JSON text; the Python package turns
// it into dicts.
Json parse(const std::string& text, const char* what) { return io::parse_json(text, what); }

SearchConfig config_from(const std::string& text) {
  return text.empty() ? SearchConfig{} : io::search_config_from_json(parse(text, "search config"));
}

std::string region_frontier(const ChannelSpec& channel, const std::string& bound, const std::string& config,
                            const std::array<std::string, 2>& plane, const std::map<std::string, double>& fixed,
                            std::size_t resolution) {
  const auto result = assemble_region(channel, parse_bound(bound), config_from(config));
  const auto front = frontier_detailed(result.region, plane, fixed, resolution);
  Json points = Json::array();
  for (const auto& f : front) {
    Json sources = Json::array();
    for (const auto& [h, w] : f.sources) {
      const auto index = result.region.provenance.at(result.region.hull_sources.at(h));
      sources.push_back({{"weight", w},
                         {"hull_point", (*result.region.hull_points)[h]},
                         {"scheme", io::scheme_to_json(make_scheme(result.shape, result.schemes.at(index)))}});
    }
    points.push_back({{"point", {f.point[0], f.point[1]}}, {"full", f.full}, {"sources", sources}});
  }
  return Json{{"coords", result.region.coords},
              {"plane", plane},
              {"strategy", std::string(strategy_name(result.strategy))},
              {"schemes_evaluated", result.evaluated},
              {"schemes_pruned", result.pruned},
              {"warnings", result.region.warnings},
              {"frontier", points}}
      .dump();
}

std::string secrecy_capacity(const ChannelSpec& channel, double r0, const std::string& config, bool degraded) {
  const auto r = maximize_secrecy_capacity(channel, r0, config_from(config),
                                           degraded ? SecrecyVariant::Degraded : SecrecyVariant::General);
  return Json{{"value", r.value},
              {"r0", r0},
              {"strategy", std::string(strategy_name(r.strategy))},
              {"schemes_evaluated", r.evaluated},
              {"witness", io::scheme_to_json(r.witness)}}
      .dump();
}

std::string check_degraded(const ChannelSpec& channel, double tol) {
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
  return Json{{"verdict", std::string(degradedness_name(cert.verdict))}, {"residual", cert.residual}, {"witness", witness}}
      .dump();
}

double information(const ChannelSpec& channel, const std::string& scheme_json, const VarSet& a, const VarSet& b,
                   const VarSet& given) {
  const auto scheme = io::scheme_from_json(parse(scheme_json, "scheme"));
  const JointPMF joint = std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SchemeOneSet>) return assemble_joint_one_set(s, channel);
        else if constexpr (std::is_same_v<T, SchemeOneSetOuter>) return assemble_joint_outer(s, channel);
        else if constexpr (std::is_same_v<T, SchemeTwoSet>) return assemble_joint_two_set(s, channel);
        else return assemble_joint_degraded(s, channel);
      },
      scheme);
  return b.empty() ? entropy(joint, a, given) : mutual_information(joint, a, b, given);
}

std::string run_simulation(const ChannelSpec& channel, const std::string& sim_config, std::size_t jobs) {
  const auto config = io::sim_config_from_json(parse(sim_config, "simulation config"));
  return io::sim_summary_to_json(simulate(channel, config.dims, io::input_or_uniform(config, channel), config.seeds, jobs))
      .dump();
}

}  // namespace

PYBIND11_MODULE(_gmac, m) {
  m.doc() = "Rate regions and secrecy capacity for multiple-access channels with confidential messages";
  m.attr("__version__") = kVersion;

  static py::exception<Error> error(m, "GmacError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(error_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<ChannelSpec>(m, "Channel")
      .def_property_readonly("sizes",
                             [](const ChannelSpec& c) {
                               const auto& s = c.sizes();
                               return std::array<std::size_t, 5>{s.x1, s.x2, s.y, s.y1, s.y2};
                             })
      .def("p", &ChannelSpec::p, py::arg("x1"), py::arg("x2"), py::arg("y"), py::arg("y1"), py::arg("y2"))
      .def("to_json", [](const ChannelSpec& c) { return io::channel_to_json(c).dump(); });

  m.def("channel_from_json", [](const std::string& text) { return io::channel_from_json(parse(text, "channel")); });
  m.def("load_channel", [](const std::string& path) { return io::load_channel(path); });

  auto ex = m.def_submodule("examples", "Named example channels");
  ex.def("clean_mac", &examples::clean_mac);
  ex.def("leaky_mac", &examples::leaky_mac);
  ex.def("eavesdropper_copy", &examples::eavesdropper_copy);
  ex.def("binary_degraded", &examples::binary_degraded, py::arg("p_main") = 0.1, py::arg("p_wiretap") = 0.1);
  ex.def("binary_pure_noise_wiretap", &examples::binary_pure_noise_wiretap, py::arg("p_main") = 0.1);
  ex.def("binary_wiretap", &examples::binary_wiretap, py::arg("p_main"), py::arg("p_wiretap"));
  ex.def("binary_leaky_gmac", &examples::binary_leaky_gmac, py::arg("p_main") = 0.05, py::arg("p_leak") = 0.25);
  ex.def("noiseless_wiretapper", &examples::noiseless_wiretapper, py::arg("p_main") = 0.3);

  m.def("_check_degraded", &check_degraded, py::arg("channel"), py::arg("tol") = kDefaultDegradedTolerance);
  m.def("_secrecy_capacity", &secrecy_capacity, py::arg("channel"), py::arg("r0"), py::arg("config"),
        py::arg("degraded"), py::call_guard<py::gil_scoped_release>());
  m.def("_region_frontier", &region_frontier, py::arg("channel"), py::arg("bound"), py::arg("config"),
        py::arg("plane"), py::arg("fixed"), py::arg("resolution"), py::call_guard<py::gil_scoped_release>());
  m.def("_information", &information, py::arg("channel"), py::arg("scheme"), py::arg("a"), py::arg("b"),
        py::arg("given"));
  m.def("_simulate", &run_simulation, py::arg("channel"), py::arg("config"), py::arg("jobs"),
        py::call_guard<py::gil_scoped_release>());
  m.def("frontier_csv", &frontier_csv, py::arg("points"), py::arg("plane"));
}
