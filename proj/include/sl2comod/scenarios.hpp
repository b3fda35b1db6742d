#pragma once

#include "sl2comod/homological.hpp"
#include "sl2comod/isotest.hpp"
#include "sl2comod/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sl2comod {

// A named, reproducible check with machine-readable evidence. `pass` means
// every claim the scenario makes was verified exactly; the evidence carries
// the witnesses and certificates needed to re-check it independently.
struct ScenarioReport {
    std::string name;
    Json parameters;  // the resolved parameters the run actually used
    bool pass = false;
    Json evidence;
    double duration_seconds = 0.0;
};

// The scenario registry, in canonical order.
const std::vector<std::string>& scenario_names();

// Default parameters of a scenario (after seed resolution, see below).
Json scenario_defaults(const std::string& name);

// Run one scenario. Unknown names and unknown or ill-typed parameters throw
// std::invalid_argument. Every scenario is deterministic given its
// parameters.
ScenarioReport run_scenario(const std::string& name, const Json& params = Json::object());

// Seed used by randomized axiom suites when neither an explicit parameter nor
// the SL2COMOD_SEED environment variable overrides it.
std::uint64_t default_seed();

Json report_to_json(const ScenarioReport& report);
std::string render_pretty(const ScenarioReport& report);

// Shared serialization of the bigger result types.
Json iso_to_json(const IsoResult& iso);
Json section_to_json(const SectionOutcome& outcome);
Json certificate_to_json(const NoSolutionCertificate& certificate);
Json filtration_to_json(const Filtration& filtration);

}  // namespace sl2comod
