#ifndef YTAB_SERIALIZE_HPP
#define YTAB_SERIALIZE_HPP

#include <json.hpp>

#include "ytab/gibbs.hpp"
#include "ytab/jump_chain.hpp"
#include "ytab/pdmp.hpp"
#include "ytab/tableau_state.hpp"
#include "ytab/verify.hpp"

namespace ytab {

using Json = nlohmann::json;

// Diagrams travel as arrays of row lengths, e.g. [3,1].
Json to_json(const YoungDiagram& lam);
YoungDiagram diagram_from_json(const Json& j);

// {"r": 1.0, "cells": [{"i":1,"j":1,"h":0.3}, ...]}
Json to_json(const HeightState& state);
HeightState state_from_json(const Json& j);

// {"t":..., "i":..., "j":..., "kind":"jump"|"absorb", "from":..., "to":...}
Json to_json(const Event& e);
Event event_from_json(const Json& j);

// event log as JSONL text, one event per line
std::string to_jsonl(const EventLog& log);
EventLog event_log_from_jsonl(const std::string& text);

Json to_json(const GibbsReport& report);
Json to_json(const Claim4aReport& report);
Json to_json(const Claim5aReport& report);
Json to_json(const StationarityReport& report);
Json to_json(const SingleParticleReport& report);
Json to_json(const IdentityTrialsReport& report);
Json to_json(const RowSumReport& report);
Json to_json(const KsResult& ks);

const char* verdict_name(TestVerdict v);

// distribution as CSV rows: "diagram","probability"
std::string distribution_to_csv(const Distribution& dist);

} // namespace ytab

#endif
