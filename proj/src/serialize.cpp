#include "ytab/serialize.hpp"

#include <sstream>

namespace ytab {

Json to_json(const YoungDiagram& lam) {
    return Json(lam.rows());
}

YoungDiagram diagram_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("diagram: expected a JSON array");
    return YoungDiagram(j.get<std::vector<int>>());
}

Json to_json(const HeightState& state) {
    Json cells = Json::array();
    for (Cell c : state.shape().cells())
        cells.push_back({{"i", c.i}, {"j", c.j}, {"h", state.height(c)}});
    return Json{{"r", state.r()}, {"cells", cells}};
}

HeightState state_from_json(const Json& j) {
    std::vector<std::pair<Cell, double>> cells;
    for (const auto& c : j.at("cells"))
        cells.push_back({Cell{c.at("i").get<int>(), c.at("j").get<int>()},
                         c.at("h").get<double>()});
    return HeightState(j.at("r").get<double>(), cells);
}

Json to_json(const Event& e) {
    return Json{{"t", e.t},
                {"i", e.cell.i},
                {"j", e.cell.j},
                {"kind", e.kind == EventKind::jump ? "jump" : "absorb"},
                {"from", e.from},
                {"to", e.to}};
}

Event event_from_json(const Json& j) {
    Event e;
    e.t = j.at("t").get<double>();
    e.cell = {j.at("i").get<int>(), j.at("j").get<int>()};
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "jump") e.kind = EventKind::jump;
    else if (kind == "absorb") e.kind = EventKind::absorb;
    else throw std::invalid_argument("event: unknown kind '" + kind + "'");
    e.from = j.at("from").get<double>();
    e.to = j.at("to").get<double>();
    return e;
}

std::string to_jsonl(const EventLog& log) {
    std::string out;
    for (const Event& e : log) {
        out += to_json(e).dump();
        out += '\n';
    }
    return out;
}

EventLog event_log_from_jsonl(const std::string& text) {
    EventLog log;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        log.push_back(event_from_json(Json::parse(line)));
    }
    return log;
}

const char* verdict_name(TestVerdict v) {
    switch (v) {
        case TestVerdict::pass: return "pass";
        case TestVerdict::fail: return "fail";
        default: return "inconclusive";
    }
}

Json to_json(const KsResult& ks) {
    return Json{{"d", ks.d}, {"p_value", ks.p_value}, {"n", ks.n}};
}

Json to_json(const GibbsReport& report) {
    Json shapes = Json::array();
    for (const auto& sr : report.shapes) {
        Json entry{{"shape", to_json(sr.shape)},
                   {"samples", sr.samples},
                   {"ks_p", sr.ks_p},
                   {"verdict", verdict_name(sr.verdict)}};
        if (sr.chi_square_ran) entry["chi_square_p"] = sr.chi_square_p;
        if (!sr.chi_square_note.empty()) entry["chi_square_note"] = sr.chi_square_note;
        shapes.push_back(std::move(entry));
    }
    return Json{{"shapes", shapes},
                {"tests_run", report.tests_run},
                {"alpha", report.alpha},
                {"threshold", report.threshold},
                {"min_p", report.min_p},
                {"verdict", verdict_name(report.verdict)}};
}

Json to_json(const Claim4aReport& report) {
    return Json{{"tv", report.tv},
                {"margin", report.margin},
                {"k_states", report.k_states},
                {"overflow_mass", report.overflow_mass},
                {"overflow_ok", report.overflow_ok},
                {"mean_events", report.mean_events},
                {"max_events", report.max_events},
                {"replicas", report.replicas},
                {"gibbs", to_json(report.gibbs)},
                {"tv_ok", report.tv_ok},
                {"pass", report.pass}};
}

Json to_json(const Claim5aReport& report) {
    return Json{{"tv", report.tv},
                {"margin", report.margin},
                {"k_states", report.k_states},
                {"mean_events_r", report.mean_events_r},
                {"mean_events_r_prime", report.mean_events_r_prime},
                {"max_events", report.max_events},
                {"gibbs_truncated", to_json(report.gibbs_truncated)},
                {"tv_ok", report.tv_ok},
                {"pass", report.pass}};
}

Json to_json(const StationarityReport& report) {
    return Json{{"tv_pdmp", report.tv_pdmp},
                {"tv_gillespie", report.tv_gillespie},
                {"tv_two_time", report.tv_two_time},
                {"tv_init_pi", report.tv_init_pi},
                {"pi_residual", report.pi_residual},
                {"pi_boundary_mass", report.pi_boundary_mass},
                {"mean_events", report.mean_events},
                {"max_events", report.max_events},
                {"pdmp_ok", report.pdmp_ok},
                {"gillespie_ok", report.gillespie_ok},
                {"init_pi_ok", report.init_pi_ok},
                {"pass", report.pass}};
}

Json to_json(const SingleParticleReport& report) {
    return Json{{"first_event_ks", to_json(report.first_event_ks)},
                {"ratio_ks", to_json(report.ratio_ks)},
                {"mean_first_event", report.mean_first_event},
                {"expected_mean", report.expected_mean},
                {"ratios_collected", report.ratios_collected},
                {"no_absorb_before_first_jump", report.no_absorb_before_first_jump},
                {"pass", report.pass}};
}

Json to_json(const IdentityTrialsReport& report) {
    Json j{{"trials", report.trials},
           {"passed", report.passed},
           {"seed", report.seed},
           {"pass", report.all_passed()}};
    if (report.counterexample) j["counterexample"] = *report.counterexample;
    return j;
}

Json to_json(const RowSumReport& report) {
    Json j{{"max_size", report.max_size},
           {"rows_checked", report.rows_checked},
           {"pass", report.all_exact}};
    if (report.counterexample) j["counterexample"] = *report.counterexample;
    return j;
}

std::string distribution_to_csv(const Distribution& dist) {
    std::string out = "diagram,probability\n";
    for (const auto& [lam, p] : dist) {
        out += '"' + lam.to_string() + "\",";
        out += Json(p).dump();
        out += '\n';
    }
    return out;
}

} // namespace ytab
