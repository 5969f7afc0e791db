#include "fwu_tools/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fwu/errors.hpp"

namespace fwu::tools {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InvalidScenario(path + ": " + what);
}

// Tracks consumed keys so leftovers can be rejected with their path.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j.is_object()) fail(path_, "expected an object");
    }

    bool has(const char* key) const { return j_.contains(key); }

    const json& require(const char* key) {
        if (!j_.contains(key)) fail(path_ + "." + key, "missing required key");
        seen_.insert(key);
        return j_.at(key);
    }

    const json* optional(const char* key) {
        if (!j_.contains(key)) return nullptr;
        seen_.insert(key);
        return &j_.at(key);
    }

    double number(const char* key) { return as_number(require(key), key); }

    double number_or(const char* key, double fallback) {
        const json* v = optional(key);
        return v ? as_number(*v, key) : fallback;
    }

    std::string text(const char* key) {
        const json& v = require(key);
        if (!v.is_string()) fail(path_ + "." + key, "expected a string");
        return v.get<std::string>();
    }

    std::string text_or(const char* key, const std::string& fallback) {
        const json* v = optional(key);
        if (!v) return fallback;
        if (!v->is_string()) fail(path_ + "." + key, "expected a string");
        return v->get<std::string>();
    }

    // Rejects any key that was never consumed.
    void finish() const {
        for (const auto& [key, value] : j_.items()) {
            if (!seen_.count(key)) fail(path_ + "." + key, "unknown key");
        }
    }

private:
    double as_number(const json& v, const char* key) const {
        if (!v.is_number()) fail(path_ + "." + key, "expected a number");
        return v.get<double>();
    }

    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

Vec2 vec2_from(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    Vec2 v{r.number("x"), r.number("y")};
    r.finish();
    return v;
}

json vec2_to(const Vec2& v) { return json{{"x", v.x}, {"y", v.y}}; }

BeaconSet parse_beacons(ObjectReader& top) {
    const json& list = top.require("beacons");
    if (!list.is_array()) fail("beacons", "expected an array");

    std::vector<Vec2> positions;
    std::vector<double> weights;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "beacons[" + std::to_string(i) + "]";
        ObjectReader b(list[i], path);
        positions.emplace_back(b.number("x"), b.number("y"));
        const double w = b.number("weight");
        if (!(w > 0.0)) fail(path + ".weight", "must be positive");
        weights.push_back(w);
        b.finish();
    }

    Vec2 velocity{};
    if (const json* v = top.optional("beacon_velocity")) {
        velocity = vec2_from(*v, "beacon_velocity");
    }
    return BeaconSet(positions, weights, velocity);
}

ControllerConfig parse_controller(const json& j) {
    ObjectReader c(j, "controller");
    const std::string kind = c.text("kind");
    if (kind == "stationary") {
        StationaryGains gains{c.number("kp"), c.number("kh")};
        c.finish();
        return StationaryConfig{gains};
    }
    if (kind == "saturated") {
        SaturationLimits limits{c.number("nu_b"), c.number("nu_f"), c.number("omega_r"),
                                c.number("omega_l")};
        c.finish();
        return SaturatedConfig{limits};
    }
    if (kind == "moving") {
        MovingGains gains{c.number("k1"), c.number("k2"), c.number("k3")};
        Vec2 phi0{};
        if (const json* p = c.optional("phi0")) phi0 = vec2_from(*p, "controller.phi0");
        c.finish();
        return MovingConfig{gains, phi0};
    }
    fail("controller.kind", "must be one of stationary, saturated, moving (got \"" + kind + "\")");
}

} // namespace

Scenario scenario_from_json(const json& doc) {
    ObjectReader top(doc, "scenario");

    BeaconSet beacons = parse_beacons(top);

    const json& agent_json = top.require("agent");
    ObjectReader a(agent_json, "agent");
    const double ax = a.number("x");
    const double ay = a.number("y");
    const double theta = a.number("theta");
    a.finish();

    ControllerConfig controller = parse_controller(top.require("controller"));

    Scenario scenario{std::move(beacons), UnicycleState({ax, ay}, theta), std::move(controller)};
    scenario.label = top.text_or("label", "");

    if (const json* sim = top.optional("sim")) {
        ObjectReader s(*sim, "sim");
        scenario.dt = s.number_or("dt", scenario.dt);
        scenario.t_final = s.number_or("t_final", scenario.t_final);
        scenario.collision_epsilon = s.number_or("collision_epsilon", scenario.collision_epsilon);
        scenario.convergence_tolerance =
            s.number_or("convergence_tolerance", scenario.convergence_tolerance);
        s.finish();
    }
    top.finish();

    scenario.validate();
    return scenario;
}

json scenario_to_json(const Scenario& scenario) {
    json doc;
    doc["label"] = scenario.label;

    json beacons = json::array();
    for (std::size_t i = 0; i < scenario.beacons.size(); ++i) {
        json b = vec2_to(scenario.beacons.positions()[i]);
        b["weight"] = scenario.beacons.weights()[i];
        beacons.push_back(std::move(b));
    }
    doc["beacons"] = std::move(beacons);
    doc["beacon_velocity"] = vec2_to(scenario.beacons.velocity());

    doc["agent"] = {{"x", scenario.agent_initial.position.x},
                    {"y", scenario.agent_initial.position.y},
                    {"theta", scenario.agent_initial.heading}};

    json c;
    if (const auto* st = std::get_if<StationaryConfig>(&scenario.controller)) {
        c = {{"kind", "stationary"}, {"kp", st->gains.kp}, {"kh", st->gains.kh}};
    } else if (const auto* sat = std::get_if<SaturatedConfig>(&scenario.controller)) {
        c = {{"kind", "saturated"},
             {"nu_b", sat->limits.nu_b},
             {"nu_f", sat->limits.nu_f},
             {"omega_r", sat->limits.omega_r},
             {"omega_l", sat->limits.omega_l}};
    } else {
        const auto& m = std::get<MovingConfig>(scenario.controller);
        c = {{"kind", "moving"},
             {"k1", m.gains.k1},
             {"k2", m.gains.k2},
             {"k3", m.gains.k3},
             {"phi0", vec2_to(m.phi0)}};
    }
    doc["controller"] = std::move(c);

    doc["sim"] = {{"dt", scenario.dt},
                  {"t_final", scenario.t_final},
                  {"collision_epsilon", scenario.collision_epsilon},
                  {"convergence_tolerance", scenario.convergence_tolerance}};
    return doc;
}

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidScenario(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; convert it to line and column.
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte, text.size());
        for (std::size_t i = 0; i + 1 <= stop && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InvalidScenario(path + ": line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + e.what());
    }
}

Scenario load_scenario(const std::string& path) { return scenario_from_json(load_json(path)); }

BeaconSet beacons_from_json(const json& doc) {
    if (doc.is_object() && doc.contains("agent")) {
        return scenario_from_json(doc).beacons;
    }
    ObjectReader top(doc, "beacons file");
    BeaconSet beacons = parse_beacons(top);
    top.finish();
    return beacons;
}

json merge_scenario(const json& base, const json& patch) {
    if (!base.is_object() || !patch.is_object()) return patch;
    if (patch.contains("kind") && base.contains("kind") && patch["kind"] != base["kind"]) {
        return patch;
    }
    json merged = base;
    for (const auto& [key, value] : patch.items()) {
        if (merged.contains(key)) {
            merged[key] = merge_scenario(merged[key], value);
        } else {
            merged[key] = value;
        }
    }
    return merged;
}

} // namespace fwu::tools
