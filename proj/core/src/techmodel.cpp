#include "fintool/techmodel.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fintool/error.hpp"
#include "json.hpp"

namespace fintool {

namespace {

using nlohmann::json;

std::string normalize_kind_token(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (unsigned char c : text) {
        if (c == '-' || c == '_') continue;
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

int default_gate_pitches(DeviceKind kind) {
    return kind == DeviceKind::FinFET ? 2 : 3;
}

}  // namespace

std::string_view to_string(DeviceKind kind) {
    switch (kind) {
        case DeviceKind::FinFET: return "FinFET";
        case DeviceKind::EDFinFET: return "EDFinFET";
        case DeviceKind::DTEDFinFET: return "DTEDFinFET";
    }
    return "FinFET";
}

std::optional<DeviceKind> device_kind_from_string(std::string_view text) {
    const std::string token = normalize_kind_token(text);
    if (token == "finfet") return DeviceKind::FinFET;
    if (token == "edfinfet") return DeviceKind::EDFinFET;
    if (token == "dtedfinfet") return DeviceKind::DTEDFinFET;
    return std::nullopt;
}

std::string to_string(const Violation& v) {
    return v.field + ": " + v.message;
}

std::vector<Violation> validate(const TechnologyProfile& p) {
    std::vector<Violation> out;
    auto bad = [&out](std::string field, std::string message) {
        out.push_back({std::move(field), std::move(message)});
    };

    if (p.name.empty())
        bad("name", "profile name must not be empty");
    if (!(p.fin_pitch_nm > 0.0))
        bad("fin_pitch_nm", "fin pitch must be positive");
    if (!(p.fin_width_nm > 0.0))
        bad("fin_width_nm", "fin width must be positive");
    else if (!(p.fin_width_nm < p.fin_pitch_nm))
        bad("fin_width_nm", "fin width must be strictly less than pitch");
    if (p.epi_nm < 0.0)
        bad("epi_nm", "epi thickness must be nonnegative");
    if (p.kind == DeviceKind::FinFET && p.epi_nm != 0.0)
        bad("epi_nm", "epi must be 0 for FINFET");
    if (p.sti_depth_nm < 0.0)
        bad("sti_depth_nm", "STI depth must be nonnegative");
    if (p.ion_per_um_mA < 0.0)
        bad("ion_per_um_mA", "drive current density must be nonnegative");
    if (!(p.gate_pitch_nm > 0.0))
        bad("gate_pitch_nm", "gate pitch must be positive");
    if (p.gate_pitches_per_device != default_gate_pitches(p.kind))
        bad("gate_pitches_per_device",
            p.kind == DeviceKind::FinFET ? "must be 2 for FINFET"
                                         : "must be 3 for EDFINFET/DTEDFINFET");
    if (!(p.stability_coeff_per_nm2 > 0.0))
        bad("stability_coeff_per_nm2", "stability coefficient must be positive");
    if (p.min_gapfill_nm < 0.0)
        bad("min_gapfill_nm", "minimum gap-fill space must be nonnegative");
    if (p.gate_length_nm && !(*p.gate_length_nm > 0.0))
        bad("gate_length_nm", "gate length must be positive when given");

    return out;
}

std::vector<std::string> advisories(const TechnologyProfile& p) {
    std::vector<std::string> out;
    if (p.kind == DeviceKind::FinFET && p.gate_length_nm &&
        p.fin_width_nm > *p.gate_length_nm / 3.0) {
        std::ostringstream msg;
        msg << p.name << ": fin_width_nm " << p.fin_width_nm
            << " exceeds gate_length_nm/3 = " << (*p.gate_length_nm / 3.0)
            << "; electrostatic control of a FinFET channel degrades above W_FIN ~ L_G/3";
        out.push_back(msg.str());
    }
    return out;
}

namespace {

double require_number(const json& obj, const char* key, std::string_view where) {
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError(std::string(where) + ": field '" + key + "' must be a number");
    return v.get<double>();
}

TechnologyProfile profile_from_json(const json& obj, std::string_view where) {
    static const std::set<std::string> known_keys = {
        "name",          "kind",          "fin_pitch_nm",
        "fin_width_nm",  "epi_nm",        "sti_depth_nm",
        "ion_per_um_mA", "gate_pitch_nm", "gate_pitches_per_device",
        "stability_coeff_per_nm2", "min_gapfill_nm", "gate_length_nm"};

    if (!obj.is_object())
        throw ConfigError(std::string(where) + ": profile entry must be an object");
    for (const auto& [key, value] : obj.items()) {
        if (!known_keys.count(key))
            throw ConfigError(std::string(where) + ": unknown field '" + key + "'");
    }

    TechnologyProfile p;
    try {
        if (!obj.at("name").is_string())
            throw ConfigError(std::string(where) + ": field 'name' must be a string");
        p.name = obj.at("name").get<std::string>();

        if (!obj.at("kind").is_string())
            throw ConfigError(std::string(where) + ": field 'kind' must be a string");
        const auto kind_text = obj.at("kind").get<std::string>();
        const auto kind = device_kind_from_string(kind_text);
        if (!kind)
            throw ConfigError(std::string(where) + ": unknown kind '" + kind_text +
                              "' (expected FINFET, EDFINFET or DTEDFINFET)");
        p.kind = *kind;

        p.fin_pitch_nm = require_number(obj, "fin_pitch_nm", where);
        p.fin_width_nm = require_number(obj, "fin_width_nm", where);
        p.ion_per_um_mA = require_number(obj, "ion_per_um_mA", where);
        p.gate_pitch_nm = require_number(obj, "gate_pitch_nm", where);
    } catch (const json::out_of_range& e) {
        throw ConfigError(std::string(where) + ": missing required field (" + e.what() + ")");
    }

    p.epi_nm = obj.contains("epi_nm") ? require_number(obj, "epi_nm", where) : 0.0;
    p.sti_depth_nm =
        obj.contains("sti_depth_nm") ? require_number(obj, "sti_depth_nm", where) : 60.0;
    p.stability_coeff_per_nm2 = obj.contains("stability_coeff_per_nm2")
                                    ? require_number(obj, "stability_coeff_per_nm2", where)
                                    : 0.015;
    p.min_gapfill_nm =
        obj.contains("min_gapfill_nm") ? require_number(obj, "min_gapfill_nm", where) : 20.0;
    p.gate_pitches_per_device =
        obj.contains("gate_pitches_per_device")
            ? static_cast<int>(require_number(obj, "gate_pitches_per_device", where))
            : default_gate_pitches(p.kind);
    if (obj.contains("gate_length_nm"))
        p.gate_length_nm = require_number(obj, "gate_length_nm", where);

    return p;
}

bool is_blank(const std::string& text) {
    return std::all_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

std::vector<TechnologyProfile> parse_profiles(const std::string& text, std::string_view origin) {
    if (is_blank(text)) return {};

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string(origin) + ": " + e.what());
    }

    if (!doc.is_object() || !doc.contains("profiles") || !doc.at("profiles").is_array())
        throw ConfigError(std::string(origin) +
                          ": config must be an object with a 'profiles' array");

    std::vector<TechnologyProfile> profiles;
    std::set<std::string> seen;
    std::size_t index = 0;
    for (const auto& entry : doc.at("profiles")) {
        std::ostringstream where;
        where << origin << ": profiles[" << index << "]";
        TechnologyProfile p = profile_from_json(entry, where.str());

        const auto violations = validate(p);
        if (!violations.empty()) {
            std::ostringstream msg;
            msg << where.str() << " ('" << p.name << "'): invalid profile";
            for (const auto& v : violations) msg << "\n  " << to_string(v);
            throw ConfigError(msg.str());
        }
        if (!seen.insert(p.name).second)
            throw ConfigError(std::string(origin) + ": duplicate profile name '" + p.name + "'");

        profiles.push_back(std::move(p));
        ++index;
    }
    return profiles;
}

std::vector<TechnologyProfile> load_profiles(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_profiles(buffer.str(), path.string());
}

std::string serialize_profiles(const std::vector<TechnologyProfile>& profiles) {
    json list = json::array();
    for (const auto& p : profiles) {
        json obj = {
            {"name", p.name},
            {"kind", std::string(to_string(p.kind))},
            {"fin_pitch_nm", p.fin_pitch_nm},
            {"fin_width_nm", p.fin_width_nm},
            {"epi_nm", p.epi_nm},
            {"sti_depth_nm", p.sti_depth_nm},
            {"ion_per_um_mA", p.ion_per_um_mA},
            {"gate_pitch_nm", p.gate_pitch_nm},
            {"gate_pitches_per_device", p.gate_pitches_per_device},
            {"stability_coeff_per_nm2", p.stability_coeff_per_nm2},
            {"min_gapfill_nm", p.min_gapfill_nm},
        };
        if (p.gate_length_nm) obj["gate_length_nm"] = *p.gate_length_nm;
        list.push_back(std::move(obj));
    }
    return json{{"profiles", std::move(list)}}.dump(2) + "\n";
}

const TechnologyProfile* find_profile(const std::vector<TechnologyProfile>& profiles,
                                      std::string_view name) {
    for (const auto& p : profiles)
        if (p.name == name) return &p;
    return nullptr;
}

const TechnologyProfile* find_profile(const std::vector<TechnologyProfile>& profiles,
                                      DeviceKind kind, double fin_pitch_nm) {
    for (const auto& p : profiles)
        if (p.kind == kind && std::abs(p.fin_pitch_nm - fin_pitch_nm) < 1e-9) return &p;
    return nullptr;
}

}  // namespace fintool
