#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fintool {

enum class DeviceKind { FinFET, EDFinFET, DTEDFinFET };

/// Display/serialization name: "FinFET", "EDFinFET", "DTEDFinFET".
std::string_view to_string(DeviceKind kind);

/// Parses a kind name case-insensitively, ignoring '-' and '_'
/// (accepts "finfet", "EDFINFET", "DT-EDFinFET", ...).
std::optional<DeviceKind> device_kind_from_string(std::string_view text);

/// All parameters of one technology variant. Lengths in nm, drive current
/// density in mA per um of channel width. Immutable after validation; every
/// operation in the library is a pure function of profiles.
struct TechnologyProfile {
    std::string name;
    DeviceKind kind = DeviceKind::FinFET;
    double fin_pitch_nm = 0.0;             // P
    double fin_width_nm = 0.0;             // W_FIN (starting heavy-doped width for EDFinFET)
    double epi_nm = 0.0;                   // epitaxial layer thickness, 0 for FinFET
    double sti_depth_nm = 60.0;            // STI
    double ion_per_um_mA = 0.0;            // A
    double gate_pitch_nm = 0.0;            // contacted gate pitch, only used for absolute areas
    int gate_pitches_per_device = 2;       // 2 for FinFET, 3 otherwise (body contact)
    double stability_coeff_per_nm2 = 0.015;  // k
    double min_gapfill_nm = 20.0;          // smallest fillable trench
    std::optional<double> gate_length_nm;  // L_G, informational

    bool operator==(const TechnologyProfile&) const = default;
};

/// One invariant violation, naming the offending field.
struct Violation {
    std::string field;
    std::string message;
};

std::string to_string(const Violation& v);

/// Checks every profile invariant. Empty result means the profile is valid;
/// otherwise one entry per violated invariant. Pure and idempotent.
std::vector<Violation> validate(const TechnologyProfile& profile);

/// Non-fatal guideline checks (currently: FinFET fin width vs the
/// electrostatic W_FIN <= L_G/3 rule when gate_length_nm is present).
std::vector<std::string> advisories(const TechnologyProfile& profile);

/// Parses a profile list from config text (see README for the format).
/// `origin` is used in error messages. Applies defaults for omitted optional
/// fields, validates every profile and enforces unique names.
/// Throws ConfigError on any parse or validation failure.
std::vector<TechnologyProfile> parse_profiles(const std::string& text,
                                              std::string_view origin = "<string>");

/// Reads and parses a config file. An empty (or whitespace-only) file yields
/// an empty list. Throws ConfigError if the file cannot be read.
std::vector<TechnologyProfile> load_profiles(const std::filesystem::path& path);

/// Serializes profiles back to config text. load(serialize(load(x))) is
/// value-identical to load(x).
std::string serialize_profiles(const std::vector<TechnologyProfile>& profiles);

/// Returns the profile with the given name (exact, case-sensitive match),
/// or nullptr.
const TechnologyProfile* find_profile(const std::vector<TechnologyProfile>& profiles,
                                      std::string_view name);

/// Returns the first profile matching kind and fin pitch (within 1e-9 nm),
/// or nullptr.
const TechnologyProfile* find_profile(const std::vector<TechnologyProfile>& profiles,
                                      DeviceKind kind, double fin_pitch_nm);

}  // namespace fintool
