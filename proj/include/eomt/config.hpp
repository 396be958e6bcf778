#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "eomt/errors.hpp"
#include "eomt/params.hpp"

namespace eomt::cli {

// SystemParams in file form plus output routing. Unknown config keys are
// rejected; missing ones take the built-in profile values.
struct RunConfig {
    params::SystemParams params{};
    std::string format;   // "json", "csv" or empty for the command default
    std::string out_path; // empty writes to stdout
};

inline nlohmann::json to_json(const params::SystemParams& p)
{
    return nlohmann::json{
        {"g_o_hz", p.g_o},
        {"g_e_hz", p.g_e},
        {"gamma_o_hz", p.gamma_o},
        {"gamma_e_hz", p.gamma_e},
        {"gamma_o_int_hz", p.gamma_o_int},
        {"gamma_e_int_hz", p.gamma_e_int},
        {"gamma_m_hz", p.gamma_m},
        {"omega_o_hz", p.omega_o},
        {"omega_e_hz", p.omega_e},
        {"omega_m_hz", p.omega_m},
        {"temperature_k", p.temperature},
        {"n_pump_o", p.n_pump_o},
        {"n_pump_e", p.n_pump_e},
        {"conventions",
         {{"occupancy_extra_two_pi", p.conventions.occupancy_extra_two_pi},
          {"gamma_m_extra_division", p.conventions.gamma_m_extra_division}}}};
}

inline params::SystemParams params_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw validation_error("config root must be a JSON object");
    params::SystemParams p;
    const auto positive = [](const nlohmann::json& v, const std::string& key) {
        if (!v.is_number())
            throw validation_error("config key " + key + " must be a number");
        const double x = v.get<double>();
        if (!(x > 0.0))
            throw validation_error("config key " + key + " must be > 0");
        return x;
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "g_o_hz")
            p.g_o = positive(value, key);
        else if (key == "g_e_hz")
            p.g_e = positive(value, key);
        else if (key == "gamma_o_hz")
            p.gamma_o = positive(value, key);
        else if (key == "gamma_e_hz")
            p.gamma_e = positive(value, key);
        else if (key == "gamma_o_int_hz")
            p.gamma_o_int = positive(value, key);
        else if (key == "gamma_e_int_hz")
            p.gamma_e_int = positive(value, key);
        else if (key == "gamma_m_hz")
            p.gamma_m = positive(value, key);
        else if (key == "omega_o_hz")
            p.omega_o = positive(value, key);
        else if (key == "omega_e_hz")
            p.omega_e = positive(value, key);
        else if (key == "omega_m_hz")
            p.omega_m = positive(value, key);
        else if (key == "n_pump_o")
            p.n_pump_o = positive(value, key);
        else if (key == "n_pump_e")
            p.n_pump_e = positive(value, key);
        else if (key == "temperature_k") {
            if (!value.is_number())
                throw validation_error("config key temperature_k must be a number");
            const double t = value.get<double>();
            if (t < 0.0)
                throw validation_error("config key temperature_k must be >= 0");
            p.temperature = t;
        } else if (key == "conventions") {
            if (!value.is_object())
                throw validation_error("config key conventions must be an object");
            for (const auto& [ck, cv] : value.items()) {
                if (ck != "occupancy_extra_two_pi" && ck != "gamma_m_extra_division")
                    throw validation_error("unknown config key conventions." + ck);
                if (!cv.is_boolean())
                    throw validation_error("config key conventions." + ck + " must be a boolean");
                if (ck == "occupancy_extra_two_pi")
                    p.conventions.occupancy_extra_two_pi = cv.get<bool>();
                else
                    p.conventions.gamma_m_extra_division = cv.get<bool>();
            }
        } else {
            throw validation_error("unknown config key " + key);
        }
    }
    params::validate(p);
    return p;
}

inline RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("config parse error: ") + e.what());
    }
    RunConfig rc;
    rc.params = params_from_json(j);
    return rc;
}

} // namespace eomt::cli
