#include "rep/report.hpp"

#include <iomanip>
#include <sstream>

namespace rep {

std::string InputDigest::hex() const {
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << hash_;
    return os.str();
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["version"] = kToolVersion;
    j["inputs_digest"] = inputs_digest;
    if (seed) j["seed"] = *seed;
    j["result"] = payload;
    return j;
}

namespace {

void render(const nlohmann::ordered_json& value, const std::string& prefix, std::ostream& os) {
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items()) {
            const std::string path = prefix.empty() ? key : prefix + "." + key;
            render(sub, path, os);
        }
    } else if (value.is_array()) {
        int index = 0;
        for (const auto& sub : value) render(sub, prefix + "[" + std::to_string(index++) + "]", os);
    } else {
        os << prefix << ": ";
        if (value.is_string())
            os << value.get<std::string>();
        else
            os << value.dump();
        os << "\n";
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "version: " << kToolVersion << "\n";
    os << "inputs_digest: " << inputs_digest << "\n";
    if (seed) os << "seed: " << *seed << "\n";
    render(payload, "result", os);
    return os.str();
}

}  // namespace rep
