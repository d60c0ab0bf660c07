#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace rep {

inline constexpr const char* kToolVersion = "0.1.0";

// Machine-readable command result with stable field ordering.
struct Report {
    std::string command;
    std::string inputs_digest;
    std::optional<unsigned long> seed;
    nlohmann::ordered_json payload;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

// FNV-1a over the concatenated input file contents.
class InputDigest {
  public:
    void feed(const std::string& data) {
        for (unsigned char c : data) {
            hash_ ^= c;
            hash_ *= 0x100000001b3ULL;
        }
    }
    std::string hex() const;

  private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace rep
