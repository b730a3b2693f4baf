#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace berrut {

struct VerifyOptions {
    std::uint64_t seed = 0;
    int samples = 1000;                                  // randomized sections
    std::vector<std::int64_t> m_values{256, 4096, 65536}; // main-term sizes
};

struct SectionResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;
};

/// Names of all verification sections, in execution order.
const std::vector<std::string>& verify_section_names();

/// Runs one section; throws std::invalid_argument for unknown names.
SectionResult run_verify_section(const std::string& name, const VerifyOptions& opt);

/// Runs the named sections (all of them when `only` is empty).
std::vector<SectionResult> run_verify(const VerifyOptions& opt,
                                      const std::vector<std::string>& only = {});

} // namespace berrut
