#ifndef POLYMOM_VERIFY_HPP
#define POLYMOM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polymom/vertex_config.hpp"

namespace polymom::verify {

struct SuiteResult {
  bool passed = false;
  nlohmann::json report;
};

std::vector<std::string> suite_names();

// Deterministic under a fixed seed; the report carries one entry per check.
// When a configuration is supplied, the per-configuration checks run on it
// (in place of the seeded random draws of the matching vertex count).
SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      const VertexConfig<ExactComplex>* cfg = nullptr);

SuiteResult oracle_suite(std::uint64_t seed, const VertexConfig<ExactComplex>* cfg = nullptr);
SuiteResult recurrence_suite(std::uint64_t seed, const VertexConfig<ExactComplex>* cfg = nullptr);
SuiteResult inverse_suite(std::uint64_t seed, const VertexConfig<ExactComplex>* cfg = nullptr);
SuiteResult orbit_suite(std::uint64_t seed);
SuiteResult span_suite(std::uint64_t seed);
SuiteResult relations_suite(std::uint64_t seed);
SuiteResult triangle_suite(std::uint64_t seed, const VertexConfig<ExactComplex>* cfg = nullptr);
SuiteResult galois3_suite(std::uint64_t seed);
SuiteResult all_suites(std::uint64_t seed, const VertexConfig<ExactComplex>* cfg = nullptr);

}  // namespace polymom::verify

#endif
