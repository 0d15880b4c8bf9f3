#pragma once

#include <optional>
#include <string>

#include "vlo/pr_oracle.hpp"
#include "vlo/vl2k_oracle.hpp"

namespace vlo {

/// Serialized preprocessing bundle: versioned binary container with one
/// section per data-structure item, tied to the source graph by content
/// hash. Serialization is canonical, so identical builds produce identical
/// bytes and load/serialize round-trips are bit-identical.
struct Bundle {
    enum class Kind : std::uint8_t { PathReporting = 0, TwoSided = 1 };

    std::uint32_t version = 1;
    std::uint64_t graphHash = 0;
    Kind kind = Kind::PathReporting;
    std::optional<PathReportingOracle> pr;
    std::optional<TwoSidedOracle> ts;
};

std::string serializeBundle(const PathReportingOracle& o);
std::string serializeBundle(const TwoSidedOracle& o);

// Rebinds the oracle to g; throws if the bundle was built from a different
// graph (content hash mismatch) or the container is malformed.
Bundle loadBundle(const std::string& bytes, const LabeledGraph& g);

void writeFile(const std::string& path, const std::string& bytes);
std::string readFile(const std::string& path);

}  // namespace vlo
