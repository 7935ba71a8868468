#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hforge {

// A single failed check: which axiom or condition, a human-readable detail,
// and the concrete witness tuple (ids into the structure under test).
struct Violation {
  std::string axiom;
  std::string detail;
  std::vector<std::int64_t> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }

  void add(std::string axiom, std::string detail,
           std::vector<std::int64_t> witness = {}) {
    violations.push_back({std::move(axiom), std::move(detail), std::move(witness)});
  }

  bool cites(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }

  std::string summary() const;
};

// Malformed input: dangling ids, mismatched dimensions, unparsable tables.
// Distinct from axiom violations, which are reported, not thrown.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation does not fit in the configured bounds.
struct BoundError : std::runtime_error {
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (e.g. object not cofibrant).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Something a validated input guarantees failed anyway; indicates a defect
// in this library, never in user data.
struct InternalConsistencyError : std::logic_error {
  explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hforge
