#pragma once

#include <string>
#include <vector>

namespace schatten {

struct CheckResult {
	std::string name;
	bool passed = false;
	std::string detail;
};

/// Deterministic self-checks: estimator vs. cycle enumeration, tuple-count
/// identities, the Schatten product inequality and the p = 1 Hutchinson
/// identity. `quick` shrinks the grids.
std::vector<CheckResult> run_verify(bool quick);

} // namespace schatten
