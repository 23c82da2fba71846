#pragma once

#include <schatten/rng.hpp>
#include <schatten/spectrum.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schatten {

/// Default trial policy: 10^5 below k = 100, 3000 from there on.
std::size_t paper_trials(std::size_t k);

struct ExperimentConfig {
	std::string spectrum;               ///< spectrum grammar, e.g. "geometric:rho=0.8,n=100"
	std::vector<int> p_list;
	std::vector<std::size_t> k_list;    ///< strictly increasing
	std::optional<std::size_t> trials;  ///< nullopt: paper_trials(k)
	std::uint64_t master_seed = 0;
	std::string output_path;

	std::size_t trials_for(std::size_t k) const { return trials ? *trials : paper_trials(k); }
	/// Throws std::invalid_argument on empty lists, non-positive entries,
	/// non-increasing k_list, trials < 2 or an unparsable spectrum.
	void validate() const;
};

/// Reads the JSON form: {"spectrum": ..., "p_list": [...], "k_list": [...],
/// "trials": "paper" | <int>, "master_seed": <u64>, "output_path": ...}.
ExperimentConfig load_experiment_config(const std::string& path);

/// Named reference grids. `full` selects the complete
/// k range (10 .. 1280); otherwise a reduced range suitable for CI.
std::vector<ExperimentConfig> preset_configs(const std::string& name, bool full, std::uint64_t seed);
std::vector<std::string> preset_names();

struct VarianceRow {
	std::size_t n = 0;
	int p = 0;
	std::size_t k = 0;
	std::size_t trials = 0;
	double mean_estimate = 0.0;
	double empirical_variance = 0.0;
	double variance_stderr = 0.0;
	double truth_2p = 0.0;
	double kv = 0.0;
	double thm2 = 0.0;
	double first_order = 0.0;
	double second_order = 0.0;

	bool operator==(const VarianceRow&) const = default;
};

struct VarianceReport {
	std::vector<VarianceRow> rows;
	std::vector<std::string> warnings; ///< one per skipped (p, k) cell
};

struct MomentSummary {
	double mean = 0.0;
	double variance = 0.0;        ///< divisor T - 1
	double variance_stderr = 0.0; ///< sqrt((m4 - (T-3)/(T-1) var^2) / T)
};

/// Requires at least two samples. Sums are pairwise, in index order.
MomentSummary sample_variance(std::span<const double> samples);

enum class TrialExecution { serial, parallel };

struct RunOptions {
	TrialExecution execution = TrialExecution::parallel;
	int threads = 0;                ///< 0: OpenMP default
	std::uint64_t trial_offset = 0; ///< first global trial index
};

/// theta_hat_{2p} for trials [first_trial, first_trial + trials), trial i
/// sketched with derive_trial_rng(seed, i). The serial path is the reference
/// implementation; the parallel path must return identical values.
std::vector<double> run_trials(const SingularSpectrum& s, int p, std::size_t k, std::size_t trials,
                               std::uint64_t seed, std::uint64_t first_trial, TrialExecution execution,
                               int threads = 0);

/// Runs every (p, k) cell of the grid. Cells with p > k are skipped and noted
/// in `warnings`. If cfg.output_path is set and its directory does not exist,
/// throws std::runtime_error before running any trial.
VarianceReport run_variance_experiment(const ExperimentConfig& cfg, const RunOptions& opts = {});

struct LemmaCheck {
	double estimate = 0.0;
	double stderr_ = 0.0;
	double reference = 0.0;
	bool is_bound = false; ///< reference is an upper bound (r >= 2), not an exact value
};

/// Monte Carlo estimate of E[f] for the canonical tuple pair with r shared
/// indices: i = (1..p), j = (1..r, p+1..2p-r). Trial t uses rng.substream(t).
LemmaCheck mc_check_lemma_f(int r, int p, std::size_t k, const SingularSpectrum& s, std::size_t trials,
                            const RngStream& rng, TrialExecution execution = TrialExecution::parallel);

/// Header plus one row per cell, 17 significant digits. Throws
/// std::invalid_argument on an empty report (no file is created) and
/// std::runtime_error with the path on I/O failure.
void emit_csv(const VarianceReport& report, const std::string& path);
std::string format_csv(const VarianceReport& report);
VarianceReport parse_csv(const std::string& path);

inline constexpr const char* kCsvHeader =
	"n,p,k,trials,mean_estimate,empirical_variance,variance_stderr,truth_2p,kv,thm2,first_order,second_order";

} // namespace schatten
