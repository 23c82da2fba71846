#include <schatten/experiments.hpp>

#include <schatten/bounds.hpp>
#include <schatten/estimator.hpp>
#include <schatten/sketch.hpp>

#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schatten {

std::size_t paper_trials(std::size_t k) {
	return k < 100 ? 100000 : 3000;
}

namespace {

double pairwise_sum(std::span<const double> x) {
	if (x.size() <= 16) {
		double s = 0.0;
		for (double v : x)
			s += v;
		return s;
	}
	const std::size_t half = x.size() / 2;
	return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

int resolve_threads(int threads) {
#ifdef _OPENMP
	return threads > 0 ? threads : omp_get_max_threads();
#else
	(void)threads;
	return 1;
#endif
}

double one_trial(const SingularSpectrum& s, int p, std::size_t k, std::uint64_t seed, std::uint64_t trial) {
	RngStream rng = derive_trial_rng(seed, trial);
	const SketchMatrix y = gaussian_sketch_diag(s, k, rng);
	return theta_hat(gram(y), p);
}

} // namespace

MomentSummary sample_variance(std::span<const double> samples) {
	const std::size_t n = samples.size();
	if (n < 2)
		throw std::invalid_argument("sample_variance: need at least 2 samples");
	const double t = static_cast<double>(n);
	const double mean = pairwise_sum(samples) / t;

	std::vector<double> sq(n), quad(n);
	for (std::size_t i = 0; i < n; ++i) {
		const double d = samples[i] - mean;
		sq[i] = d * d;
		quad[i] = sq[i] * sq[i];
	}
	const double m2 = pairwise_sum(sq);
	const double variance = m2 / (t - 1.0);
	const double m4 = pairwise_sum(quad) / t;
	const double v = (m4 - (t - 3.0) / (t - 1.0) * variance * variance) / t;
	return {mean, variance, std::sqrt(std::max(v, 0.0))};
}

std::vector<double> run_trials(const SingularSpectrum& s, int p, std::size_t k, std::size_t trials,
                               std::uint64_t seed, std::uint64_t first_trial, TrialExecution execution,
                               int threads) {
	if (p < 1 || static_cast<std::size_t>(p) > k)
		throw std::invalid_argument("run_trials: need 1 <= p <= k");
	std::vector<double> values(trials);
	if (execution == TrialExecution::serial) {
		for (std::size_t i = 0; i < trials; ++i)
			values[i] = one_trial(s, p, k, seed, first_trial + i);
		return values;
	}

	const auto count = static_cast<std::int64_t>(trials);
	[[maybe_unused]] const int nthreads = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
	for (std::int64_t i = 0; i < count; ++i)
		values[static_cast<std::size_t>(i)] = one_trial(s, p, k, seed, first_trial + static_cast<std::uint64_t>(i));
	return values;
}

VarianceReport run_variance_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
	cfg.validate();
	if (!cfg.output_path.empty()) {
		namespace fs = std::filesystem;
		const fs::path out(cfg.output_path);
		const fs::path dir = out.has_parent_path() ? out.parent_path() : fs::path(".");
		std::error_code ec;
		if (!fs::is_directory(dir, ec))
			throw std::runtime_error("output directory does not exist: " + dir.string() + " (for " +
			                         cfg.output_path + ")");
		if (fs::is_directory(out, ec))
			throw std::runtime_error("output path is a directory: " + cfg.output_path);
	}

	const SingularSpectrum s = parse_spectrum(cfg.spectrum);
	VarianceReport report;
	std::uint64_t next_trial = opts.trial_offset;
	for (int p : cfg.p_list) {
		for (std::size_t k : cfg.k_list) {
			if (static_cast<std::size_t>(p) > k) {
				report.warnings.push_back("skipped cell p=" + std::to_string(p) + ", k=" + std::to_string(k) +
				                          ": p exceeds k");
				continue;
			}
			const std::size_t trials = cfg.trials_for(k);
			const auto values = run_trials(s, p, k, trials, cfg.master_seed, next_trial, opts.execution, opts.threads);
			next_trial += trials;

			const MomentSummary m = sample_variance(values);
			const BoundSet b = compute_bounds(k, p, s);
			report.rows.push_back({s.nominal_n(), p, k, trials, m.mean, m.variance, m.variance_stderr, b.truth_2p,
			                       b.kv, b.thm2, b.first_order, b.second_order});
		}
	}
	return report;
}

LemmaCheck mc_check_lemma_f(int r, int p, std::size_t k, const SingularSpectrum& s, std::size_t trials,
                            const RngStream& rng, TrialExecution execution) {
	if (p < 1)
		throw std::invalid_argument("mc_check_lemma_f: p must be >= 1");
	if (r < 0 || r > p)
		throw std::invalid_argument("mc_check_lemma_f: need 0 <= r <= p");
	if (static_cast<std::size_t>(2 * p - r) > k)
		throw std::invalid_argument("mc_check_lemma_f: 2p - r > k, no tuple pair with r shared indices");
	if (trials < 2)
		throw std::invalid_argument("mc_check_lemma_f: need at least 2 trials");

	const auto up = static_cast<std::size_t>(p);
	std::vector<std::size_t> i_idx(up), j_idx(up);
	for (std::size_t h = 0; h < up; ++h)
		i_idx[h] = h;
	for (std::size_t h = 0; h < up; ++h)
		j_idx[h] = h < static_cast<std::size_t>(r) ? h : h + up - static_cast<std::size_t>(r);

	auto one = [&](std::size_t t) {
		RngStream stream = rng.substream(t);
		const Matrix z = kernels::gram(gaussian_sketch_diag(s, k, stream).data);
		double f = 1.0;
		for (std::size_t h = 0; h < up; ++h)
			f *= z(i_idx[h], i_idx[(h + 1) % up]) * z(j_idx[h], j_idx[(h + 1) % up]);
		return f;
	};

	std::vector<double> values(trials);
	if (execution == TrialExecution::serial) {
		for (std::size_t t = 0; t < trials; ++t)
			values[t] = one(t);
	} else {
		const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static)
		for (std::int64_t t = 0; t < count; ++t)
			values[static_cast<std::size_t>(t)] = one(static_cast<std::size_t>(t));
	}

	const MomentSummary m = sample_variance(values);
	LemmaCheck out;
	out.estimate = m.mean;
	out.stderr_ = std::sqrt(m.variance / static_cast<double>(trials));
	out.is_bound = r >= 2;
	out.reference = out.is_bound ? f_upper(r, s, p) : expected_f(r, s, p);
	return out;
}

} // namespace schatten
