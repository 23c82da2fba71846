#include <schatten/cli.hpp>

#include <schatten/bounds.hpp>
#include <schatten/estimator.hpp>
#include <schatten/experiments.hpp>
#include <schatten/verify.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace schatten {

namespace {

std::string num(double v) {
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

struct EstimateArgs {
	std::string spectrum;
	int p = 0;
	std::size_t k = 0;
	std::uint64_t seed = 0;
	std::size_t trials = 1;
	std::string format = "csv";
};

struct BoundsArgs {
	std::string spectrum;
	int p = 0;
	std::vector<std::size_t> k;
	std::string format = "csv";
};

struct ExperimentArgs {
	std::string config;
	std::string preset;
	std::string output;
	std::uint64_t seed = 0;
	bool full = false;
	bool serial = false;
};

int run_estimate(const EstimateArgs& a, int threads, std::ostream& out) {
	const SingularSpectrum s = parse_spectrum(a.spectrum);
	if (a.p < 1 || static_cast<std::size_t>(a.p) > a.k)
		throw std::invalid_argument("need 1 <= p <= k (estimator identically zero beyond k)");
	const auto values = run_trials(s, a.p, a.k, a.trials, a.seed, 0, TrialExecution::parallel, threads);

	double mean = 0.0, stderr_mean = std::nan("");
	if (values.size() >= 2) {
		const MomentSummary m = sample_variance(values);
		mean = m.mean;
		stderr_mean = std::sqrt(m.variance / static_cast<double>(values.size()));
	} else {
		mean = values.front();
	}

	if (a.format == "kv") {
		for (std::size_t i = 0; i < values.size(); ++i)
			out << "trial=" << i << " theta_hat=" << num(values[i]) << '\n';
		out << "mean=" << num(mean) << " stderr=" << num(stderr_mean) << '\n';
	} else {
		out << "trial,theta_hat\n";
		for (std::size_t i = 0; i < values.size(); ++i)
			out << i << ',' << num(values[i]) << '\n';
		out << "mean=" << num(mean) << ",stderr=" << num(stderr_mean) << '\n';
	}
	return 0;
}

int run_bounds(const BoundsArgs& a, std::ostream& out) {
	const SingularSpectrum s = parse_spectrum(a.spectrum);
	if (a.format == "csv")
		out << "k,kv,thm2,first_order,second_order,truth_2p\n";
	for (std::size_t k : a.k) {
		const BoundSet b = compute_bounds(k, a.p, s);
		if (a.format == "kv") {
			out << "k=" << k << " kv=" << num(b.kv) << " thm2=" << num(b.thm2) << " first_order=" << num(b.first_order)
			    << " second_order=" << num(b.second_order) << " truth_2p=" << num(b.truth_2p) << '\n';
		} else {
			out << k << ',' << num(b.kv) << ',' << num(b.thm2) << ',' << num(b.first_order) << ','
			    << num(b.second_order) << ',' << num(b.truth_2p) << '\n';
		}
	}
	return 0;
}

int run_experiment(const ExperimentArgs& a, int threads, std::ostream& out, std::ostream& err) {
	std::vector<ExperimentConfig> configs;
	if (!a.config.empty())
		configs.push_back(load_experiment_config(a.config));
	else
		configs = preset_configs(a.preset, a.full, a.seed);

	std::string output = a.output.empty() ? configs.front().output_path : a.output;
	for (auto& c : configs)
		c.output_path = output;

	RunOptions opts;
	opts.threads = threads;
	opts.execution = a.serial ? TrialExecution::serial : TrialExecution::parallel;

	VarianceReport all;
	for (const auto& c : configs) {
		VarianceReport r = run_variance_experiment(c, opts);
		for (const auto& row : r.rows)
			opts.trial_offset += row.trials;
		all.rows.insert(all.rows.end(), r.rows.begin(), r.rows.end());
		all.warnings.insert(all.warnings.end(), r.warnings.begin(), r.warnings.end());
	}
	for (const auto& w : all.warnings)
		err << "warning: " << w << '\n';
	if (all.rows.empty())
		throw std::runtime_error("experiment produced no rows (every cell skipped)");

	if (output.empty())
		out << format_csv(all);
	else
		emit_csv(all, output);
	return all.warnings.empty() ? 0 : 2;
}

int run_verify_cmd(bool quick, std::ostream& out) {
	bool ok = true;
	for (const auto& c : run_verify(quick)) {
		out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
		ok = ok && c.passed;
	}
	out << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
	return ok ? 0 : 1;
}

} // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
	CLI::App app{"Schatten-2p norm estimation from a single Gaussian sketch", "schatten"};
	app.require_subcommand(1);
	int threads = 0;
	app.add_option("--threads", threads, "Worker threads (default: machine parallelism)")->check(CLI::NonNegativeNumber);

	EstimateArgs est;
	auto* estimate = app.add_subcommand("estimate", "Run the estimator on fresh sketches of a spectrum");
	estimate->add_option("--spectrum", est.spectrum, "Spectrum, e.g. geometric:rho=0.8,n=100")->required();
	estimate->add_option("--p", est.p, "Schatten order parameter p (estimates ||A||_2p^2p)")->required();
	estimate->add_option("--k", est.k, "Sketch width")->required();
	estimate->add_option("--seed", est.seed, "Master seed");
	estimate->add_option("--trials", est.trials, "Number of independent sketches")->check(CLI::PositiveNumber);
	estimate->add_option("--format", est.format, "Output format")->check(CLI::IsMember({"csv", "kv"}));
	estimate->add_option("--threads", threads, "Worker threads")->check(CLI::NonNegativeNumber);

	BoundsArgs bnd;
	auto* bounds = app.add_subcommand("bounds", "Print variance bounds and expansions");
	bounds->add_option("--spectrum", bnd.spectrum, "Spectrum specification")->required();
	bounds->add_option("--p", bnd.p, "Schatten order parameter p")->required();
	bounds->add_option("--k", bnd.k, "Comma-separated sketch widths")->required()->delimiter(',');
	bounds->add_option("--format", bnd.format, "Output format")->check(CLI::IsMember({"csv", "kv"}));

	ExperimentArgs exp;
	auto* experiment = app.add_subcommand("experiment", "Monte Carlo variance experiment over a (p, k) grid");
	auto* cfg_opt = experiment->add_option("--config", exp.config, "JSON experiment config")->check(CLI::ExistingFile);
	auto* preset_opt = experiment->add_option("--preset", exp.preset, "Named figure grid")
	                       ->check(CLI::IsMember(preset_names()));
	cfg_opt->excludes(preset_opt);
	experiment->add_option("--output", exp.output, "CSV output path (overrides config; stdout if empty)");
	experiment->add_option("--seed", exp.seed, "Master seed for presets");
	experiment->add_flag("--full", exp.full, "Use the complete figure grid for presets");
	experiment->add_flag("--serial", exp.serial, "Use the serial reference trial loop");
	experiment->add_option("--threads", threads, "Worker threads")->check(CLI::NonNegativeNumber);

	bool quick = false;
	auto* verify = app.add_subcommand("verify", "Run the deterministic self-check batteries");
	verify->add_flag("--quick", quick, "Smaller grids");

	try {
		app.parse(argc, argv);
		if (experiment->parsed() && exp.config.empty() && exp.preset.empty())
			throw CLI::RequiredError("experiment needs --config or --preset");
	} catch (const CLI::CallForHelp& e) {
		app.exit(e, out, err);
		return 0;
	} catch (const CLI::CallForAllHelp& e) {
		app.exit(e, out, err);
		return 0;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << '\n';
		auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
		err << sub->help();
		return 64;
	}

	try {
		if (estimate->parsed())
			return run_estimate(est, threads, out);
		if (bounds->parsed())
			return run_bounds(bnd, out);
		if (experiment->parsed())
			return run_experiment(exp, threads, out, err);
		return run_verify_cmd(quick, out);
	} catch (const std::exception& e) {
		err << "error: " << e.what() << '\n';
		return 1;
	}
}

} // namespace schatten
