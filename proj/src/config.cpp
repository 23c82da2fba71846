#include <schatten/experiments.hpp>

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace schatten {

void ExperimentConfig::validate() const {
	if (p_list.empty() || k_list.empty())
		throw std::invalid_argument("experiment config: p_list and k_list must be non-empty");
	for (int p : p_list) {
		if (p < 1)
			throw std::invalid_argument("experiment config: every p must be >= 1");
	}
	for (std::size_t i = 0; i < k_list.size(); ++i) {
		if (k_list[i] < 1)
			throw std::invalid_argument("experiment config: every k must be >= 1");
		if (i > 0 && k_list[i] <= k_list[i - 1])
			throw std::invalid_argument("experiment config: k_list must be strictly increasing");
	}
	if (trials && *trials < 2)
		throw std::invalid_argument("experiment config: trials must be >= 2");
	parse_spectrum(spectrum);
}

ExperimentConfig load_experiment_config(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open config file: " + path);
	nlohmann::json j;
	try {
		in >> j;
	} catch (const nlohmann::json::parse_error& e) {
		throw std::invalid_argument("config " + path + ": " + e.what());
	}

	ExperimentConfig cfg;
	try {
		for (const auto& [key, value] : j.items()) {
			if (key == "spectrum")
				cfg.spectrum = value.get<std::string>();
			else if (key == "p_list")
				cfg.p_list = value.get<std::vector<int>>();
			else if (key == "k_list")
				cfg.k_list = value.get<std::vector<std::size_t>>();
			else if (key == "trials") {
				if (value.is_string()) {
					if (value.get<std::string>() != "paper")
						throw std::invalid_argument("trials must be \"paper\" or an integer");
					cfg.trials.reset();
				} else {
					cfg.trials = value.get<std::size_t>();
				}
			} else if (key == "master_seed")
				cfg.master_seed = value.get<std::uint64_t>();
			else if (key == "output_path")
				cfg.output_path = value.get<std::string>();
			else
				throw std::invalid_argument("unknown key '" + key + "'");
		}
	} catch (const nlohmann::json::exception& e) {
		throw std::invalid_argument("config " + path + ": " + e.what());
	} catch (const std::invalid_argument& e) {
		throw std::invalid_argument("config " + path + ": " + e.what());
	}
	if (cfg.spectrum.empty())
		throw std::invalid_argument("config " + path + ": missing 'spectrum'");
	cfg.validate();
	return cfg;
}

namespace {

std::vector<std::size_t> doubling(std::size_t from, std::size_t to) {
	std::vector<std::size_t> ks;
	for (std::size_t k = from; k <= to; k *= 2)
		ks.push_back(k);
	return ks;
}

ExperimentConfig make(std::string spectrum, std::vector<int> ps, std::vector<std::size_t> ks, std::uint64_t seed) {
	ExperimentConfig c;
	c.spectrum = std::move(spectrum);
	c.p_list = std::move(ps);
	c.k_list = std::move(ks);
	c.master_seed = seed;
	return c;
}

} // namespace

std::vector<std::string> preset_names() {
	return {"fig1", "geometric", "algebraic2", "algebraic4", "identity", "replicate"};
}

std::vector<ExperimentConfig> preset_configs(const std::string& name, bool full, std::uint64_t seed) {
	const auto ks = full ? doubling(10, 1280) : doubling(10, 160);
	if (name == "fig1")
		return {make("algebraic:alpha=1,n=10", {3}, ks, seed)};
	if (name == "geometric")
		return {make("geometric:rho=0.8,n=100", full ? std::vector<int>{4, 6, 8} : std::vector<int>{4}, ks, seed)};
	if (name == "algebraic2")
		return {make("algebraic:alpha=2,n=100", full ? std::vector<int>{3, 5, 7} : std::vector<int>{3}, ks, seed)};
	if (name == "algebraic4")
		return {make("algebraic:alpha=4,n=100", full ? std::vector<int>{2, 6, 10} : std::vector<int>{2}, ks, seed)};
	if (name == "identity")
		return {make("identity:n=100", full ? std::vector<int>{2, 4, 6} : std::vector<int>{2}, ks, seed)};
	if (name == "replicate") {
		std::vector<ExperimentConfig> out;
		const int t_max = full ? 10 : 4;
		for (int t = 1; t <= t_max; ++t)
			out.push_back(make("replicate:base=algebraic:alpha=4,n=10,t=" + std::to_string(t), {5}, {100}, seed));
		return out;
	}
	throw std::invalid_argument("unknown preset '" + name + "'");
}

} // namespace schatten
