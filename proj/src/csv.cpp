#include <schatten/experiments.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace schatten {

namespace {

void put(std::string& out, double v) {
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	out += buf;
}

} // namespace

std::string format_csv(const VarianceReport& report) {
	std::string out = kCsvHeader;
	out += '\n';
	for (const auto& r : report.rows) {
		out += std::to_string(r.n) + ',' + std::to_string(r.p) + ',' + std::to_string(r.k) + ',' +
		       std::to_string(r.trials);
		for (double v : {r.mean_estimate, r.empirical_variance, r.variance_stderr, r.truth_2p, r.kv, r.thm2,
		                 r.first_order, r.second_order}) {
			out += ',';
			put(out, v);
		}
		out += '\n';
	}
	return out;
}

void emit_csv(const VarianceReport& report, const std::string& path) {
	if (report.rows.empty())
		throw std::invalid_argument("emit_csv: report has no rows, nothing written to " + path);
	const std::string text = format_csv(report);
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out)
		throw std::runtime_error("emit_csv: cannot open " + path + " for writing");
	out << text;
	out.flush();
	if (!out)
		throw std::runtime_error("emit_csv: write failed for " + path);
}

VarianceReport parse_csv(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("parse_csv: cannot open " + path);
	std::string line;
	if (!std::getline(in, line) || line != kCsvHeader)
		throw std::runtime_error("parse_csv: " + path + ": unexpected header");

	VarianceReport report;
	std::size_t lineno = 1;
	while (std::getline(in, line)) {
		++lineno;
		if (line.empty())
			continue;
		std::vector<std::string> f;
		std::stringstream ss(line);
		for (std::string cell; std::getline(ss, cell, ',');)
			f.push_back(cell);
		if (f.size() != 12)
			throw std::runtime_error("parse_csv: " + path + ":" + std::to_string(lineno) + ": expected 12 fields");
		auto d = [&](std::size_t i) {
			char* end = nullptr;
			const double v = std::strtod(f[i].c_str(), &end);
			if (end == f[i].c_str() || *end != '\0')
				throw std::runtime_error("parse_csv: " + path + ":" + std::to_string(lineno) + ": bad number '" +
				                         f[i] + "'");
			return v;
		};
		auto u = [&](std::size_t i) { return static_cast<std::size_t>(std::stoull(f[i])); };
		report.rows.push_back({u(0), std::stoi(f[1]), u(2), u(3), d(4), d(5), d(6), d(7), d(8), d(9), d(10), d(11)});
	}
	return report;
}

} // namespace schatten
