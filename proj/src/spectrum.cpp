#include <schatten/spectrum.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace schatten {

SingularSpectrum::SingularSpectrum(std::vector<double> values, std::size_t nominal_n)
	: values_(std::move(values)), nominal_n_(nominal_n == 0 ? values_.size() : nominal_n) {
	for (double v : values_) {
		if (!std::isfinite(v) || v < 0.0)
			throw std::invalid_argument("SingularSpectrum: singular values must be finite and >= 0");
	}
	if (nominal_n_ < values_.size())
		throw std::invalid_argument("SingularSpectrum: nominal_n smaller than number of stored values");
	std::sort(values_.begin(), values_.end(), std::greater<>());
}

SingularSpectrum SingularSpectrum::scaled(double c) const {
	if (!(c >= 0.0) || !std::isfinite(c))
		throw std::invalid_argument("SingularSpectrum::scaled: factor must be finite and >= 0");
	std::vector<double> v(values_);
	for (double& x : v)
		x *= c;
	return SingularSpectrum(std::move(v), nominal_n_);
}

double schatten_power(const SingularSpectrum& s, int q) {
	if (q < 1)
		throw std::invalid_argument("schatten_power: exponent q must be >= 1");
	auto vals = s.values();
	double sum = 0.0;
	for (auto it = vals.rbegin(); it != vals.rend(); ++it)
		sum += std::pow(*it, q);
	return sum;
}

SingularSpectrum geometric_spectrum(double rho, std::size_t n) {
	if (n == 0)
		throw std::invalid_argument("geometric spectrum: n must be >= 1");
	if (!(rho > 0.0 && rho <= 1.0))
		throw std::invalid_argument("geometric spectrum: rho must lie in (0, 1]");
	std::vector<double> v(n);
	for (std::size_t i = 0; i < n; ++i)
		v[i] = std::pow(rho, static_cast<double>(i + 1));
	return SingularSpectrum(std::move(v));
}

SingularSpectrum algebraic_spectrum(double alpha, std::size_t n) {
	if (n == 0)
		throw std::invalid_argument("algebraic spectrum: n must be >= 1");
	if (!(alpha >= 0.0) || !std::isfinite(alpha))
		throw std::invalid_argument("algebraic spectrum: alpha must be finite and >= 0");
	std::vector<double> v(n);
	for (std::size_t i = 0; i < n; ++i)
		v[i] = std::pow(static_cast<double>(i + 1), -alpha);
	return SingularSpectrum(std::move(v));
}

SingularSpectrum identity_spectrum(std::size_t n) {
	if (n == 0)
		throw std::invalid_argument("identity spectrum: n must be >= 1");
	return SingularSpectrum(std::vector<double>(n, 1.0));
}

SingularSpectrum builtin_spectrum(SpectrumKind kind, double param, std::size_t n) {
	switch (kind) {
	case SpectrumKind::geometric: return geometric_spectrum(param, n);
	case SpectrumKind::algebraic: return algebraic_spectrum(param, n);
	case SpectrumKind::identity: return identity_spectrum(n);
	}
	throw std::invalid_argument("builtin_spectrum: unknown kind");
}

SingularSpectrum block_replicate(const SingularSpectrum& base, int t) {
	if (t < 1)
		throw std::invalid_argument("block_replicate: t must be >= 1");
	if (t > 40)
		throw std::invalid_argument("block_replicate: t too large");
	const std::size_t copies = std::size_t{1} << (t - 1);
	std::vector<double> v;
	v.reserve(base.size() * copies);
	for (std::size_t c = 0; c < copies; ++c)
		v.insert(v.end(), base.values().begin(), base.values().end());
	return SingularSpectrum(std::move(v), base.nominal_n() * copies);
}

namespace {

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
	throw std::invalid_argument("invalid spectrum '" + std::string(spec) + "': " + why);
}

std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
		s.remove_prefix(1);
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
		s.remove_suffix(1);
	return s;
}

double to_double(std::string_view full, std::string_view text) {
	text = trim(text);
	double v = 0.0;
	auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
	if (ec != std::errc() || ptr != text.data() + text.size())
		bad_spec(full, "not a number: '" + std::string(text) + "'");
	return v;
}

std::size_t to_size(std::string_view full, std::string_view text) {
	text = trim(text);
	std::size_t v = 0;
	auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
	if (ec != std::errc() || ptr != text.data() + text.size())
		bad_spec(full, "not a non-negative integer: '" + std::string(text) + "'");
	return v;
}

// "a=1,b=2" -> {a:"1", b:"2"}; rejects keys outside `allowed`
std::map<std::string, std::string_view> key_values(std::string_view full, std::string_view body,
                                                   std::initializer_list<std::string_view> allowed) {
	std::map<std::string, std::string_view> out;
	while (!body.empty()) {
		auto comma = body.find(',');
		auto item = body.substr(0, comma);
		body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
		auto eq = item.find('=');
		if (eq == std::string_view::npos)
			bad_spec(full, "expected key=value, got '" + std::string(item) + "'");
		std::string key(trim(item.substr(0, eq)));
		if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
			bad_spec(full, "unknown key '" + key + "'");
		if (!out.emplace(key, item.substr(eq + 1)).second)
			bad_spec(full, "duplicate key '" + key + "'");
	}
	for (auto k : allowed) {
		if (!out.contains(std::string(k)))
			bad_spec(full, "missing key '" + std::string(k) + "'");
	}
	return out;
}

} // namespace

SingularSpectrum parse_spectrum(std::string_view spec) {
	const std::string_view full = spec;
	spec = trim(spec);
	auto colon = spec.find(':');
	if (colon == std::string_view::npos)
		bad_spec(full, "expected '<kind>:<params>'");
	auto kind = trim(spec.substr(0, colon));
	auto body = spec.substr(colon + 1);

	try {
		if (kind == "geometric") {
			auto kv = key_values(full, body, {"rho", "n"});
			return geometric_spectrum(to_double(full, kv["rho"]), to_size(full, kv["n"]));
		}
		if (kind == "algebraic") {
			auto kv = key_values(full, body, {"alpha", "n"});
			return algebraic_spectrum(to_double(full, kv["alpha"]), to_size(full, kv["n"]));
		}
		if (kind == "identity") {
			auto kv = key_values(full, body, {"n"});
			return identity_spectrum(to_size(full, kv["n"]));
		}
		if (kind == "replicate") {
			// the base spec may itself contain commas, so split on the last ",t="
			auto tpos = body.rfind(",t=");
			if (!body.starts_with("base=") || tpos == std::string_view::npos)
				bad_spec(full, "expected 'replicate:base=<spec>,t=<int>'");
			auto base = parse_spectrum(body.substr(5, tpos - 5));
			auto t = to_size(full, body.substr(tpos + 3));
			if (t < 1 || t > 40)
				bad_spec(full, "t must lie in 1..40");
			return block_replicate(base, static_cast<int>(t));
		}
		if (kind == "explicit") {
			std::vector<double> v;
			while (!body.empty()) {
				auto comma = body.find(',');
				v.push_back(to_double(full, body.substr(0, comma)));
				body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
			}
			if (v.empty())
				bad_spec(full, "explicit spectrum needs at least one value");
			return SingularSpectrum(std::move(v));
		}
	} catch (const std::invalid_argument& e) {
		std::string what = e.what();
		if (what.starts_with("invalid spectrum"))
			throw;
		bad_spec(full, what);
	}
	bad_spec(full, "unknown kind '" + std::string(kind) + "'");
}

} // namespace schatten
