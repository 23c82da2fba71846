#pragma once

#include <array>
#include <cstdint>

namespace schatten {

/// Philox4x32-10 counter-based block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Deterministic stream of standard normal variates.
///
/// The stream is addressed by (master_seed, stream_index): the seed is the
/// Philox key and the index occupies the high half of the counter, so
/// distinct pairs never share a block. Each block yields two normals via
/// Box-Muller, consumed in order.
class RngStream {
public:
	RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
		: master_seed_(master_seed), stream_index_(stream_index) {}

	std::uint64_t master_seed() const { return master_seed_; }
	std::uint64_t stream_index() const { return stream_index_; }

	double normal();
	/// Uniform on [0, 1).
	double uniform();
	std::uint64_t next_u64();

	/// Independent child stream; used when one logical trial needs its own
	/// family of streams (e.g. Monte Carlo over many sketches).
	RngStream substream(std::uint64_t child) const;

private:
	std::array<std::uint32_t, 4> next_block();

	std::uint64_t master_seed_;
	std::uint64_t stream_index_;
	std::uint64_t block_ = 0;
	double spare_ = 0.0;
	bool has_spare_ = false;
	std::array<std::uint32_t, 4> raw_{};
	int raw_used_ = 4;
};

/// Stream for trial `trial_index` of an experiment seeded with `master_seed`.
inline RngStream derive_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
	return RngStream(master_seed, trial_index);
}

} // namespace schatten
