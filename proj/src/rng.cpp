#include <schatten/rng.hpp>

#include <cmath>
#include <numbers>

namespace schatten {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
	const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
	hi = static_cast<std::uint32_t>(p >> 32);
	lo = static_cast<std::uint32_t>(p);
}

std::uint64_t splitmix64(std::uint64_t x) {
	x += 0x9E3779B97F4A7C15ull;
	x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
	x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
	return x ^ (x >> 31);
}

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

} // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
	for (int round = 0; round < 10; ++round) {
		if (round > 0) {
			key[0] += kWeyl0;
			key[1] += kWeyl1;
		}
		std::uint32_t hi0, lo0, hi1, lo1;
		mulhilo(kMul0, ctr[0], hi0, lo0);
		mulhilo(kMul1, ctr[2], hi1, lo1);
		ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
	}
	return ctr;
}

std::array<std::uint32_t, 4> RngStream::next_block() {
	const std::array<std::uint32_t, 4> ctr{
		static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
		static_cast<std::uint32_t>(stream_index_), static_cast<std::uint32_t>(stream_index_ >> 32)};
	const std::array<std::uint32_t, 2> key{static_cast<std::uint32_t>(master_seed_),
	                                       static_cast<std::uint32_t>(master_seed_ >> 32)};
	++block_;
	return philox4x32_10(ctr, key);
}

std::uint64_t RngStream::next_u64() {
	if (raw_used_ >= 4) {
		raw_ = next_block();
		raw_used_ = 0;
	}
	const std::uint64_t v = (static_cast<std::uint64_t>(raw_[raw_used_ + 1]) << 32) | raw_[raw_used_];
	raw_used_ += 2;
	return v;
}

double RngStream::uniform() {
	return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv;
}

double RngStream::normal() {
	if (has_spare_) {
		has_spare_ = false;
		return spare_;
	}
	// one full block per pair of normals, independent of uniform() usage
	const auto b = next_block();
	const std::uint64_t x = (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
	const std::uint64_t y = (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
	const double u1 = static_cast<double>((x >> 11) + 1) * kTwoPow53Inv; // (0, 1]
	const double u2 = static_cast<double>(y >> 11) * kTwoPow53Inv;       // [0, 1)
	const double r = std::sqrt(-2.0 * std::log(u1));
	const double angle = 2.0 * std::numbers::pi * u2;
	spare_ = r * std::sin(angle);
	has_spare_ = true;
	return r * std::cos(angle);
}

RngStream RngStream::substream(std::uint64_t child) const {
	return RngStream(master_seed_, splitmix64(stream_index_ ^ splitmix64(child + 0x632BE59BD9B4E019ull)));
}

} // namespace schatten
