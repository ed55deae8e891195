#include "antimagic/primes.hpp"

#include "antimagic/errors.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

namespace antimagic {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Odd primes <= limit, plain sieve. Only used for the base primes (<= sqrt(B)).
std::vector<std::uint64_t> small_odd_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> result;
    if (limit < 3) return result;
    std::vector<bool> composite(limit / 2 + 1, false); // index i <-> 2i+1
    for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        result.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += 2 * p) composite[q / 2] = true;
    }
    return result;
}

// Bits per segment; each bit is one odd number. 32 KiB of words.
constexpr std::uint64_t kSegmentWords = 4096;
constexpr std::uint64_t kSegmentBits = kSegmentWords * 64;

} // namespace

Prime PrimeTable::at(std::size_t i) const {
    if (i == 0 || i > values_.size()) {
        throw IndexError("prime index " + std::to_string(i) + " outside 1.." +
                         std::to_string(values_.size()));
    }
    return values_[i - 1];
}

Prime nth_prime(const PrimeTable& table, std::size_t i) { return table.at(i); }

std::uint64_t sieve_upper_bound(std::size_t m) {
    static constexpr std::array<std::uint64_t, 6> small{1, 2, 3, 5, 7, 11};
    if (m < small.size()) return small[m];
    const double x = static_cast<double>(m);
    return static_cast<std::uint64_t>(std::ceil(x * (std::log(x) + std::log(std::log(x)))));
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t i = 5; i <= n / i; i += 6) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
    }
    return true;
}

PrimeTable first_m_primes(std::size_t m, std::size_t cap) {
    if (m > cap) {
        throw CapacityError("requested " + std::to_string(m) + " primes, cap is " +
                            std::to_string(cap));
    }
    std::vector<Prime> out;
    if (m == 0) return PrimeTable(std::move(out));
    out.reserve(m);
    out.push_back(2);

    const std::uint64_t bound = sieve_upper_bound(m);
    const std::vector<std::uint64_t> base = small_odd_primes(isqrt(bound));

    // next[j] is the index (in odd-number space, value = 2*idx+1) of the next
    // odd multiple of base[j] still to be crossed off.
    std::vector<std::uint64_t> next(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) next[j] = base[j] * base[j] / 2;

    std::vector<std::uint64_t> bits(kSegmentWords);
    const std::uint64_t last_index = bound / 2; // odd numbers 3..bound are indices 1..last_index
    for (std::uint64_t low = 1; low <= last_index && out.size() < m; low += kSegmentBits) {
        const std::uint64_t high = std::min(low + kSegmentBits, last_index + 1);
        std::fill(bits.begin(), bits.end(), 0);
        for (std::size_t j = 0; j < base.size(); ++j) {
            const std::uint64_t p = base[j];
            std::uint64_t idx = next[j];
            for (; idx < high; idx += p) {
                const std::uint64_t off = idx - low;
                bits[off >> 6] |= std::uint64_t{1} << (off & 63);
            }
            next[j] = idx;
        }
        const std::uint64_t span = high - low;
        for (std::uint64_t w = 0; w * 64 < span && out.size() < m; ++w) {
            std::uint64_t free = ~bits[w];
            if ((w + 1) * 64 > span) free &= (std::uint64_t{1} << (span - w * 64)) - 1;
            while (free != 0 && out.size() < m) {
                const int b = std::countr_zero(free);
                free &= free - 1;
                out.push_back(2 * (low + w * 64 + static_cast<std::uint64_t>(b)) + 1);
            }
        }
    }
    if (out.size() != m) {
        // Unreachable while the sizing bound holds; never hand back a short table.
        throw Error("sieve bound " + std::to_string(bound) + " admitted only " +
                    std::to_string(out.size()) + " of " + std::to_string(m) + " primes");
    }
    return PrimeTable(std::move(out));
}

} // namespace antimagic
