#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace antimagic {

using Prime = std::uint64_t;

/// Default upper bound on the number of primes (and graph edges) a single
/// request may materialize. 2^26 covers a level-24 perfect binary tree.
inline constexpr std::size_t kDefaultPrimeCap = std::size_t{1} << 26;

/// The first m primes, addressed 1-based: at(1) == 2.
class PrimeTable {
public:
    PrimeTable() = default;

    std::size_t count() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// i-th prime, 1 <= i <= count(). Throws IndexError otherwise.
    Prime at(std::size_t i) const;

    std::span<const Prime> values() const noexcept { return values_; }

    friend bool operator==(const PrimeTable&, const PrimeTable&) = default;

private:
    friend PrimeTable first_m_primes(std::size_t m, std::size_t cap);
    explicit PrimeTable(std::vector<Prime> values) : values_(std::move(values)) {}

    std::vector<Prime> values_;
};

/// Exactly the first m primes in ascending order, produced by a segmented
/// odd-only sieve. Throws CapacityError when m > cap.
PrimeTable first_m_primes(std::size_t m, std::size_t cap = kDefaultPrimeCap);

/// Same as table.at(i).
Prime nth_prime(const PrimeTable& table, std::size_t i);

/// An integer B with at least m primes in [2, B]. Uses m(ln m + ln ln m),
/// valid for m >= 6, and a lookup table below that. m == 0 yields 1.
std::uint64_t sieve_upper_bound(std::size_t m);

/// Deterministic trial division by 2, 3 and 6k +- 1.
bool is_prime(std::uint64_t n) noexcept;

} // namespace antimagic
