#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace gstir {

using Integer = mpz_class;

// Given row n of the Stirling triangle, S(n,0..n), returns row n+1.
std::vector<Integer> next_stirling_row(const std::vector<Integer>& row);

/**
 * Append-only cache of Stirling numbers of the second kind.
 *
 * Row n holds S(n,0..n). Extension requires exclusive access; lookups on an
 * already extended triangle are safe to share.
 */
class StirlingTriangle {
public:
    StirlingTriangle();

    void extend_to(std::size_t n);
    std::size_t rows() const { return rows_.size(); }

    // S(n,k); zero outside 0 <= k <= n. Requires n < rows().
    Integer at(std::size_t n, long k) const;
    const std::vector<Integer>& row(std::size_t n) const;

private:
    std::vector<std::vector<Integer>> rows_;
};

/**
 * Append-only cache of Bell numbers B_0, B_1, ...
 *
 * Built with the Aitken (Bell) triangle so extending by one entry costs one
 * row of additions.
 */
class BellSequence {
public:
    BellSequence();
    explicit BellSequence(std::vector<Integer> values);

    void extend_to(std::size_t n);
    std::size_t size() const { return values_.size(); }

    const Integer& at(std::size_t n) const { return values_.at(n); }
    // B_m, or 0 for m < 0. Requires m < size().
    Integer guarded(long m) const;

    const std::vector<Integer>& values() const { return values_; }

private:
    std::vector<Integer> values_;
    std::vector<Integer> last_row_;
};

// Process-wide caches. Each call takes an internal lock, so these are safe
// from multiple threads; hot loops should copy what they need once.
Integer stirling(long n, long k);
std::vector<Integer> stirling_row(std::size_t n);
Integer bell(std::size_t n);
Integer bell_guarded(long m);
// B_0..B_n as one snapshot (extends the cache as needed).
std::vector<Integer> bell_prefix(std::size_t n);
// Merges externally loaded values into the shared Bell cache. Entries must
// agree with anything already cached.
void install_bell_values(const BellSequence& seq);
BellSequence bell_cache_snapshot();

Integer binomial(long n, long k);
Integer factorial(unsigned long n);

}  // namespace gstir
