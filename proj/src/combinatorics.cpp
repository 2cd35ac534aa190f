#include "gstir/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace gstir {

std::vector<Integer> next_stirling_row(const std::vector<Integer>& row) {
    const std::size_t n = row.size() - 1;
    std::vector<Integer> next(n + 2);
    // S(n+1,k) = k S(n,k) + S(n,k-1); S(n+1,0) = 0 since n+1 > 0.
    for (std::size_t k = 1; k <= n + 1; ++k) {
        if (k <= n) {
            next[k] = row[k] * static_cast<unsigned long>(k);
        }
        next[k] += row[k - 1];
    }
    return next;
}

StirlingTriangle::StirlingTriangle() { rows_.push_back({Integer(1)}); }

void StirlingTriangle::extend_to(std::size_t n) {
    rows_.reserve(n + 1);
    while (rows_.size() <= n) {
        rows_.push_back(next_stirling_row(rows_.back()));
    }
}

Integer StirlingTriangle::at(std::size_t n, long k) const {
    const auto& r = rows_.at(n);
    if (k < 0 || static_cast<std::size_t>(k) >= r.size()) {
        return 0;
    }
    return r[static_cast<std::size_t>(k)];
}

const std::vector<Integer>& StirlingTriangle::row(std::size_t n) const { return rows_.at(n); }

BellSequence::BellSequence() : values_{Integer(1)}, last_row_{Integer(1)} {}

BellSequence::BellSequence(std::vector<Integer> values) : values_(std::move(values)) {
    if (values_.empty()) {
        values_.push_back(1);
    }
    if (values_[0] != 1) {
        throw std::invalid_argument("BellSequence: B_0 must be 1");
    }
    if (values_.size() == 1) {
        last_row_ = {Integer(1)};
    }
}

void BellSequence::extend_to(std::size_t n) {
    if (n < values_.size()) {
        return;
    }
    if (last_row_.empty()) {
        // Loaded values carry no triangle state; rebuild it and check the
        // loaded prefix on the way.
        std::vector<Integer> row{Integer(1)};
        for (std::size_t i = 1; i < values_.size(); ++i) {
            std::vector<Integer> next;
            next.reserve(row.size() + 1);
            next.push_back(row.back());
            for (const auto& above : row) {
                next.push_back(next.back() + above);
            }
            row = std::move(next);
            if (row.front() != values_[i]) {
                throw std::runtime_error("BellSequence: cached B_" + std::to_string(i) +
                                         " is inconsistent");
            }
        }
        last_row_ = std::move(row);
    }
    values_.reserve(n + 1);
    while (values_.size() <= n) {
        std::vector<Integer> next;
        next.reserve(last_row_.size() + 1);
        next.push_back(last_row_.back());
        for (const auto& above : last_row_) {
            next.push_back(next.back() + above);
        }
        last_row_ = std::move(next);
        values_.push_back(last_row_.front());
    }
}

Integer BellSequence::guarded(long m) const {
    if (m < 0) {
        return 0;
    }
    return values_.at(static_cast<std::size_t>(m));
}

namespace {

struct SharedCaches {
    std::mutex mutex;
    StirlingTriangle stirling;
    BellSequence bell;
};

SharedCaches& shared() {
    static SharedCaches caches;
    return caches;
}

}  // namespace

Integer stirling(long n, long k) {
    if (n < 0) {
        throw std::invalid_argument("stirling: n must be non-negative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    auto& c = shared();
    std::lock_guard lock(c.mutex);
    c.stirling.extend_to(static_cast<std::size_t>(n));
    return c.stirling.at(static_cast<std::size_t>(n), k);
}

std::vector<Integer> stirling_row(std::size_t n) {
    auto& c = shared();
    std::lock_guard lock(c.mutex);
    c.stirling.extend_to(n);
    return c.stirling.row(n);
}

Integer bell(std::size_t n) {
    auto& c = shared();
    std::lock_guard lock(c.mutex);
    c.bell.extend_to(n);
    return c.bell.at(n);
}

Integer bell_guarded(long m) {
    if (m < 0) {
        return 0;
    }
    return bell(static_cast<std::size_t>(m));
}

std::vector<Integer> bell_prefix(std::size_t n) {
    auto& c = shared();
    std::lock_guard lock(c.mutex);
    c.bell.extend_to(n);
    return {c.bell.values().begin(), c.bell.values().begin() + static_cast<long>(n) + 1};
}

void install_bell_values(const BellSequence& seq) {
    auto& c = shared();
    std::lock_guard lock(c.mutex);
    const auto& mine = c.bell.values();
    const std::size_t common = std::min(mine.size(), seq.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (mine[i] != seq.at(i)) {
            throw std::invalid_argument("install_bell_values: B_" + std::to_string(i) +
                                        " disagrees with the cache");
        }
    }
    if (seq.size() > mine.size()) {
        c.bell = seq;
    }
}

BellSequence bell_cache_snapshot() {
    auto& c = shared();
    std::lock_guard lock(c.mutex);
    return c.bell;
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace gstir
