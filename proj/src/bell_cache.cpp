#include "gstir/bell_cache.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <vector>

namespace gstir {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

void check_recurrence(const std::vector<Integer>& b) {
    if (b.size() < 2) {
        return;
    }
    const std::size_t last = b.size() - 2;
    std::set<std::size_t> sample{0, 1, 2, 3, last / 4, last / 2, (3 * last) / 4, last};
    for (std::size_t k : sample) {
        if (k > last) {
            continue;
        }
        // B_{k+1} = sum_j C(k,j) B_j
        Integer sum = 0;
        Integer c = 1;
        for (std::size_t j = 0; j <= k; ++j) {
            sum += c * b[j];
            c = c * static_cast<unsigned long>(k - j) / static_cast<unsigned long>(j + 1);
        }
        if (sum != b[k + 1]) {
            throw CacheFormatError(k + 3, "value B_" + std::to_string(k + 1) +
                                              " fails the Bell recurrence");
        }
    }
}

}  // namespace

BellSequence read_bell_cache(std::istream& in) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (text.empty()) {
        throw CacheFormatError(1, "missing header");
    }
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            throw CacheFormatError(lines.size() + 1, "line is not newline-terminated");
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.front() != kBellCacheHeader) {
        throw CacheFormatError(1, "expected header '" + std::string(kBellCacheHeader) + "'");
    }
    std::vector<Integer> values;
    values.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (!all_digits(lines[i])) {
            throw CacheFormatError(i + 1, "not a decimal integer: '" + lines[i] + "'");
        }
        values.emplace_back(lines[i], 10);
    }
    if (values.empty()) {
        return BellSequence();
    }
    if (values.front() != 1) {
        throw CacheFormatError(2, "B_0 must be 1");
    }
    check_recurrence(values);
    return BellSequence(std::move(values));
}

void write_bell_cache(std::ostream& out, const BellSequence& seq) {
    out << kBellCacheHeader << '\n';
    for (const auto& v : seq.values()) {
        out << v.get_str() << '\n';
    }
}

BellSequence load_bell_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open bell cache " + path.string());
    }
    return read_bell_cache(in);
}

void save_bell_cache(const std::filesystem::path& path, const BellSequence& seq) {
    const auto tmp = std::filesystem::path(path).concat(".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write bell cache " + tmp.string());
        }
        write_bell_cache(out, seq);
        if (!out.flush()) {
            throw std::runtime_error("failed writing bell cache " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace gstir
