#include "mertens/zeros.hpp"

#include <fstream>

namespace mertens {

std::size_t ZerosTable::count_below(f128 T) const {
    std::size_t n = 0;
    while (n < gamma.size() && gamma[n] <= T) ++n;
    return n;
}

ZerosTable load_zeros(const std::string& path, f128 gamma_max) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zeros file: " + path);

    ZerosTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip whitespace; skip blank lines
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        f128 g;
        try {
            g = parse_f128(line.substr(b, e - b + 1));
        } catch (const std::exception& ex) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + ex.what());
        }
        if (g <= 0) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": ordinates must be positive");
        }
        if (!t.gamma.empty() && g <= t.gamma.back()) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": ordinates must be strictly ascending");
        }
        if (gamma_max > 0 && g > gamma_max) break;
        t.gamma.push_back(g);
    }
    if (t.gamma.empty()) throw std::runtime_error("zeros file has no ordinates: " + path);
    return t;
}

f128 rvm_main_term(f128 T) {
    const f128 x = T / (2 * num::pi);
    return x * logq(x) - x + f128(7) / 8;
}

CountCheck count_check(const ZerosTable& table, f128 T) {
    CountCheck c;
    c.count = table.count_below(T);
    c.expected = rvm_main_term(T);
    c.deviation = (f128)c.count - c.expected;
    c.count_ok = fabsq(c.deviation) <= 2;

    c.min_gap = T;  // anything smaller than the range itself
    for (std::size_t i = 1; i < table.gamma.size() && table.gamma[i] <= T; ++i) {
        f128 gap = table.gamma[i] - table.gamma[i - 1];
        if (gap < c.min_gap) c.min_gap = gap;
    }
    c.min_gap_ok = c.min_gap > parse_f128("1e-2");
    return c;
}

}  // namespace mertens
