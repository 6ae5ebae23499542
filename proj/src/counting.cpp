#include "parbias/counting.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace parbias {

const mpz_class& BiasCount::pick(Bias b) const {
    switch (b) {
        case Bias::OddHeavy: return odd_heavy;
        case Bias::EvenHeavy: return even_heavy;
        case Bias::Balanced: return balanced;
        default: break;
    }
    throw std::invalid_argument("pick: bias must be a concrete class");
}

BiasCount count_by_enumeration(long n, const ClassSpec& spec) {
    BiasCount c;
    c.n = n;
    enumerate(n, spec.with_bias(Bias::All), [&](const Partition& p) {
        switch (bias_class(p)) {
            case Bias::OddHeavy: ++c.odd_heavy; break;
            case Bias::EvenHeavy: ++c.even_heavy; break;
            default: ++c.balanced; break;
        }
        return true;
    });
    return c;
}

CountTable count_by_dp(long n_max, const ClassSpec& spec) {
    if (n_max < 0) throw std::invalid_argument("count_by_dp: n_max must be >= 0");
    ClassSpec norm = normalized(spec);
    const int W = static_cast<int>(n_max);

    // dp[w][d + W] = number of admissible part multisets of weight w with
    // (odd count - even count) = d. |d| <= w / min_part <= w.
    std::vector<std::vector<mpz_class>> dp(
        static_cast<std::size_t>(W + 1),
        std::vector<mpz_class>(static_cast<std::size_t>(2 * W + 1)));
    dp[0][static_cast<std::size_t>(W)] = 1;

    auto row = [&](int w) -> std::vector<mpz_class>& {
        return dp[static_cast<std::size_t>(w)];
    };

    for (int k = norm.min_part; k <= W; ++k) {
        if (!norm.part_allowed(k)) continue;
        const int delta = (k % 2 == 1) ? 1 : -1;
        if (norm.distinct) {
            // 0/1 knapsack: descend so each part is used at most once.
            for (int w = W; w >= k; --w) {
                const int span = w - k;  // |d| bound before adding part k
                for (int d = -span; d <= span; ++d) {
                    const mpz_class& src = row(w - k)[static_cast<std::size_t>(d + W)];
                    if (src == 0) continue;
                    row(w)[static_cast<std::size_t>(d + delta + W)] += src;
                }
            }
        } else {
            // unbounded: ascend so each part may repeat.
            for (int w = k; w <= W; ++w) {
                const int span = w - k;
                for (int d = -span; d <= span; ++d) {
                    const mpz_class& src = row(w - k)[static_cast<std::size_t>(d + W)];
                    if (src == 0) continue;
                    row(w)[static_cast<std::size_t>(d + delta + W)] += src;
                }
            }
        }
    }

    CountTable table;
    table.spec = norm;
    table.rows.resize(static_cast<std::size_t>(W + 1));
    for (int n = 0; n <= W; ++n) {
        BiasCount& c = table.rows[static_cast<std::size_t>(n)];
        c.n = n;
        for (int d = -n; d <= n; ++d) {
            const mpz_class& v = row(n)[static_cast<std::size_t>(d + W)];
            if (v == 0) continue;
            if (d > 0) c.odd_heavy += v;
            else if (d < 0) c.even_heavy += v;
            else c.balanced += v;
        }
    }
    return table;
}

std::vector<mpz_class> pentagonal_partition_numbers(long n_max) {
    std::vector<mpz_class> p(static_cast<std::size_t>(n_max + 1));
    if (n_max < 0) return p;
    p[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) acc += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

namespace {

constexpr const char* kCacheHeader = "parbias-count-cache v1";

std::string sanitize_key(const std::string& key) {
    std::string out;
    for (char c : key) {
        if ((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z')) out += c;
        else if (c == ';' || c == ':') out += '_';
        else if (c == ',') out += '-';
        else out += '.';
    }
    return out;
}

}  // namespace

std::string cache_file_path(const ClassSpec& spec, const std::string& dir) {
    return dir + "/" + sanitize_key(normalized(spec).key()) + ".counts";
}

bool cache_store(const CountTable& table, const std::string& dir) {
    const std::string path = cache_file_path(table.spec, dir);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return false;
        out << kCacheHeader << '\n';
        const std::string key = normalized(table.spec).key();
        for (const BiasCount& r : table.rows) {
            out << key << '\t' << r.n << '\t' << r.odd_heavy.get_str() << '\t'
                << r.even_heavy.get_str() << '\t' << r.balanced.get_str()
                << '\n';
        }
        if (!out) return false;
    }
    return std::rename(tmp.c_str(), path.c_str()) == 0;
}

std::optional<CountTable> cache_load(const ClassSpec& spec,
                                     const std::string& dir,
                                     std::string* warning) {
    auto warn = [&](const std::string& msg) {
        if (warning) *warning = msg;
        return std::nullopt;
    };
    const ClassSpec norm = normalized(spec);
    const std::string path = cache_file_path(norm, dir);
    std::ifstream in(path);
    if (!in) return std::nullopt;  // plain miss, no warning

    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader)
        return warn("cache " + path + ": bad or missing version header");

    CountTable table;
    table.spec = norm;
    const std::string key = norm.key();
    long expect_n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string k, odd, even, bal;
        long n = -1;
        if (!std::getline(ls, k, '\t')) return warn("cache " + path + ": truncated row");
        std::string nfield;
        if (!std::getline(ls, nfield, '\t') || !std::getline(ls, odd, '\t') ||
            !std::getline(ls, even, '\t') || !std::getline(ls, bal, '\t') ||
            odd.empty() || even.empty() || bal.empty())
            return warn("cache " + path + ": truncated row");
        try {
            n = std::stol(nfield);
        } catch (...) {
            return warn("cache " + path + ": bad n field");
        }
        if (k != key) return warn("cache " + path + ": key mismatch");
        if (n != expect_n) return warn("cache " + path + ": non-contiguous rows");
        BiasCount r;
        r.n = n;
        if (r.odd_heavy.set_str(odd, 10) != 0 ||
            r.even_heavy.set_str(even, 10) != 0 ||
            r.balanced.set_str(bal, 10) != 0)
            return warn("cache " + path + ": bad integer field");
        table.rows.push_back(std::move(r));
        ++expect_n;
    }
    if (table.rows.empty()) return warn("cache " + path + ": no rows");
    return table;
}

}  // namespace parbias
