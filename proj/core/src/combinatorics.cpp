#include "baxterlab/combinatorics.hpp"

#include "baxterlab/errors.hpp"

#include <mutex>
#include <shared_mutex>
#include <utility>

namespace baxterlab {

Composition::Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw OutOfRangeError("Composition: needs at least one part");
    for (auto p : parts_) {
        if (p == 0) throw OutOfRangeError("Composition: parts must be positive");
    }
}

std::uint64_t Composition::norm() const {
    std::uint64_t s = 0;
    for (auto p : parts_) s += p;
    return s;
}

std::string Composition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

void StirlingTable::grow(std::size_t n) {
    if (rows_.empty()) {
        rows_.push_back({BigInt(1)}); // both kinds: row 0 is the constant 1
    }
    while (rows_.size() <= n) {
        const std::size_t m = rows_.size(); // building row m from row m-1
        const auto& prev = rows_[m - 1];
        std::vector<BigInt> row(m + 1, BigInt(0));
        if (kind_ == Kind::Second) {
            for (std::size_t k = 1; k <= m; ++k) {
                row[k] = prev[k - 1];
                if (k < m) row[k] += BigInt(static_cast<std::int64_t>(k)) * prev[k];
            }
        } else {
            // (t)_m = (t)_{m-1} * (t - (m-1))
            const BigInt shift(static_cast<std::int64_t>(m - 1));
            for (std::size_t k = 0; k <= m; ++k) {
                if (k > 0) row[k] += prev[k - 1];
                if (k < m) row[k] -= shift * prev[k];
            }
        }
        rows_.push_back(std::move(row));
    }
}

BigInt StirlingTable::at(std::size_t n, std::size_t k) {
    if (k > n) return BigInt(0);
    grow(n);
    return rows_[n][k];
}

const BigInt& StirlingTable::value(std::size_t n, std::size_t k) const {
    static const BigInt kZero(0);
    if (k > n) return kZero;
    if (n >= rows_.size()) throw OutOfRangeError("StirlingTable: row not materialized");
    return rows_[n][k];
}

namespace {

// Shared caches for the free-function lookups. Values leave as copies;
// growth may reallocate rows, so no reference escapes the lock.
struct CachedTable {
    std::shared_mutex mu;
    StirlingTable table;
    explicit CachedTable(StirlingTable::Kind kind) : table(kind) {}

    BigInt get(std::size_t n, std::size_t k) {
        if (k > n) return BigInt(0);
        {
            std::shared_lock lock(mu);
            if (n <= table.max_n()) return table.value(n, k);
        }
        std::unique_lock lock(mu);
        return table.at(n, k);
    }
};

CachedTable g_second{StirlingTable::Kind::Second};
CachedTable g_first{StirlingTable::Kind::First};

std::shared_mutex g_pascal_mu;
std::vector<std::vector<BigInt>> g_pascal{{BigInt(1)}};

std::shared_mutex g_factorial_mu;
std::vector<BigInt> g_factorials{BigInt(1)};

} // namespace

BigInt stirling_second(std::size_t n, std::size_t k) { return g_second.get(n, k); }

BigInt stirling_first(std::size_t n, std::size_t k) { return g_first.get(n, k); }

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return BigInt(0);
    {
        std::shared_lock lock(g_pascal_mu);
        if (n < g_pascal.size()) return g_pascal[n][k];
    }
    std::unique_lock lock(g_pascal_mu);
    while (g_pascal.size() <= n) {
        const auto& prev = g_pascal.back();
        const std::size_t m = g_pascal.size();
        std::vector<BigInt> row(m + 1, BigInt(1));
        for (std::size_t j = 1; j < m; ++j) row[j] = prev[j - 1] + prev[j];
        g_pascal.push_back(std::move(row));
    }
    return g_pascal[n][k];
}

BigInt factorial(std::size_t n) {
    {
        std::shared_lock lock(g_factorial_mu);
        if (n < g_factorials.size()) return g_factorials[n];
    }
    std::unique_lock lock(g_factorial_mu);
    while (g_factorials.size() <= n) {
        g_factorials.push_back(g_factorials.back() *
                               BigInt(static_cast<std::int64_t>(g_factorials.size())));
    }
    return g_factorials[n];
}

std::vector<BigInt> falling_factorial_coeffs(std::size_t n) {
    std::vector<BigInt> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out.push_back(stirling_first(n, k));
    return out;
}

BigInt stirling_second_oracle(std::size_t n, std::size_t k) {
    if (n > 64 || k > 64) throw OutOfRangeError("stirling_second_oracle: n,k <= 64");
    BigInt sum(0);
    for (std::size_t j = 0; j <= k; ++j) {
        // j^n with 0^0 = 1
        BigInt term = BigInt(static_cast<std::int64_t>(j)).pow_u32(static_cast<std::uint32_t>(n));
        term *= binomial(k, j);
        if ((k - j) % 2 == 1) term = -term;
        sum += term;
    }
    // sum = k!·S(n,k); divide out k! one factor at a time (each step stays integral).
    for (std::uint32_t d = 2; d <= k; ++d) {
        auto [q, r] = sum.divmod_u32(d);
        if (r != 0) throw OutOfRangeError("stirling_second_oracle: non-exact division");
        sum = std::move(q);
    }
    return sum;
}

namespace {

void count_surjections(std::size_t pos, std::size_t n, std::size_t k,
                       std::vector<std::uint32_t>& uses, std::size_t covered,
                       std::uint64_t& total) {
    if (pos == n) {
        if (covered == k) ++total;
        return;
    }
    for (std::size_t v = 0; v < k; ++v) {
        if (uses[v]++ == 0) ++covered;
        count_surjections(pos + 1, n, k, uses, covered, total);
        if (--uses[v] == 0) --covered;
    }
}

} // namespace

BigInt surjection_count_oracle(std::size_t n, std::size_t k) {
    if (n > 8 || k > 8) throw OutOfRangeError("surjection_count_oracle: n,k <= 8");
    if (k == 0) return BigInt(n == 0 ? 1 : 0); // the empty map
    std::vector<std::uint32_t> uses(k, 0);
    std::uint64_t total = 0;
    count_surjections(0, n, k, uses, 0, total);
    return BigInt(static_cast<std::int64_t>(total));
}

BigInt multinomial(std::uint64_t n, const Composition& parts) {
    if (parts.norm() != n)
        throw NormMismatchError("multinomial: composition norm " +
                                std::to_string(parts.norm()) + " != n = " + std::to_string(n));
    BigInt out(1);
    std::uint64_t prefix = 0;
    for (auto p : parts.parts()) {
        prefix += p;
        out *= binomial(static_cast<std::size_t>(prefix), p);
    }
    return out;
}

namespace {

void emit_compositions(std::uint32_t remaining, std::size_t parts_left,
                       std::vector<std::uint32_t>& acc, std::vector<Composition>& out) {
    if (parts_left == 1) {
        acc.push_back(remaining);
        out.push_back(Composition(acc));
        acc.pop_back();
        return;
    }
    // Leave at least 1 per remaining part; ascending first part keeps lex order.
    for (std::uint32_t first = 1; first + parts_left - 1 <= remaining; ++first) {
        acc.push_back(first);
        emit_compositions(remaining - first, parts_left - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(std::uint32_t n) {
    if (n < 1 || n > 20) throw OutOfRangeError("compositions_of: 1 <= n <= 20");
    std::vector<Composition> out;
    out.reserve(1u << (n - 1));
    std::vector<std::uint32_t> acc;
    for (std::size_t k = 1; k <= n; ++k) {
        emit_compositions(n, k, acc, out);
    }
    return out;
}

BigInt delannoy(std::size_t m, std::size_t n) {
    std::vector<std::vector<BigInt>> d(m + 1, std::vector<BigInt>(n + 1, BigInt(1)));
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
        }
    }
    return d[m][n];
}

} // namespace baxterlab
